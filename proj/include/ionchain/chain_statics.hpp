#pragma once

#include <Eigen/Dense>

#include "ionchain/trap.hpp"

namespace ionchain {

enum class ConfigClass { Linear, ZigZag, Other };

/// Equilibrium ion positions in units of the characteristic length ell,
/// ordered by ascending z. potential_value and min_hessian_eigenvalue are in
/// the internal dimensionless units (energy m ell^2 omega_z^2, curvature
/// m omega_z^2).
struct EquilibriumConfiguration {
  int n_ions = 0;
  Eigen::MatrixX3d positions;
  double length_scale = 0.0; // ell in meters
  double potential_value = 0.0;
  double min_hessian_eigenvalue = 0.0;
  ConfigClass config_class = ConfigClass::Other;
};

/// ell = (e^2 / (4 pi eps0 m omega_z^2))^(1/3); all internal lengths are in
/// units of ell and times in 1/omega_z.
double characteristic_length(const TrapConfig& trap);

/// Dimensionless total potential: harmonic trap + pairwise Coulomb.
double chain_potential(const Eigen::MatrixX3d& positions, const TrapConfig& trap);

/// Dimensionless gradient of chain_potential, shape N x 3.
Eigen::MatrixX3d chain_gradient(const Eigen::MatrixX3d& positions,
                                const TrapConfig& trap);

/// Dimensionless 3N x 3N second-derivative matrix of chain_potential,
/// coordinate order (x1, y1, z1, x2, ...).
Eigen::MatrixXd chain_hessian(const Eigen::MatrixX3d& positions,
                              const TrapConfig& trap);

/// Newton minimization of the full 3N potential. Starts from a uniformly
/// spaced collinear chain; if the collinear stationary point is a saddle the
/// solver perturbs along the most unstable Hessian eigenvector and
/// re-minimizes, which lands on the symmetry-broken zig-zag branch.
/// Deterministic. Throws NonConvergence when the iteration cap is hit.
EquilibriumConfiguration solve_equilibrium(const TrapConfig& trap, int n_ions);

/// Linear iff every transverse coordinate is below 1e-6 ell; ZigZag iff the
/// transverse pattern is planar, sign-alternating and exceeds 1e-3 ell
/// somewhere; everything else is Other.
ConfigClass classify_configuration(const EquilibriumConfiguration& config);

} // namespace ionchain
