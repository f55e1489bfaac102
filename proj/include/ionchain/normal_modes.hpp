#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ionchain/chain_statics.hpp"

namespace ionchain {

enum class Branch { RadialX, RadialY, Axial };

/// Normal modes of one branch of a linear chain. frequencies are angular
/// (rad/s), sorted descending for radial branches and ascending for the
/// axial one; eigenvectors has mode n in column n with the sign convention
/// that the largest-magnitude component is positive. Mode indices are
/// 0-based here; reports label them v1..vN.
struct ModeSpectrum {
  Branch branch = Branch::RadialX;
  Eigen::VectorXd frequencies;
  Eigen::MatrixXd eigenvectors;
};

/// Site-resolved hopping model: diagonal site frequencies omega_{x,i} and
/// the symmetric tunneling matrix t_ij (both rad/s, zero diagonal).
struct LocalModeModel {
  Eigen::VectorXd site_frequencies;
  Eigen::MatrixXd tunneling;
};

/// Coefficients of a unit single-site displacement over the modes of one
/// branch; sum of squares is 1.
struct ModeDecomposition {
  int site = 0;
  Eigen::VectorXd coefficients;
};

/// All 3N modes from the full Hessian, for configurations (zig-zag) where
/// the collinear N x N forms do not apply. Frequencies sorted ascending;
/// eigenvectors are 3N x 3N over coordinates (x1, y1, z1, x2, ...).
/// dominant_branch labels each mode by its largest displacement direction.
struct FullModeSpectrum {
  Eigen::VectorXd frequencies;
  Eigen::MatrixXd eigenvectors;
  std::vector<Branch> dominant_branch;
};

/// Dimensionless N x N quadratic form of one branch about a Linear
/// equilibrium (eigenvalues are squared mode frequencies in omega_z^2
/// units). Radial branches: diagonal beta^2 - sum_k 1/d^3, off-diagonal
/// +1/d^3. Axial: diagonal 1 + 2 sum_k 1/d^3, off-diagonal -2/d^3.
/// Throws BranchUnavailable for non-Linear configurations.
Eigen::MatrixXd quadratic_form(const EquilibriumConfiguration& config,
                               const TrapConfig& trap, Branch branch);

/// Diagonalize a branch quadratic form. Throws NumericalFailure if the
/// eigen-residual exceeds 1e-9.
ModeSpectrum mode_spectrum(const Eigen::MatrixXd& form, const TrapConfig& trap,
                           Branch branch);

/// quadratic_form + mode_spectrum for the given branch.
ModeSpectrum branch_modes(const EquilibriumConfiguration& config,
                          const TrapConfig& trap, Branch branch);

/// Site frequencies and tunneling amplitudes of the radial-x hopping model.
/// Linear configurations only.
LocalModeModel local_mode_model(const EquilibriumConfiguration& config,
                                const TrapConfig& trap);

/// c_n = v_n[site]; unit displacement at one site expanded over the modes.
ModeDecomposition decompose_unit_displacement(const ModeSpectrum& spectrum,
                                              int site);

/// Full 3N diagonalization (any stable configuration).
FullModeSpectrum full_mode_spectrum(const EquilibriumConfiguration& config,
                                    const TrapConfig& trap);

} // namespace ionchain
