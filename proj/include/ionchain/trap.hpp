#pragma once

#include <optional>

#include "ionchain/constants.hpp"
#include "ionchain/errors.hpp"

namespace ionchain {

/// Mathieu parameters of the RF quadrupole drive. The radial equations of
/// motion are x'' = -(Omega^2/4)(a_x + 2 q_x cos(Omega t)) x (same for y);
/// the axial confinement is static with (Omega^2/4) a_z = omega_z^2.
struct RfDrive {
  double omega_rf; // rad/s
  double q_x = 0.0;
  double q_y = 0.0;
  double a_x = 0.0;
  double a_y = 0.0;
  double a_z = 0.0;
};

enum class RfCalibration {
  LowestOrder, // invert omega = (Omega/2) sqrt(a + q^2/2)
  Floquet,     // match the exact Mathieu characteristic exponent
};

/// Secular trap frequencies plus ion species; the single source of physical
/// constants for a run. Frequencies are angular (rad/s). Construction
/// validates positivity, radial anisotropy (degenerate omega_x == omega_y is
/// rejected so the zig-zag plane is well defined) and, when an RF drive is
/// attached, its lowest-order pseudopotential consistency to 1%.
class TrapConfig {
public:
  TrapConfig(double omega_x, double omega_y, double omega_z,
             double mass = constants::mass_ca40_ion,
             double charge = constants::elementary_charge,
             std::optional<RfDrive> rf_drive = std::nullopt);

  double omega_x() const { return omega_x_; }
  double omega_y() const { return omega_y_; }
  double omega_z() const { return omega_z_; }
  double mass() const { return mass_; }
  double charge() const { return charge_; }
  const std::optional<RfDrive>& rf_drive() const { return rf_drive_; }

  /// Radial frequencies in units of omega_z.
  double beta_x() const { return omega_x_ / omega_z_; }
  double beta_y() const { return omega_y_ / omega_z_; }

  /// Copy of this trap with Mathieu parameters derived for the given RF
  /// frequency. Floquet calibration reproduces the secular frequencies
  /// exactly in the driven dynamics; lowest-order matches them through the
  /// (Omega/2) sqrt(a + q^2/2) formula instead.
  TrapConfig with_rf_drive(double omega_rf,
                           RfCalibration method = RfCalibration::LowestOrder) const;

private:
  double omega_x_, omega_y_, omega_z_;
  double mass_, charge_;
  std::optional<RfDrive> rf_drive_;
};

/// Trap at the paper-style frequencies, 40Ca+. Inputs are ordinary
/// frequencies in Hz; stored values are angular.
TrapConfig make_trap_hz(double f_x, double f_y, double f_z);

/// Characteristic Mathieu exponent beta for y'' + (a - 2q cos(2 xi)) y = 0,
/// computed from the monodromy matrix over one period. Throws
/// NumericalFailure inside an instability region.
double mathieu_char_exponent(double a, double q);

} // namespace ionchain
