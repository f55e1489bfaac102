#pragma once

namespace ionchain::constants {

// CODATA 2018
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double epsilon_0 = 8.8541878128e-12;         // F/m
inline constexpr double hbar = 1.054571817e-34;               // J s
inline constexpr double k_boltzmann = 1.380649e-23;           // J/K (exact)
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg
inline constexpr double electron_mass = 9.1093837015e-31;     // kg

// 40Ca+ : neutral-atom mass minus one electron
inline constexpr double mass_ca40_ion =
    39.962590863 * atomic_mass_unit - electron_mass;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

} // namespace ionchain::constants
