#pragma once

// Physical constants, CODATA 2018 exact/recommended values.
// Single source of truth: no other file may restate these literals.

namespace fqesr::constants {

inline constexpr double h_planck = 6.62607015e-34;     // J s
inline constexpr double mu_bohr = 9.2740100783e-24;    // J/T
inline constexpr double k_boltzmann = 1.380649e-23;    // J/K
inline constexpr double mu_nuclear = 5.0507837461e-27; // J/T
inline constexpr double phi0 = 2.067833848e-15;        // Wb, flux quantum h/2e

} // namespace fqesr::constants
