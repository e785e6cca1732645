#pragma once

namespace th::constants {

// CODATA 2018. h and c are exact by SI definition; the atomic mass
// constant carries the CODATA uncertainty (3e-10 relative).
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kPlanckJs = 6.62607015e-34;     // J s
inline constexpr double kLightSpeedMs = 299792458.0;    // m / s
inline constexpr double kAmuKg = 1.66053906660e-27;     // kg
inline constexpr double kHbarJs = kPlanckJs / (2.0 * kPi);

// hbar^2/(2 m) for m = 1 amu, expressed in cm^-1 Angstrom^2:
//   hbar^2 / (2 amu)          J m^2
//   / (h c * 100)             J per cm^-1
//   * 1e20                    Angstrom^2 per m^2
// Evaluates to 16.857629191640176 cm^-1 A^2.
inline constexpr double kConvOneAmu =
    kHbarJs * kHbarJs / (2.0 * kAmuKg * kPlanckJs * kLightSpeedMs * 100.0) * 1e20;

/// hbar^2/(2 mu) in cm^-1 A^2 for a reduced mass in amu.
constexpr double conv_cm1_A2(double mu_amu) { return kConvOneAmu / mu_amu; }

}  // namespace th::constants
