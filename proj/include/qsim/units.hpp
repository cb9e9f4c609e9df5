#pragma once

namespace qsim {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Internal unit system: time in ns, angular frequencies in rad/ns,
// rates in 1/ns. Conversions below take cyclic frequencies.
inline constexpr double omega_from_mhz(double f_mhz) { return kTwoPi * f_mhz * 1e-3; }
inline constexpr double omega_from_ghz(double f_ghz) { return kTwoPi * f_ghz; }
inline constexpr double mhz_from_omega(double w) { return w / kTwoPi * 1e3; }

}  // namespace qsim
