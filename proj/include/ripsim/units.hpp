#pragma once

namespace ripsim::units {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// interface frequencies are ordinary (non-angular); everything internal is rad/s
inline constexpr double rad_from_ghz(double f) { return two_pi * f * 1e9; }
inline constexpr double rad_from_mhz(double f) { return two_pi * f * 1e6; }
inline constexpr double rad_from_khz(double f) { return two_pi * f * 1e3; }
inline constexpr double ghz_from_rad(double w) { return w / (two_pi * 1e9); }
inline constexpr double mhz_from_rad(double w) { return w / (two_pi * 1e6); }
inline constexpr double khz_from_rad(double w) { return w / (two_pi * 1e3); }

inline constexpr double s_from_ns(double t) { return t * 1e-9; }
inline constexpr double s_from_us(double t) { return t * 1e-6; }
inline constexpr double ns_from_s(double t) { return t * 1e9; }
inline constexpr double us_from_s(double t) { return t * 1e6; }

}  // namespace ripsim::units
