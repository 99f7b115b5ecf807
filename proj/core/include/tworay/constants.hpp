#pragma once

#include <numbers>

namespace tworay {

inline constexpr double speed_of_light = 299'792'458.0;  // m/s
inline constexpr double pi = std::numbers::pi;

/// Convert a frequency in Hz to an angular frequency in rad/s.
constexpr double angular_frequency(double f_hz) { return 2.0 * pi * f_hz; }

}  // namespace tworay
