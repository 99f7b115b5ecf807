#include "tworay/rng.hpp"

#include "tworay/constants.hpp"

#include <cmath>

namespace tworay::rng {

void SplitMix64::next_normal_pair(double& n1, double& n2) {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    n1 = r * std::cos(2.0 * pi * u2);
    n2 = r * std::sin(2.0 * pi * u2);
}

}  // namespace tworay::rng
