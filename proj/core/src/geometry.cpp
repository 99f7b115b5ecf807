#include "tworay/geometry.hpp"

#include <cmath>

namespace tworay {

namespace {

void check_distance(double d) {
    if (!(d >= 0.0) || !std::isfinite(d))
        throw std::domain_error("two-ray geometry: distance must be nonnegative and finite");
}

}  // namespace

PathLengths path_lengths(double d, const LinkGeometry& geom) {
    check_distance(d);
    const double dh = geom.h_tx - geom.h_rx;
    const double sh = geom.h_tx + geom.h_rx;
    return {std::sqrt(dh * dh + d * d), std::sqrt(sh * sh + d * d)};
}

double path_difference(double d, const LinkGeometry& geom) {
    const auto [los, reflected] = path_lengths(d, geom);
    return 4.0 * geom.h_tx * geom.h_rx / (los + reflected);
}

double phase_shift(double d, double omega, const LinkGeometry& geom) {
    if (!(omega > 0.0)) throw std::domain_error("phase_shift: omega must be positive");
    return omega / speed_of_light * path_difference(d, geom);
}

double max_phase_shift(double omega, const LinkGeometry& geom) {
    if (!(omega > 0.0)) throw std::domain_error("max_phase_shift: omega must be positive");
    return 2.0 * omega * geom.min_height() / speed_of_light;
}

}  // namespace tworay
