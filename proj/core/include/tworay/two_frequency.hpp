#pragma once

#include "tworay/single_frequency.hpp"

namespace tworay {

/// Approximate locations of the first envelope extrema in delta_omega for a
/// fixed distance. null(k)/peak(k) = 2k/(2k+1) for equal k and distance.
struct SpacingLandmarks {
    double peak;  // [rad/s]
    double null;  // [rad/s]
    int order;
};

/// Total receive power on two parallel carriers spaced delta_omega apart.
/// The reflected-path gain is pinned to 1 here; the power split is cfg.theta.
double sum_power(double d, double delta_omega, const LinkGeometry& geom, const RadioConfig& cfg);

/// Lower envelope of sum_power. Oscillates in d at the spatial frequency set
/// by delta_omega instead of the carrier frequency.
double sum_power_lower_bound(double d, double delta_omega, const LinkGeometry& geom,
                             const RadioConfig& cfg);

/// Envelope in the omega1 >> delta_omega regime with equal power split;
/// requires cfg.theta == 0.5.
double envelope_simplified(double d, double delta_omega, const LinkGeometry& geom,
                           const RadioConfig& cfg);

/// Spacing of the k-th envelope maximum at distance d: pi*c*(2k+1)/(reflected-los).
double peak_spacing(double d, int k, const LinkGeometry& geom);

/// Spacing of the k-th envelope minimum at distance d: 2*pi*c*k/(reflected-los).
double null_spacing(double d, int k, const LinkGeometry& geom);

SpacingLandmarks spacing_landmarks(double d, int k, const LinkGeometry& geom);

/// Thrown when a numerical search bracket does not contain the requested
/// feature (extremum or sign change).
struct search_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Locate the single stationary point of delta_omega -> sum_power_lower_bound
/// inside [lo, hi] by golden-section search, to 1e-6 relative tolerance.
/// Whether it is a maximum or a minimum is detected from the bracket.
double exact_peak_spacing(double d, const LinkGeometry& geom, const RadioConfig& cfg,
                          double lo, double hi);

}  // namespace tworay
