#pragma once

#include "tworay/two_frequency.hpp"

#include <functional>

namespace tworay {

enum class SpacingBranch { NoIntersection, IntersectBelowFirstNull, IntersectBetweenNulls };

/// Result of the worst-case frequency-spacing optimization.
struct SpacingSolution {
    double delta_omega_star;   // [rad/s]
    double delta_f_star;       // [Hz]
    double worst_case_power;   // [W], minimum of the envelope over the interval
    SpacingBranch branch;
    int iterations;
    bool wide_spacing_warning;  // delta_f_star > f1/4, approximation regime degrades
};

struct singularity_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Distance at which the first envelope null sits for a given spacing,
/// i.e. the inverse of null_spacing(d, 1, geom).
double first_null_distance(double delta_omega, const LinkGeometry& geom);

/// Envelope power evaluated at the movable first-null distance d_1(delta_omega),
/// in closed form. Throws singularity_error near delta_omega = c*pi/sqrt(h_tx*h_rx).
double power_at_first_null(double delta_omega, const LinkGeometry& geom, const RadioConfig& cfg);

/// The decreasing side of the max-min reformulation: the envelope at d_min
/// below the first-null spacing of d_min, the first-null power above it.
/// Domain: 0 < delta_omega < null_spacing(d_max, 1).
double near_side_power(double delta_omega, const DistanceInterval& interval,
                       const LinkGeometry& geom, const RadioConfig& cfg);

/// Bisection for the crossing of a nondecreasing and a nonincreasing function.
/// Throws search_failure when the difference does not change sign on [lo, hi].
double find_intersection(const std::function<double(double)>& f_increasing,
                         const std::function<double(double)>& f_decreasing, double lo, double hi,
                         double tol = 1e-9, int* iterations = nullptr);

/// Minimum of the envelope over the interval at a given spacing, from the
/// three candidates d_min, d_max and (when in range) the first null.
double worst_case_power_two(const DistanceInterval& interval, double delta_omega,
                            const LinkGeometry& geom, const RadioConfig& cfg);

/// Spacing that maximizes the worst-case envelope power over the interval.
SpacingSolution optimal_spacing(const DistanceInterval& interval, const LinkGeometry& geom,
                                const RadioConfig& cfg);

}  // namespace tworay
