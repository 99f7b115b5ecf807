#pragma once

#include "tworay/geometry.hpp"

#include <optional>
#include <stdexcept>

namespace tworay {

/// Carrier and power configuration shared by all power computations.
/// theta is the fraction of the total transmit power on the first carrier,
/// rho the normalized amplitude gain of the reflected path.
struct RadioConfig {
    double f1;               // base frequency [Hz]
    double delta_f = 0.0;    // carrier spacing [Hz]
    double theta = 0.5;      // power split on carrier 1
    double p_t = 1.0;        // total transmit power [W]
    double rho = 1.0;        // reflected-path gain

    void validate() const {
        if (!(f1 > 0.0)) throw std::invalid_argument("RadioConfig: f1 must be positive");
        if (!(delta_f >= 0.0)) throw std::invalid_argument("RadioConfig: delta_f must be nonnegative");
        if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("RadioConfig: theta must be in [0, 1]");
        if (!(p_t > 0.0)) throw std::invalid_argument("RadioConfig: p_t must be positive");
        if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("RadioConfig: rho must be in [0, 1]");
    }

    double omega1() const { return angular_frequency(f1); }
    double omega2() const { return angular_frequency(f1 + delta_f); }
};

/// Known bounds on the unknown transmitter-receiver distance.
struct DistanceInterval {
    double d_min;
    double d_max;

    DistanceInterval(double lo, double hi) : d_min(lo), d_max(hi) {
        if (!(d_min > 0.0) || !(d_max > d_min) || !std::isfinite(d_max))
            throw std::invalid_argument("DistanceInterval: requires 0 < d_min < d_max, finite");
    }
};

enum class WorstCaseKind { LowerEndpoint, UpperEndpoint, LocalMinimum };

/// Location and value of the minimal receive power over an interval.
struct WorstCase {
    double power;        // [W]
    double at_distance;  // [m]
    WorstCaseKind kind;
    int k = 0;  // null index when kind == LocalMinimum
};

/// Receive power of a single carrier at angular frequency omega.
double receive_power_single(double d, double omega, const LinkGeometry& geom, const RadioConfig& cfg);

/// Number of destructive-interference nulls, floor(max_phase_shift / 2pi).
int local_minimum_count(double omega, const LinkGeometry& geom);

/// Distance of the k-th null, 1 <= k <= local_minimum_count. Returns nullopt
/// when floating-point boundary effects push the radicand negative.
std::optional<double> null_distance(int k, double omega, const LinkGeometry& geom);

/// Minimal receive power over the interval: the smaller of the endpoint
/// powers and the power at the largest in-interval null distance.
WorstCase worst_case_power_single(const DistanceInterval& interval, double omega,
                                  const LinkGeometry& geom, const RadioConfig& cfg);

}  // namespace tworay
