#include "tworay/spacing_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tworay {

double first_null_distance(double delta_omega, const LinkGeometry& geom) {
    if (!(delta_omega > 0.0)) throw std::domain_error("first_null_distance: delta_omega must be positive");
    // Target path difference t with reflected - los = t and
    // los + reflected = 4*h_tx*h_rx/t.
    const double t = 2.0 * pi * speed_of_light / delta_omega;
    const double sum = 4.0 * geom.h_tx * geom.h_rx / t;
    const double los = 0.5 * (sum - t);
    const double dh = geom.h_tx - geom.h_rx;
    const double radicand = los * los - dh * dh;
    if (!(sum > t) || radicand < 0.0)
        throw std::domain_error("first_null_distance: spacing too small, null lies at no real distance");
    return std::sqrt(radicand);
}

double power_at_first_null(double delta_omega, const LinkGeometry& geom, const RadioConfig& cfg) {
    cfg.validate();
    if (!(delta_omega > 0.0))
        throw std::domain_error("power_at_first_null: delta_omega must be positive");

    const double c = speed_of_light;
    const double cpi2 = c * c * pi * pi;
    const double hh = geom.h_tx * geom.h_rx;
    if (std::abs(cpi2 - hh * delta_omega * delta_omega) < 1e-9 * cpi2)
        throw singularity_error("power_at_first_null: delta_omega at the pole c*pi/sqrt(h_tx*h_rx)");

    const double w1 = cfg.omega1();
    const double w2 = w1 + delta_omega;
    const double scale = c * c * pi * delta_omega / 2.0;
    const double diff = 1.0 / std::abs(cpi2 - hh * delta_omega * delta_omega) -
                        1.0 / (cpi2 + hh * delta_omega * delta_omega);
    return cfg.p_t / 2.0 * scale * scale * (1.0 / (w1 * w1) + 1.0 / (w2 * w2)) * diff * diff;
}

double near_side_power(double delta_omega, const DistanceInterval& interval,
                       const LinkGeometry& geom, const RadioConfig& cfg) {
    const double null_lo = null_spacing(interval.d_min, 1, geom);
    const double null_hi = null_spacing(interval.d_max, 1, geom);
    if (!(delta_omega > 0.0) || !(delta_omega < null_hi))
        throw std::domain_error("near_side_power: delta_omega outside (0, null_spacing(d_max, 1))");
    if (delta_omega < null_lo)
        return sum_power_lower_bound(interval.d_min, delta_omega, geom, cfg);
    return power_at_first_null(delta_omega, geom, cfg);
}

double find_intersection(const std::function<double(double)>& f_increasing,
                         const std::function<double(double)>& f_decreasing, double lo, double hi,
                         double tol, int* iterations) {
    const auto diff = [&](double x) { return f_increasing(x) - f_decreasing(x); };
    double d_lo = diff(lo);
    double d_hi = diff(hi);
    if (d_lo == 0.0) return lo;
    if (d_hi == 0.0) return hi;
    if ((d_lo > 0.0) == (d_hi > 0.0))
        throw search_failure("find_intersection: no sign change on the bracket");

    int iter = 0;
    while (hi - lo > tol * hi && iter < 200) {
        const double mid = 0.5 * (lo + hi);
        const double d_mid = diff(mid);
        if (d_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((d_mid > 0.0) == (d_lo > 0.0)) {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
        ++iter;
    }
    if (iterations) *iterations = iter;
    return 0.5 * (lo + hi);
}

double worst_case_power_two(const DistanceInterval& interval, double delta_omega,
                            const LinkGeometry& geom, const RadioConfig& cfg) {
    const double null_hi = null_spacing(interval.d_max, 1, geom);
    if (!(delta_omega > 0.0) || !(delta_omega < null_hi))
        throw std::domain_error("worst_case_power_two: delta_omega outside (0, null_spacing(d_max, 1))");

    double worst = std::min(sum_power_lower_bound(interval.d_min, delta_omega, geom, cfg),
                            sum_power_lower_bound(interval.d_max, delta_omega, geom, cfg));
    const double null_lo = null_spacing(interval.d_min, 1, geom);
    if (delta_omega >= null_lo)
        worst = std::min(worst, power_at_first_null(delta_omega, geom, cfg));
    return worst;
}

SpacingSolution optimal_spacing(const DistanceInterval& interval, const LinkGeometry& geom,
                                const RadioConfig& cfg) {
    cfg.validate();
    const double peak_lo = peak_spacing(interval.d_min, 0, geom);
    const double peak_hi = peak_spacing(interval.d_max, 0, geom);
    const double null_lo = null_spacing(interval.d_min, 1, geom);
    const double null_hi = null_spacing(interval.d_max, 1, geom);

    const auto far_bound = [&](double dw) {
        return sum_power_lower_bound(interval.d_max, dw, geom, cfg);
    };
    const auto near_side = [&](double dw) { return near_side_power(dw, interval, geom, cfg); };

    // Keep brackets clear of the first-null pole. It always sits at or below
    // null_spacing(d_min, 1) and only touches it for h_tx == h_rx.
    const double pole = speed_of_light * pi / std::sqrt(geom.h_tx * geom.h_rx);
    const auto clip_above_pole = [&](double dw) { return std::max(dw, pole * (1.0 + 1e-6)); };

    SpacingSolution sol{};
    if (far_bound(peak_hi) < near_side(peak_hi)) {
        sol.delta_omega_star = peak_hi;
        sol.branch = SpacingBranch::NoIntersection;
        sol.iterations = 0;
    } else if (far_bound(null_lo) > sum_power_lower_bound(interval.d_min, null_lo, geom, cfg)) {
        // Crossing of the rising far-endpoint bound with the falling
        // near-endpoint bound, below the first null of d_min.
        sol.delta_omega_star = find_intersection(
            far_bound, [&](double dw) { return sum_power_lower_bound(interval.d_min, dw, geom, cfg); },
            peak_lo, null_lo, 1e-9, &sol.iterations);
        sol.branch = SpacingBranch::IntersectBelowFirstNull;
    } else {
        // Equality above falls through here as well.
        sol.delta_omega_star = find_intersection(
            far_bound, [&](double dw) { return power_at_first_null(dw, geom, cfg); },
            clip_above_pole(null_lo), null_hi * (1.0 - 1e-12), 1e-9, &sol.iterations);
        sol.branch = SpacingBranch::IntersectBetweenNulls;
    }

    sol.delta_f_star = sol.delta_omega_star / (2.0 * pi);
    sol.worst_case_power = std::min(far_bound(sol.delta_omega_star), near_side(sol.delta_omega_star));
    sol.wide_spacing_warning = sol.delta_f_star > cfg.f1 / 4.0;
    return sol;
}

}  // namespace tworay
