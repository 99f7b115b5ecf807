#include "tworay/single_frequency.hpp"

#include <cmath>

namespace tworay {

double receive_power_single(double d, double omega, const LinkGeometry& geom, const RadioConfig& cfg) {
    cfg.validate();
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::domain_error("receive_power_single: distance must be positive and finite");
    if (!(omega > 0.0)) throw std::domain_error("receive_power_single: omega must be positive");

    const auto [los, reflected] = path_lengths(d, geom);
    const double dphi = phase_shift(d, omega, geom);
    const double amp = speed_of_light / (2.0 * omega);
    const double rho = cfg.rho;
    const double interference = 1.0 / (los * los) + rho * rho / (reflected * reflected) -
                                2.0 * rho / (los * reflected) * std::cos(dphi);
    return cfg.p_t * amp * amp * interference;
}

int local_minimum_count(double omega, const LinkGeometry& geom) {
    return static_cast<int>(std::floor(max_phase_shift(omega, geom) / (2.0 * pi)));
}

std::optional<double> null_distance(int k, double omega, const LinkGeometry& geom) {
    const int k_max = local_minimum_count(omega, geom);
    if (k < 1 || k > k_max)
        throw std::domain_error("null_distance: k outside [1, local_minimum_count]");

    const double cpk = speed_of_light * pi * static_cast<double>(k);
    const double a = cpk * cpk - omega * geom.h_rx * omega * geom.h_rx;
    const double b = cpk * cpk - omega * geom.h_tx * omega * geom.h_tx;
    const double denom = omega * cpk;
    const double radicand = a * b / (denom * denom);
    if (radicand < 0.0) return std::nullopt;
    return std::sqrt(radicand);
}

WorstCase worst_case_power_single(const DistanceInterval& interval, double omega,
                                  const LinkGeometry& geom, const RadioConfig& cfg) {
    WorstCase worst{receive_power_single(interval.d_min, omega, geom, cfg), interval.d_min,
                    WorstCaseKind::LowerEndpoint};

    const double p_hi = receive_power_single(interval.d_max, omega, geom, cfg);
    if (p_hi < worst.power) worst = {p_hi, interval.d_max, WorstCaseKind::UpperEndpoint};

    // The largest in-interval null (smallest k) yields the deepest drop.
    const int k_max = local_minimum_count(omega, geom);
    for (int k = 1; k <= k_max; ++k) {
        const auto dk = null_distance(k, omega, geom);
        if (!dk) continue;
        if (*dk < interval.d_min || *dk > interval.d_max) continue;
        const double p_k = receive_power_single(*dk, omega, geom, cfg);
        if (p_k < worst.power) worst = {p_k, *dk, WorstCaseKind::LocalMinimum, k};
        break;  // d_k decreases with k, so the first in-interval k is the largest d_k
    }
    return worst;
}

}  // namespace tworay
