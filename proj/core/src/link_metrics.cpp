#include "tworay/link_metrics.hpp"

#include <cmath>

namespace tworay {

RateResult rate_single(double d, const LinkGeometry& geom, const RadioConfig& cfg,
                       const NoiseModel& noise) {
    noise.validate();
    const double p_r = receive_power_single(d, cfg.omega1(), geom, cfg);
    const double n = noise.noise_power(noise.bandwidth);
    const double snr = p_r / n;
    return {noise.bandwidth * std::log2(1.0 + snr), snr, noise.bandwidth};
}

RateResult rate_two(double d, double delta_omega, const LinkGeometry& geom, const RadioConfig& cfg,
                    const NoiseModel& noise) {
    noise.validate();
    RadioConfig per_carrier = cfg;
    per_carrier.p_t = cfg.p_t / 2.0;
    const double w1 = cfg.omega1();
    const double w2 = w1 + delta_omega;
    const double p1 = receive_power_single(d, w1, geom, per_carrier);
    const double p2 = receive_power_single(d, w2, geom, per_carrier);
    const double band = noise.bandwidth / 2.0;
    const double n = noise.noise_power(band);
    const double rate = band * std::log2(1.0 + p1 / n) + band * std::log2(1.0 + p2 / n);
    return {rate, (p1 + p2) / n, band};
}

double alpha_offset(const DistanceInterval& interval, double delta_omega, const LinkGeometry& geom,
                    const RadioConfig& cfg, const NoiseModel& noise) {
    cfg.validate();
    noise.validate();
    const double w1 = cfg.omega1();
    const double w2 = w1 + delta_omega;
    const auto [los, reflected] = path_lengths(interval.d_max, geom);
    const double inv_gap = path_difference(interval.d_max, geom) / (los * reflected);
    const double n = noise.noise_power(noise.bandwidth / 2.0);
    const double p = cfg.p_t / (2.0 * w1 * w2);
    const double amp = speed_of_light / 2.0;
    return (p * p) / (n * n) * amp * amp * amp * amp * inv_gap * inv_gap * inv_gap * inv_gap;
}

RateResult rate_two_lower_bound(double d, double delta_omega, const DistanceInterval& interval,
                                const LinkGeometry& geom, const RadioConfig& cfg,
                                const NoiseModel& noise) {
    const double alpha = alpha_offset(interval, delta_omega, geom, cfg, noise);
    const double p = sum_power_lower_bound(d, delta_omega, geom, cfg);
    const double band = noise.bandwidth / 2.0;
    const double snr = p / noise.noise_power(band);
    return {band * std::log2(1.0 + alpha + snr), snr, band};
}

double zero_outage_capacity(const DistanceInterval& interval, std::optional<double> delta_omega,
                            const LinkGeometry& geom, const RadioConfig& cfg,
                            const NoiseModel& noise, bool exact_two) {
    noise.validate();
    if (!delta_omega) {
        const auto worst = worst_case_power_single(interval, cfg.omega1(), geom, cfg);
        const double n = noise.noise_power(noise.bandwidth);
        return noise.bandwidth * std::log2(1.0 + worst.power / n);
    }
    if (!exact_two) {
        const double p = worst_case_power_two(interval, *delta_omega, geom, cfg);
        const double alpha = alpha_offset(interval, *delta_omega, geom, cfg, noise);
        const double band = noise.bandwidth / 2.0;
        return band * std::log2(1.0 + alpha + p / noise.noise_power(band));
    }
    // The minimizers of the exact sum rate have no closed-form description;
    // scan a fine log-spaced grid.
    constexpr int n_grid = 1'000'000;
    const double log_lo = std::log(interval.d_min);
    const double log_hi = std::log(interval.d_max);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_grid; ++i) {
        const double d = std::exp(log_lo + (log_hi - log_lo) * i / (n_grid - 1.0));
        worst = std::min(worst, rate_two(d, *delta_omega, geom, cfg, noise).rate);
    }
    return worst;
}

}  // namespace tworay
