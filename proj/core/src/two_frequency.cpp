#include "tworay/two_frequency.hpp"

#include <cmath>

namespace tworay {

namespace {

void check_two_freq_args(double d, double delta_omega, const RadioConfig& cfg) {
    cfg.validate();
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::domain_error("two-frequency power: distance must be positive and finite");
    if (!(delta_omega >= 0.0))
        throw std::domain_error("two-frequency power: delta_omega must be nonnegative");
}

}  // namespace

double sum_power(double d, double delta_omega, const LinkGeometry& geom, const RadioConfig& cfg) {
    check_two_freq_args(d, delta_omega, cfg);
    const double w1 = cfg.omega1();
    const double w2 = w1 + delta_omega;
    const double theta = cfg.theta;
    const double theta_bar = 1.0 - theta;
    const auto [los, reflected] = path_lengths(d, geom);
    const double t = path_difference(d, geom) / speed_of_light;

    const double amp = speed_of_light / 2.0;
    const double direct = (theta / (w1 * w1) + theta_bar / (w2 * w2)) *
                          (1.0 / (los * los) + 1.0 / (reflected * reflected));
    const double cross = 2.0 / (los * reflected) *
                         (theta * std::cos(w1 * t) / (w1 * w1) + theta_bar * std::cos(w2 * t) / (w2 * w2));
    return cfg.p_t * amp * amp * (direct - cross);
}

double sum_power_lower_bound(double d, double delta_omega, const LinkGeometry& geom,
                             const RadioConfig& cfg) {
    check_two_freq_args(d, delta_omega, cfg);
    const double w1 = cfg.omega1();
    const double w2 = w1 + delta_omega;
    const double theta = cfg.theta;
    const double theta_bar = 1.0 - theta;
    const auto [los, reflected] = path_lengths(d, geom);
    const double t = path_difference(d, geom) / speed_of_light;

    const double amp = speed_of_light / 2.0;
    const double direct = (theta / (w1 * w1) + theta_bar / (w2 * w2)) *
                          (1.0 / (los * los) + 1.0 / (reflected * reflected));
    const double osc = std::sqrt(theta * theta / (w1 * w1 * w1 * w1) +
                                 theta_bar * theta_bar / (w2 * w2 * w2 * w2) +
                                 2.0 * theta * theta_bar * std::cos(delta_omega * t) /
                                     (w1 * w1 * w2 * w2));
    return cfg.p_t * amp * amp * (direct - 2.0 / (los * reflected) * osc);
}

double envelope_simplified(double d, double delta_omega, const LinkGeometry& geom,
                           const RadioConfig& cfg) {
    check_two_freq_args(d, delta_omega, cfg);
    if (cfg.theta != 0.5)
        throw std::domain_error("envelope_simplified: requires theta == 0.5");
    const double w1 = cfg.omega1();
    const auto [los, reflected] = path_lengths(d, geom);
    const double half_phase = delta_omega / (2.0 * speed_of_light) * path_difference(d, geom);

    const double amp = speed_of_light / 2.0;
    return cfg.p_t / (w1 * w1) * amp * amp *
           (1.0 / (los * los) + 1.0 / (reflected * reflected) -
            2.0 / (los * reflected) * std::abs(std::cos(half_phase)));
}

double peak_spacing(double d, int k, const LinkGeometry& geom) {
    if (k < 0) throw std::domain_error("peak_spacing: k must be nonnegative");
    if (!(d > 0.0)) throw std::domain_error("peak_spacing: distance must be positive");
    return pi * speed_of_light * (2.0 * k + 1.0) / path_difference(d, geom);
}

double null_spacing(double d, int k, const LinkGeometry& geom) {
    if (k < 0) throw std::domain_error("null_spacing: k must be nonnegative");
    if (!(d > 0.0)) throw std::domain_error("null_spacing: distance must be positive");
    return 2.0 * pi * speed_of_light * k / path_difference(d, geom);
}

SpacingLandmarks spacing_landmarks(double d, int k, const LinkGeometry& geom) {
    return {peak_spacing(d, k, geom), null_spacing(d, k, geom), k};
}

double exact_peak_spacing(double d, const LinkGeometry& geom, const RadioConfig& cfg,
                          double lo, double hi) {
    if (!(lo >= 0.0) || !(hi > lo))
        throw std::domain_error("exact_peak_spacing: invalid bracket");

    const auto f = [&](double dw) { return sum_power_lower_bound(d, dw, geom, cfg); };

    const double f_lo = f(lo);
    const double f_hi = f(hi);
    const double f_mid = f(0.5 * (lo + hi));
    double sign;  // golden-section minimizes sign * f
    if (f_mid > std::max(f_lo, f_hi))
        sign = -1.0;
    else if (f_mid < std::min(f_lo, f_hi))
        sign = 1.0;
    else
        throw search_failure("exact_peak_spacing: bracket contains no interior extremum");

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c1 = b - inv_phi * (b - a);
    double c2 = a + inv_phi * (b - a);
    double fc1 = sign * f(c1);
    double fc2 = sign * f(c2);
    while (b - a > 1e-6 * b) {
        if (fc1 < fc2) {
            b = c2;
            c2 = c1;
            fc2 = fc1;
            c1 = b - inv_phi * (b - a);
            fc1 = sign * f(c1);
        } else {
            a = c1;
            c1 = c2;
            fc1 = fc2;
            c2 = a + inv_phi * (b - a);
            fc2 = sign * f(c2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace tworay
