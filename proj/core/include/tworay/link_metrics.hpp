#pragma once

#include "tworay/spacing_optimizer.hpp"
#include "tworay/units.hpp"

#include <optional>

namespace tworay {

/// Receiver noise description. Conversions to linear watts happen here once;
/// everything downstream works in linear units.
struct NoiseModel {
    double bandwidth;             // total bandwidth B [Hz]
    double noise_figure_db;       // F [dB]
    double noise_density_dbm_hz;  // N0 [dBm/Hz]

    /// Noise power in watts over a band of width band_hz.
    double noise_power(double band_hz) const {
        return db_to_linear(noise_figure_db) * dbm_to_watts(noise_density_dbm_hz) * band_hz;
    }

    void validate() const {
        if (!(bandwidth > 0.0)) throw std::invalid_argument("NoiseModel: bandwidth must be positive");
    }
};

struct RateResult {
    double rate;        // [bit/s]
    double snr_linear;  // receive power over noise power in the used band
    double band;        // [Hz]
};

/// Narrowband rate on the single carrier cfg.f1 with full power and bandwidth.
RateResult rate_single(double d, const LinkGeometry& geom, const RadioConfig& cfg,
                       const NoiseModel& noise);

/// Sum rate over two carriers with the power and the bandwidth split in half.
RateResult rate_two(double d, double delta_omega, const LinkGeometry& geom, const RadioConfig& cfg,
                    const NoiseModel& noise);

/// Distance-independent SNR-product floor entering the two-carrier rate
/// lower bound, evaluated at d_max.
double alpha_offset(const DistanceInterval& interval, double delta_omega, const LinkGeometry& geom,
                    const RadioConfig& cfg, const NoiseModel& noise);

/// Lower bound on the two-carrier sum rate via the envelope power bound.
RateResult rate_two_lower_bound(double d, double delta_omega, const DistanceInterval& interval,
                                const LinkGeometry& geom, const RadioConfig& cfg,
                                const NoiseModel& noise);

/// Largest rate with zero outage over the interval: the minimum of the
/// applicable rate curve. delta_omega == nullopt selects single-frequency
/// mode; otherwise exact_two picks the exact sum rate over the rate bound.
double zero_outage_capacity(const DistanceInterval& interval, std::optional<double> delta_omega,
                            const LinkGeometry& geom, const RadioConfig& cfg,
                            const NoiseModel& noise, bool exact_two = false);

}  // namespace tworay
