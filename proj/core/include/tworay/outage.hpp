#pragma once

#include "tworay/rng.hpp"
#include "tworay/single_frequency.hpp"

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace tworay::mc {

/// Parameters of the planar mean-reverting mobility model used for the
/// aerial-receiver scenario. Per dimension, in coordinates normalized by the
/// region radius:
///   dv = (-alpha*v - gamma*u/s) * beta * dt + sigma_eff * dW,   du = v dt
/// with radial reflection at the region boundary. sigma_eff is sigma scaled
/// so that the stationary position spread is `spread` region radii, which
/// makes trajectories cover the region instead of hovering at its center.
struct MobilityParams {
    double alpha = 1.0;
    double beta = 3.0;
    double gamma = 7.0;
    double sigma = 1.0;
    double s = 1.0;
    double dt = 0.1;             // [s]
    std::size_t n_steps = 2000;  // positions per trajectory
    double origin_offset = 180.0;  // transmitter to region center [m]
    double region_radius = 150.0;  // [m]
    double spread = 0.45;          // stationary position std, in region radii

    DistanceInterval induced_interval() const {
        return {origin_offset - region_radius, origin_offset + region_radius};
    }
};

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Source of random transmitter-receiver distances. Identical seed and kind
/// give identical sample streams, independent of worker count.
class DistanceSampler {
  public:
    enum class Kind { Uniform, MobilityModel, TraceFile };

    static DistanceSampler uniform(DistanceInterval interval, std::uint64_t seed) {
        return DistanceSampler(Kind::Uniform, interval, {}, {}, seed);
    }
    static DistanceSampler mobility(MobilityParams params, std::uint64_t seed) {
        return DistanceSampler(Kind::MobilityModel, params.induced_interval(), params, {}, seed);
    }
    static DistanceSampler trace(std::string path) {
        return DistanceSampler(Kind::TraceFile, DistanceInterval(1.0, 2.0), {}, std::move(path), 0);
    }

    Kind kind() const { return kind_; }
    const DistanceInterval& interval() const { return interval_; }
    const MobilityParams& mobility_params() const { return mobility_; }
    const std::string& trace_path() const { return trace_path_; }
    std::uint64_t seed() const { return seed_; }

  private:
    DistanceSampler(Kind kind, DistanceInterval interval, MobilityParams mobility,
                    std::string trace_path, std::uint64_t seed)
        : kind_(kind), interval_(interval), mobility_(mobility),
          trace_path_(std::move(trace_path)), seed_(seed) {}

    Kind kind_;
    DistanceInterval interval_;
    MobilityParams mobility_;
    std::string trace_path_;
    std::uint64_t seed_;
};

struct OutageEstimate {
    double threshold;      // [bit/s]
    double probability;
    std::size_t n_samples;
    double half_width_95;  // normal-approximation confidence half width
};

struct TrajectoryPoint {
    std::size_t step;
    double x;  // [m], transmitter at the origin
    double y;  // [m]
    double d;  // ground distance to the transmitter [m]
};

using RateFn = std::function<double(double)>;

/// Draw n distances. Uniform draws are counter-based i.i.d.; the mobility
/// model concatenates whole trajectories; traces are read line by line
/// (one distance in meters per line, '#' starts a comment).
std::vector<double> sample_distances(const DistanceSampler& sampler, std::size_t n,
                                     unsigned workers = 1);

/// One mobility trajectory from a per-index substream of the seed.
std::vector<TrajectoryPoint> simulate_trajectory(const MobilityParams& params, std::uint64_t seed,
                                                 std::uint64_t trajectory_index);

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& trajectory);

OutageEstimate outage_probability(const DistanceSampler& sampler, const RateFn& rate_fn,
                                  double threshold, std::size_t n, unsigned workers = 1);

/// Outage estimates for ascending thresholds, all from one shared sample batch.
std::vector<OutageEstimate> outage_curve(const DistanceSampler& sampler, const RateFn& rate_fn,
                                         const std::vector<double>& thresholds, std::size_t n,
                                         unsigned workers = 1);

/// Largest threshold whose estimated outage probability stays at or below
/// epsilon, resolved on a fixed sample batch.
double eps_outage_capacity(const DistanceSampler& sampler, const RateFn& rate_fn, double epsilon,
                           std::size_t n, unsigned workers = 1);

/// Rates of the full sample batch, in sample order. Shared by the outage
/// estimators; exposed for tests and the CLI summary.
std::vector<double> batch_rates(const DistanceSampler& sampler, const RateFn& rate_fn,
                                std::size_t n, unsigned workers = 1);

}  // namespace tworay::mc
