#include "tworay/outage.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace tworay::mc {

namespace {

void parallel_for_chunks(std::size_t n, unsigned workers, const std::function<void(std::size_t, std::size_t)>& body) {
    if (workers <= 1 || n < 2) {
        body(0, n);
        return;
    }
    std::vector<std::thread> threads;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(n, w * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        if (begin == end) break;
        threads.emplace_back(body, begin, end);
    }
    for (auto& t : threads) t.join();
}

std::vector<double> read_trace(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw input_error("trace file not readable: " + path);
    std::vector<double> out;
    out.reserve(n);
    std::string line;
    std::size_t line_no = 0;
    while (out.size() < n && std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        double d;
        if (!(std::istringstream(line) >> d) || !std::isfinite(d))
            throw input_error(path + ":" + std::to_string(line_no) + ": not a finite distance");
        out.push_back(d);
    }
    if (out.size() < n)
        throw input_error(path + ": only " + std::to_string(out.size()) + " of " +
                          std::to_string(n) + " requested samples");
    return out;
}

}  // namespace

std::vector<TrajectoryPoint> simulate_trajectory(const MobilityParams& params, std::uint64_t seed,
                                                 std::uint64_t trajectory_index) {
    auto gen = rng::SplitMix64::substream(seed, trajectory_index);

    // Noise amplitude giving a stationary position std of `spread` radii for
    // the linearized (unreflected) dynamics.
    const double sigma_eff =
        params.sigma * params.spread *
        std::sqrt(2.0 * params.alpha * params.beta * params.beta * params.gamma / params.s);
    const double sqrt_dt = std::sqrt(params.dt);

    double ux = 0.0, uy = 0.0;  // position, region radii, origin at region center
    double vx = 0.0, vy = 0.0;

    std::vector<TrajectoryPoint> traj;
    traj.reserve(params.n_steps);
    for (std::size_t step = 0; step < params.n_steps; ++step) {
        double nx, ny;
        gen.next_normal_pair(nx, ny);
        vx += (-params.alpha * vx - params.gamma * ux / params.s) * params.beta * params.dt +
              sigma_eff * sqrt_dt * nx;
        vy += (-params.alpha * vy - params.gamma * uy / params.s) * params.beta * params.dt +
              sigma_eff * sqrt_dt * ny;
        ux += vx * params.dt;
        uy += vy * params.dt;

        const double r = std::hypot(ux, uy);
        if (r > 1.0) {
            // Reflect radially at the boundary and bounce the radial velocity.
            const double ex = ux / r, ey = uy / r;
            const double rr = std::max(2.0 - r, 0.0);
            ux = ex * rr;
            uy = ey * rr;
            const double v_rad = vx * ex + vy * ey;
            vx -= 2.0 * v_rad * ex;
            vy -= 2.0 * v_rad * ey;
        }

        // Transmitter at the origin, region center offset along +x.
        const double x = params.origin_offset + params.region_radius * ux;
        const double y = params.region_radius * uy;
        traj.push_back({step, x, y, std::hypot(x, y)});
    }
    return traj;
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& trajectory) {
    out << "step,x,y,d\n";
    for (const auto& p : trajectory)
        out << p.step << ',' << p.x << ',' << p.y << ',' << p.d << '\n';
}

std::vector<double> sample_distances(const DistanceSampler& sampler, std::size_t n,
                                     unsigned workers) {
    if (n < 1) throw std::invalid_argument("sample_distances: n must be at least 1");
    std::vector<double> out(n);

    switch (sampler.kind()) {
        case DistanceSampler::Kind::Uniform: {
            const auto iv = sampler.interval();
            const double span = iv.d_max - iv.d_min;
            const std::uint64_t seed = sampler.seed();
            parallel_for_chunks(n, workers, [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i)
                    out[i] = iv.d_min + span * rng::uniform_at(seed, i);
            });
            break;
        }
        case DistanceSampler::Kind::MobilityModel: {
            const auto& params = sampler.mobility_params();
            const std::size_t per_traj = params.n_steps;
            const std::size_t n_traj = (n + per_traj - 1) / per_traj;
            parallel_for_chunks(n_traj, workers, [&](std::size_t begin, std::size_t end) {
                for (std::size_t j = begin; j < end; ++j) {
                    const auto traj = simulate_trajectory(params, sampler.seed(), j);
                    const std::size_t base = j * per_traj;
                    for (std::size_t i = 0; i < per_traj && base + i < n; ++i)
                        out[base + i] = traj[i].d;
                }
            });
            break;
        }
        case DistanceSampler::Kind::TraceFile:
            out = read_trace(sampler.trace_path(), n);
            break;
    }
    return out;
}

std::vector<double> batch_rates(const DistanceSampler& sampler, const RateFn& rate_fn,
                                std::size_t n, unsigned workers) {
    const auto distances = sample_distances(sampler, n, workers);
    std::vector<double> rates(n);
    parallel_for_chunks(n, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) rates[i] = rate_fn(distances[i]);
    });
    return rates;
}

namespace {

OutageEstimate estimate_from_counts(double threshold, std::size_t below, std::size_t n) {
    const double p = static_cast<double>(below) / static_cast<double>(n);
    return {threshold, p, n, 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

}  // namespace

OutageEstimate outage_probability(const DistanceSampler& sampler, const RateFn& rate_fn,
                                  double threshold, std::size_t n, unsigned workers) {
    if (n < 1000) throw std::invalid_argument("outage_probability: needs at least 10^3 samples");
    const auto rates = batch_rates(sampler, rate_fn, n, workers);
    std::size_t below = 0;
    for (const double r : rates) below += r < threshold;
    return estimate_from_counts(threshold, below, n);
}

std::vector<OutageEstimate> outage_curve(const DistanceSampler& sampler, const RateFn& rate_fn,
                                         const std::vector<double>& thresholds, std::size_t n,
                                         unsigned workers) {
    if (n < 1000) throw std::invalid_argument("outage_curve: needs at least 10^3 samples");
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw std::invalid_argument("outage_curve: thresholds must be ascending");

    auto rates = batch_rates(sampler, rate_fn, n, workers);
    std::sort(rates.begin(), rates.end());
    std::vector<OutageEstimate> curve;
    curve.reserve(thresholds.size());
    for (const double r : thresholds) {
        const auto below = static_cast<std::size_t>(
            std::lower_bound(rates.begin(), rates.end(), r) - rates.begin());
        curve.push_back(estimate_from_counts(r, below, n));
    }
    return curve;
}

double eps_outage_capacity(const DistanceSampler& sampler, const RateFn& rate_fn, double epsilon,
                           std::size_t n, unsigned workers) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw std::invalid_argument("eps_outage_capacity: epsilon must be in [0, 1)");
    if (epsilon > 0.0 && static_cast<double>(n) < 10.0 / epsilon)
        throw std::invalid_argument("eps_outage_capacity: sample budget too small for epsilon");

    auto rates = batch_rates(sampler, rate_fn, n, workers);
    // Largest r with #{rate < r} <= floor(eps*n) is the order statistic at
    // that index; epsilon = 0 degenerates to the batch minimum.
    const auto k = static_cast<std::size_t>(epsilon * static_cast<double>(n));
    std::nth_element(rates.begin(), rates.begin() + k, rates.end());
    return rates[k];
}

}  // namespace tworay::mc
