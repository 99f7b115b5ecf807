#include "tworay/link_metrics.hpp"
#include "tworay/outage.hpp"

#include <benchmark/benchmark.h>

using namespace tworay;

namespace {

const LinkGeometry geom{10.0, 1.5};
const RadioConfig cfg{.f1 = 2.4e9, .p_t = 1e-3};
const NoiseModel noise{1e5, 3.0, -174.0};
const DistanceInterval interval{10.0, 100.0};

void bm_receive_power_single(benchmark::State& state) {
    double d = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(receive_power_single(d, cfg.omega1(), geom, cfg));
        d = d < 100.0 ? d + 0.001 : 10.0;
    }
}
BENCHMARK(bm_receive_power_single);

void bm_sum_power_lower_bound(benchmark::State& state) {
    const double dw = angular_frequency(177e6);
    double d = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sum_power_lower_bound(d, dw, geom, cfg));
        d = d < 100.0 ? d + 0.001 : 10.0;
    }
}
BENCHMARK(bm_sum_power_lower_bound);

void bm_optimal_spacing(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(optimal_spacing(interval, geom, cfg));
}
BENCHMARK(bm_optimal_spacing);

void bm_zero_outage_capacity_bound(benchmark::State& state) {
    const double dw = optimal_spacing(interval, geom, cfg).delta_omega_star;
    for (auto _ : state)
        benchmark::DoNotOptimize(zero_outage_capacity(interval, dw, geom, cfg, noise));
}
BENCHMARK(bm_zero_outage_capacity_bound);

void bm_uniform_outage_batch(benchmark::State& state) {
    const auto sampler = mc::DistanceSampler::uniform(interval, 1);
    const mc::RateFn rate1 = [](double d) { return rate_single(d, geom, cfg, noise).rate; };
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::outage_probability(sampler, rate1, 50e3, n, 4));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}
BENCHMARK(bm_uniform_outage_batch)->Arg(10'000)->Arg(100'000);

void bm_mobility_trajectory(benchmark::State& state) {
    mc::MobilityParams params;
    std::uint64_t index = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::simulate_trajectory(params, 1, index++));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(params.n_steps));
}
BENCHMARK(bm_mobility_trajectory);

}  // namespace

BENCHMARK_MAIN();
