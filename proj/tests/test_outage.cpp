#include "tworay/outage.hpp"

#include "tworay/link_metrics.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

using namespace tworay;
using tworay::mc::DistanceSampler;

namespace {
const LinkGeometry kGeom{10.0, 1.5};
const RadioConfig kCfg{.f1 = 2.4e9, .p_t = 1e-3};
const NoiseModel kNoise{1e5, 3.0, -174.0};
const DistanceInterval kInterval{10.0, 100.0};
}  // namespace

TEST_CASE("uniform sampler: support, moments, determinism") {
    auto sampler = DistanceSampler::uniform(kInterval, 42);
    const auto a = mc::sample_distances(sampler, 1'000'000, 4);
    const auto b = mc::sample_distances(sampler, 1'000'000, 1);
    CHECK(a == b);  // worker count must not change the stream

    double lo = 1e300, hi = -1e300, mean = 0.0;
    for (double d : a) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        mean += d;
    }
    mean /= static_cast<double>(a.size());
    CHECK(lo >= kInterval.d_min);
    CHECK(hi <= kInterval.d_max);
    CHECK(mean == doctest::Approx(55.0).epsilon(0.002));
}

TEST_CASE("uniform sampler passes a Kolmogorov-Smirnov check") {
    auto sampler = DistanceSampler::uniform(kInterval, 3);
    auto xs = mc::sample_distances(sampler, 100'000, 1);
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double cdf = (xs[i] - kInterval.d_min) / (kInterval.d_max - kInterval.d_min);
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i + 1) / n));
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
    }
    CHECK(ks < 1.63 / std::sqrt(n));  // 1% critical value
}

TEST_CASE("different seeds give different streams") {
    auto s1 = mc::sample_distances(DistanceSampler::uniform(kInterval, 1), 100, 1);
    auto s2 = mc::sample_distances(DistanceSampler::uniform(kInterval, 2), 100, 1);
    CHECK(s1 != s2);
}

TEST_CASE("mobility sampler stays inside the induced interval") {
    mc::MobilityParams params;
    const auto interval = params.induced_interval();
    CHECK(interval.d_min == 30.0);
    CHECK(interval.d_max == 330.0);

    auto sampler = DistanceSampler::mobility(params, 9);
    const auto xs = mc::sample_distances(sampler, 100'000, 8);
    for (double d : xs) {
        REQUIRE(d >= interval.d_min);
        REQUIRE(d <= interval.d_max);
    }

    // trajectories must actually roam instead of hovering at the center
    double lo = 1e300, hi = -1e300;
    for (double d : xs) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    CHECK(hi - lo > 0.5 * (interval.d_max - interval.d_min));

    CHECK(mc::sample_distances(sampler, 100'000, 1) == xs);
}

TEST_CASE("trajectory export format") {
    mc::MobilityParams params;
    params.n_steps = 5;
    const auto traj = mc::simulate_trajectory(params, 1, 0);
    REQUIRE(traj.size() == 5);
    std::ostringstream out;
    mc::write_trajectory_csv(out, traj);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "step,x,y,d");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 5);
    for (const auto& p : traj)
        CHECK(p.d == doctest::Approx(std::sqrt(p.x * p.x + p.y * p.y)).epsilon(1e-12));
}

TEST_CASE("trace sampler reads distances and reports bad lines") {
    const std::string path = "trace_test_tmp.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n12.5\n 47.25 # trailing comment\n\n100\n";
    }
    auto sampler = DistanceSampler::trace(path);
    const auto xs = mc::sample_distances(sampler, 3, 1);
    CHECK(xs == std::vector<double>{12.5, 47.25, 100.0});
    CHECK_THROWS_AS(mc::sample_distances(sampler, 4, 1), mc::input_error);

    {
        std::ofstream out(path);
        out << "10\nnot-a-number\n";
    }
    try {
        mc::sample_distances(sampler, 2, 1);
        FAIL("expected input_error");
    } catch (const mc::input_error& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);  // line number
    }
    std::remove(path.c_str());
}

TEST_CASE("outage probability basics") {
    auto sampler = DistanceSampler::uniform(kInterval, 5);
    const mc::RateFn constant = [](double) { return 1000.0; };
    CHECK(mc::outage_probability(sampler, constant, 999.0, 10'000).probability == 0.0);
    CHECK(mc::outage_probability(sampler, constant, 1001.0, 10'000).probability == 1.0);
    CHECK_THROWS(mc::outage_probability(sampler, constant, 1.0, 10));

    const auto est = mc::outage_probability(sampler, constant, 1001.0, 10'000);
    CHECK(est.n_samples == 10'000);
    CHECK(est.half_width_95 == doctest::Approx(0.0));
}

TEST_CASE("zero outage below the analytic zero-outage capacity") {
    auto sampler = DistanceSampler::uniform(kInterval, 17);
    const mc::RateFn rate1 = [&](double d) { return rate_single(d, kGeom, kCfg, kNoise).rate; };
    const double zoc = zero_outage_capacity(kInterval, std::nullopt, kGeom, kCfg, kNoise);
    CHECK(mc::outage_probability(sampler, rate1, 0.999 * zoc, 1'000'000, 8).probability == 0.0);
}

TEST_CASE("outage curve is nondecreasing and bound-dominated") {
    auto sampler = DistanceSampler::uniform(kInterval, 23);
    const double dw = optimal_spacing(kInterval, kGeom, kCfg).delta_omega_star;
    const mc::RateFn rate2 = [&](double d) { return rate_two(d, dw, kGeom, kCfg, kNoise).rate; };
    const mc::RateFn rate2_lower = [&](double d) {
        return rate_two_lower_bound(d, dw, kInterval, kGeom, kCfg, kNoise).rate;
    };
    std::vector<double> thresholds;
    for (int i = 0; i <= 40; ++i) thresholds.push_back(1e4 * std::pow(10.0, 2.5 * i / 40.0));

    const auto exact = mc::outage_curve(sampler, rate2, thresholds, 200'000, 4);
    const auto bound = mc::outage_curve(sampler, rate2_lower, thresholds, 200'000, 4);
    REQUIRE(exact.size() == thresholds.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
        if (i > 0) CHECK(exact[i].probability >= exact[i - 1].probability);
        CHECK(bound[i].probability >= exact[i].probability);  // pessimistic rate, more outages
    }
}

TEST_CASE("eps-outage capacity reduces to the batch minimum at eps=0") {
    auto sampler = DistanceSampler::uniform(kInterval, 31);
    const mc::RateFn rate1 = [&](double d) { return rate_single(d, kGeom, kCfg, kNoise).rate; };
    const auto rates = mc::batch_rates(sampler, rate1, 50'000, 4);
    const double lo = *std::min_element(rates.begin(), rates.end());
    CHECK(mc::eps_outage_capacity(sampler, rate1, 0.0, 50'000, 4) == doctest::Approx(lo));

    // resolution guard: n must be at least 10/epsilon
    CHECK_THROWS(mc::eps_outage_capacity(sampler, rate1, 1e-5, 50'000, 4));
}

TEST_CASE("eps-outage capacity is consistent with the outage estimate") {
    auto sampler = DistanceSampler::uniform(kInterval, 37);
    const mc::RateFn rate1 = [&](double d) { return rate_single(d, kGeom, kCfg, kNoise).rate; };
    const double eps = 1e-3;
    const double cap = mc::eps_outage_capacity(sampler, rate1, eps, 100'000, 4);
    CHECK(mc::outage_probability(sampler, rate1, cap, 100'000, 4).probability <= eps);
    CHECK(mc::outage_probability(sampler, rate1, cap * 1.05, 100'000, 4).probability > eps);
}

TEST_CASE("byte determinism across worker counts") {
    auto sampler = DistanceSampler::uniform(kInterval, 101);
    const mc::RateFn rate1 = [&](double d) { return rate_single(d, kGeom, kCfg, kNoise).rate; };
    const auto r1 = mc::batch_rates(sampler, rate1, 100'000, 1);
    const auto r2 = mc::batch_rates(sampler, rate1, 100'000, 2);
    const auto r8 = mc::batch_rates(sampler, rate1, 100'000, 8);
    CHECK(r1 == r2);
    CHECK(r1 == r8);

    mc::MobilityParams params;
    auto mob = DistanceSampler::mobility(params, 5);
    const auto m1 = mc::sample_distances(mob, 50'000, 1);
    const auto m8 = mc::sample_distances(mob, 50'000, 8);
    CHECK(m1 == m8);
}
