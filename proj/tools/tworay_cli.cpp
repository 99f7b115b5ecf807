// Command-line frontend: emits CSV/JSON data tables for the power, rate and
// outage analyses and runs the frequency-spacing optimizer.

#include "tworay/link_metrics.hpp"
#include "tworay/outage.hpp"
#include "tworay/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using nlohmann::json;
using namespace tworay;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse a number with an optional SI suffix ("2.4G", "177M", "100k").
double parse_si(const std::string& text) {
    if (text.empty()) throw usage_error("empty numeric value");
    std::size_t pos = 0;
    double value;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw usage_error("not a number: '" + text + "'");
    }
    if (pos == text.size()) return value;
    if (pos + 1 != text.size()) throw usage_error("trailing characters in '" + text + "'");
    switch (text[pos]) {
        case 'k': case 'K': return value * 1e3;
        case 'M': return value * 1e6;
        case 'G': return value * 1e9;
        case 'T': return value * 1e12;
        default: throw usage_error(std::string("unknown SI suffix '") + text[pos] + "'");
    }
}

struct Options {
    std::string f1 = "2.4G";
    std::string delta_f = "auto";
    double htx = 10.0;
    double hrx = 1.5;
    double dmin = 10.0;
    double dmax = 100.0;
    double pt = 1e-3;  // [W]
    double rho = 1.0;
    double theta = 0.5;
    std::string bandwidth = "100k";
    double noise_figure = 3.0;      // [dB]
    double noise_density = -174.0;  // [dBm/Hz]
    std::uint64_t seed = 0;
    std::uint64_t samples = 1'000'000;
    std::string output = "csv";
    std::string config_path;

    // command-specific
    std::string sweep_axis = "d";
    double at_distance = 50.0;
    std::uint64_t points = 500;
    std::string from, to;  // sweep range override, SI-parsed
    std::string sampler = "uniform";
    std::string trace_path;
    double epsilon = 1e-5;
    unsigned workers = std::thread::hardware_concurrency();

    LinkGeometry geometry() const { return {htx, hrx}; }
    DistanceInterval interval() const {
        if (!(dmin > 0.0) || !(dmax > dmin))
            throw usage_error("dmin/dmax: requires 0 < dmin < dmax");
        return {dmin, dmax};
    }
    RadioConfig radio(double delta_f_hz) const {
        RadioConfig cfg{parse_si(f1), delta_f_hz, theta, pt, rho};
        cfg.validate();
        return cfg;
    }
    NoiseModel noise() const { return {parse_si(bandwidth), noise_figure, noise_density}; }

    /// Resolve delta-f: explicit value or the optimizer for "auto".
    double resolve_delta_f() const {
        if (delta_f == "auto") {
            RadioConfig cfg{parse_si(f1), 0.0, theta, pt, 1.0};
            return optimal_spacing(interval(), geometry(), cfg).delta_f_star;
        }
        return parse_si(delta_f);
    }

    json to_json() const {
        return {{"f1", f1},       {"delta-f", delta_f},   {"htx", htx},
                {"hrx", hrx},     {"dmin", dmin},         {"dmax", dmax},
                {"pt", pt},       {"rho", rho},           {"theta", theta},
                {"bandwidth", bandwidth}, {"noise-figure", noise_figure},
                {"noise-density", noise_density}, {"seed", seed},
                {"samples", samples},     {"output", output},
                {"sweep", sweep_axis},    {"d", at_distance},
                {"points", points},       {"from", from},
                {"to", to},               {"sampler", sampler},
                {"trace", trace_path},    {"epsilon", epsilon}};
    }
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--f1", opt.f1, "Base frequency [Hz, SI suffixes allowed]");
    cmd->add_option("--delta-f", opt.delta_f, "Carrier spacing [Hz] or 'auto'");
    cmd->add_option("--htx", opt.htx, "Transmitter height [m]");
    cmd->add_option("--hrx", opt.hrx, "Receiver height [m]");
    cmd->add_option("--dmin", opt.dmin, "Lower distance bound [m]");
    cmd->add_option("--dmax", opt.dmax, "Upper distance bound [m]");
    cmd->add_option("--pt", opt.pt, "Total transmit power [W]");
    cmd->add_option("--rho", opt.rho, "Reflected-path gain in [0, 1]");
    cmd->add_option("--theta", opt.theta, "Power split on carrier 1");
    cmd->add_option("--bandwidth", opt.bandwidth, "Total bandwidth B [Hz]");
    cmd->add_option("--noise-figure", opt.noise_figure, "Noise figure F [dB]");
    cmd->add_option("--noise-density", opt.noise_density, "Noise density N0 [dBm/Hz]");
    cmd->add_option("--seed", opt.seed, "RNG seed");
    cmd->add_option("--samples", opt.samples, "Monte-Carlo sample count");
    cmd->add_option("--output", opt.output, "Output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", opt.config_path, "JSON config file (flags override it)");
    cmd->add_option("--workers", opt.workers, "Worker threads for Monte-Carlo commands");
}

/// Flags beat config file, config file beats defaults.
void apply_config_file(CLI::App* cmd, Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw usage_error("config: cannot read " + opt.config_path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw usage_error("config: " + std::string(e.what()));
    }
    if (doc.contains("config")) doc = doc["config"];  // accept full JSON output files

    const auto unset = [&](const std::string& flag) {
        const auto* o = cmd->get_option_no_throw("--" + flag);
        return o != nullptr && o->count() == 0;
    };
    const auto get_str = [](const json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };

    for (const auto& [key, value] : doc.items()) {
        if (!unset(key)) continue;
        if (key == "f1") opt.f1 = get_str(value);
        else if (key == "delta-f") opt.delta_f = get_str(value);
        else if (key == "htx") opt.htx = value.get<double>();
        else if (key == "hrx") opt.hrx = value.get<double>();
        else if (key == "dmin") opt.dmin = value.get<double>();
        else if (key == "dmax") opt.dmax = value.get<double>();
        else if (key == "pt") opt.pt = value.get<double>();
        else if (key == "rho") opt.rho = value.get<double>();
        else if (key == "theta") opt.theta = value.get<double>();
        else if (key == "bandwidth") opt.bandwidth = get_str(value);
        else if (key == "noise-figure") opt.noise_figure = value.get<double>();
        else if (key == "noise-density") opt.noise_density = value.get<double>();
        else if (key == "seed") opt.seed = value.get<std::uint64_t>();
        else if (key == "samples") opt.samples = value.get<std::uint64_t>();
        else if (key == "output") opt.output = get_str(value);
        else if (key == "sweep") opt.sweep_axis = get_str(value);
        else if (key == "d") opt.at_distance = value.get<double>();
        else if (key == "points") opt.points = value.get<std::uint64_t>();
        else if (key == "from") opt.from = get_str(value);
        else if (key == "to") opt.to = get_str(value);
        else if (key == "sampler") opt.sampler = get_str(value);
        else if (key == "trace") opt.trace_path = get_str(value);
        else if (key == "epsilon") opt.epsilon = value.get<double>();
        // unknown keys are ignored so JSON outputs with extra fields re-feed cleanly
    }
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    json summary;  // optional extra block for JSON output / trailing comments for CSV
};

void emit(const Options& opt, const Table& table) {
    if (opt.output == "json") {
        json out{{"config", opt.to_json()}, {"columns", table.columns}, {"rows", table.rows}};
        if (!table.summary.is_null()) out["summary"] = table.summary;
        std::printf("%s\n", out.dump(2).c_str());
        return;
    }
    std::string header;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        header += (i ? "," : "") + table.columns[i];
    std::printf("%s\n", header.c_str());
    for (const auto& row : table.rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.10g", row[i]);
            line += (i ? "," : "") + std::string(buf);
        }
        std::printf("%s\n", line.c_str());
    }
    if (!table.summary.is_null())
        for (const auto& [key, value] : table.summary.items())
            std::printf("# %s = %s\n", key.c_str(), value.dump().c_str());
}

std::vector<double> log_grid(double lo, double hi, std::uint64_t n) {
    std::vector<double> grid;
    grid.reserve(n);
    if (n == 1) {
        grid.push_back(lo);
        return grid;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::uint64_t i = 0; i < n; ++i)
        grid.push_back(std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1)));
    return grid;
}

std::vector<double> linear_grid(double lo, double hi, std::uint64_t n) {
    std::vector<double> grid;
    grid.reserve(n);
    if (n == 1) {
        grid.push_back(lo);
        return grid;
    }
    for (std::uint64_t i = 0; i < n; ++i)
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return grid;
}

int cmd_power(const Options& opt) {
    const auto geom = opt.geometry();
    const double df = opt.resolve_delta_f();
    const auto cfg = opt.radio(df);
    const double dw = angular_frequency(df);

    Table table;
    if (opt.sweep_axis == "d") {
        table.columns = {"distance", "P_single_db", "P_sum_db", "P_bound_db"};
        const double lo = opt.from.empty() ? opt.dmin : parse_si(opt.from);
        const double hi = opt.to.empty() ? opt.dmax : parse_si(opt.to);
        for (const double d : log_grid(lo, hi, opt.points)) {
            RadioConfig single = cfg;
            table.rows.push_back(
                {d, linear_to_db(receive_power_single(d, cfg.omega1(), geom, single) / cfg.p_t),
                 linear_to_db(sum_power(d, dw, geom, cfg) / cfg.p_t),
                 linear_to_db(sum_power_lower_bound(d, dw, geom, cfg) / cfg.p_t)});
        }
    } else if (opt.sweep_axis == "delta_f") {
        table.columns = {"delta_f", "P_single_db", "P_sum_db", "P_bound_db"};
        const double d = opt.at_distance;
        const double lo = opt.from.empty() ? 1e6 : parse_si(opt.from);
        const double hi = opt.to.empty() ? 1.2 * null_spacing(d, 1, geom) / (2.0 * pi) : parse_si(opt.to);
        for (const double f : linear_grid(lo, hi, opt.points)) {
            const double w = angular_frequency(f);
            table.rows.push_back(
                {f, linear_to_db(receive_power_single(d, cfg.omega1(), geom, cfg) / cfg.p_t),
                 linear_to_db(sum_power(d, w, geom, cfg) / cfg.p_t),
                 linear_to_db(sum_power_lower_bound(d, w, geom, cfg) / cfg.p_t)});
        }
    } else {
        throw usage_error("sweep: must be 'd' or 'delta_f'");
    }
    emit(opt, table);
    return 0;
}

int cmd_optimize(const Options& opt) {
    const auto geom = opt.geometry();
    const auto interval = opt.interval();
    const auto cfg = opt.radio(0.0);
    const auto sol = optimal_spacing(interval, geom, cfg);

    const char* branch_name =
        sol.branch == SpacingBranch::NoIntersection ? "no-intersection"
        : sol.branch == SpacingBranch::IntersectBelowFirstNull ? "intersect-below-first-null"
                                                               : "intersect-between-nulls";
    json summary{{"delta_f_star_hz", sol.delta_f_star},
                 {"delta_omega_star", sol.delta_omega_star},
                 {"worst_case_power_db", linear_to_db(sol.worst_case_power / cfg.p_t)},
                 {"worst_case_power_dbm", watts_to_dbm(sol.worst_case_power)},
                 {"branch", branch_name},
                 {"iterations", sol.iterations},
                 {"wide_spacing_warning", sol.wide_spacing_warning},
                 {"peak_spacing_dmin_hz", peak_spacing(interval.d_min, 0, geom) / (2.0 * pi)},
                 {"peak_spacing_dmax_hz", peak_spacing(interval.d_max, 0, geom) / (2.0 * pi)},
                 {"null_spacing_dmin_hz", null_spacing(interval.d_min, 1, geom) / (2.0 * pi)},
                 {"null_spacing_dmax_hz", null_spacing(interval.d_max, 1, geom) / (2.0 * pi)}};

    if (opt.output == "json") {
        std::printf("%s\n", json{{"config", opt.to_json()}, {"summary", summary}}.dump(2).c_str());
    } else {
        for (const auto& [key, value] : summary.items())
            std::printf("%s = %s\n", key.c_str(), value.dump().c_str());
    }
    return 0;
}

int cmd_rate(const Options& opt) {
    const auto geom = opt.geometry();
    const auto interval = opt.interval();
    const double df = opt.resolve_delta_f();
    const auto cfg = opt.radio(df);
    const auto noise = opt.noise();
    const double dw = angular_frequency(df);

    Table table;
    table.columns = {"distance", "R1", "R2", "R2_lower"};
    const auto grid = opt.points == 1 ? std::vector<double>{opt.at_distance}
                                      : log_grid(interval.d_min, interval.d_max, opt.points);
    for (const double d : grid) {
        table.rows.push_back({d, rate_single(d, geom, cfg, noise).rate,
                              rate_two(d, dw, geom, cfg, noise).rate,
                              rate_two_lower_bound(d, dw, interval, geom, cfg, noise).rate});
    }
    table.summary = {{"delta_f_hz", df}};
    emit(opt, table);
    return 0;
}

mc::DistanceSampler make_sampler(const Options& opt) {
    if (opt.sampler == "uniform")
        return mc::DistanceSampler::uniform(opt.interval(), opt.seed);
    if (opt.sampler == "mobility") {
        mc::MobilityParams params;
        // Region geometry derived from the configured interval: center offset
        // is the midpoint, radius half the width.
        params.origin_offset = 0.5 * (opt.dmin + opt.dmax);
        params.region_radius = 0.5 * (opt.dmax - opt.dmin);
        return mc::DistanceSampler::mobility(params, opt.seed);
    }
    if (opt.sampler == "trace") {
        if (opt.trace_path.empty()) throw usage_error("trace: missing --trace path");
        return mc::DistanceSampler::trace(opt.trace_path);
    }
    throw usage_error("sampler: must be uniform|mobility|trace");
}

int cmd_outage(const Options& opt) {
    if (opt.samples < 1000) throw usage_error("samples: outage needs at least 1000 samples");
    const auto geom = opt.geometry();
    const auto interval = opt.interval();
    const double df = opt.resolve_delta_f();
    const auto cfg = opt.radio(df);
    const auto noise = opt.noise();
    const double dw = angular_frequency(df);
    const auto sampler = make_sampler(opt);

    const mc::RateFn rate1 = [&](double d) { return rate_single(d, geom, cfg, noise).rate; };
    const mc::RateFn rate2 = [&](double d) { return rate_two(d, dw, geom, cfg, noise).rate; };
    const mc::RateFn rate2_lower = [&](double d) {
        return rate_two_lower_bound(d, dw, interval, geom, cfg, noise).rate;
    };

    const double lo = opt.from.empty() ? 1e2 : parse_si(opt.from);
    const double hi = opt.to.empty() ? 1e7 : parse_si(opt.to);
    std::vector<double> thresholds;
    for (const double t : log_grid(lo, hi, opt.points)) thresholds.push_back(t);

    const auto eps1 = mc::outage_curve(sampler, rate1, thresholds, opt.samples, opt.workers);
    const auto eps2 = mc::outage_curve(sampler, rate2, thresholds, opt.samples, opt.workers);
    const auto eps2l = mc::outage_curve(sampler, rate2_lower, thresholds, opt.samples, opt.workers);

    Table table;
    table.columns = {"threshold", "eps_single", "eps_two_exact", "eps_two_bound"};
    for (std::size_t i = 0; i < thresholds.size(); ++i)
        table.rows.push_back(
            {thresholds[i], eps1[i].probability, eps2[i].probability, eps2l[i].probability});

    table.summary = {
        {"delta_f_hz", df},
        {"zoc_single", mc::eps_outage_capacity(sampler, rate1, 0.0, opt.samples, opt.workers)},
        {"zoc_two_exact", mc::eps_outage_capacity(sampler, rate2, 0.0, opt.samples, opt.workers)},
        {"zoc_two_bound", mc::eps_outage_capacity(sampler, rate2_lower, 0.0, opt.samples, opt.workers)},
        {"eps", opt.epsilon},
        {"eps_capacity_single",
         mc::eps_outage_capacity(sampler, rate1, opt.epsilon, opt.samples, opt.workers)},
        {"eps_capacity_two_exact",
         mc::eps_outage_capacity(sampler, rate2, opt.epsilon, opt.samples, opt.workers)},
        {"eps_capacity_two_bound",
         mc::eps_outage_capacity(sampler, rate2_lower, opt.epsilon, opt.samples, opt.workers)}};
    emit(opt, table);
    return 0;
}

/// Worst-case power and rate bound as a function of the spacing.
int cmd_sweep(const Options& opt) {
    const auto geom = opt.geometry();
    const auto interval = opt.interval();
    const auto cfg = opt.radio(0.0);
    const auto noise = opt.noise();

    const double null_hi = null_spacing(interval.d_max, 1, geom) / (2.0 * pi);
    const double lo = opt.from.empty() ? null_hi / 1000.0 : parse_si(opt.from);
    const double hi = opt.to.empty() ? null_hi * (1.0 - 1e-9) : parse_si(opt.to);

    Table table;
    table.columns = {"delta_f", "worst_case_power_db", "worst_case_rate_lower"};
    for (const double f : linear_grid(lo, hi, opt.points)) {
        const double w = angular_frequency(f);
        const double p = worst_case_power_two(interval, w, geom, cfg);
        const double alpha = alpha_offset(interval, w, geom, cfg, noise);
        const double band = noise.bandwidth / 2.0;
        const double rate = band * std::log2(1.0 + alpha + p / noise.noise_power(band));
        table.rows.push_back({f, linear_to_db(p / cfg.p_t), rate});
    }
    emit(opt, table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-ray ground-reflection link planner with two-carrier frequency diversity"};
    app.require_subcommand(1);

    Options opt;
    auto* power = app.add_subcommand("power", "Receive power and envelope sweeps");
    power->add_option("--sweep", opt.sweep_axis, "Sweep axis: d|delta_f");
    power->add_option("--d", opt.at_distance, "Fixed distance for delta_f sweeps [m]");
    power->add_option("--points", opt.points, "Grid points");
    power->add_option("--from", opt.from, "Sweep start (SI suffixes allowed)");
    power->add_option("--to", opt.to, "Sweep end (SI suffixes allowed)");

    auto* optimize = app.add_subcommand("optimize", "Optimal worst-case frequency spacing");

    auto* rate = app.add_subcommand("rate", "Achievable rates over distance");
    rate->add_option("--points", opt.points, "Grid points");
    rate->add_option("--d", opt.at_distance, "Distance for single-point output (--points 1)");

    auto* outage = app.add_subcommand("outage", "Monte-Carlo outage probability curves");
    outage->add_option("--sampler", opt.sampler, "Distance model: uniform|mobility|trace");
    outage->add_option("--trace", opt.trace_path, "Trace file for --sampler trace");
    outage->add_option("--points", opt.points, "Threshold grid points");
    outage->add_option("--from", opt.from, "Lowest threshold [bit/s]");
    outage->add_option("--to", opt.to, "Highest threshold [bit/s]");
    outage->add_option("--epsilon", opt.epsilon, "Target outage probability");

    auto* sweep = app.add_subcommand("sweep", "Worst-case metrics over the spacing");
    sweep->add_option("--points", opt.points, "Grid points");
    sweep->add_option("--from", opt.from, "Sweep start [Hz]");
    sweep->add_option("--to", opt.to, "Sweep end [Hz]");

    for (auto* cmd : {power, optimize, rate, outage, sweep}) add_common_flags(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    try {
        apply_config_file(cmd, opt);
        if (cmd == power) return cmd_power(opt);
        if (cmd == optimize) return cmd_optimize(opt);
        if (cmd == rate) return cmd_rate(opt);
        if (cmd == outage) return cmd_outage(opt);
        return cmd_sweep(opt);
    } catch (const usage_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    }
}
