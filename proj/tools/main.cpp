// fkwalk: experiment runner for the Feynman-Kac walker library. Every
// subcommand writes CSV with the full effective configuration echoed as
// "# key = value" comment lines, so each artifact is self-describing.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "fkwalk/errors.hpp"
#include "fkwalk/estimators.hpp"
#include "fkwalk/montecarlo.hpp"
#include "fkwalk/problems.hpp"
#include "fkwalk/quadrature.hpp"
#include "fkwalk/stochastics.hpp"
#include "fkwalk/tdl.hpp"

namespace {

using namespace fkwalk;

constexpr const char* kVersion = "1.0.0";

// Configuration problems detected after parsing; mapped to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(std::int64_t v) { return std::to_string(v); }

// Options shared by the sampling subcommands. threads is deliberately not
// part of the echoed config: outputs are invariant to it by contract.
struct CommonOpts {
    std::string problem = "poisson-disk";
    std::int64_t n = 65536;
    double dt = 0.01;
    std::uint64_t seed = 0;
    std::string exit = "max";
    std::string bubble_radius = "auto";
    std::string t_est = "corrected";
    std::string x_est = "corrected";
    std::string g_est = "corrected";
    std::string f_est = "corrected";
    double theta = 0.5;
    double epsilon = 0.01;
    std::string out;
    int threads = 0;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_problem = true) {
    if (with_problem) {
        cmd->add_option("--problem", o.problem, "Problem name")
            ->capture_default_str();
    }
    cmd->add_option("--n", o.n, "Number of walkers")->capture_default_str();
    cmd->add_option("--dt", o.dt, "Time step")->capture_default_str();
    cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--exit", o.exit, "Exit condition: naive|bubble|max")
        ->capture_default_str();
    cmd->add_option("--bubble-radius", o.bubble_radius,
                    "Bubble radius (real or 'auto')")
        ->capture_default_str();
    cmd->add_option("--t-est", o.t_est, "Exit time estimate: naive|naive-plus|corrected")
        ->capture_default_str();
    cmd->add_option("--x-est", o.x_est, "Exit location estimate: endpoint|corrected|brf")
        ->capture_default_str();
    cmd->add_option("--g-est", o.g_est, "Boundary estimate: naive|corrected|brf")
        ->capture_default_str();
    cmd->add_option("--f-est", o.f_est, "Forcing estimate: naive|trapezoid|corrected")
        ->capture_default_str();
    cmd->add_option("--theta", o.theta, "Root-finding bracket fraction")
        ->capture_default_str();
    cmd->add_option("--epsilon", o.epsilon, "Root-finding boundary tolerance")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "Output path (default: stdout)");
    cmd->add_option("--threads", o.threads, "Thread cap (0 = machine parallelism)");
    cmd->set_config("--config", "", "Key=value config file; flags take precedence");
}

EstimatorConfig build_estimator_config(const CommonOpts& o) {
    EstimatorConfig cfg;
    try {
        cfg.exit_condition = parse_exit_rule(o.exit);
        cfg.t_estimate = parse_time_estimate(o.t_est);
        cfg.x_estimate = parse_location_estimate(o.x_est);
        cfg.g_estimate = parse_boundary_estimate(o.g_est);
        cfg.f_estimate = parse_forcing_estimate(o.f_est);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (o.bubble_radius == "auto") {
        cfg.bubble_radius = kAutoBubbleRadius;
    } else {
        try {
            std::size_t pos = 0;
            cfg.bubble_radius = std::stod(o.bubble_radius, &pos);
            if (pos != o.bubble_radius.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ConfigError("invalid --bubble-radius: " + o.bubble_radius);
        }
        if (cfg.bubble_radius < 0.0) {
            throw ConfigError("--bubble-radius must be nonnegative or 'auto'");
        }
    }
    cfg.brf_theta = o.theta;
    cfg.brf_epsilon = o.epsilon;
    return cfg;
}

ProblemRegistryEntry lookup_problem(const std::string& name) {
    try {
        return find_problem(name);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

// Output stream selection; owns the file handle when --out is given.
struct Sink {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file = std::make_unique<std::ofstream>(path);
        if (!file->is_open()) throw ConfigError("cannot open --out path: " + path);
        stream = file.get();
    }
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

void write_header(std::ostream& out, const std::string& subcommand,
                  const KeyValues& kv) {
    out << "# version = " << kVersion << "\n";
    out << "# subcommand = " << subcommand << "\n";
    for (const auto& [k, v] : kv) out << "# " << k << " = " << v << "\n";
}

KeyValues common_kv(const CommonOpts& o, bool with_problem = true) {
    KeyValues kv;
    if (with_problem) kv.emplace_back("problem", o.problem);
    kv.emplace_back("n", fmt(o.n));
    kv.emplace_back("dt", fmt(o.dt));
    kv.emplace_back("seed", std::to_string(o.seed));
    kv.emplace_back("exit", o.exit);
    kv.emplace_back("bubble_radius", o.bubble_radius);
    kv.emplace_back("t_est", o.t_est);
    kv.emplace_back("x_est", o.x_est);
    kv.emplace_back("g_est", o.g_est);
    kv.emplace_back("f_est", o.f_est);
    kv.emplace_back("theta", fmt(o.theta));
    kv.emplace_back("epsilon", fmt(o.epsilon));
    return kv;
}

// ---------------------------------------------------------------- mc-point

struct McPointOpts {
    CommonOpts common;
    std::vector<double> x0 = {0.0, 0.0};
};

int run_mc_point(const McPointOpts& o) {
    const ProblemRegistryEntry entry = lookup_problem(o.common.problem);
    const EstimatorConfig cfg = build_estimator_config(o.common);
    if (static_cast<int>(o.x0.size()) != entry.spec.domain.dimension) {
        throw ConfigError("--x0 must have " +
                          std::to_string(entry.spec.domain.dimension) +
                          " coordinates for " + o.common.problem);
    }
    Point x0 = entry.spec.domain.dimension == 1 ? Point::d1(o.x0[0])
                                                : Point::d2(o.x0[0], o.x0[1]);
    const McResult r = mc_estimate(entry.spec, x0, o.common.n, o.common.dt, cfg,
                                   o.common.seed, o.common.threads);

    Sink sink(o.common.out);
    std::ostream& out = *sink.stream;
    KeyValues kv = common_kv(o.common);
    std::string x0_str = fmt(o.x0[0]);
    for (std::size_t i = 1; i < o.x0.size(); ++i) x0_str += "," + fmt(o.x0[i]);
    kv.emplace_back("x0", x0_str);
    write_header(out, "mc-point", kv);
    out << "x1,x2,estimate,stderr,exact,bias\n";
    const std::string x2 = x0.dim == 2 ? fmt(x0[1]) : "";
    if (entry.spec.exact_solution) {
        const double exact = (*entry.spec.exact_solution)(x0);
        out << fmt(x0[0]) << "," << x2 << "," << fmt(r.estimate) << ","
            << fmt(r.stderr_est) << "," << fmt(exact) << ","
            << fmt(r.estimate - exact) << "\n";
    } else {
        out << fmt(x0[0]) << "," << x2 << "," << fmt(r.estimate) << ","
            << fmt(r.stderr_est) << ",,\n";
    }
    return 0;
}

// ---------------------------------------------------------------- bias-map

struct BiasMapOpts {
    CommonOpts common;
    int grid = 41;
};

int run_bias_map(const BiasMapOpts& o) {
    const ProblemRegistryEntry entry = lookup_problem(o.common.problem);
    const EstimatorConfig cfg = build_estimator_config(o.common);
    if (entry.spec.domain.dimension != 2) {
        throw ConfigError("bias-map needs a planar problem");
    }
    const std::vector<Point> grid = interior_grid(entry.spec.domain, o.grid);
    const std::vector<BiasCell> cells =
        bias_map(entry.spec, grid, o.common.n, o.common.dt, cfg, o.common.seed,
                 o.common.threads);

    Sink sink(o.common.out);
    std::ostream& out = *sink.stream;
    KeyValues kv = common_kv(o.common);
    kv.emplace_back("grid", std::to_string(o.grid));
    write_header(out, "bias-map", kv);
    out << "x1,x2,estimate,stderr,exact,bias,skipped\n";
    for (const BiasCell& c : cells) {
        if (c.skipped) {
            out << fmt(c.x[0]) << "," << fmt(c.x[1]) << ",,," << fmt(c.exact)
                << ",,1\n";
        } else {
            out << fmt(c.x[0]) << "," << fmt(c.x[1]) << "," << fmt(c.estimate)
                << "," << fmt(c.stderr_est) << "," << fmt(c.exact) << ","
                << fmt(c.bias) << ",0\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------ bubble-sweep

struct BubbleSweepOpts {
    CommonOpts common;
    std::vector<double> point = {0.8 * 0.5, 0.8 * 0.8660254037844386};
    std::string b_values = "auto";
};

std::vector<double> parse_b_values(const std::string& text, double dt) {
    std::vector<double> values;
    if (text == "auto") {
        // 0 to 0.8 sqrt(dt) in steps of 0.1 sqrt(dt), plus the mean-overshoot
        // radius so the sweep always contains the predicted zero crossing.
        const double s = std::sqrt(dt);
        for (int k = 0; k <= 8; ++k) values.push_back(0.1 * k * s);
        values.push_back(kMeanOvershootCoefficient * s);
        std::sort(values.begin(), values.end());
        return values;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ConfigError("invalid --b-values entry: " + item);
        }
    }
    if (values.empty()) throw ConfigError("--b-values is empty");
    return values;
}

int run_bubble_sweep(const BubbleSweepOpts& o) {
    const ProblemRegistryEntry entry = lookup_problem(o.common.problem);
    if (o.point.size() != 2 || entry.spec.domain.dimension != 2) {
        throw ConfigError("bubble-sweep needs a planar problem and a 2-d --point");
    }
    const Point x0 = Point::d2(o.point[0], o.point[1]);
    const std::vector<double> b_values = parse_b_values(o.b_values, o.common.dt);
    const std::vector<BubbleSweepRow> rows =
        bubble_sweep(entry.spec, x0, b_values, o.common.n, o.common.dt,
                     o.common.seed, o.common.threads);

    Sink sink(o.common.out);
    std::ostream& out = *sink.stream;
    KeyValues kv = common_kv(o.common);
    kv.emplace_back("point", fmt(o.point[0]) + "," + fmt(o.point[1]));
    kv.emplace_back("b_values", o.b_values);
    write_header(out, "bubble-sweep", kv);
    const double auto_b = kMeanOvershootCoefficient * std::sqrt(o.common.dt);
    out << "b,bias,stderr,is_mean_overshoot_radius\n";
    for (const BubbleSweepRow& r : rows) {
        const bool flagged = std::abs(r.b - auto_b) < 1e-12;
        out << fmt(r.b) << "," << fmt(r.bias) << "," << fmt(r.stderr_est) << ","
            << (flagged ? 1 : 0) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- fpt-cdf

struct FptOpts {
    CommonOpts common;
    double a = 1.0;
    std::int64_t step_cap = 100000;
};

int run_fpt_cdf(const FptOpts& o) {
    if (o.a <= 0.0) throw ConfigError("--a must be positive");
    const EstimatorConfig cfg = build_estimator_config(o.common);
    std::vector<double> times = fpt_experiment(o.a, o.common.dt, o.common.n, cfg,
                                               o.common.seed, o.common.threads,
                                               o.step_cap);
    std::sort(times.begin(), times.end());
    const double ks = ks_distance(
        times, [&](double t) { return levy_fpt_cdf(o.a, t); }, o.common.n);

    Sink sink(o.common.out);
    std::ostream& out = *sink.stream;
    KeyValues kv = common_kv(o.common, false);
    kv.emplace_back("a", fmt(o.a));
    kv.emplace_back("step_cap", fmt(o.step_cap));
    write_header(out, "fpt-cdf", kv);
    out << "t,empirical_cdf,levy_cdf\n";
    const double denom = static_cast<double>(o.common.n);
    for (std::size_t i = 0; i < times.size(); ++i) {
        out << fmt(times[i]) << "," << fmt(static_cast<double>(i + 1) / denom)
            << "," << fmt(levy_fpt_cdf(o.a, times[i])) << "\n";
    }
    out << "# samples = " << times.size() << "\n";
    out << "# ks_distance = " << fmt(ks) << "\n";
    return 0;
}

// --------------------------------------------------------------- overshoot

struct OvershootOpts {
    CommonOpts common;
    std::int64_t step_cap = 1000;
};

int run_overshoot(const OvershootOpts& o) {
    const double mean = overshoot_stats(o.common.dt, o.common.n, o.common.seed,
                                        o.common.threads, o.step_cap);
    Sink sink(o.common.out);
    std::ostream& out = *sink.stream;
    KeyValues kv;
    kv.emplace_back("n", fmt(o.common.n));
    kv.emplace_back("dt", fmt(o.common.dt));
    kv.emplace_back("seed", std::to_string(o.common.seed));
    kv.emplace_back("step_cap", fmt(o.step_cap));
    write_header(out, "overshoot", kv);
    out << "dt,mean_overshoot,reference\n";
    out << fmt(o.common.dt) << "," << fmt(mean) << ","
        << fmt(kMeanOvershootCoefficient) << "\n";
    return 0;
}

// --------------------------------------------------------------- tdl-train

struct TdlOpts {
    CommonOpts common;
    std::int64_t walkers = 16384;
    std::string mode = "restart";
    std::int64_t stop_exits = 16384;
    std::int64_t stop_steps = -1;
    double scale = 16.0;
    double decay_ratio = 0.999;
    int record_stride = 16;
};

int run_tdl_train(const TdlOpts& o) {
    const ProblemRegistryEntry entry = lookup_problem(o.common.problem);
    if (!entry.default_basis) {
        throw ConfigError("problem " + o.common.problem + " has no feature basis");
    }
    const EstimatorConfig cfg = build_estimator_config(o.common);
    TrainMode mode;
    if (o.mode == "restart") {
        mode = TrainMode::restart;
    } else if (o.mode == "fixed-cohort") {
        mode = TrainMode::fixed_cohort;
    } else {
        throw ConfigError("unknown --mode: " + o.mode);
    }
    if (o.stop_exits <= 0 && o.stop_steps <= 0 && mode == TrainMode::restart) {
        throw ConfigError("restart mode needs --stop-exits or --stop-steps");
    }
    const FeatureBasis& basis = *entry.default_basis;
    LearningSchedule schedule = default_schedule(basis, entry.spec.domain,
                                                 o.scale, o.common.seed);
    schedule.ratio = o.decay_ratio;
    StopRule stop;
    stop.exit_count = o.stop_exits;
    stop.step_count = o.stop_steps;
    const TrainReport report =
        train(entry.spec, basis, o.walkers, o.common.dt, cfg, schedule, mode,
              stop, o.common.seed, o.common.threads, o.record_stride);

    Sink sink(o.common.out);
    std::ostream& out = *sink.stream;
    KeyValues kv = common_kv(o.common);
    kv.emplace_back("walkers", fmt(o.walkers));
    kv.emplace_back("mode", o.mode);
    kv.emplace_back("stop_exits", fmt(o.stop_exits));
    kv.emplace_back("stop_steps", fmt(o.stop_steps));
    kv.emplace_back("scale", fmt(o.scale));
    kv.emplace_back("decay_ratio", fmt(o.decay_ratio));
    kv.emplace_back("record_stride", std::to_string(o.record_stride));
    write_header(out, "tdl-train", kv);
    out << "step,exits";
    for (const std::string& label : basis.labels) out << "," << label;
    out << "\n";
    for (const TrainReport::Row& row : report.trajectory) {
        out << row.step << "," << row.exits;
        for (double c : row.coefficients) out << "," << fmt(c);
        out << "\n";
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out << "# final " << basis.labels[k] << " = "
            << fmt(report.final_model.coefficients[k]) << "\n";
    }
    out << "# total_steps = " << report.total_steps << "\n";
    out << "# total_exits = " << report.total_exits << "\n";
    return 0;
}

// ------------------------------------------------------------ oracle-check

struct OracleOpts {
    std::string out;
};

int run_oracle_check(const OracleOpts& o) {
    Sink sink(o.out);
    std::ostream& out = *sink.stream;
    write_header(out, "oracle-check", {});
    out << "check,value,tolerance,pass\n";
    bool all_pass = true;
    auto report = [&](const std::string& name, double value, double tol) {
        const bool pass = value <= tol;
        all_pass = all_pass && pass;
        out << name << "," << fmt(value) << "," << fmt(tol) << ","
            << (pass ? 1 : 0) << "\n";
    };

    // Closed-form expected exit time against the first moment of the
    // exit-time density.
    double worst_rel = 0.0;
    for (double a : {0.25, 0.5, 0.75}) {
        for (double dt : {0.1, 1.0, 10.0}) {
            const double x = 1.0;
            const double oracle = integrate(
                [&](double t) { return t * exit_time_density(-a, x - a, dt, t); },
                0.0, dt, 1e-12);
            const double rel =
                std::abs(expected_exit_time(a, x, dt) - oracle) / oracle;
            worst_rel = std::max(worst_rel, rel);
        }
    }
    report("expected_exit_time_vs_quadrature", worst_rel, 1e-6);

    // Squeeze bounds on the expected exit time over a parameter grid.
    double worst_violation = 0.0;
    for (int ia = 1; ia <= 10; ++ia) {
        for (int ix = 1; ix <= 10; ++ix) {
            for (int it = 1; it <= 10; ++it) {
                const double x = 0.2 * ix;
                const double a = x * ia / 11.0;
                const double dt = 0.3 * it;
                const double ratio = expected_exit_time(a, x, dt) / ((a / x) * dt);
                worst_violation = std::max(worst_violation, ratio - 1.0);
                worst_violation = std::max(
                    worst_violation, 1.0 / (1.0 + dt / (x * x)) - ratio);
            }
        }
    }
    report("mills_ratio_bounds", worst_violation, 1e-12);

    // Exit-time density integrates to 1 when the endpoint is outside.
    const double mass = integrate(
        [](double t) { return exit_time_density(-1.0, 1.0, 1.0, t); }, 0.0, 1.0,
        1e-10);
    report("exit_time_density_normalization", std::abs(mass - 1.0), 1e-6);

    // Local-time identity E[T_a] = a * integral of the tail.
    {
        const double a = 0.5, x = 1.0, dt = 1.0;
        const double integral = integrate_half_line(
            [&](double y) { return local_time_tail(a, x, dt, y); }, 1e-12);
        const double expected = expected_exit_time(a, x, dt);
        report("local_time_identity", std::abs(a * integral - expected) / expected,
               1e-6);
    }

    // Bridge-maximum sampler against its analytic tail.
    {
        const std::vector<std::pair<double, double>> cases = {
            {-1.0, 1.0}, {0.0, 1.0}, {1.0, 0.1}};
        double worst_ks = 0.0;
        std::uint64_t stream = 0;
        for (const auto& [x, dt] : cases) {
            RngStream rng(17, stream++);
            const int n = 1000000;
            std::vector<double> samples(n);
            for (int i = 0; i < n; ++i) samples[i] = bridge_max_sample(x, dt, rng);
            const double ks = ks_distance(
                samples, [&](double m) {
                    return m < std::max(x, 0.0) ? 0.0
                                                : 1.0 - bridge_max_tail(x, dt, m);
                });
            worst_ks = std::max(worst_ks, ks);
        }
        report("bridge_max_ks", worst_ks, 0.005);
    }

    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feynman-Kac Monte Carlo experiment runner"};
    app.require_subcommand(1);

    McPointOpts mc;
    CLI::App* mc_cmd = app.add_subcommand("mc-point", "Estimate u(x0)");
    add_common_flags(mc_cmd, mc.common);
    mc_cmd->add_option("--x0", mc.x0, "Evaluation point")->expected(1, 2);

    BiasMapOpts bm;
    bm.common.n = 4096;
    bm.common.dt = 0.1;
    CLI::App* bm_cmd = app.add_subcommand("bias-map", "Pointwise bias on a grid");
    add_common_flags(bm_cmd, bm.common);
    bm_cmd->add_option("--grid", bm.grid, "Grid resolution per axis")
        ->capture_default_str();

    BubbleSweepOpts bs;
    CLI::App* bs_cmd =
        app.add_subcommand("bubble-sweep", "Bias as a function of bubble radius");
    add_common_flags(bs_cmd, bs.common);
    bs_cmd->add_option("--point", bs.point, "Evaluation point")->expected(2);
    bs_cmd->add_option("--b-values", bs.b_values,
                       "Comma-separated radii or 'auto'")
        ->capture_default_str();

    FptOpts fpt;
    fpt.common.n = 131072;
    fpt.common.dt = 1.5;
    CLI::App* fpt_cmd =
        app.add_subcommand("fpt-cdf", "First-passage-time CDF experiment");
    add_common_flags(fpt_cmd, fpt.common, false);
    fpt_cmd->add_option("--a", fpt.a, "Barrier level")->capture_default_str();
    fpt_cmd->add_option("--step-cap", fpt.step_cap, "Per-walker step cap")
        ->capture_default_str();

    OvershootOpts os;
    os.common.n = 1000000;
    os.common.dt = 0.001;
    CLI::App* os_cmd =
        app.add_subcommand("overshoot", "Mean boundary overshoot statistic");
    os_cmd->add_option("--n", os.common.n, "Number of walkers")
        ->capture_default_str();
    os_cmd->add_option("--dt", os.common.dt, "Time step")->capture_default_str();
    os_cmd->add_option("--seed", os.common.seed, "RNG seed")->capture_default_str();
    os_cmd->add_option("--step-cap", os.step_cap, "Per-walker step cap")
        ->capture_default_str();
    os_cmd->add_option("--out", os.common.out, "Output path (default: stdout)");
    os_cmd->add_option("--threads", os.common.threads,
                       "Thread cap (0 = machine parallelism)");
    os_cmd->set_config("--config", "", "Key=value config file; flags take precedence");

    TdlOpts tdl;
    CLI::App* tdl_cmd =
        app.add_subcommand("tdl-train", "Temporal-difference training run");
    add_common_flags(tdl_cmd, tdl.common);
    tdl_cmd->add_option("--walkers", tdl.walkers, "Cohort size")
        ->capture_default_str();
    tdl_cmd->add_option("--mode", tdl.mode, "restart|fixed-cohort")
        ->capture_default_str();
    tdl_cmd->add_option("--stop-exits", tdl.stop_exits, "Stop after this many exits")
        ->capture_default_str();
    tdl_cmd->add_option("--stop-steps", tdl.stop_steps,
                        "Stop after this many global steps")
        ->capture_default_str();
    tdl_cmd->add_option("--scale", tdl.scale, "Learning-rate scale")
        ->capture_default_str();
    tdl_cmd->add_option("--decay-ratio", tdl.decay_ratio,
                        "Geometric decay per step")
        ->capture_default_str();
    tdl_cmd->add_option("--record-stride", tdl.record_stride,
                        "Trajectory sampling stride")
        ->capture_default_str();

    OracleOpts oracle;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle-check", "Analytic-oracle self checks");
    oracle_cmd->add_option("--out", oracle.out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mc_cmd->parsed()) return run_mc_point(mc);
        if (bm_cmd->parsed()) return run_bias_map(bm);
        if (bs_cmd->parsed()) return run_bubble_sweep(bs);
        if (fpt_cmd->parsed()) return run_fpt_cdf(fpt);
        if (os_cmd->parsed()) return run_overshoot(os);
        if (tdl_cmd->parsed()) return run_tdl_train(tdl);
        if (oracle_cmd->parsed()) return run_oracle_check(oracle);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
