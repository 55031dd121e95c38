#include "fkwalk/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "fkwalk/errors.hpp"
#include "fkwalk/parallel.hpp"
#include "fkwalk/stochastics.hpp"

namespace fkwalk {

namespace {

struct WalkerOutcome {
    double payoff = 0.0;
    std::int64_t steps = 0;
    double exit_time = 0.0;
    bool capped = false;
};

// One walker. The exit condition is evaluated on each genuine step
// interval (b_old, b_new); the degenerate initial pair (no step taken yet)
// counts as not exited. The exiting step's forcing contribution uses the
// configured variant with exit status known, which for the corrected variant
// shortens the final interval to (1 - lambda) dt.
WalkerOutcome run_walker(const ProblemSpec& problem, const Point& x0, double dt,
                         const EstimatorConfig& cfg, RngStream& rng,
                         std::int64_t step_cap) {
    const DomainDescriptor& domain = problem.domain;
    Point b_new = x0;
    double rho_new = domain.signed_distance(x0);
    double w = 0.0;
    std::int64_t steps = 0;
    while (true) {
        if (steps >= step_cap) return WalkerOutcome{0.0, steps, 0.0, true};
        const Point b_old = b_new;
        const double rho_old = rho_new;
        b_new = gaussian_step(b_old, dt, rng);
        rho_new = domain.signed_distance(b_new);
        ++steps;
        const StepContext ctx =
            make_step_context(b_old, b_new, dt, rho_old, rho_new);
        const bool exited = exit_triggered(ctx, cfg, rng);
        w -= 0.5 * estimate_forcing(ctx, problem.forcing, cfg.f_estimate, exited);
        if (exited) {
            w += estimate_boundary(ctx, problem.boundary_data, cfg, domain, rng);
            const double exit_time = static_cast<double>(steps - 1) * dt +
                                     estimate_exit_time(ctx, cfg.t_estimate);
            return WalkerOutcome{w, steps, exit_time, false};
        }
    }
}

} // namespace

McResult mc_estimate(const ProblemSpec& problem, const Point& x0, std::int64_t n,
                     double dt, const EstimatorConfig& cfg, std::uint64_t seed,
                     int threads, std::int64_t step_cap) {
    if (problem.domain.signed_distance(x0) >= 0.0) {
        throw StartOutsideDomain("mc_estimate: x0 not inside the domain");
    }
    std::vector<WalkerOutcome> outcomes(static_cast<std::size_t>(n));
    parallel_for(n, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            outcomes[static_cast<std::size_t>(i)] =
                run_walker(problem, x0, dt, cfg, rng, step_cap);
        }
    });

    // Welford in fixed walker order; capped walkers are excluded.
    McResult result;
    double mean = 0.0, m2 = 0.0, steps_sum = 0.0, time_sum = 0.0;
    std::int64_t included = 0;
    for (const WalkerOutcome& o : outcomes) {
        if (o.capped) {
            ++result.n_capped;
            continue;
        }
        ++included;
        const double delta = o.payoff - mean;
        mean += delta / static_cast<double>(included);
        m2 += delta * (o.payoff - mean);
        steps_sum += static_cast<double>(o.steps);
        time_sum += o.exit_time;
    }
    if (result.n_capped > 0) {
        std::fprintf(stderr,
                     "warning: %lld walker(s) hit the %lld-step cap and were "
                     "excluded\n",
                     static_cast<long long>(result.n_capped),
                     static_cast<long long>(step_cap));
    }
    result.n_walkers = included;
    if (included > 0) {
        result.estimate = mean;
        result.mean_steps = steps_sum / static_cast<double>(included);
        result.mean_exit_time = time_sum / static_cast<double>(included);
        if (included > 1) {
            result.stderr_est = std::sqrt(
                m2 / static_cast<double>(included - 1) / static_cast<double>(included));
        }
    }
    return result;
}

std::vector<BiasCell> bias_map(const ProblemSpec& problem,
                               const std::vector<Point>& grid, std::int64_t n,
                               double dt, const EstimatorConfig& cfg,
                               std::uint64_t seed, int threads,
                               std::int64_t step_cap) {
    if (!problem.exact_solution) {
        throw MissingExactSolution("bias_map: problem has no exact solution");
    }
    const ScalarField& exact = *problem.exact_solution;
    const double bubble =
        cfg.exit_condition == ExitRule::bubble_wrap ? cfg.resolved_bubble_radius(dt)
                                                    : 0.0;
    std::vector<BiasCell> cells;
    cells.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        BiasCell cell;
        cell.x = grid[i];
        cell.exact = exact(grid[i]);
        if (cfg.exit_condition == ExitRule::bubble_wrap &&
            problem.domain.signed_distance(grid[i]) >= -bubble) {
            cell.skipped = true;
            cells.push_back(cell);
            continue;
        }
        const std::uint64_t cell_seed =
            RngStream(seed, 0xB10C0000ULL + i).next_bits();
        const McResult r =
            mc_estimate(problem, grid[i], n, dt, cfg, cell_seed, threads, step_cap);
        cell.estimate = r.estimate;
        cell.stderr_est = r.stderr_est;
        cell.bias = cell.estimate - cell.exact;
        cells.push_back(cell);
    }
    return cells;
}

std::vector<BubbleSweepRow> bubble_sweep(const ProblemSpec& problem,
                                         const Point& x0,
                                         const std::vector<double>& b_values,
                                         std::int64_t n, double dt,
                                         std::uint64_t seed, int threads) {
    if (!problem.exact_solution) {
        throw MissingExactSolution("bubble_sweep: problem has no exact solution");
    }
    const double exact = (*problem.exact_solution)(x0);
    std::vector<BubbleSweepRow> rows;
    rows.reserve(b_values.size());
    for (double b : b_values) {
        EstimatorConfig cfg;
        cfg.exit_condition = ExitRule::bubble_wrap;
        cfg.bubble_radius = b;
        cfg.t_estimate = TimeEstimate::naive;
        cfg.x_estimate = LocationEstimate::endpoint;
        cfg.f_estimate = ForcingEstimate::naive;
        cfg.g_estimate = BoundaryEstimate::naive;
        const McResult r = mc_estimate(problem, x0, n, dt, cfg, seed, threads);
        rows.push_back(BubbleSweepRow{b, r.estimate - exact, r.stderr_est});
    }
    return rows;
}

double overshoot_stats(double dt, std::int64_t n, std::uint64_t seed,
                       int threads, std::int64_t step_cap) {
    const double sqrt_dt = std::sqrt(dt);
    std::vector<double> overshoot(static_cast<std::size_t>(n),
                                  std::numeric_limits<double>::quiet_NaN());
    parallel_for(n, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            // Barrier at 1, start at 0: rho(x) = x - 1.
            double x = 0.0;
            for (std::int64_t s = 0; s < step_cap; s += 2) {
                double z0, z1;
                rng.normal_pair(z0, z1);
                x += sqrt_dt * z0;
                if (x >= 1.0) {
                    overshoot[static_cast<std::size_t>(i)] = x - 1.0;
                    break;
                }
                x += sqrt_dt * z1;
                if (x >= 1.0) {
                    overshoot[static_cast<std::size_t>(i)] = x - 1.0;
                    break;
                }
            }
        }
    });
    double sum = 0.0;
    std::int64_t exited = 0;
    for (double v : overshoot) {
        if (!std::isnan(v)) {
            sum += v;
            ++exited;
        }
    }
    if (exited == 0) return 0.0;
    return sum / static_cast<double>(exited) / sqrt_dt;
}

std::vector<double> fpt_experiment(double a, double dt, std::int64_t n,
                                   const EstimatorConfig& cfg, std::uint64_t seed,
                                   int threads, std::int64_t step_cap) {
    const DomainDescriptor domain = half_line(a);
    std::vector<double> times(static_cast<std::size_t>(n),
                              std::numeric_limits<double>::quiet_NaN());
    parallel_for(n, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            double x = 0.0;
            for (std::int64_t s = 1; s <= step_cap; ++s) {
                const double x_new = x + std::sqrt(dt) * rng.normal();
                const StepContext ctx = make_step_context(
                    Point::d1(x), Point::d1(x_new), dt, x - a, x_new - a);
                if (exit_triggered(ctx, cfg, rng)) {
                    double within;
                    if (cfg.x_estimate == LocationEstimate::brf) {
                        within = brownian_root_find(Point::d1(x), Point::d1(x_new),
                                                    dt, cfg, domain, rng)
                                     .exit_time;
                    } else {
                        within = estimate_exit_time(ctx, cfg.t_estimate);
                    }
                    times[static_cast<std::size_t>(i)] =
                        static_cast<double>(s - 1) * dt + within;
                    break;
                }
                x = x_new;
            }
        }
    });
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        if (!std::isnan(t)) out.push_back(t);
    }
    return out;
}

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf,
                   std::int64_t total_n) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(
        std::max<std::int64_t>(total_n, static_cast<std::int64_t>(samples.size())));
    double sup = 1.0 - static_cast<double>(samples.size()) / n;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        sup = std::max({sup, f - lo, hi - f});
    }
    return sup;
}

std::vector<Point> interior_grid(const DomainDescriptor& domain, int nx) {
    std::vector<Point> pts;
    const Box& box = domain.bounding_box;
    if (domain.dimension != 2 || nx < 1) return pts;
    for (int j = 0; j < nx; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double fx = nx == 1 ? 0.5 : static_cast<double>(i) / (nx - 1);
            const double fy = nx == 1 ? 0.5 : static_cast<double>(j) / (nx - 1);
            Point p = Point::d2(box.lo[0] + fx * (box.hi[0] - box.lo[0]),
                                box.lo[1] + fy * (box.hi[1] - box.lo[1]));
            if (domain.signed_distance(p) < 0.0) pts.push_back(p);
        }
    }
    return pts;
}

} // namespace fkwalk
