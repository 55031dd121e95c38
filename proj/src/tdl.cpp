#include "fkwalk/tdl.hpp"

#include <cmath>
#include <numeric>

#include "fkwalk/errors.hpp"
#include "fkwalk/parallel.hpp"
#include "fkwalk/stochastics.hpp"

namespace fkwalk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double chebyshev_eval(int k, double x) {
    if (k == 0) return 1.0;
    if (k == 1) return x;
    double t_prev = 1.0;
    double t_cur = x;
    for (int n = 1; n < k; ++n) {
        const double t_next = 2.0 * x * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return t_cur;
}

double dirichlet_arctan_feature(const Point& x) {
    if (x[1] == 0.0) return 0.0;
    const double denom = 1.0 - x[0] * x[0] - x[1] * x[1];
    if (denom <= 0.0) return x[1] > 0.0 ? 0.5 * kPi : -0.5 * kPi;
    return std::atan(2.0 * x[1] / denom);
}

FeatureBasis tensor_chebyshev_basis(const std::vector<std::pair<int, int>>& degrees) {
    FeatureBasis basis;
    for (const auto& [k1, k2] : degrees) {
        basis.features.push_back([k1, k2](const Point& p) {
            return chebyshev_eval(k1, p[0]) * chebyshev_eval(k2, p[1]);
        });
        basis.labels.push_back("T" + std::to_string(k1) + "*T" + std::to_string(k2));
    }
    return basis;
}

FeatureBasis dirichlet_disk_basis() {
    FeatureBasis basis;
    basis.features.push_back([](const Point&) { return 1.0; });
    basis.labels.push_back("const");
    basis.features.push_back([](const Point& p) { return dirichlet_arctan_feature(p); });
    basis.labels.push_back("arctan");
    basis.features.push_back([](const Point& p) {
        return chebyshev_eval(2, p[0]) * chebyshev_eval(2, p[1]);
    });
    basis.labels.push_back("T2*T2");
    return basis;
}

std::vector<double> basis_eval(const FeatureBasis& basis, const Point& x) {
    std::vector<double> out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] = basis.features[k](x);
    return out;
}

LinearModel make_model(FeatureBasis basis) {
    LinearModel model;
    model.coefficients.assign(basis.size(), 0.0);
    model.basis = std::move(basis);
    return model;
}

double model_eval(const LinearModel& model, const Point& x) {
    double sum = 0.0;
    for (std::size_t k = 0; k < model.basis.size(); ++k) {
        sum += model.coefficients[k] * model.basis.features[k](x);
    }
    return sum;
}

LearningSchedule default_schedule(const FeatureBasis& basis,
                                  const DomainDescriptor& domain, double scale,
                                  std::uint64_t seed, int n_samples) {
    RngStream rng(seed, 0x5CED01EULL);
    std::vector<double> second_moment(basis.size(), 0.0);
    for (int s = 0; s < n_samples; ++s) {
        const Point p = sample_uniform_interior(domain, rng);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const double v = basis.features[k](p);
            second_moment[k] += v * v;
        }
    }
    LearningSchedule schedule;
    schedule.initial_rates.resize(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const double mean = second_moment[k] / std::max(1, n_samples);
        schedule.initial_rates[k] = scale / std::max(mean, 1e-8);
    }
    return schedule;
}

void td_interior_update(LinearModel& model, const Point& b_old, const Point& b_new,
                        double f_est, const std::vector<double>& rates) {
    const std::vector<double> feats = basis_eval(model.basis, b_old);
    const double u_old =
        std::inner_product(feats.begin(), feats.end(), model.coefficients.begin(), 0.0);
    const double u_new = model_eval(model, b_new);
    const double delta = u_new - u_old - 0.5 * f_est;
    for (std::size_t k = 0; k < feats.size(); ++k) {
        model.coefficients[k] += rates[k] * delta * feats[k];
    }
}

void td_terminal_update(LinearModel& model, const Point& b_old, double g_est,
                        double f_est, const std::vector<double>& rates) {
    const std::vector<double> feats = basis_eval(model.basis, b_old);
    const double u_old =
        std::inner_product(feats.begin(), feats.end(), model.coefficients.begin(), 0.0);
    const double delta = g_est - u_old - 0.5 * f_est;
    for (std::size_t k = 0; k < feats.size(); ++k) {
        model.coefficients[k] += rates[k] * delta * feats[k];
    }
}

TrainReport train(const ProblemSpec& problem, const FeatureBasis& basis,
                  std::int64_t n_walkers, double dt, const EstimatorConfig& cfg,
                  const LearningSchedule& schedule, TrainMode mode,
                  const StopRule& stop, std::uint64_t seed, int threads,
                  int record_stride, std::int64_t hard_step_cap) {
    const DomainDescriptor& domain = problem.domain;
    const std::size_t n = static_cast<std::size_t>(n_walkers);
    const std::size_t n_feat = basis.size();

    std::vector<RngStream> streams;
    streams.reserve(n);
    std::vector<Point> pos(n);
    std::vector<char> latched(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        streams.emplace_back(seed, static_cast<std::uint64_t>(i));
        pos[i] = sample_uniform_interior(domain, streams.back());
    }

    TrainReport report;
    report.final_model = make_model(basis);
    std::vector<double>& coeffs = report.final_model.coefficients;
    std::vector<double> rates = schedule.initial_rates;
    std::vector<double> snapshot(n_feat);
    std::vector<double> contrib(n * n_feat, 0.0);
    std::vector<char> stepped(n, 0);

    auto record = [&](std::int64_t step, std::int64_t exits) {
        report.trajectory.push_back(TrainReport::Row{step, exits, coeffs});
    };
    record(0, 0);

    std::int64_t exits_total = 0;
    std::int64_t step = 0;
    bool done = false;
    while (!done) {
        if (step >= hard_step_cap) {
            throw StepCapExceeded("train: global step cap reached before the stop rule");
        }
        ++step;
        snapshot = coeffs;
        std::vector<std::int64_t> exits_per_walker(n, 0);

        // Every walker's TD error is computed against the same snapshot, so
        // the summed update is independent of walker processing order.
        parallel_for(static_cast<std::int64_t>(n), threads,
                     [&](std::int64_t begin, std::int64_t end) {
            for (std::int64_t iw = begin; iw < end; ++iw) {
                const std::size_t i = static_cast<std::size_t>(iw);
                double* c = &contrib[i * n_feat];
                if (latched[i]) {
                    for (std::size_t k = 0; k < n_feat; ++k) c[k] = 0.0;
                    stepped[i] = 0;
                    continue;
                }
                RngStream& rng = streams[i];
                const Point b_old = pos[i];
                const Point b_new = gaussian_step(b_old, dt, rng);
                const StepContext ctx = make_step_context(domain, b_old, b_new, dt);
                const bool exited = exit_triggered(ctx, cfg, rng);
                stepped[i] = 1;

                double u_old = 0.0;
                for (std::size_t k = 0; k < n_feat; ++k) {
                    c[k] = basis.features[k](b_old);
                    u_old += snapshot[k] * c[k];
                }
                double target;
                const double f_est =
                    estimate_forcing(ctx, problem.forcing, cfg.f_estimate, exited);
                if (exited) {
                    target = estimate_boundary(ctx, problem.boundary_data, cfg,
                                               domain, rng);
                    exits_per_walker[i] = 1;
                    if (mode == TrainMode::fixed_cohort) {
                        latched[i] = 1;
                    } else {
                        pos[i] = sample_uniform_interior(domain, rng);
                    }
                } else {
                    double u_new = 0.0;
                    for (std::size_t k = 0; k < n_feat; ++k) {
                        u_new += snapshot[k] * basis.features[k](b_new);
                    }
                    target = u_new;
                    pos[i] = b_new;
                }
                const double delta = target - u_old - 0.5 * f_est;
                for (std::size_t k = 0; k < n_feat; ++k) c[k] *= delta;
            }
        });

        // Fixed-order reduction.
        std::int64_t exits_this_step = 0;
        std::int64_t transitions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            exits_this_step += exits_per_walker[i];
            transitions += stepped[i];
            const double* c = &contrib[i * n_feat];
            for (std::size_t k = 0; k < n_feat; ++k) {
                coeffs[k] += rates[k] * c[k] / static_cast<double>(n_walkers);
            }
        }
        exits_total += exits_this_step;
        report.total_transitions += transitions;

        if (schedule.decay == LearningSchedule::Decay::geometric &&
            step % std::max(1, schedule.stride) == 0) {
            for (double& r : rates) r *= schedule.ratio;
        }

        if (record_stride > 0 && step % record_stride == 0) record(step, exits_total);

        if (stop.exit_count > 0 && exits_total >= stop.exit_count) done = true;
        if (stop.step_count > 0 && step >= stop.step_count) done = true;
        if (mode == TrainMode::fixed_cohort) {
            bool all_latched = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (!latched[i]) {
                    all_latched = false;
                    break;
                }
            }
            if (all_latched) done = true;
        }
    }

    if (report.trajectory.back().step != step) record(step, exits_total);
    report.total_exits = exits_total;
    report.total_steps = step;
    return report;
}

} // namespace fkwalk
