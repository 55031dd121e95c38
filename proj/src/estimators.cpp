#include "fkwalk/estimators.hpp"

#include <cmath>
#include <limits>

#include "fkwalk/errors.hpp"
#include "fkwalk/stochastics.hpp"

namespace fkwalk {

namespace {

double lambda_or_throw(const StepContext& ctx) {
    if (std::isnan(ctx.lambda)) {
        throw DegenerateLambda("both step endpoints lie on the boundary");
    }
    return ctx.lambda;
}

} // namespace

StepContext make_step_context(const Point& b_old, const Point& b_new, double dt,
                              double rho_old, double rho_new) {
    StepContext ctx;
    ctx.b_old = b_old;
    ctx.b_new = b_new;
    ctx.dt = dt;
    ctx.rho_old = rho_old;
    ctx.rho_new = rho_new;
    ctx.delta_rho = rho_new - rho_old;
    const double denom = std::abs(rho_old) + std::abs(rho_new);
    ctx.lambda = denom > 0.0 ? std::abs(rho_new) / denom
                             : std::numeric_limits<double>::quiet_NaN();
    return ctx;
}

StepContext make_step_context(const DomainDescriptor& domain, const Point& b_old,
                              const Point& b_new, double dt) {
    return make_step_context(b_old, b_new, dt, domain.signed_distance(b_old),
                             domain.signed_distance(b_new));
}

bool exit_naive(const StepContext& ctx) { return ctx.rho_new >= 0.0; }

// b = 0 coincides with the naive condition, hence >= rather than >.
bool exit_bubble(const StepContext& ctx, double b) { return ctx.rho_new >= -b; }

bool exit_max_sampling(const StepContext& ctx, RngStream& rng) {
    if (ctx.rho_old >= 0.0) {
        throw InvalidState("exit_max_sampling: step does not start inside");
    }
    if (ctx.rho_new >= 0.0) return true;
    const double m = bridge_max_sample(ctx.delta_rho, ctx.dt, rng);
    return m > std::abs(ctx.rho_old);
}

bool exit_triggered(const StepContext& ctx, const EstimatorConfig& cfg,
                    RngStream& rng) {
    switch (cfg.exit_condition) {
        case ExitRule::naive:
            return exit_naive(ctx);
        case ExitRule::bubble_wrap:
            return exit_bubble(ctx, cfg.resolved_bubble_radius(ctx.dt));
        case ExitRule::max_sampling:
            return exit_max_sampling(ctx, rng);
    }
    return false;
}

double estimate_exit_time(const StepContext& ctx, TimeEstimate variant) {
    switch (variant) {
        case TimeEstimate::naive:
            return ctx.dt;
        case TimeEstimate::naive_plus:
            return 0.5 * ctx.dt;
        case TimeEstimate::corrected:
            return (1.0 - lambda_or_throw(ctx)) * ctx.dt;
    }
    return ctx.dt;
}

Point estimate_exit_location_corrected(const StepContext& ctx) {
    const double lambda = lambda_or_throw(ctx);
    return lerp(ctx.b_new, ctx.b_old, lambda);
}

double estimate_forcing(const StepContext& ctx, const ScalarField& f,
                        ForcingEstimate variant, bool exited) {
    switch (variant) {
        case ForcingEstimate::naive:
            return ctx.dt * f(ctx.b_old);
        case ForcingEstimate::trapezoid:
            return 0.5 * ctx.dt * (f(ctx.b_old) + f(ctx.b_new));
        case ForcingEstimate::corrected:
            if (exited) return (1.0 - lambda_or_throw(ctx)) * ctx.dt * f(ctx.b_old);
            return ctx.dt * f(ctx.b_old);
    }
    return 0.0;
}

BrfResult brownian_root_find(const Point& b_old, const Point& b_new, double dt,
                             const EstimatorConfig& cfg,
                             const DomainDescriptor& domain, RngStream& rng) {
    double rho_min = domain.signed_distance(b_old);
    if (rho_min >= 0.0) {
        throw StartOutsideDomain("brownian_root_find: b_old not inside the domain");
    }
    if (std::abs(rho_min) <= cfg.brf_epsilon) {
        return BrfResult{0.0, b_old, false};
    }

    double tau_min = 0.0;
    double tau_max = dt;
    Point x_min = b_old;
    Point x_max = b_new;
    double tau_exit = 0.0;
    Point x_exit = b_old;

    // Inner exit test on sub-brackets uses max-sampling plus the corrected
    // time/location estimates.
    for (int iter = 0; iter < cfg.brf_max_iter; ++iter) {
        const double span = tau_max - tau_min;
        tau_exit = (1.0 - cfg.brf_theta) * tau_min + cfg.brf_theta * tau_max;
        const double t = tau_exit - tau_min;
        x_exit = bridge_point_sample(x_min, x_max, span, t, rng);
        const double rho = domain.signed_distance(x_exit);
        if (rho > 0.0) {
            tau_max = tau_exit;
            x_max = x_exit;
        } else if (rho < 0.0) {
            const StepContext sub =
                make_step_context(x_min, x_exit, t, rho_min, rho);
            if (exit_max_sampling(sub, rng)) {
                return BrfResult{
                    tau_min + estimate_exit_time(sub, TimeEstimate::corrected),
                    estimate_exit_location_corrected(sub), false};
            }
            tau_min = tau_exit;
            x_min = x_exit;
            rho_min = rho;
        }
        if (std::abs(rho) <= cfg.brf_epsilon) {
            return BrfResult{tau_exit, x_exit, false};
        }
    }
    return BrfResult{tau_exit, x_exit, true};
}

double estimate_boundary(const StepContext& ctx, const ScalarField& g,
                         const EstimatorConfig& cfg,
                         const DomainDescriptor& domain, RngStream& rng) {
    switch (cfg.g_estimate) {
        case BoundaryEstimate::naive:
            return g(ctx.b_new);
        case BoundaryEstimate::corrected:
            return g(estimate_exit_location_corrected(ctx));
        case BoundaryEstimate::brf: {
            const BrfResult r =
                brownian_root_find(ctx.b_old, ctx.b_new, ctx.dt, cfg, domain, rng);
            return g(project_to_boundary(domain, r.exit_location));
        }
    }
    return 0.0;
}

ExitRule parse_exit_rule(const std::string& name) {
    if (name == "naive") return ExitRule::naive;
    if (name == "bubble") return ExitRule::bubble_wrap;
    if (name == "max") return ExitRule::max_sampling;
    throw Error("unknown exit condition: " + name);
}

TimeEstimate parse_time_estimate(const std::string& name) {
    if (name == "naive") return TimeEstimate::naive;
    if (name == "naive-plus") return TimeEstimate::naive_plus;
    if (name == "corrected") return TimeEstimate::corrected;
    throw Error("unknown t-estimate: " + name);
}

LocationEstimate parse_location_estimate(const std::string& name) {
    if (name == "endpoint") return LocationEstimate::endpoint;
    if (name == "corrected") return LocationEstimate::corrected;
    if (name == "brf") return LocationEstimate::brf;
    throw Error("unknown x-estimate: " + name);
}

ForcingEstimate parse_forcing_estimate(const std::string& name) {
    if (name == "naive") return ForcingEstimate::naive;
    if (name == "trapezoid") return ForcingEstimate::trapezoid;
    if (name == "corrected") return ForcingEstimate::corrected;
    throw Error("unknown f-estimate: " + name);
}

BoundaryEstimate parse_boundary_estimate(const std::string& name) {
    if (name == "naive") return BoundaryEstimate::naive;
    if (name == "corrected") return BoundaryEstimate::corrected;
    if (name == "brf") return BoundaryEstimate::brf;
    throw Error("unknown g-estimate: " + name);
}

std::string to_string(ExitRule v) {
    switch (v) {
        case ExitRule::naive: return "naive";
        case ExitRule::bubble_wrap: return "bubble";
        case ExitRule::max_sampling: return "max";
    }
    return "?";
}

std::string to_string(TimeEstimate v) {
    switch (v) {
        case TimeEstimate::naive: return "naive";
        case TimeEstimate::naive_plus: return "naive-plus";
        case TimeEstimate::corrected: return "corrected";
    }
    return "?";
}

std::string to_string(LocationEstimate v) {
    switch (v) {
        case LocationEstimate::endpoint: return "endpoint";
        case LocationEstimate::corrected: return "corrected";
        case LocationEstimate::brf: return "brf";
    }
    return "?";
}

std::string to_string(ForcingEstimate v) {
    switch (v) {
        case ForcingEstimate::naive: return "naive";
        case ForcingEstimate::trapezoid: return "trapezoid";
        case ForcingEstimate::corrected: return "corrected";
    }
    return "?";
}

std::string to_string(BoundaryEstimate v) {
    switch (v) {
        case BoundaryEstimate::naive: return "naive";
        case BoundaryEstimate::corrected: return "corrected";
        case BoundaryEstimate::brf: return "brf";
    }
    return "?";
}

} // namespace fkwalk
