#pragma once

#include <string>

#include "fkwalk/geometry.hpp"
#include "fkwalk/point.hpp"
#include "fkwalk/rng.hpp"

namespace fkwalk {

/// Mean overshoot coefficient |zeta(1/2)| / sqrt(2 pi).
inline const double kMeanOvershootCoefficient =
    1.4603545088095868 / std::sqrt(2.0 * 3.141592653589793238462643383279502884);

enum class ExitRule { naive, bubble_wrap, max_sampling };
enum class TimeEstimate { naive, naive_plus, corrected };
enum class LocationEstimate { endpoint, corrected, brf };
enum class ForcingEstimate { naive, trapezoid, corrected };
enum class BoundaryEstimate { naive, corrected, brf };

/// Sentinel for "resolve the bubble radius from dt at use time".
constexpr double kAutoBubbleRadius = -1.0;

struct EstimatorConfig {
    ExitRule exit_condition = ExitRule::max_sampling;
    double bubble_radius = kAutoBubbleRadius;
    TimeEstimate t_estimate = TimeEstimate::corrected;
    LocationEstimate x_estimate = LocationEstimate::corrected;
    ForcingEstimate f_estimate = ForcingEstimate::corrected;
    BoundaryEstimate g_estimate = BoundaryEstimate::corrected;
    double brf_theta = 0.5;
    double brf_epsilon = 0.01;
    int brf_max_iter = 64;

    /// Auto radius resolves to the mean-overshoot value 0.5826 sqrt(dt).
    double resolved_bubble_radius(double dt) const {
        return bubble_radius < 0.0 ? kMeanOvershootCoefficient * std::sqrt(dt)
                                   : bubble_radius;
    }
};

/// One discretized step (b_old -> b_new over dt) with cached signed distances.
/// lambda is NaN when both endpoints sit exactly on the boundary.
struct StepContext {
    Point b_old;
    Point b_new;
    double dt = 0.0;
    double rho_old = 0.0;
    double rho_new = 0.0;
    double delta_rho = 0.0;
    double lambda = 0.0;
};

StepContext make_step_context(const DomainDescriptor& domain, const Point& b_old,
                              const Point& b_new, double dt);
StepContext make_step_context(const Point& b_old, const Point& b_new, double dt,
                              double rho_old, double rho_new);

bool exit_naive(const StepContext& ctx);
bool exit_bubble(const StepContext& ctx, double b);
bool exit_max_sampling(const StepContext& ctx, RngStream& rng);
bool exit_triggered(const StepContext& ctx, const EstimatorConfig& cfg,
                    RngStream& rng);

/// Exit time within the step, in [0, dt].
double estimate_exit_time(const StepContext& ctx, TimeEstimate variant);

/// (1 - lambda) b_new + lambda b_old, the linear-interpolant crossing point.
Point estimate_exit_location_corrected(const StepContext& ctx);

/// Contribution of one step to the running integral of f.
double estimate_forcing(const StepContext& ctx, const ScalarField& f,
                        ForcingEstimate variant, bool exited);

struct BrfResult {
    double exit_time = 0.0;
    Point exit_location;
    bool iteration_capped = false;
};

/// Brownian root-finding: refine the exit time and location by repeatedly
/// sampling bridge interior points at fraction theta of the current bracket.
BrfResult brownian_root_find(const Point& b_old, const Point& b_new, double dt,
                             const EstimatorConfig& cfg,
                             const DomainDescriptor& domain, RngStream& rng);

/// Boundary-data estimate at the exit of the step. The BRF variant projects
/// the root-find location onto the boundary before evaluating g.
double estimate_boundary(const StepContext& ctx, const ScalarField& g,
                         const EstimatorConfig& cfg,
                         const DomainDescriptor& domain, RngStream& rng);

ExitRule parse_exit_rule(const std::string& name);
TimeEstimate parse_time_estimate(const std::string& name);
LocationEstimate parse_location_estimate(const std::string& name);
ForcingEstimate parse_forcing_estimate(const std::string& name);
BoundaryEstimate parse_boundary_estimate(const std::string& name);

std::string to_string(ExitRule v);
std::string to_string(TimeEstimate v);
std::string to_string(LocationEstimate v);
std::string to_string(ForcingEstimate v);
std::string to_string(BoundaryEstimate v);

} // namespace fkwalk
