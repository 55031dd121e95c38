#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fkwalk/estimators.hpp"
#include "fkwalk/geometry.hpp"

namespace fkwalk {

/// Chebyshev polynomial T_k(x) by the three-term recurrence.
double chebyshev_eval(int k, double x);

/// Principal-branch arctan(2 x2 / (1 - x1^2 - x2^2)) with the inside-limit
/// convention on and outside the unit circle: sign(x2) * pi/2, and 0 on x2 = 0.
double dirichlet_arctan_feature(const Point& x);

struct FeatureBasis {
    std::vector<ScalarField> features;
    std::vector<std::string> labels;
    std::size_t size() const { return features.size(); }
};

/// Tensor products T_{k1}(x1) T_{k2}(x2) for the given degree pairs.
FeatureBasis tensor_chebyshev_basis(const std::vector<std::pair<int, int>>& degrees);

/// Basis {1, arctan feature, T2(x1) T2(x2)} matching the Dirichlet problem.
FeatureBasis dirichlet_disk_basis();

std::vector<double> basis_eval(const FeatureBasis& basis, const Point& x);

struct LinearModel {
    FeatureBasis basis;
    std::vector<double> coefficients;
};

LinearModel make_model(FeatureBasis basis);
double model_eval(const LinearModel& model, const Point& x);

struct LearningSchedule {
    enum class Decay { constant, geometric };
    std::vector<double> initial_rates;
    Decay decay = Decay::geometric;
    double ratio = 0.999;  // per stride, geometric only
    int stride = 1;        // in global steps
};

/// Per-feature rates scale / mean(u_k^2) estimated from uniform samples.
LearningSchedule default_schedule(const FeatureBasis& basis,
                                  const DomainDescriptor& domain, double scale,
                                  std::uint64_t seed, int n_samples = 1000);

/// Semi-gradient TD update from one interior transition:
/// c_k += rate_k * (u(b_new) - u(b_old) - f_est / 2) * u_k(b_old).
void td_interior_update(LinearModel& model, const Point& b_old, const Point& b_new,
                        double f_est, const std::vector<double>& rates);

/// Terminal update with the bootstrapped value replaced by g_est.
void td_terminal_update(LinearModel& model, const Point& b_old, double g_est,
                        double f_est, const std::vector<double>& rates);

enum class TrainMode { fixed_cohort, restart };

/// Stop when the exit count or the global step count is reached (whichever
/// is set; both unset falls back to the hard step cap).
struct StopRule {
    std::int64_t exit_count = -1;
    std::int64_t step_count = -1;
};

struct TrainReport {
    struct Row {
        std::int64_t step = 0;
        std::int64_t exits = 0;
        std::vector<double> coefficients;
    };
    std::vector<Row> trajectory;
    std::int64_t total_transitions = 0;
    std::int64_t total_exits = 0;
    std::int64_t total_steps = 0;
    LinearModel final_model;
};

/// Batch-synchronous TD over n_walkers, one coefficient snapshot per
/// global step, updates scaled by rate_k / n_walkers.
TrainReport train(const ProblemSpec& problem, const FeatureBasis& basis,
                  std::int64_t n_walkers, double dt, const EstimatorConfig& cfg,
                  const LearningSchedule& schedule, TrainMode mode,
                  const StopRule& stop, std::uint64_t seed, int threads = 1,
                  int record_stride = 64,
                  std::int64_t hard_step_cap = 1000000);

} // namespace fkwalk
