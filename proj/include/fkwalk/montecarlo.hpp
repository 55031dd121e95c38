#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fkwalk/estimators.hpp"
#include "fkwalk/geometry.hpp"

namespace fkwalk {

struct McResult {
    double estimate = 0.0;
    double stderr_est = 0.0;
    std::int64_t n_walkers = 0;   // walkers included in the average
    double mean_steps = 0.0;
    double mean_exit_time = 0.0;
    std::int64_t n_capped = 0;    // walkers excluded by the step cap
};

struct BiasCell {
    Point x;
    double estimate = 0.0;
    double stderr_est = 0.0;
    double exact = 0.0;
    double bias = 0.0;
    bool skipped = false;
};

struct BubbleSweepRow {
    double b = 0.0;
    double bias = 0.0;
    double stderr_est = 0.0;
};

constexpr std::int64_t kDefaultStepCap = 1000000;

/// Feynman-Kac Monte Carlo estimate of u(x0) over n independent walkers.
McResult mc_estimate(const ProblemSpec& problem, const Point& x0, std::int64_t n,
                     double dt, const EstimatorConfig& cfg, std::uint64_t seed,
                     int threads = 0, std::int64_t step_cap = kDefaultStepCap);

/// Pointwise bias over a list of evaluation points. With the bubble-wrap exit
/// condition, points within the bubble radius of the boundary are skipped.
std::vector<BiasCell> bias_map(const ProblemSpec& problem,
                               const std::vector<Point>& grid, std::int64_t n,
                               double dt, const EstimatorConfig& cfg,
                               std::uint64_t seed, int threads = 0,
                               std::int64_t step_cap = kDefaultStepCap);

/// Bias at x0 as a function of the bubble radius, all other estimates naive.
std::vector<BubbleSweepRow> bubble_sweep(const ProblemSpec& problem,
                                         const Point& x0,
                                         const std::vector<double>& b_values,
                                         std::int64_t n, double dt,
                                         std::uint64_t seed, int threads = 0);

/// Mean overshoot |rho(B(T^dt))| / sqrt(dt) at the first naive-detected exit
/// of a 1-d walk started one unit inside the barrier. Walkers still inside
/// after step_cap steps are excluded from the mean.
double overshoot_stats(double dt, std::int64_t n, std::uint64_t seed,
                       int threads = 0, std::int64_t step_cap = 1000);

/// Estimated first-passage times across the barrier at a > 0 for n 1-d walks
/// started at the origin. Capped walkers yield no sample.
std::vector<double> fpt_experiment(double a, double dt, std::int64_t n,
                                   const EstimatorConfig& cfg, std::uint64_t seed,
                                   int threads = 0,
                                   std::int64_t step_cap = 100000);

/// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and a
/// reference CDF. total_n >= samples.size() treats missing samples as +inf.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf,
                   std::int64_t total_n = 0);

/// Uniform nx-by-nx Cartesian grid over the bounding box, interior points only.
std::vector<Point> interior_grid(const DomainDescriptor& domain, int nx);

} // namespace fkwalk
