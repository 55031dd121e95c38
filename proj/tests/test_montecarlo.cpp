#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "fkwalk/errors.hpp"
#include "fkwalk/montecarlo.hpp"
#include "fkwalk/problems.hpp"
#include "fkwalk/stochastics.hpp"

using namespace fkwalk;

TEST_CASE("constant boundary data is reproduced exactly") {
    ProblemSpec p = dirichlet_disk();
    p.forcing = [](const Point&) { return 0.0; };
    p.boundary_data = [](const Point&) { return 7.0; };
    EstimatorConfig cfg;
    const McResult r = mc_estimate(p, Point::d2(0.2, -0.1), 1, 0.05, cfg, 1);
    CHECK(r.estimate == doctest::Approx(7.0).epsilon(1e-14));
    CHECK(r.n_walkers == 1);
    CHECK(r.stderr_est == 0.0);
}

TEST_CASE("dirichlet disk at the center") {
    const ProblemSpec p = dirichlet_disk();
    EstimatorConfig cfg;
    const McResult r = mc_estimate(p, Point::d2(0, 0), 40000, 0.01, cfg, 21);
    CHECK(r.estimate == doctest::Approx(0.5).epsilon(0.02));
    CHECK(r.stderr_est > 0.0);
    CHECK(std::abs(r.estimate - 0.5) < 4.0 * r.stderr_est + 0.005);
    // Indicator data keeps the estimate inside [0, 1].
    CHECK(r.estimate >= 0.0);
    CHECK(r.estimate <= 1.0);
}

TEST_CASE("poisson disk at the center") {
    const ProblemSpec p = poisson_disk();
    EstimatorConfig cfg;
    const McResult r = mc_estimate(p, Point::d2(0, 0), 40000, 0.01, cfg, 22);
    CHECK(r.estimate == doctest::Approx(-0.25).epsilon(0.05));
    CHECK(std::abs(r.estimate + 0.25) < 4.0 * r.stderr_est + 0.005);

    // g = 0, so the payoff is minus half the accumulated forcing. With the
    // corrected estimate that integral is exactly the estimated exit time.
    const McResult r2 = mc_estimate(p, Point::d2(0, 0), 5000, 0.01, cfg, 23);
    CHECK(r2.estimate == doctest::Approx(-0.5 * r2.mean_exit_time).epsilon(1e-10));
}

TEST_CASE("mc_estimate rejects exterior start points") {
    const ProblemSpec p = poisson_disk();
    EstimatorConfig cfg;
    CHECK_THROWS_AS(mc_estimate(p, Point::d2(2, 0), 10, 0.01, cfg, 1),
                    StartOutsideDomain);
}

TEST_CASE("mc_estimate is deterministic in the seed, not the thread count") {
    const ProblemSpec p = dirichlet_disk();
    EstimatorConfig cfg;
    const McResult a = mc_estimate(p, Point::d2(0.3, 0.2), 2000, 0.02, cfg, 77, 1);
    const McResult b = mc_estimate(p, Point::d2(0.3, 0.2), 2000, 0.02, cfg, 77, 3);
    CHECK(a.estimate == b.estimate);
    CHECK(a.stderr_est == b.stderr_est);
    CHECK(a.mean_exit_time == b.mean_exit_time);
    const McResult c = mc_estimate(p, Point::d2(0.3, 0.2), 2000, 0.02, cfg, 78, 1);
    CHECK(a.estimate != c.estimate);
}

TEST_CASE("stderr scales like n^{-1/2}") {
    const ProblemSpec p = dirichlet_disk();
    EstimatorConfig cfg;
    const McResult small = mc_estimate(p, Point::d2(0.1, 0.1), 4000, 0.02, cfg, 5);
    const McResult big = mc_estimate(p, Point::d2(0.1, 0.1), 64000, 0.02, cfg, 5);
    const double ratio = small.stderr_est / big.stderr_est;
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("bias map skips the bubble shell") {
    const ProblemSpec p = poisson_disk();
    EstimatorConfig cfg;
    cfg.exit_condition = ExitRule::bubble_wrap;
    cfg.bubble_radius = 0.3;
    std::vector<Point> grid = {Point::d2(0, 0), Point::d2(0.95, 0)};
    const std::vector<BiasCell> cells = bias_map(p, grid, 500, 0.01, cfg, 9);
    REQUIRE(cells.size() == 2);
    CHECK_FALSE(cells[0].skipped);
    CHECK(cells[1].skipped);
    CHECK(cells[0].exact == doctest::Approx(-0.25));
    CHECK(cells[0].bias == doctest::Approx(cells[0].estimate - cells[0].exact));
}

TEST_CASE("bias map needs an exact solution") {
    const ProblemSpec p = barrier_1d(1.0);
    EstimatorConfig cfg;
    CHECK_THROWS_AS(bias_map(p, {Point::d1(0)}, 10, 0.1, cfg, 1),
                    MissingExactSolution);
}

TEST_CASE("bubble sweep rows share the random input") {
    const ProblemSpec p = poisson_disk();
    const std::vector<double> radii = {0.0, 0.05, 0.1};
    const auto rows = bubble_sweep(p, Point::d2(0.4, 0.0), radii, 2000, 0.01, 31);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].b == radii[i]);
        CHECK(rows[i].stderr_est > 0.0);
    }
    // A larger bubble can only shorten walks, so the bias moves upward
    // (less negative) monotonically in expectation; check the extremes.
    CHECK(rows.back().bias > rows.front().bias);
}

TEST_CASE("overshoot statistic near the known coefficient") {
    const double v = overshoot_stats(1e-3, 20000, 3);
    CHECK(v == doctest::Approx(0.5826).epsilon(0.1));
}

TEST_CASE("fpt experiment yields positive multiples of dt under naive timing") {
    EstimatorConfig cfg;
    cfg.exit_condition = ExitRule::naive;
    cfg.t_estimate = TimeEstimate::naive;
    cfg.x_estimate = LocationEstimate::endpoint;
    const double dt = 0.5;
    const std::vector<double> times = fpt_experiment(1.0, dt, 500, cfg, 13);
    CHECK(times.size() <= 500);
    CHECK(times.size() > 400);
    for (double t : times) {
        CHECK(t > 0.0);
        const double k = t / dt;
        CHECK(std::abs(k - std::round(k)) < 1e-9);
    }
}

TEST_CASE("corrected fpt times are not grid-aligned") {
    EstimatorConfig cfg;
    const std::vector<double> times = fpt_experiment(1.0, 0.5, 200, cfg, 13);
    bool off_grid = false;
    for (double t : times) {
        const double k = t / 0.5;
        off_grid |= std::abs(k - std::round(k)) > 1e-6;
    }
    CHECK(off_grid);
}

TEST_CASE("ks distance") {
    const auto uniform_cdf = [](double t) {
        return std::min(1.0, std::max(0.0, t));
    };
    CHECK(ks_distance({0.5}, uniform_cdf) == doctest::Approx(0.5));
    CHECK(ks_distance({0.25, 0.5, 0.75}, uniform_cdf) == doctest::Approx(0.25));
    // Censoring: missing samples sit at +inf, forcing at least that much mass.
    CHECK(ks_distance({0.5}, uniform_cdf, 2) >= 0.5);
    RngStream rng(41, 0);
    std::vector<double> u(20000);
    for (double& v : u) v = rng.uniform01();
    CHECK(ks_distance(u, uniform_cdf) < 0.02);
}

TEST_CASE("interior grid") {
    const auto grid = interior_grid(unit_disk(), 21);
    CHECK(!grid.empty());
    // 21 x 21 box grid minus the corners outside the disk.
    CHECK(grid.size() < 21 * 21);
    for (const Point& p : grid) CHECK(contains(unit_disk(), p));
}
