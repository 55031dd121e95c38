#include "doctest.h"

#include <cmath>
#include <vector>

#include "fkwalk/problems.hpp"
#include "fkwalk/stochastics.hpp"
#include "fkwalk/tdl.hpp"

using namespace fkwalk;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("chebyshev values") {
    CHECK(chebyshev_eval(0, 0.3) == 1.0);
    CHECK(chebyshev_eval(1, 0.3) == 0.3);
    CHECK(chebyshev_eval(2, 0.5) == doctest::Approx(-0.5));
    CHECK(chebyshev_eval(3, 0.5) == doctest::Approx(-1.0));
    // T_n(cos t) = cos(n t).
    for (int n = 0; n <= 16; ++n) {
        for (double t = 0.0; t < 3.2; t += 0.17) {
            CHECK(chebyshev_eval(n, std::cos(t)) ==
                  doctest::Approx(std::cos(n * t)).epsilon(1e-10));
        }
    }
}

TEST_CASE("arctan feature conventions") {
    CHECK(dirichlet_arctan_feature(Point::d2(0.3, 0.0)) == 0.0);
    CHECK(dirichlet_arctan_feature(Point::d2(0.6, 0.8)) ==
          doctest::Approx(0.5 * kPi));
    CHECK(dirichlet_arctan_feature(Point::d2(0.6, -0.8)) ==
          doctest::Approx(-0.5 * kPi));
    CHECK(dirichlet_arctan_feature(Point::d2(0.0, 0.5)) ==
          doctest::Approx(std::atan(1.0 / 0.75)));
}

TEST_CASE("model evaluation against closed forms") {
    // (x1^2 + x2^2 - 1)/4 = T2(x1)/8 + T2(x2)/8.
    LinearModel poisson =
        make_model(tensor_chebyshev_basis({{0, 0}, {2, 0}, {0, 2}}));
    poisson.coefficients = {0.0, 0.125, 0.125};
    for (double x = -0.9; x < 1.0; x += 0.3) {
        for (double y = -0.9; y < 1.0; y += 0.3) {
            CHECK(model_eval(poisson, Point::d2(x, y)) ==
                  doctest::Approx(0.25 * (x * x + y * y - 1.0)).epsilon(1e-12));
        }
    }
    CHECK(model_eval(poisson, Point::d2(0, 0)) == doctest::Approx(-0.25));

    LinearModel dirichlet = make_model(dirichlet_disk_basis());
    dirichlet.coefficients = {0.5, 1.0 / kPi, 0.0};
    CHECK(model_eval(dirichlet, Point::d2(0.0, 0.5)) ==
          doctest::Approx(0.5 + std::atan(1.0 / 0.75) / kPi));
    const ProblemSpec p = dirichlet_disk();
    for (double x = -0.8; x < 0.9; x += 0.4) {
        for (double y = -0.8; y < 0.9; y += 0.4) {
            if (x * x + y * y >= 1.0) continue;
            CHECK(model_eval(dirichlet, Point::d2(x, y)) ==
                  doctest::Approx((*p.exact_solution)(Point::d2(x, y))).epsilon(1e-12));
        }
    }
}

TEST_CASE("basis labels") {
    const FeatureBasis t = tensor_chebyshev_basis({{0, 0}, {2, 0}, {0, 2}});
    REQUIRE(t.size() == 3);
    CHECK(t.labels[0] == "T0*T0");
    CHECK(t.labels[1] == "T2*T0");
    CHECK(t.labels[2] == "T0*T2");
    const FeatureBasis d = dirichlet_disk_basis();
    CHECK(d.labels == std::vector<std::string>{"const", "arctan", "T2*T2"});
}

TEST_CASE("td updates move coefficients by rate * delta * features") {
    LinearModel m = make_model(tensor_chebyshev_basis({{0, 0}, {1, 0}}));
    const std::vector<double> rates = {0.5, 0.25};

    // Zero TD error leaves the model untouched.
    m.coefficients = {1.0, 2.0};
    const Point a = Point::d2(0.2, 0.0);
    const Point b = Point::d2(0.3, 0.0);
    const double u_a = model_eval(m, a);
    const double u_b = model_eval(m, b);
    td_interior_update(m, a, b, 2.0 * (u_b - u_a), rates);
    CHECK(m.coefficients[0] == doctest::Approx(1.0));
    CHECK(m.coefficients[1] == doctest::Approx(2.0));

    // Hand-checked scalar update.
    LinearModel s = make_model(tensor_chebyshev_basis({{0, 0}}));
    s.coefficients = {0.0};
    td_terminal_update(s, Point::d2(0, 0), 1.0, 0.0, {0.1});
    CHECK(s.coefficients[0] == doctest::Approx(0.1));
    td_interior_update(s, Point::d2(0, 0), Point::d2(0.1, 0), 0.0, {0.1});
    // Constant feature: u(b_new) = u(b_old), delta = 0.
    CHECK(s.coefficients[0] == doctest::Approx(0.1));
}

TEST_CASE("td update matches a finite-difference semi-gradient") {
    // The interior update is rate * delta * grad_c u(b_old) where the gradient
    // treats the target u(b_new) as constant. Check against central
    // differences of the half-squared error in c at frozen target.
    LinearModel m = make_model(dirichlet_disk_basis());
    m.coefficients = {0.3, -0.2, 0.1};
    const Point a = Point::d2(0.4, 0.3);
    const Point b = Point::d2(0.45, 0.25);
    const double f_est = 0.07;
    const double target = model_eval(m, b) - 0.5 * f_est;

    const std::vector<double> feats = basis_eval(m.basis, a);
    for (std::size_t k = 0; k < m.basis.size(); ++k) {
        const double h = 1e-6;
        auto loss = [&](double ck) {
            std::vector<double> c = m.coefficients;
            c[k] = ck;
            double u = 0.0;
            for (std::size_t j = 0; j < c.size(); ++j) u += c[j] * feats[j];
            return 0.5 * (target - u) * (target - u);
        };
        const double fd =
            (loss(m.coefficients[k] + h) - loss(m.coefficients[k] - h)) / (2.0 * h);
        const double delta = target - model_eval(m, a);
        // Update direction is -grad of the frozen-target loss.
        CHECK(delta * feats[k] == doctest::Approx(-fd).epsilon(1e-6));
    }
}

TEST_CASE("repeated terminal updates converge geometrically to the target") {
    LinearModel s = make_model(tensor_chebyshev_basis({{0, 0}}));
    const double kappa = 3.7;
    for (int i = 0; i < 200; ++i) {
        td_terminal_update(s, Point::d2(0, 0), kappa, 0.0, {0.1});
    }
    // c_{n+1} - kappa = 0.9 (c_n - kappa).
    CHECK(s.coefficients[0] ==
          doctest::Approx(kappa * (1.0 - std::pow(0.9, 200))).epsilon(1e-10));
}

TEST_CASE("mean td error vanishes at the exact poisson coefficients") {
    const ProblemSpec p = poisson_disk();
    LinearModel m = make_model(tensor_chebyshev_basis({{0, 0}, {2, 0}, {0, 2}}));
    m.coefficients = {0.0, 0.125, 0.125};
    const double dt = 0.01;
    RngStream rng(77, 0);
    double sum_delta = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const Point a = sample_uniform_interior(p.domain, rng);
        const Point b = gaussian_step(a, dt, rng);
        // The quadratic solution extends to the whole plane, so no transition
        // needs to be censored at the boundary.
        const double delta =
            model_eval(m, b) - model_eval(m, a) - 0.5 * dt * p.forcing(a);
        sum_delta += delta;
    }
    // E[u(B_{t+dt}) - u(B_t)] = dt/2 * laplacian(u) = dt/2 * f exactly for
    // this quadratic solution, so the mean TD error is pure noise.
    CHECK(std::abs(sum_delta / n) < 5e-5);
}

TEST_CASE("default schedule weights rates by inverse second moments") {
    const FeatureBasis basis = tensor_chebyshev_basis({{0, 0}, {2, 0}});
    const LearningSchedule s = default_schedule(basis, unit_disk(), 2.0, 11);
    REQUIRE(s.initial_rates.size() == 2);
    // Constant feature: E[u^2] = 1, so rate = scale exactly.
    CHECK(s.initial_rates[0] == doctest::Approx(2.0));
    // T2 has smaller second moment on the disk, hence a larger rate.
    CHECK(s.initial_rates[1] > s.initial_rates[0]);
}

TEST_CASE("training is reproducible and respects stop rules") {
    const ProblemRegistryEntry entry = find_problem("poisson-disk");
    REQUIRE(entry.default_basis.has_value());
    EstimatorConfig cfg;
    const LearningSchedule sched =
        default_schedule(*entry.default_basis, entry.spec.domain, 5.0, 3);
    StopRule stop;
    stop.step_count = 40;
    const TrainReport a = train(entry.spec, *entry.default_basis, 256, 0.01, cfg,
                                sched, TrainMode::restart, stop, 99, 1, 8);
    const TrainReport b = train(entry.spec, *entry.default_basis, 256, 0.01, cfg,
                                sched, TrainMode::restart, stop, 99, 3, 8);
    CHECK(a.total_steps == 40);
    CHECK(a.final_model.coefficients == b.final_model.coefficients);
    CHECK(a.total_exits == b.total_exits);

    REQUIRE(!a.trajectory.empty());
    CHECK(a.trajectory.front().step == 0);
    CHECK(a.trajectory.back().step == 40);
    for (std::size_t i = 1; i < a.trajectory.size(); ++i) {
        CHECK(a.trajectory[i].step > a.trajectory[i - 1].step);
        CHECK(a.trajectory[i].exits >= a.trajectory[i - 1].exits);
    }
    CHECK(a.total_transitions == 40 * 256);
}

TEST_CASE("fixed cohort stops once every walker has exited") {
    const ProblemRegistryEntry entry = find_problem("poisson-disk");
    EstimatorConfig cfg;
    const LearningSchedule sched =
        default_schedule(*entry.default_basis, entry.spec.domain, 5.0, 3);
    StopRule stop;  // no explicit rule: run until the cohort latches
    const TrainReport r = train(entry.spec, *entry.default_basis, 64, 0.1, cfg,
                                sched, TrainMode::fixed_cohort, stop, 5, 1, 16);
    CHECK(r.total_exits == 64);
    // Latched walkers contribute no further transitions.
    CHECK(r.total_transitions < r.total_steps * 64);
}

TEST_CASE("scalar model with zero forcing fixes the boundary average") {
    // With only the constant feature and g = 0, coefficients must stay at 0.
    ProblemSpec p = poisson_disk();
    p.forcing = [](const Point&) { return 0.0; };
    const FeatureBasis basis = tensor_chebyshev_basis({{0, 0}});
    EstimatorConfig cfg;
    LearningSchedule sched;
    sched.initial_rates = {1.0};
    sched.decay = LearningSchedule::Decay::constant;
    StopRule stop;
    stop.step_count = 50;
    const TrainReport r = train(p, basis, 128, 0.05, cfg, sched,
                                TrainMode::restart, stop, 17, 1, 10);
    CHECK(r.final_model.coefficients[0] == 0.0);
}
