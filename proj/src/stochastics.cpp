#include "fkwalk/stochastics.hpp"

#include <cmath>

#include "fkwalk/errors.hpp"

namespace fkwalk {

namespace {
constexpr double kSqrt2Pi = 2.506628274631000502415765284811;
}

double normal_tail(double c) {
    return 0.5 * std::erfc(c / std::sqrt(2.0));
}

Point gaussian_step(const Point& x, double dt, RngStream& rng) {
    Point out = x;
    const double s = std::sqrt(dt);
    if (x.dim == 2) {
        double z0, z1;
        rng.normal_pair(z0, z1);
        out[0] += s * z0;
        out[1] += s * z1;
    } else {
        for (int i = 0; i < x.dim; ++i) out[i] += s * rng.normal();
    }
    return out;
}

Point bridge_point_sample(const Point& x_a, const Point& x_b, double span,
                          double t, RngStream& rng) {
    if (t < 0.0 || t > span) {
        throw InvalidTime("bridge_point_sample: t outside [0, span]");
    }
    if (t == 0.0) return x_a;
    if (t == span) return x_b;
    const double frac = t / span;
    const double sd = std::sqrt(t * (span - t) / span);
    Point out = x_a;
    if (x_a.dim == 2) {
        double z0, z1;
        rng.normal_pair(z0, z1);
        out[0] = (1.0 - frac) * x_a[0] + frac * x_b[0] + sd * z0;
        out[1] = (1.0 - frac) * x_a[1] + frac * x_b[1] + sd * z1;
    } else {
        for (int i = 0; i < x_a.dim; ++i) {
            out[i] = (1.0 - frac) * x_a[i] + frac * x_b[i] + sd * rng.normal();
        }
    }
    return out;
}

double bridge_max_from_exp(double x, double dt, double e) {
    return 0.5 * (x + std::sqrt(x * x + 2.0 * dt * e));
}

double bridge_max_sample(double x, double dt, RngStream& rng) {
    return bridge_max_from_exp(x, dt, rng.exponential());
}

double bridge_max_tail(double x, double dt, double m) {
    if (m < std::max(x, 0.0)) {
        throw InvalidThreshold("bridge_max_tail: m below max(x, 0)");
    }
    return std::exp(-2.0 * m * (m - x) / dt);
}

double levy_fpt_cdf(double a, double t) {
    if (t <= 0.0) return 0.0;
    return std::erfc(std::abs(a) / std::sqrt(2.0 * t));
}

double exit_time_density(double rho_old, double rho_new, double dt, double t) {
    if (rho_old >= 0.0) {
        throw InvalidState("exit_time_density: start point not inside the domain");
    }
    if (t <= 0.0 || t >= dt) {
        throw InvalidTime("exit_time_density: t outside (0, dt)");
    }
    const double delta_rho = rho_new - rho_old;
    const double expo = delta_rho * delta_rho / (2.0 * dt)
                        - rho_new * rho_new / (2.0 * (dt - t))
                        - rho_old * rho_old / (2.0 * t);
    const double prefactor =
        std::abs(rho_old) / (kSqrt2Pi * std::pow(t, 1.5) * std::sqrt(1.0 - t / dt));
    return prefactor * std::exp(expo);
}

namespace {

// exp(z^2) erfc(z) for z >= 0 without overflow; direct product for moderate z,
// asymptotic series past z = 6 where the truncation error is below 1e-15.
double erfcx_pos(double z) {
    if (z < 6.0) return std::exp(z * z) * std::erfc(z);
    const double inv2z2 = 1.0 / (2.0 * z * z);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 20; ++k) {
        term *= -(2.0 * k - 1.0) * inv2z2;
        sum += term;
        if (std::abs(term) < 1e-17) break;
    }
    constexpr double kSqrtPi = 1.772453850905516027298167483341;
    return sum / (z * kSqrtPi);
}

} // namespace

double expected_exit_time(double a, double x, double dt) {
    if (!(0.0 < a && a < x)) {
        throw InvalidBarrier("expected_exit_time: requires 0 < a < x");
    }
    const double c = x / std::sqrt(dt);
    // exp(c^2/2) P(Z > c) written in scaled form so small dt cannot overflow.
    const double scaled_tail = 0.5 * erfcx_pos(c / std::sqrt(2.0));
    return (a / x) * dt * kSqrt2Pi * c * scaled_tail;
}

double local_time_tail(double a, double x, double dt, double y) {
    const double reach = std::abs(a) + std::abs(x - a) + y;
    return std::exp(-(reach * reach - x * x) / (2.0 * dt));
}

} // namespace fkwalk
