#pragma once

#include "fkwalk/point.hpp"
#include "fkwalk/rng.hpp"

namespace fkwalk {

/// One Euler step: x + sqrt(dt) * N(0, I_d).
Point gaussian_step(const Point& x, double dt, RngStream& rng);

/// Sample the Brownian bridge pinned at x_a (time 0) and x_b (time span) at
/// an interior time t. Throws InvalidTime for t outside [0, span].
Point bridge_point_sample(const Point& x_a, const Point& x_b, double span,
                          double t, RngStream& rng);

/// Sample the maximum of a 1-d Brownian bridge from 0 to x over time dt:
/// M = (x + sqrt(x^2 + 2 dt E)) / 2 with E ~ Exp(1).
double bridge_max_sample(double x, double dt, RngStream& rng);

/// Deterministic part of bridge_max_sample given the exponential draw e.
double bridge_max_from_exp(double x, double dt, double e);

/// P(M > m) for the bridge maximum above: exp(-2 m (m - x) / dt).
/// Throws InvalidThreshold if m < max(x, 0).
double bridge_max_tail(double x, double dt, double m);

/// First-passage-time CDF of Brownian motion across level a != 0:
/// erfc(|a| / sqrt(2 t)), zero at t = 0.
double levy_fpt_cdf(double a, double t);

/// Exit-time density of the bridge pinned at signed distances rho_old (inside)
/// and rho_new over a step of length dt, evaluated at 0 < t < dt.
double exit_time_density(double rho_old, double rho_new, double dt, double t);

/// Closed-form expected first-passage time across level a of the bridge from
/// 0 to x over dt, valid for 0 < a < x.
double expected_exit_time(double a, double x, double dt);

/// Tail probability P(L_a > y) of the bridge local time at level a.
double local_time_tail(double a, double x, double dt, double y);

/// P(Z > c) for Z standard normal.
double normal_tail(double c);

} // namespace fkwalk
