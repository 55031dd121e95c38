#pragma once

#include <functional>

namespace fkwalk {

/// Adaptive tanh-sinh quadrature over (a, b). Handles integrable endpoint
/// singularities; the integrand is never evaluated at the endpoints.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-9);

/// Integral over (0, inf) via the substitution y = s / (1 - s).
double integrate_half_line(const std::function<double(double)>& f,
                           double abs_tol = 1e-9);

} // namespace fkwalk
