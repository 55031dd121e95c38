#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fkwalk/geometry.hpp"
#include "fkwalk/tdl.hpp"

namespace fkwalk {

struct ProblemRegistryEntry {
    std::string name;
    ProblemSpec spec;
    std::optional<FeatureBasis> default_basis;
};

/// Unit disk, f = 0, g = 1{x2 > 0}; exact solution
/// 1/2 + arctan(2 x2 / (1 - x1^2 - x2^2)) / pi with the inside-limit
/// convention on the boundary.
ProblemSpec dirichlet_disk();

/// Unit disk, f = 1, g = 0; exact solution (x1^2 + x2^2 - 1) / 4.
ProblemSpec poisson_disk();

/// Half line {x < a}, a > 0, used by the 1-d first-passage experiments.
/// Boundary data is zero; the exit-time CDF oracle is levy_fpt_cdf(a, t).
ProblemSpec barrier_1d(double a);

/// Registry lookup by name: "dirichlet-disk", "poisson-disk", "barrier-1d".
/// Throws Error for unknown names.
ProblemRegistryEntry find_problem(const std::string& name);

std::vector<std::string> problem_names();

} // namespace fkwalk
