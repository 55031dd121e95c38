#include "fkwalk/problems.hpp"

#include <cmath>

#include "fkwalk/errors.hpp"

namespace fkwalk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

ProblemSpec dirichlet_disk() {
    ProblemSpec p;
    p.domain = unit_disk();
    p.forcing = [](const Point&) { return 0.0; };
    // The boundary indicator extended constantly along x2.
    p.boundary_data = [](const Point& x) { return x[1] > 0.0 ? 1.0 : 0.0; };
    p.exact_solution = [](const Point& x) {
        return 0.5 + dirichlet_arctan_feature(x) / kPi;
    };
    return p;
}

ProblemSpec poisson_disk() {
    ProblemSpec p;
    p.domain = unit_disk();
    p.forcing = [](const Point&) { return 1.0; };
    p.boundary_data = [](const Point&) { return 0.0; };
    p.exact_solution = [](const Point& x) {
        return 0.25 * (x[0] * x[0] + x[1] * x[1] - 1.0);
    };
    return p;
}

ProblemSpec barrier_1d(double a) {
    if (a <= 0.0) throw InvalidBarrier("barrier_1d: requires a > 0");
    ProblemSpec p;
    p.domain = half_line(a);
    p.forcing = [](const Point&) { return 0.0; };
    p.boundary_data = [](const Point&) { return 0.0; };
    return p;
}

ProblemRegistryEntry find_problem(const std::string& name) {
    if (name == "dirichlet-disk") {
        return ProblemRegistryEntry{name, dirichlet_disk(), dirichlet_disk_basis()};
    }
    if (name == "poisson-disk") {
        return ProblemRegistryEntry{name, poisson_disk(),
                                    tensor_chebyshev_basis({{0, 0}, {2, 0}, {0, 2}})};
    }
    if (name == "barrier-1d") {
        return ProblemRegistryEntry{name, barrier_1d(1.0), std::nullopt};
    }
    throw Error("unknown problem: " + name);
}

std::vector<std::string> problem_names() {
    return {"dirichlet-disk", "poisson-disk", "barrier-1d"};
}

} // namespace fkwalk
