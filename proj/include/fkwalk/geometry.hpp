#pragma once

#include <functional>
#include <optional>

#include "fkwalk/errors.hpp"
#include "fkwalk/point.hpp"
#include "fkwalk/rng.hpp"

namespace fkwalk {

/// Tolerance for geometric identities on the built-in domains.
constexpr double kGeomTolerance = 1e-12;

/// A smooth domain described by its signed distance function.
///
/// signed_distance is negative strictly inside, zero on the boundary and
/// positive outside. boundary_projection returns the nearest boundary point
/// and throws AmbiguousProjection when that point is not unique.
struct DomainDescriptor {
    std::function<double(const Point&)> signed_distance;
    std::function<Point(const Point&)> boundary_projection;
    Box bounding_box;
    int dimension = 2;
};

using ScalarField = std::function<double(const Point&)>;

/// One PDE instance: Laplace/Poisson data on a domain, with the boundary data
/// extended off the boundary so it can be evaluated anywhere in the box.
struct ProblemSpec {
    DomainDescriptor domain;
    ScalarField forcing;
    ScalarField boundary_data;
    std::optional<ScalarField> exact_solution;
};

double signed_distance(const DomainDescriptor& domain, const Point& x);
Point project_to_boundary(const DomainDescriptor& domain, const Point& x);
bool contains(const DomainDescriptor& domain, const Point& x);

/// Uniform sample on the domain interior by rejection in the bounding box.
Point sample_uniform_interior(const DomainDescriptor& domain, RngStream& rng,
                              int max_draws = 10000);

/// Unit disk in d=2, exact signed distance ||x|| - 1.
DomainDescriptor unit_disk();

/// Half line {x < a} in d=1, signed distance x - a. The bounding box window
/// [a-2, a] only matters for interior sampling.
DomainDescriptor half_line(double a);

} // namespace fkwalk
