#include "fkwalk/geometry.hpp"

#include <cmath>

namespace fkwalk {

double signed_distance(const DomainDescriptor& domain, const Point& x) {
    return domain.signed_distance(x);
}

Point project_to_boundary(const DomainDescriptor& domain, const Point& x) {
    return domain.boundary_projection(x);
}

bool contains(const DomainDescriptor& domain, const Point& x) {
    return domain.signed_distance(x) < 0.0;
}

Point sample_uniform_interior(const DomainDescriptor& domain, RngStream& rng,
                              int max_draws) {
    const Box& box = domain.bounding_box;
    for (int draw = 0; draw < max_draws; ++draw) {
        Point p;
        p.dim = domain.dimension;
        for (int i = 0; i < p.dim; ++i) {
            p[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * rng.uniform01();
        }
        if (contains(domain, p)) return p;
    }
    throw RejectionBudgetExceeded("sample_uniform_interior: no interior point accepted");
}

DomainDescriptor unit_disk() {
    DomainDescriptor d;
    d.dimension = 2;
    d.signed_distance = [](const Point& x) { return norm(x) - 1.0; };
    d.boundary_projection = [](const Point& x) {
        const double r = norm(x);
        if (r < kGeomTolerance) {
            throw AmbiguousProjection("unit_disk: projection undefined at the center");
        }
        return Point::d2(x[0] / r, x[1] / r);
    };
    d.bounding_box = Box{Point::d2(-1.0, -1.0), Point::d2(1.0, 1.0)};
    return d;
}

DomainDescriptor half_line(double a) {
    DomainDescriptor d;
    d.dimension = 1;
    d.signed_distance = [a](const Point& x) { return x[0] - a; };
    d.boundary_projection = [a](const Point&) { return Point::d1(a); };
    d.bounding_box = Box{Point::d1(a - 2.0), Point::d1(a)};
    return d;
}

} // namespace fkwalk
