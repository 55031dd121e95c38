#pragma once

#include <array>
#include <cmath>

namespace fkwalk {

/// Spatial point in d = 1 or 2 dimensions. Coordinates past `dim` stay zero.
struct Point {
    std::array<double, 2> coords{0.0, 0.0};
    int dim = 2;

    static Point d1(double x) { return Point{{x, 0.0}, 1}; }
    static Point d2(double x1, double x2) { return Point{{x1, x2}, 2}; }

    double& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    double x() const { return coords[0]; }
    double y() const { return coords[1]; }
};

inline Point lerp(const Point& a, const Point& b, double s) {
    Point p = a;
    for (int i = 0; i < a.dim; ++i) p[i] = (1.0 - s) * a[i] + s * b[i];
    return p;
}

inline double norm(const Point& p) {
    double sq = 0.0;
    for (int i = 0; i < p.dim; ++i) sq += p[i] * p[i];
    return std::sqrt(sq);
}

inline double distance(const Point& a, const Point& b) {
    double sq = 0.0;
    for (int i = 0; i < a.dim; ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

/// Axis-aligned box, used for bounding boxes and rejection sampling.
struct Box {
    Point lo;
    Point hi;
};

} // namespace fkwalk
