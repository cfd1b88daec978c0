#include "taxigeom/metric.hpp"

#include <stdexcept>

namespace taxi {

Scalar taxi_distance(const Point& a, const Point& b) {
    return abs(a.x1 - b.x1) + abs(a.x2 - b.x2);
}

Point midpoint(const Point& p, const Point& q) {
    Scalar half(1, 2);
    return Point((p.x1 + q.x1) * half, (p.x2 + q.x2) * half);
}

ExtRatio distance_ratio(const Point& x, const Point& p, const Point& q) {
    if (p == q) {
        throw std::domain_error("distance_ratio: coincident foci");
    }
    Scalar dq = taxi_distance(x, q);
    if (dq.is_zero()) {
        return ExtRatio::infinity();
    }
    return ExtRatio(taxi_distance(x, p) / dq);
}

SimplePolygon taxi_circle(const Point& center, const Scalar& r) {
    if (r.sign() <= 0) {
        throw std::domain_error("taxi_circle: radius must be positive");
    }
    return SimplePolygon::from_cycle({
        Point(center.x1 + r, center.x2),
        Point(center.x1, center.x2 + r),
        Point(center.x1 - r, center.x2),
        Point(center.x1, center.x2 - r),
    });
}

}  // namespace taxi
