#pragma once

#include "taxigeom/ext_ratio.hpp"
#include "taxigeom/point.hpp"
#include "taxigeom/polygon.hpp"

namespace taxi {

/// Taxicab distance |a1 - b1| + |a2 - b2|.
Scalar taxi_distance(const Point& a, const Point& b);

Point midpoint(const Point& p, const Point& q);

/// The distance ratio d(x,p)/d(x,q) as an element of [0, infinity];
/// equals infinity exactly when x = q. Throws std::domain_error if p = q.
ExtRatio distance_ratio(const Point& x, const Point& p, const Point& q);

/// The taxicab circle of radius r about the center: the square with vertices
/// at (c1 +- r, c2) and (c1, c2 +- r). Throws std::domain_error unless r > 0.
SimplePolygon taxi_circle(const Point& center, const Scalar& r);

}  // namespace taxi
