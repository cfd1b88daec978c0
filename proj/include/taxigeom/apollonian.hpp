#pragma once

#include <variant>
#include <vector>

#include "taxigeom/ext_ratio.hpp"
#include "taxigeom/isometry.hpp"
#include "taxigeom/metric.hpp"
#include "taxigeom/polygon.hpp"
#include "taxigeom/reference.hpp"

namespace taxi {

/// The filled Apollonian set B(p,q;k): for k > 1 the locus of distance ratio
/// >= k, for k < 1 the locus of ratio <= k. Geometrically a single point
/// (k = 0 or infinity) or a union of one or two filled convex quadrilaterals.
struct FilledSet {
    Point p, q;
    ExtRatio k;
    std::variant<Point, std::vector<SimplePolygon>> value;

    bool is_point() const { return std::holds_alternative<Point>(value); }
    const Point& point() const { return std::get<Point>(value); }
    const std::vector<SimplePolygon>& quads() const {
        return std::get<std::vector<SimplePolygon>>(value);
    }
};

/// The Apollonian set A(p,q;k) itself: a point for k in {0, infinity}, a
/// barbell or lightning bolt for k = 1, and otherwise a piecewise-linear
/// simple closed curve.
using ApollonianShape = std::variant<Point, SimplePolygon, LightningBolt, Barbell>;

/// Isosceles trapezoid forming A(p,q;k) when p and q share a guide line and
/// 1 < k < infinity: symmetric about the shared guide line, vertices on the
/// coordinate lines of q, legs extending through p with slopes
/// m(k+1)/(k-1) and m(k-1)/(k+1) where m is the guide line slope.
/// Throws std::domain_error unless the preconditions hold.
SimplePolygon trapezoid(const Point& p, const Point& q, const Scalar& k);

/// B(p,q;k) for k != 1. Ratios below one are handled through the reciprocal
/// identity B(p,q;k) = B(q,p;1/k); above one the set is the union of the
/// filled trapezoids at the guide complements (a single trapezoid when p and
/// q share a guide line, the guide complements then being p and q).
FilledSet filled(const Point& p, const Point& q, const ExtRatio& k);

/// Ground-truth membership by the defining ratio comparison; independent of
/// the constructed polygons. Throws std::domain_error if k = 1 or p = q.
bool in_filled(const Point& x, const Point& p, const Point& q, const ExtRatio& k);

/// Membership in the constructed geometry of a FilledSet.
bool filled_contains(const FilledSet& f, const Point& x);

/// Canonical simple polygon bounding the quad union of a FilledSet.
/// Throws std::domain_error on point-valued sets.
SimplePolygon boundary_of_union(const FilledSet& f);

/// A(p,q;k) for any k in [0, infinity]. Throws std::domain_error if p = q.
ApollonianShape apollonian_set(const Point& p, const Point& q, const ExtRatio& k);

/// "point", "polygon", "bolt" or "barbell".
std::string shape_kind(const ApollonianShape& shape);

/// Image of a shape under an isometry, re-canonicalized.
ApollonianShape apply_isometry(const Isometry& iso, const ApollonianShape& shape);

}  // namespace taxi
