#pragma once

#include <optional>
#include <vector>

#include "taxigeom/point.hpp"

namespace taxi {

/// Simple closed polygon in canonical form: counterclockwise, no repeated or
/// collinear consecutive vertices, starting at the lexicographically smallest
/// vertex. Canonical form makes polygon equality plain vector equality.
class SimplePolygon {
public:
    /// Canonicalizes an arbitrary cyclic vertex list describing a simple
    /// polygon. Throws std::domain_error if fewer than 3 distinct vertices
    /// remain or the cycle has zero area.
    static SimplePolygon from_cycle(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vs_; }
    std::size_t size() const { return vs_.size(); }
    const Point& operator[](std::size_t i) const { return vs_[i]; }

    bool operator==(const SimplePolygon& rhs) const { return vs_ == rhs.vs_; }

    /// Twice the (positive) enclosed area.
    Scalar area_times2() const;

    std::string str() const;

private:
    SimplePolygon() = default;
    std::vector<Point> vs_;
};

/// Closed membership in a convex counterclockwise polygon.
bool convex_contains(const SimplePolygon& poly, const Point& x);

/// Strict interior membership in a convex counterclockwise polygon.
bool convex_contains_strict(const SimplePolygon& poly, const Point& x);

/// True if x lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& x);

/// True if x lies on the ray from origin in the given unit-step direction
/// (axis-parallel or diagonal).
bool on_ray(const Point& origin, std::pair<int, int> dir, const Point& x);

/// Intersection point of the lines through (a1,a2) and (b1,b2), if the lines
/// are not parallel.
std::optional<Point> line_intersection(const Point& a1, const Point& a2,
                                       const Point& b1, const Point& b2);

/// Boundary of the union of two convex CCW polygons whose interiors overlap
/// or where one contains the other. The result is a simple polygon.
SimplePolygon convex_union_boundary(const SimplePolygon& a, const SimplePolygon& b);

}  // namespace taxi
