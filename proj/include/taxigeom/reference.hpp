#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taxigeom/point.hpp"

namespace taxi {

/// One of the four line families the taxicab metric distinguishes:
/// coordinate lines (x1 = c, x2 = c) and guide lines (x2 - x1 = c, x2 + x1 = c).
struct AxisLine {
    enum class Kind { Vertical, Horizontal, SlopePlusOne, SlopeMinusOne };

    Kind kind;
    Scalar offset;

    /// Left side of the defining equation evaluated at x, minus the offset;
    /// zero exactly on the line.
    Scalar eval(const Point& x) const;
    bool contains(const Point& x) const { return eval(x).is_zero(); }

    bool operator==(const AxisLine& rhs) const = default;

    static AxisLine vertical_through(const Point& p) { return {Kind::Vertical, p.x1}; }
    static AxisLine horizontal_through(const Point& p) { return {Kind::Horizontal, p.x2}; }
    static AxisLine guide_plus_through(const Point& p) {
        return {Kind::SlopePlusOne, p.x2 - p.x1};
    }
    static AxisLine guide_minus_through(const Point& p) {
        return {Kind::SlopeMinusOne, p.x2 + p.x1};
    }

    /// The unique axis line of this family through two distinct points, if the
    /// segment direction matches one of the four families.
    static std::optional<AxisLine> through(const Point& a, const Point& b);

    std::string str() const;
};

/// Closed interval with optionally absent (infinite) endpoints.
struct Interval {
    std::optional<Scalar> lo, hi;
    bool contains(const Scalar& s) const {
        return (!lo || *lo <= s) && (!hi || s <= *hi);
    }
    bool is_degenerate() const { return lo && hi && *lo == *hi; }
};

/// One of the 9 closed regions cut out by the coordinate lines of p and q,
/// numbered in reading order: 1..3 across the top row, 9 at bottom right.
/// Region 5 is the coordinate rectangle.
struct RegionBounds {
    Interval x1, x2;
    bool contains(const Point& z) const { return x1.contains(z.x1) && x2.contains(z.x2); }
};

RegionBounds region_bounds(const Point& p, const Point& q, int region);

/// All closed regions containing x (more than one exactly on coordinate
/// lines of p or q). Never empty.
std::vector<int> classify_region(const Point& x, const Point& p, const Point& q);

bool in_coordinate_rectangle(const Point& z, const Point& p, const Point& q);

/// c^1(p,q) = (p1, q2) and c^2(p,q) = (q1, p2).
std::pair<Point, Point> coordinate_complements(const Point& p, const Point& q);

/// g^+(p,q) = gl^+(p) ^ gl^-(q) and g^-(p,q) = gl^-(p) ^ gl^+(q).
/// When p and q share a guide line these degenerate to q and p themselves.
/// Throws std::domain_error if p = q.
std::pair<Point, Point> guide_complements(const Point& p, const Point& q);

bool shares_guide_line(const Point& p, const Point& q);
bool shares_coordinate_line(const Point& p, const Point& q);

/// The guide line shared by p and q, if any.
std::optional<AxisLine> shared_guide_line(const Point& p, const Point& q);

/// Closed quadrant at a point, named by the signs of x - corner on each axis.
struct QuadrantSigns {
    int s1;  // +1: x1 >= corner, -1: x1 <= corner
    int s2;
    bool operator==(const QuadrantSigns& rhs) const = default;
    bool contains(const Point& corner, const Point& x) const {
        return (Scalar(s1) * (x.x1 - corner.x1)).sign() >= 0 &&
               (Scalar(s2) * (x.x2 - corner.x2)).sign() >= 0;
    }
};

/// Union of two opposite closed quadrants joined along a shared guide line:
/// the a-quadrant holding the half of gl away from b, the matching b-quadrant,
/// and gl itself. Stored symbolically since the set is unbounded.
struct Barbell {
    Point a, b;
    QuadrantSigns quadrant_a, quadrant_b;
    AxisLine gl;
    bool operator==(const Barbell& rhs) const = default;
};

/// Builds bb(a, b); a and b must be distinct and share a guide line.
Barbell barbell(const Point& a, const Point& b);

bool barbell_contains(const Barbell& bb, const Point& x);

/// Piecewise-linear curve: an infinite ray, a guide-line segment from a to b,
/// and an opposite infinite ray. Type 1 bolts have vertical rays, type 2
/// horizontal. The degenerate a = b form (a straight line) appears only as a
/// bisector of points sharing a coordinate line.
struct LightningBolt {
    std::pair<int, int> start_dir;  // unit step, one of (0,+-1), (+-1,0)
    Point a, b;
    std::pair<int, int> end_dir;
    int slope;  // of the middle segment: +1 or -1
    bool operator==(const LightningBolt& rhs) const = default;
};

/// lb(a, b) of the given type (1 or 2): the barbell of a and b intersected
/// with the closed vertical (type 1) or horizontal (type 2) strip between
/// their coordinate lines. Throws std::domain_error if a = b or no shared
/// guide line exists.
LightningBolt lightning_bolt(const Point& a, const Point& b, int type);

/// Orders the bolt endpoints (and for degenerate bolts, the ray directions)
/// so equal point sets compare equal.
LightningBolt canonical_bolt(LightningBolt lb);

bool bolt_contains(const LightningBolt& lb, const Point& x);

/// Membership in the open component of the barbell complement containing the
/// coordinate complement c^which of a and b.
bool in_P_component(const Point& x, const Point& a, const Point& b, int which);

}  // namespace taxi
