#include "taxigeom/reference.hpp"

#include <stdexcept>

#include "taxigeom/polygon.hpp"

namespace taxi {

Scalar AxisLine::eval(const Point& x) const {
    switch (kind) {
        case Kind::Vertical: return x.x1 - offset;
        case Kind::Horizontal: return x.x2 - offset;
        case Kind::SlopePlusOne: return x.x2 - x.x1 - offset;
        case Kind::SlopeMinusOne: return x.x2 + x.x1 - offset;
    }
    throw std::logic_error("AxisLine: bad kind");
}

std::optional<AxisLine> AxisLine::through(const Point& a, const Point& b) {
    Point d = b - a;
    if (d.x1.is_zero() && d.x2.is_zero()) {
        return std::nullopt;
    }
    if (d.x1.is_zero()) return vertical_through(a);
    if (d.x2.is_zero()) return horizontal_through(a);
    if (d.x1 == d.x2) return guide_plus_through(a);
    if (d.x1 == -d.x2) return guide_minus_through(a);
    return std::nullopt;
}

std::string AxisLine::str() const {
    switch (kind) {
        case Kind::Vertical: return "x1 = " + offset.str();
        case Kind::Horizontal: return "x2 = " + offset.str();
        case Kind::SlopePlusOne: return "x2 - x1 = " + offset.str();
        case Kind::SlopeMinusOne: return "x2 + x1 = " + offset.str();
    }
    return "?";
}

RegionBounds region_bounds(const Point& p, const Point& q, int region) {
    if (region < 1 || region > 9) {
        throw std::domain_error("region_bounds: region must be 1..9");
    }
    Scalar lo1 = min(p.x1, q.x1), hi1 = max(p.x1, q.x1);
    Scalar lo2 = min(p.x2, q.x2), hi2 = max(p.x2, q.x2);
    int col = (region - 1) % 3;  // 0 left, 1 middle, 2 right
    int row = (region - 1) / 3;  // 0 top, 1 middle, 2 bottom

    RegionBounds r;
    if (col == 0) r.x1 = {std::nullopt, lo1};
    if (col == 1) r.x1 = {lo1, hi1};
    if (col == 2) r.x1 = {hi1, std::nullopt};
    if (row == 0) r.x2 = {hi2, std::nullopt};
    if (row == 1) r.x2 = {lo2, hi2};
    if (row == 2) r.x2 = {std::nullopt, lo2};
    return r;
}

std::vector<int> classify_region(const Point& x, const Point& p, const Point& q) {
    std::vector<int> out;
    for (int i = 1; i <= 9; ++i) {
        if (region_bounds(p, q, i).contains(x)) {
            out.push_back(i);
        }
    }
    return out;
}

bool in_coordinate_rectangle(const Point& z, const Point& p, const Point& q) {
    return region_bounds(p, q, 5).contains(z);
}

std::pair<Point, Point> coordinate_complements(const Point& p, const Point& q) {
    return {Point(p.x1, q.x2), Point(q.x1, p.x2)};
}

std::pair<Point, Point> guide_complements(const Point& p, const Point& q) {
    if (p == q) {
        throw std::domain_error("guide_complements: coincident points");
    }
    Scalar half(1, 2);
    // gl+(p): x2 - x1 = p2 - p1 meets gl-(q): x2 + x1 = q1 + q2.
    Point gp((q.x1 + q.x2 - p.x2 + p.x1) * half, (p.x2 - p.x1 + q.x1 + q.x2) * half);
    // gl-(p): x2 + x1 = p1 + p2 meets gl+(q): x2 - x1 = q2 - q1.
    Point gm((p.x1 + p.x2 - q.x2 + q.x1) * half, (p.x1 + p.x2 + q.x2 - q.x1) * half);
    return {gp, gm};
}

bool shares_guide_line(const Point& p, const Point& q) {
    return !(p == q) && abs(q.x1 - p.x1) == abs(q.x2 - p.x2);
}

bool shares_coordinate_line(const Point& p, const Point& q) {
    return !(p == q) && (p.x1 == q.x1 || p.x2 == q.x2);
}

std::optional<AxisLine> shared_guide_line(const Point& p, const Point& q) {
    if (p == q) {
        return std::nullopt;
    }
    Point d = q - p;
    if (d.x1 == d.x2 && !d.x1.is_zero()) return AxisLine::guide_plus_through(p);
    if (d.x1 == -d.x2 && !d.x1.is_zero()) return AxisLine::guide_minus_through(p);
    return std::nullopt;
}

Barbell barbell(const Point& a, const Point& b) {
    if (b < a) {
        return barbell(b, a);  // canonical end order
    }
    auto gl = shared_guide_line(a, b);
    if (!gl) {
        throw std::domain_error("barbell: points must be distinct and share a guide line");
    }
    // The a-quadrant holding the half of gl that leaves b behind opens in the
    // direction from b to a.
    QuadrantSigns qa{(a.x1 - b.x1).sign(), (a.x2 - b.x2).sign()};
    QuadrantSigns qb{-qa.s1, -qa.s2};
    return Barbell{a, b, qa, qb, *gl};
}

bool barbell_contains(const Barbell& bb, const Point& x) {
    return bb.quadrant_a.contains(bb.a, x) || bb.quadrant_b.contains(bb.b, x) ||
           bb.gl.contains(x);
}

LightningBolt lightning_bolt(const Point& a, const Point& b, int type) {
    if (type != 1 && type != 2) {
        throw std::domain_error("lightning_bolt: type must be 1 or 2");
    }
    Barbell bb = barbell(a, b);  // note: bb.a, bb.b are in canonical order
    // Intersecting a quadrant of the barbell with the strip between the
    // coordinate lines of a and b leaves a single ray out of each endpoint.
    std::pair<int, int> sdir, edir;
    if (type == 1) {
        sdir = {0, bb.quadrant_a.s2};
        edir = {0, bb.quadrant_b.s2};
    } else {
        sdir = {bb.quadrant_a.s1, 0};
        edir = {bb.quadrant_b.s1, 0};
    }
    int slope = (bb.gl.kind == AxisLine::Kind::SlopePlusOne) ? 1 : -1;
    return canonical_bolt(LightningBolt{sdir, bb.a, bb.b, edir, slope});
}

LightningBolt canonical_bolt(LightningBolt lb) {
    if (lb.b < lb.a) {
        std::swap(lb.a, lb.b);
        std::swap(lb.start_dir, lb.end_dir);
    } else if (lb.a == lb.b) {
        // Zero-length middle segment: the slope carries no information and
        // the two rays are interchangeable.
        lb.slope = 1;
        if (lb.end_dir < lb.start_dir) {
            std::swap(lb.start_dir, lb.end_dir);
        }
    }
    return lb;
}

bool bolt_contains(const LightningBolt& lb, const Point& x) {
    return on_ray(lb.a, lb.start_dir, x) || on_ray(lb.b, lb.end_dir, x) ||
           on_segment(lb.a, lb.b, x);
}

bool in_P_component(const Point& x, const Point& a, const Point& b, int which) {
    if (which != 1 && which != 2) {
        throw std::domain_error("in_P_component: which must be 1 or 2");
    }
    Barbell bb = barbell(a, b);
    if (barbell_contains(bb, x)) {
        return false;
    }
    auto [c1, c2] = coordinate_complements(a, b);
    const Point& c = (which == 1) ? c1 : c2;
    // Each complement component lies strictly on one side of gl.
    return bb.gl.eval(x).sign() == bb.gl.eval(c).sign();
}

}  // namespace taxi
