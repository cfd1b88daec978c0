#include "taxigeom/isometry.hpp"

#include <sstream>
#include <stdexcept>

namespace taxi {

Isometry Isometry::reflect_across(const AxisLine& line) {
    const Scalar& c = line.offset;
    switch (line.kind) {
        case AxisLine::Kind::Vertical:  // x1 -> 2c - x1
            return {{false, -1, 1}, Point(c + c, Scalar(0))};
        case AxisLine::Kind::Horizontal:
            return {{false, 1, -1}, Point(Scalar(0), c + c)};
        case AxisLine::Kind::SlopePlusOne:  // (x1,x2) -> (x2 - c, x1 + c)
            return {{true, 1, 1}, Point(-c, c)};
        case AxisLine::Kind::SlopeMinusOne:  // (x1,x2) -> (c - x2, c - x1)
            return {{true, -1, -1}, Point(c, c)};
    }
    throw std::logic_error("reflect_across: bad line kind");
}

Isometry Isometry::rotation_pi_about(const Point& m) {
    return {{false, -1, -1}, Point(m.x1 + m.x1, m.x2 + m.x2)};
}

Isometry Isometry::compose(const Isometry& f, const Isometry& g) {
    // Linear part of f o g, recovered from its action on the basis steps.
    auto e1 = f.lin_.apply_step(g.lin_.apply_step({1, 0}));
    auto e2 = f.lin_.apply_step(g.lin_.apply_step({0, 1}));
    LinearPart lin;
    if (e1.second == 0) {
        lin = {false, e1.first, e2.second};
    } else {
        lin = {true, e2.first, e1.second};
    }
    return {lin, f.lin_.apply(g.t_) + f.t_};
}

Isometry Isometry::inverse() const {
    LinearPart li = lin_.inverse();
    Point t = li.apply(t_);
    return {li, Point(-t.x1, -t.x2)};
}

AxisLine Isometry::apply_line(const AxisLine& line) const {
    // Map two points of the line; the image is again an axis line.
    Point a, b;
    const Scalar& c = line.offset;
    switch (line.kind) {
        case AxisLine::Kind::Vertical: a = Point(c, Scalar(0)); b = Point(c, Scalar(1)); break;
        case AxisLine::Kind::Horizontal: a = Point(Scalar(0), c); b = Point(Scalar(1), c); break;
        case AxisLine::Kind::SlopePlusOne: a = Point(Scalar(0), c); b = Point(Scalar(1), c + Scalar(1)); break;
        case AxisLine::Kind::SlopeMinusOne: a = Point(Scalar(0), c); b = Point(Scalar(1), c - Scalar(1)); break;
    }
    auto img = AxisLine::through(apply(a), apply(b));
    if (!img) {
        throw std::logic_error("apply_line: image is not an axis line");
    }
    return *img;
}

std::string Isometry::str() const {
    std::ostringstream os;
    os << "(x1,x2) -> (" << (lin_.s1 < 0 ? "-" : "") << (lin_.swap ? "x2" : "x1") << " + "
       << t_.x1 << ", " << (lin_.s2 < 0 ? "-" : "") << (lin_.swap ? "x1" : "x2") << " + "
       << t_.x2 << ")";
    return os.str();
}

StandardPosition normalize_standard(const Point& p, const Point& q) {
    if (p == q) {
        throw std::domain_error("normalize_standard: coincident points");
    }
    Isometry iso = Isometry::translation(Point(-p.x1, -p.x2));
    Point v = iso.apply(q);
    if (v.x2.sign() < 0) {
        iso = Isometry::compose(Isometry::reflect_horizontal_axis(), iso);
        v = Point(v.x1, -v.x2);
    }
    if (v.x1.sign() < 0) {
        iso = Isometry::compose(Isometry::reflect_vertical_axis(), iso);
        v = Point(-v.x1, v.x2);
    }
    if (v.x2 > v.x1) {
        iso = Isometry::compose(Isometry::reflect_guide_plus(), iso);
        v = Point(v.x2, v.x1);
    }
    return {iso, Point(), v};
}

}  // namespace taxi
