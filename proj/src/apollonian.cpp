#include "taxigeom/apollonian.hpp"

#include <stdexcept>

namespace taxi {

namespace {

const ExtRatio kOne{Scalar(1)};

}  // namespace

SimplePolygon trapezoid(const Point& p, const Point& q, const Scalar& k) {
    auto gl = shared_guide_line(p, q);
    if (!gl) {
        throw std::domain_error("trapezoid: foci must be distinct and share a guide line");
    }
    if (k <= Scalar(1)) {
        throw std::domain_error("trapezoid: requires k > 1");
    }
    Scalar m = (gl->kind == AxisLine::Kind::SlopePlusOne) ? Scalar(1) : Scalar(-1);
    Scalar steep = m * (k + Scalar(1)) / (k - Scalar(1));
    Scalar shallow = m * (k - Scalar(1)) / (k + Scalar(1));

    // Each leg line passes through p; its two vertices sit on the coordinate
    // lines of q.
    auto meet_vertical = [&](const Scalar& s) {
        return Point(q.x1, p.x2 + s * (q.x1 - p.x1));
    };
    auto meet_horizontal = [&](const Scalar& s) {
        return Point(p.x1 + (q.x2 - p.x2) / s, q.x2);
    };
    auto leg = [&](const Scalar& s) {
        Point u = meet_vertical(s);
        Point v = meet_horizontal(s);
        if (taxi_distance(v, p) < taxi_distance(u, p)) {
            std::swap(u, v);
        }
        return std::pair{u, v};  // near, far
    };
    auto [n1, f1] = leg(steep);
    auto [n2, f2] = leg(shallow);
    return SimplePolygon::from_cycle({n1, f1, f2, n2});
}

FilledSet filled(const Point& p, const Point& q, const ExtRatio& k) {
    if (p == q) {
        throw std::domain_error("filled: coincident foci");
    }
    if (k == kOne) {
        throw std::domain_error("filled: undefined for k = 1");
    }
    if (k.is_infinite()) {
        return {p, q, k, q};
    }
    if (k.is_zero()) {
        return {p, q, k, p};
    }
    if (k < kOne) {
        FilledSet swapped = filled(q, p, k.reciprocal());
        return {p, q, k, std::move(swapped.value)};
    }
    const Scalar& kf = k.finite();
    if (shares_guide_line(p, q)) {
        return {p, q, k, std::vector{trapezoid(p, q, kf)}};
    }
    auto [gp, gm] = guide_complements(p, q);
    return {p, q, k, std::vector{trapezoid(gp, q, kf), trapezoid(gm, q, kf)}};
}

bool in_filled(const Point& x, const Point& p, const Point& q, const ExtRatio& k) {
    if (k == kOne) {
        throw std::domain_error("in_filled: undefined for k = 1");
    }
    ExtRatio r = distance_ratio(x, p, q);
    return k > kOne ? r >= k : r <= k;
}

bool filled_contains(const FilledSet& f, const Point& x) {
    if (f.is_point()) {
        return x == f.point();
    }
    for (const SimplePolygon& quad : f.quads()) {
        if (convex_contains(quad, x)) {
            return true;
        }
    }
    return false;
}

SimplePolygon boundary_of_union(const FilledSet& f) {
    if (f.is_point()) {
        throw std::domain_error("boundary_of_union: point-valued set has no polygon boundary");
    }
    const auto& quads = f.quads();
    if (quads.size() == 1) {
        return quads[0];
    }
    return convex_union_boundary(quads[0], quads[1]);
}

namespace {

// A(p,q;1) when p and q share no guide line: the lightning bolt through the
// midpoint whose rays run perpendicular to the long side of the coordinate
// rectangle. A shared coordinate line degenerates the bolt to the straight
// bisector line through the midpoint.
ApollonianShape equidistant_set(const Point& p, const Point& q) {
    Point m = midpoint(p, q);
    if (p.x2 == q.x2) {
        return canonical_bolt(LightningBolt{{0, 1}, m, m, {0, -1}, 1});
    }
    if (p.x1 == q.x1) {
        return canonical_bolt(LightningBolt{{1, 0}, m, m, {-1, 0}, 1});
    }

    int seg_slope_sign = ((q.x2 - p.x2) * (q.x1 - p.x1)).sign();
    AxisLine gl = (seg_slope_sign > 0) ? AxisLine::guide_minus_through(m)
                                       : AxisLine::guide_plus_through(m);

    Scalar lo1 = min(p.x1, q.x1), hi1 = max(p.x1, q.x1);
    Scalar lo2 = min(p.x2, q.x2), hi2 = max(p.x2, q.x2);

    // Clip gl to the coordinate rectangle; parameterize by x1 = t.
    Scalar tmin, tmax;
    if (gl.kind == AxisLine::Kind::SlopePlusOne) {
        tmin = max(lo1, lo2 - gl.offset);
        tmax = min(hi1, hi2 - gl.offset);
    } else {
        tmin = max(lo1, gl.offset - hi2);
        tmax = min(hi1, gl.offset - lo2);
    }
    auto at = [&](const Scalar& t) {
        Scalar x2 = (gl.kind == AxisLine::Kind::SlopePlusOne) ? t + gl.offset : gl.offset - t;
        return Point(t, x2);
    };
    int type = (hi1 - lo1 > hi2 - lo2) ? 1 : 2;
    return lightning_bolt(at(tmin), at(tmax), type);
}

}  // namespace

ApollonianShape apollonian_set(const Point& p, const Point& q, const ExtRatio& k) {
    if (p == q) {
        throw std::domain_error("apollonian_set: coincident foci");
    }
    if (k.is_zero()) {
        return p;
    }
    if (k.is_infinite()) {
        return q;
    }
    if (k == kOne) {
        if (shares_guide_line(p, q)) {
            auto [c1, c2] = coordinate_complements(p, q);
            return barbell(c1, c2);
        }
        return equidistant_set(p, q);
    }
    return boundary_of_union(filled(p, q, k));
}

std::string shape_kind(const ApollonianShape& shape) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) return "point";
            else if constexpr (std::is_same_v<T, SimplePolygon>) return "polygon";
            else if constexpr (std::is_same_v<T, LightningBolt>) return "bolt";
            else return "barbell";
        },
        shape);
}

ApollonianShape apply_isometry(const Isometry& iso, const ApollonianShape& shape) {
    return std::visit(
        [&](const auto& v) -> ApollonianShape {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                return iso.apply(v);
            } else if constexpr (std::is_same_v<T, SimplePolygon>) {
                std::vector<Point> mapped;
                mapped.reserve(v.size());
                for (const Point& pt : v.vertices()) {
                    mapped.push_back(iso.apply(pt));
                }
                return SimplePolygon::from_cycle(std::move(mapped));
            } else if constexpr (std::is_same_v<T, LightningBolt>) {
                auto dir = iso.linear().apply_step({1, v.slope});
                return canonical_bolt(LightningBolt{iso.linear().apply_step(v.start_dir),
                                                    iso.apply(v.a), iso.apply(v.b),
                                                    iso.linear().apply_step(v.end_dir),
                                                    dir.first * dir.second});
            } else {
                return barbell(iso.apply(v.a), iso.apply(v.b));
            }
        },
        shape);
}

}  // namespace taxi
