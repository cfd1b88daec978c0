#include "taxigeom/affine.hpp"

#include <sstream>
#include <stdexcept>

#include "taxigeom/metric.hpp"
#include "taxigeom/polygon.hpp"

namespace taxi {

namespace {

// Signs resolving |x1 - c| and |x2 - c| on a region column/row. On degenerate
// middle intervals the coordinate is pinned, so either sign is valid there.
struct SignPattern {
    int sp1, sq1, sp2, sq2;
};

SignPattern sign_pattern(const AffineParams& params, int region) {
    int col = (region - 1) % 3;
    int row = (region - 1) / 3;
    SignPattern s{};
    s.sp1 = (col == 0) ? -1 : (col == 2) ? 1 : (params.p.x1 <= params.q.x1 ? 1 : -1);
    s.sq1 = (col == 0) ? -1 : (col == 2) ? 1 : (params.q.x1 <= params.p.x1 ? 1 : -1);
    s.sp2 = (row == 0) ? 1 : (row == 2) ? -1 : (params.p.x2 <= params.q.x2 ? 1 : -1);
    s.sq2 = (row == 0) ? 1 : (row == 2) ? -1 : (params.q.x2 <= params.p.x2 ? 1 : -1);
    return s;
}

// Feasible parameter range of position(t) = start + t*speed within a closed
// interval; tracks running [tmin, tmax] with absent meaning unbounded.
struct ClipState {
    bool feasible = true;
    std::optional<Scalar> tmin, tmax;

    void lower(const Scalar& t) {
        if (!tmin || *tmin < t) tmin = t;
    }
    void upper(const Scalar& t) {
        if (!tmax || t < *tmax) tmax = t;
    }
    void clip(const Scalar& start, const Scalar& speed, const Interval& iv) {
        if (speed.is_zero()) {
            feasible = feasible && iv.contains(start);
            return;
        }
        if (iv.lo) {
            Scalar t = (*iv.lo - start) / speed;
            speed.sign() > 0 ? lower(t) : upper(t);
        }
        if (iv.hi) {
            Scalar t = (*iv.hi - start) / speed;
            speed.sign() > 0 ? upper(t) : lower(t);
        }
    }
};

std::pair<int, int> step_towards(const Scalar& dx, const Scalar& dy) {
    return {dx.sign(), dy.sign()};
}

// A vacuous equation on a degenerate (at most one-dimensional) region: the
// piece is the region itself, spelled out as a segment or ray.
RegionPiece describe_degenerate_region(const RegionBounds& bounds) {
    const bool d1 = bounds.x1.is_degenerate();
    const bool d2 = bounds.x2.is_degenerate();
    if (d1 && d2) {
        Point pt(*bounds.x1.lo, *bounds.x2.lo);
        return SegmentPiece{pt, pt};
    }
    if (d1) {
        Scalar c = *bounds.x1.lo;
        if (bounds.x2.lo && bounds.x2.hi) {
            return SegmentPiece{Point(c, *bounds.x2.lo), Point(c, *bounds.x2.hi)};
        }
        if (bounds.x2.lo) return RayPiece{Point(c, *bounds.x2.lo), {0, 1}};
        return RayPiece{Point(c, *bounds.x2.hi), {0, -1}};
    }
    Scalar c = *bounds.x2.lo;
    if (bounds.x1.lo && bounds.x1.hi) {
        return SegmentPiece{Point(*bounds.x1.lo, c), Point(*bounds.x1.hi, c)};
    }
    if (bounds.x1.lo) return RayPiece{Point(*bounds.x1.lo, c), {1, 0}};
    return RayPiece{Point(*bounds.x1.hi, c), {-1, 0}};
}

}  // namespace

RegionPiece restrict_affine(const AffineParams& params, int region) {
    if (params.p == params.q) {
        throw std::domain_error("restrict_affine: coincident foci");
    }
    SignPattern s = sign_pattern(params, region);
    const Scalar& al = params.alpha;
    const Scalar& be = params.beta;

    // alpha*|x1-p1| + ... resolves to A*x1 + B*x2 = C on this region.
    Scalar A = al * Scalar(s.sp1) + be * Scalar(s.sq1);
    Scalar B = al * Scalar(s.sp2) + be * Scalar(s.sq2);
    Scalar C = params.gamma + al * (Scalar(s.sp1) * params.p.x1 + Scalar(s.sp2) * params.p.x2) +
               be * (Scalar(s.sq1) * params.q.x1 + Scalar(s.sq2) * params.q.x2);

    RegionBounds bounds = region_bounds(params.p, params.q, region);

    if (A.is_zero() && B.is_zero()) {
        if (!C.is_zero()) {
            return EmptyPiece{};
        }
        if (bounds.x1.is_degenerate() || bounds.x2.is_degenerate()) {
            return describe_degenerate_region(bounds);
        }
        return FullRegionPiece{};
    }

    // Parameterize the line A*x1 + B*x2 = C as P0 + t*(B, -A) and clip.
    Point p0 = B.is_zero() ? Point(C / A, Scalar(0)) : Point(Scalar(0), C / B);
    ClipState clip;
    clip.clip(p0.x1, B, bounds.x1);
    clip.clip(p0.x2, -A, bounds.x2);
    if (!clip.feasible || (clip.tmin && clip.tmax && *clip.tmax < *clip.tmin)) {
        return EmptyPiece{};
    }
    auto at = [&](const Scalar& t) { return Point(p0.x1 + t * B, p0.x2 - t * A); };
    if (clip.tmin && clip.tmax) {
        return SegmentPiece{at(*clip.tmin), at(*clip.tmax)};
    }
    if (clip.tmin) {
        return RayPiece{at(*clip.tmin), step_towards(B, -A)};
    }
    if (clip.tmax) {
        return RayPiece{at(*clip.tmax), step_towards(-B, A)};
    }
    return LineTrace{p0, step_towards(B, -A), step_towards(-B, A)};
}

std::vector<std::pair<int, RegionPiece>> affine_set(const AffineParams& params) {
    std::vector<std::pair<int, RegionPiece>> out;
    out.reserve(9);
    for (int i = 1; i <= 9; ++i) {
        out.emplace_back(i, restrict_affine(params, i));
    }
    return out;
}

bool satisfies_affine_equation(const AffineParams& params, const Point& x) {
    return params.alpha * taxi_distance(x, params.p) + params.beta * taxi_distance(x, params.q) ==
           params.gamma;
}

bool piece_contains(const RegionPiece& piece, const Point& x, const AffineParams& params,
                    int region) {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EmptyPiece>) {
                return false;
            } else if constexpr (std::is_same_v<T, SegmentPiece>) {
                return on_segment(v.a, v.b, x);
            } else if constexpr (std::is_same_v<T, RayPiece>) {
                return on_ray(v.origin, v.dir, x);
            } else if constexpr (std::is_same_v<T, LineTrace>) {
                return on_ray(v.origin, v.dir_a, x) || on_ray(v.origin, v.dir_b, x);
            } else {
                return region_bounds(params.p, params.q, region).contains(x);
            }
        },
        piece);
}

bool piece_is_empty(const RegionPiece& piece) {
    return std::holds_alternative<EmptyPiece>(piece);
}

std::string piece_str(const RegionPiece& piece) {
    std::ostringstream os;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EmptyPiece>) {
                os << "empty";
            } else if constexpr (std::is_same_v<T, SegmentPiece>) {
                os << "segment " << v.a << " .. " << v.b;
            } else if constexpr (std::is_same_v<T, RayPiece>) {
                os << "ray from " << v.origin << " dir " << v.dir.first << "," << v.dir.second;
            } else if constexpr (std::is_same_v<T, LineTrace>) {
                os << "line through " << v.origin << " dirs " << v.dir_a.first << ","
                   << v.dir_a.second << " / " << v.dir_b.first << "," << v.dir_b.second;
            } else {
                os << "full region";
            }
        },
        piece);
    return os.str();
}

}  // namespace taxi
