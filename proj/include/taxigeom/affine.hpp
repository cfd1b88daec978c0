#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "taxigeom/point.hpp"
#include "taxigeom/reference.hpp"

namespace taxi {

/// Parameters of the affine distance set
///   { x : alpha*d(x,p) + beta*d(x,q) = gamma }.
/// Apollonian sets are the special case alpha = 1, beta = -k, gamma = 0.
struct AffineParams {
    Point p, q;
    Scalar alpha, beta, gamma;
};

struct EmptyPiece {
    bool operator==(const EmptyPiece&) const = default;
};
struct SegmentPiece {  // possibly zero length
    Point a, b;
    bool operator==(const SegmentPiece&) const = default;
};
struct RayPiece {
    Point origin;
    std::pair<int, int> dir;  // unit step: axis or diagonal
    bool operator==(const RayPiece&) const = default;
};
struct LineTrace {  // a full line inside an unbounded region, as two rays
    Point origin;
    std::pair<int, int> dir_a, dir_b;
    bool operator==(const LineTrace&) const = default;
};
struct FullRegionPiece {
    bool operator==(const FullRegionPiece&) const = default;
};

/// Trace of an affine set inside one closed region.
using RegionPiece = std::variant<EmptyPiece, SegmentPiece, RayPiece, LineTrace, FullRegionPiece>;

/// Resolves the absolute values with the sign pattern valid on the region,
/// then intersects the resulting linear equation with the closed region.
/// FullRegionPiece is produced only when the resolved equation is vacuous and
/// the region is two-dimensional; vacuous equations on degenerate (lower
/// dimensional) regions come back as explicit segments or rays.
RegionPiece restrict_affine(const AffineParams& params, int region);

/// restrict_affine over all nine regions, in order.
std::vector<std::pair<int, RegionPiece>> affine_set(const AffineParams& params);

/// Exact evaluation of the defining equation at x.
bool satisfies_affine_equation(const AffineParams& params, const Point& x);

/// Exact membership of x in the piece computed for the given region.
bool piece_contains(const RegionPiece& piece, const Point& x, const AffineParams& params,
                    int region);

bool piece_is_empty(const RegionPiece& piece);

std::string piece_str(const RegionPiece& piece);

}  // namespace taxi
