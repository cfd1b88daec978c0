#pragma once

#include <vector>

#include "taxigeom/apollonian.hpp"

namespace taxi {

/// Rectangular lattice of exact rational points min + j*step on each axis.
struct GridSpec {
    Scalar x1_min, x1_max, x2_min, x2_max;
    Scalar step;

    /// Row-major point list; throws std::domain_error on invalid bounds/step.
    std::vector<Point> points() const;
};

/// Bounding box of p, q, and their guide complements, expanded by twice the
/// focal distance on each side, with step d(p,q)/20.
GridSpec default_grid(const Point& p, const Point& q);

struct Mismatch {
    Point at;
    bool expected;  // ratio-definition verdict
    bool got;       // constructed-geometry verdict
};

struct MismatchReport {
    long total = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
    std::string summary() const;
};

/// Compares ratio-defined membership with the constructed quad union of
/// B(p,q;k) on every grid point.
MismatchReport verify_filled(const Point& p, const Point& q, const ExtRatio& k,
                             const GridSpec& grid);

/// Checks the defining relation on the constructed A(p,q;k): exact ratio k at
/// every polygon/bolt vertex, at samples along each edge, and along rays at
/// parameter lengths 1, 2 and 4. Barbells are checked by grid membership
/// against ratio = 1; point shapes against the k = 0 / k = infinity
/// conventions.
MismatchReport verify_curve(const ApollonianShape& shape, const Point& p, const Point& q,
                            const ExtRatio& k, int samples_per_edge);

/// Exact distance ratio for every grid point.
std::vector<std::pair<Point, ExtRatio>> classify_grid(const Point& p, const Point& q,
                                                      const GridSpec& grid);

}  // namespace taxi
