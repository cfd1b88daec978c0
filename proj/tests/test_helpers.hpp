#pragma once

#include <random>
#include <utility>

#include "taxigeom/apollonian.hpp"
#include "taxigeom/isometry.hpp"

namespace taxitest {

using namespace taxi;

// Deterministic generator for exact random geometry.
struct Rng {
    std::mt19937_64 eng{0x5eed2017u};

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }

    Scalar scalar(long lo = -12, long hi = 12, long max_den = 4) {
        return Scalar(integer(lo, hi), integer(1, max_den));
    }

    Point point() { return Point(scalar(), scalar()); }

    std::pair<Point, Point> distinct_pair() {
        while (true) {
            Point p = point(), q = point();
            if (!(p == q)) return {p, q};
        }
    }

    // No shared guide line and no shared coordinate line.
    std::pair<Point, Point> general_pair() {
        while (true) {
            auto [p, q] = distinct_pair();
            if (!shares_guide_line(p, q) && !shares_coordinate_line(p, q)) return {p, q};
        }
    }

    std::pair<Point, Point> guide_line_pair() {
        while (true) {
            Point p = point();
            Scalar d = scalar(-8, 8, 2);
            if (d.is_zero()) continue;
            Point q = integer(0, 1) ? Point(p.x1 + d, p.x2 + d) : Point(p.x1 + d, p.x2 - d);
            return {p, q};
        }
    }

    Scalar k_above_one() {
        long n = integer(2, 12);
        return Scalar(n, integer(1, n - 1));
    }

    // Any element of [0, infinity], weighted towards finite nontrivial values.
    ExtRatio any_ratio() {
        switch (integer(0, 9)) {
            case 0: return ExtRatio(Scalar(0));
            case 1: return ExtRatio::infinity();
            case 2: return ExtRatio(Scalar(1));
            default: return ExtRatio(Scalar(integer(1, 9), integer(1, 9)));
        }
    }

    LinearPart linear() {
        long i = integer(0, 7);
        return LinearPart{(i & 4) != 0, (i & 1) ? -1 : 1, (i & 2) ? -1 : 1};
    }

    Isometry isometry() { return Isometry(linear(), point()); }
};

}  // namespace taxitest
