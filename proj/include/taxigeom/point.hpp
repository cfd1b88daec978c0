#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "taxigeom/scalar.hpp"

namespace taxi {

/// A point of the plane with exact rational coordinates.
struct Point {
    Scalar x1;
    Scalar x2;

    Point() = default;
    Point(Scalar a, Scalar b) : x1(std::move(a)), x2(std::move(b)) {}

    /// Parses "x1,x2" where each coordinate uses the Scalar syntax.
    static Point parse(std::string_view text);

    bool operator==(const Point& rhs) const { return x1 == rhs.x1 && x2 == rhs.x2; }

    /// Lexicographic order (x1 first); used for canonical vertex starts.
    bool operator<(const Point& rhs) const {
        if (x1 != rhs.x1) return x1 < rhs.x1;
        return x2 < rhs.x2;
    }

    Point operator+(const Point& rhs) const { return {x1 + rhs.x1, x2 + rhs.x2}; }
    Point operator-(const Point& rhs) const { return {x1 - rhs.x1, x2 - rhs.x2}; }
    Point operator*(const Scalar& s) const { return {x1 * s, x2 * s}; }

    std::string str() const;
};

/// Exact cross product (a - o) x (b - o); sign gives orientation.
Scalar cross(const Point& o, const Point& a, const Point& b);

/// -1, 0, +1 for clockwise, collinear, counterclockwise.
int orientation(const Point& o, const Point& a, const Point& b);

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace taxi
