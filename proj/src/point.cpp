#include "taxigeom/point.hpp"

#include <ostream>
#include <stdexcept>

namespace taxi {

Point Point::parse(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw std::invalid_argument("Point: expected 'x1,x2', got '" + std::string(text) + "'");
    }
    return Point(Scalar::parse(text.substr(0, comma)), Scalar::parse(text.substr(comma + 1)));
}

std::string Point::str() const { return x1.str() + "," + x2.str(); }

Scalar cross(const Point& o, const Point& a, const Point& b) {
    return (a.x1 - o.x1) * (b.x2 - o.x2) - (a.x2 - o.x2) * (b.x1 - o.x1);
}

int orientation(const Point& o, const Point& a, const Point& b) {
    return cross(o, a, b).sign();
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

}  // namespace taxi
