#include <doctest.h>

#include "taxigeom/polygon.hpp"
#include "test_helpers.hpp"

using namespace taxi;

namespace {

Point P(const char* s) { return Point::parse(s); }

SimplePolygon poly(std::initializer_list<const char*> pts) {
    std::vector<Point> vs;
    for (const char* s : pts) vs.push_back(P(s));
    return SimplePolygon::from_cycle(std::move(vs));
}

}  // namespace

TEST_CASE("canonical form") {
    // Clockwise input, duplicate vertex, collinear middle vertex.
    SimplePolygon p = SimplePolygon::from_cycle(
        {P("0,1"), P("1,2"), P("2,1"), P("2,1"), P("1,0"), P("1/2,1/2")});
    CHECK(p == poly({"0,1", "1,0", "2,1", "1,2"}));
    CHECK(p.vertices().front() == P("0,1"));
    CHECK(p.area_times2().sign() > 0);

    CHECK_THROWS_AS(SimplePolygon::from_cycle({P("0,0"), P("1,1")}), std::domain_error);
    CHECK_THROWS_AS(SimplePolygon::from_cycle({P("0,0"), P("1,1"), P("2,2")}),
                    std::domain_error);
}

TEST_CASE("convex membership") {
    SimplePolygon sq = poly({"0,0", "2,0", "2,2", "0,2"});
    CHECK(convex_contains(sq, P("1,1")));
    CHECK(convex_contains(sq, P("0,0")));
    CHECK(convex_contains(sq, P("2,1")));
    CHECK(!convex_contains(sq, P("2,2000001/1000000")));
    CHECK(convex_contains_strict(sq, P("1,1")));
    CHECK(!convex_contains_strict(sq, P("2,1")));
}

TEST_CASE("segment and ray membership") {
    CHECK(on_segment(P("0,0"), P("4,2"), P("2,1")));
    CHECK(on_segment(P("0,0"), P("4,2"), P("0,0")));
    CHECK(!on_segment(P("0,0"), P("4,2"), P("6,3")));
    CHECK(on_segment(P("1,1"), P("1,1"), P("1,1")));  // zero length

    CHECK(on_ray(P("1,1"), {0, 1}, P("1,9")));
    CHECK(!on_ray(P("1,1"), {0, 1}, P("1,0")));
    CHECK(on_ray(P("1,1"), {1, -1}, P("4,-2")));
    CHECK(!on_ray(P("1,1"), {1, -1}, P("4,-1")));
}

TEST_CASE("union with crossing boundaries") {
    SimplePolygon a = poly({"0,0", "4,0", "4,3", "0,3"});
    SimplePolygon b = poly({"2,-1", "6,-1", "6,2", "2,2"});
    SimplePolygon u = convex_union_boundary(a, b);
    CHECK(u == poly({"0,0", "2,0", "2,-1", "6,-1", "6,2", "4,2", "4,3", "0,3"}));
}

TEST_CASE("union with containment and boundary touch") {
    SimplePolygon outer = poly({"0,0", "4,0", "4,4", "0,4"});
    SimplePolygon inner = poly({"1,0", "3,0", "3,2", "1,2"});  // touches the bottom edge
    CHECK(convex_union_boundary(outer, inner) == outer);
    CHECK(convex_union_boundary(inner, outer) == outer);
    CHECK(convex_union_boundary(outer, outer) == outer);
}

TEST_CASE("union with a collinear shared edge piece") {
    // Interiors overlap and the bottom edges overlap along [1,2] x {0}.
    SimplePolygon a = poly({"0,0", "2,0", "2,2", "0,2"});
    SimplePolygon b = poly({"1,0", "3,0", "3,2", "1,2"});
    CHECK(convex_union_boundary(a, b) == poly({"0,0", "3,0", "3,2", "0,2"}));
}

TEST_CASE("union with a diamond poking through an edge") {
    SimplePolygon a = poly({"0,0", "4,0", "4,4", "0,4"});
    SimplePolygon b = poly({"3,2", "5,0", "7,2", "5,4"});
    SimplePolygon u = convex_union_boundary(a, b);
    CHECK(u == poly({"0,0", "4,0", "4,1", "5,0", "7,2", "5,4", "4,3", "4,4", "0,4"}));
}

TEST_CASE("line intersection") {
    auto x = line_intersection(P("0,0"), P("2,2"), P("0,2"), P("2,0"));
    REQUIRE(x.has_value());
    CHECK(*x == P("1,1"));
    CHECK(!line_intersection(P("0,0"), P("1,1"), P("0,1"), P("1,2")).has_value());
}

namespace {

// Independent membership oracle for simple polygons: boundary check plus an
// exact crossing count along the horizontal ray to +infinity.
bool in_simple_polygon(const SimplePolygon& poly, const Point& x) {
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (on_segment(vs[i], vs[(i + 1) % n], x)) return true;
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % n];
        if ((a.x2 > x.x2) == (b.x2 > x.x2)) continue;
        Scalar t = (x.x2 - a.x2) / (b.x2 - a.x2);
        Scalar cx = a.x1 + t * (b.x1 - a.x1);
        if (cx > x.x1) inside = !inside;
    }
    return inside;
}

// Convex quad with one vertex in each open quadrant around the center, so the
// center is strictly interior.
SimplePolygon random_quad_around(taxitest::Rng& rng, const Point& c) {
    while (true) {
        auto leg = [&] { return Scalar(rng.integer(1, 8), rng.integer(1, 3)); };
        std::vector<Point> vs = {Point(c.x1 + leg(), c.x2 + leg()),
                                 Point(c.x1 - leg(), c.x2 + leg()),
                                 Point(c.x1 - leg(), c.x2 - leg()),
                                 Point(c.x1 + leg(), c.x2 - leg())};
        bool convex = true;
        for (int i = 0; i < 4; ++i) {
            if (orientation(vs[i], vs[(i + 1) % 4], vs[(i + 2) % 4]) <= 0) convex = false;
        }
        if (convex) return SimplePolygon::from_cycle(std::move(vs));
    }
}

}  // namespace

TEST_CASE("union membership matches the two quads on random instances") {
    taxitest::Rng rng;
    for (int trial = 0; trial < 120; ++trial) {
        Point c = rng.point();
        SimplePolygon a = random_quad_around(rng, c);
        SimplePolygon b = random_quad_around(rng, c);
        SimplePolygon u = convex_union_boundary(a, b);
        for (int j = 0; j < 40; ++j) {
            Point x = Point(c.x1 + rng.scalar(-9, 9, 2), c.x2 + rng.scalar(-9, 9, 2));
            bool expected = convex_contains(a, x) || convex_contains(b, x);
            CHECK(in_simple_polygon(u, x) == expected);
        }
        // Every union vertex lies on one of the quad boundaries.
        for (const Point& v : u.vertices()) {
            bool on_a = convex_contains(a, v) && !convex_contains_strict(a, v);
            bool on_b = convex_contains(b, v) && !convex_contains_strict(b, v);
            CHECK((on_a || on_b));
        }
    }
}
