#include <doctest.h>

#include "taxigeom/metric.hpp"
#include "test_helpers.hpp"

using namespace taxi;

namespace {

Point P(const char* s) { return Point::parse(s); }

}  // namespace

TEST_CASE("taxi distance") {
    CHECK(taxi_distance(P("0,0"), P("3,1")) == Scalar(4));
    CHECK(taxi_distance(P("2,6"), P("2,2")) == Scalar(4));
    CHECK(taxi_distance(P("-1/2,3"), P("-1/2,3")) == Scalar(0));
}

TEST_CASE("metric axioms on random rational points") {
    taxitest::Rng rng;
    for (int i = 0; i < 1000; ++i) {
        Point x = rng.point(), y = rng.point(), z = rng.point();
        Scalar dxy = taxi_distance(x, y);
        CHECK(dxy.sign() >= 0);
        CHECK((dxy.is_zero() == (x == y)));
        CHECK(dxy == taxi_distance(y, x));
        CHECK(taxi_distance(x, z) <= dxy + taxi_distance(y, z));
    }
}

TEST_CASE("midpoint") {
    CHECK(midpoint(P("0,0"), P("3,1")) == P("3/2,1/2"));
    CHECK(midpoint(P("-1,2"), P("1,-2")) == P("0,0"));
    CHECK(midpoint(P("0,0"), P("0,0")) == P("0,0"));
}

TEST_CASE("distance ratio") {
    CHECK(distance_ratio(P("0,0"), P("0,0"), P("2,2")).is_zero());
    CHECK(distance_ratio(P("2,2"), P("0,0"), P("2,2")).is_infinite());
    CHECK(distance_ratio(P("2,6"), P("0,0"), P("2,2")) == ExtRatio(Scalar(2)));
    CHECK_THROWS_AS(distance_ratio(P("1,1"), P("2,2"), P("2,2")), std::domain_error);
}

TEST_CASE("ratio reciprocal identity") {
    taxitest::Rng rng;
    for (int i = 0; i < 500; ++i) {
        auto [p, q] = rng.distinct_pair();
        Point x = rng.point();
        ExtRatio r = distance_ratio(x, p, q);
        ExtRatio s = distance_ratio(x, q, p);
        if (!r.is_infinite() && !r.is_zero()) {
            CHECK(r.finite() * s.finite() == Scalar(1));
        }
    }
}

TEST_CASE("taxi circle vertices") {
    SimplePolygon unit = taxi_circle(P("0,0"), Scalar(1));
    SimplePolygon expected = SimplePolygon::from_cycle({P("1,0"), P("0,1"), P("-1,0"), P("0,-1")});
    CHECK(unit == expected);

    SimplePolygon c = taxi_circle(P("2,3"), Scalar(2));
    CHECK(c == SimplePolygon::from_cycle({P("4,3"), P("2,5"), P("0,3"), P("2,1")}));

    CHECK_THROWS_AS(taxi_circle(P("0,0"), Scalar(0)), std::domain_error);
    CHECK_THROWS_AS(taxi_circle(P("0,0"), Scalar(-1)), std::domain_error);
}

TEST_CASE("taxi circle points stay at radius r") {
    taxitest::Rng rng;
    for (int i = 0; i < 100; ++i) {
        Point c = rng.point();
        Scalar r = abs(rng.scalar()) + Scalar(1, 7);
        SimplePolygon circle = taxi_circle(c, r);
        const auto& vs = circle.vertices();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            CHECK(taxi_distance(vs[j], c) == r);
            const Point& a = vs[j];
            const Point& b = vs[(j + 1) % vs.size()];
            for (long num = 1; num <= 3; ++num) {
                Scalar t(num, 4);
                Point e(a.x1 + t * (b.x1 - a.x1), a.x2 + t * (b.x2 - a.x2));
                CHECK(taxi_distance(e, c) == r);
            }
        }
    }
}

TEST_CASE("ext ratio ordering") {
    ExtRatio inf = ExtRatio::infinity();
    CHECK(inf > ExtRatio(Scalar(1000000)));
    CHECK(ExtRatio(Scalar(0)) < ExtRatio(Scalar(1, 1000000)));
    CHECK(inf == ExtRatio::infinity());
    CHECK(inf >= inf);
    CHECK(inf.reciprocal() == ExtRatio(Scalar(0)));
    CHECK(ExtRatio(Scalar(0)).reciprocal().is_infinite());
    CHECK(ExtRatio(Scalar(2, 3)).reciprocal() == ExtRatio(Scalar(3, 2)));
    CHECK(ExtRatio::parse("inf").is_infinite());
    CHECK(ExtRatio::parse("3/2") == ExtRatio(Scalar(3, 2)));
    CHECK_THROWS_AS(ExtRatio(Scalar(-1)), std::domain_error);
}
