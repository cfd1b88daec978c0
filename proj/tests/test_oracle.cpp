#include <doctest.h>

#include "taxigeom/oracle.hpp"
#include "test_helpers.hpp"

using namespace taxi;

namespace {

Point P(const char* s) { return Point::parse(s); }

const GridSpec kWideGrid{Scalar(-4), Scalar(8), Scalar(-5), Scalar(6), Scalar(1, 10)};

}  // namespace

TEST_CASE("grid spec") {
    GridSpec g{Scalar(0), Scalar(1), Scalar(0), Scalar(1), Scalar(1, 2)};
    CHECK(g.points().size() == 9);
    CHECK_THROWS_AS((GridSpec{Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(1)}.points()),
                    std::domain_error);
    CHECK_THROWS_AS((GridSpec{Scalar(0), Scalar(1), Scalar(0), Scalar(1), Scalar(0)}.points()),
                    std::domain_error);
}

TEST_CASE("default grid covers the reference points") {
    Point p = P("0,0"), q = P("3,1");
    GridSpec g = default_grid(p, q);
    CHECK(g.x1_min <= Scalar(-8));
    CHECK(g.x1_max >= Scalar(11));
    CHECK(g.step == Scalar(1, 5));
}

TEST_CASE("verify_filled on known instances") {
    CHECK(verify_filled(P("0,0"), P("3,1"), ExtRatio(Scalar(2)), kWideGrid).ok());
    CHECK(verify_filled(P("0,0"), P("2,2"), ExtRatio(Scalar(2)), kWideGrid).ok());
}

TEST_CASE("a perturbed quad is caught") {
    Point p = P("0,0"), q = P("3,1");
    ExtRatio k(Scalar(2));
    FilledSet f = filled(p, q, k);
    // Nudge the leg vertex (3,-1) sideways; boundary grid points on that leg
    // fall out of the corrupted union.
    std::vector<Point> vs = f.quads()[0].vertices();
    REQUIRE(vs[1] == P("3,-1"));
    vs[1].x1 += Scalar(1, 100);
    FilledSet corrupted{p, q, k,
                        std::vector{SimplePolygon::from_cycle(vs), f.quads()[1]}};
    long mismatches = 0;
    for (const Point& x : kWideGrid.points()) {
        if (in_filled(x, p, q, k) != filled_contains(corrupted, x)) ++mismatches;
    }
    CHECK(mismatches > 0);
}

TEST_CASE("verify_curve on known instances") {
    Point p = P("0,0"), q = P("2,2");
    ExtRatio k(Scalar(2));
    CHECK(verify_curve(apollonian_set(p, q, k), p, q, k, 3).ok());

    Point p2 = P("0,0"), q2 = P("3,1");
    ExtRatio one(Scalar(1));
    CHECK(verify_curve(apollonian_set(p2, q2, one), p2, q2, one, 3).ok());

    ApollonianShape point_shape = apollonian_set(p2, q2, ExtRatio::infinity());
    MismatchReport r = verify_curve(point_shape, p2, q2, ExtRatio::infinity(), 3);
    CHECK(r.ok());
    CHECK(r.total == 1);
}

TEST_CASE("verify_curve flags a wrong shape") {
    Point p = P("0,0"), q = P("2,2");
    // Deliberately check the k=2 trapezoid against k=3.
    MismatchReport r = verify_curve(apollonian_set(p, q, ExtRatio(Scalar(2))), p, q,
                                    ExtRatio(Scalar(3)), 3);
    CHECK(!r.ok());
}

TEST_CASE("classify_grid") {
    Point p = P("0,0"), q = P("3,1");
    GridSpec g{Scalar(0), Scalar(3), Scalar(0), Scalar(1), Scalar(1, 2)};
    auto table = classify_grid(p, q, g);
    bool saw_p = false, saw_q = false, saw_mid = false;
    for (auto& [x, ratio] : table) {
        if (x == p) {
            saw_p = true;
            CHECK(ratio.is_zero());
        }
        if (x == q) {
            saw_q = true;
            CHECK(ratio.is_infinite());
        }
        if (x == P("3/2,1/2")) {
            saw_mid = true;
            CHECK(ratio == ExtRatio(Scalar(1)));
        }
    }
    CHECK(saw_p);
    CHECK(saw_q);
    CHECK(saw_mid);
}

TEST_CASE("report determinism") {
    Point p = P("0,0"), q = P("3,2");
    ExtRatio k(Scalar(2));
    GridSpec g{Scalar(-2), Scalar(5), Scalar(-2), Scalar(4), Scalar(1, 3)};
    MismatchReport a = verify_filled(p, q, k, g);
    MismatchReport b = verify_filled(p, q, k, g);
    CHECK(a.total == b.total);
    CHECK(a.mismatches.size() == b.mismatches.size());
}
