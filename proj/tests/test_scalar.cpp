#include <doctest.h>

#include "taxigeom/scalar.hpp"
#include "test_helpers.hpp"

using namespace taxi;

TEST_CASE("scalar parsing and formatting") {
    CHECK(Scalar::parse("3/2").str() == "3/2");
    CHECK(Scalar::parse("-3/2").str() == "-3/2");
    CHECK(Scalar::parse("+7").str() == "7");
    CHECK(Scalar::parse("0").str() == "0");
    CHECK(Scalar::parse("6/4").str() == "3/2");  // lowest terms
    CHECK(Scalar::parse("-0/5").str() == "0");

    CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("3/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
}

TEST_CASE("scalar arithmetic is exact") {
    Scalar a(1, 3), b(2, 5);
    CHECK((a + b).str() == "11/15");
    CHECK((a * b).str() == "2/15");
    CHECK((a - b).str() == "-1/15");
    CHECK((a / b).str() == "5/6");
    CHECK(Scalar(6, 4) == Scalar(3, 2));
    CHECK(Scalar(1, 3) + Scalar(1, 3) + Scalar(1, 3) == Scalar(1));

    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
    CHECK_THROWS_AS(Scalar(0).reciprocal(), std::domain_error);
}

TEST_CASE("scalar ordering and helpers") {
    CHECK(Scalar(1, 3) < Scalar(1, 2));
    CHECK(Scalar(-5) < Scalar(-4));
    CHECK(abs(Scalar(-7, 2)) == Scalar(7, 2));
    CHECK(min(Scalar(1), Scalar(2)) == Scalar(1));
    CHECK(max(Scalar(1), Scalar(2)) == Scalar(2));
    CHECK(Scalar(-3, 7).sign() == -1);
    CHECK(Scalar(0).sign() == 0);
}

TEST_CASE("scalar field identities on random values") {
    taxitest::Rng rng;
    for (int i = 0; i < 500; ++i) {
        Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        CHECK(a + b == b + a);
    }
}
