#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "spectough/rational.hpp"

using spectough::Rational;

TEST_CASE("construction reduces and normalizes signs") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, 6) == Rational(-2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7, 1).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(2, 3) <= Rational(2, 3));
    CHECK(Rational(1, 3) > Rational(1, 4));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    // values whose doubles collide still compare correctly
    Rational a(1000000000000000000LL, 999999999999999999LL);
    CHECK(a > Rational(1));
}

TEST_CASE("strings") {
    CHECK(Rational(2, 3).str() == "2/3");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("2/3") == Rational(2, 3));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    // reducible products that fit after reduction are fine
    CHECK(Rational(1, INT64_MAX) * Rational(INT64_MAX, 1) == Rational(1));
}

TEST_CASE("to_double") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(2, 3).to_double() == doctest::Approx(2.0 / 3.0));
}
