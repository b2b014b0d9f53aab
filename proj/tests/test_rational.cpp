#include <doctest.h>

#include "hypertile/rational.hpp"

using namespace hypertile;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(7, 3).ceil() == 3);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(-7, 3).ceil() == -2);
    CHECK(Rational(6, 3).ceil() == 2);
}

TEST_CASE("rational ordering and parsing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational::parse("3/7") == Rational(3, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational overflow detection") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, OverflowError);
}

TEST_CASE("binomials") {
    CHECK(binom(6, 2) == 15);
    CHECK(binom(6, 3) == 20);
    CHECK(binom(4, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(52, 5) == 2598960);
}

TEST_CASE("ceil_scaled matches ceil(q*scale)") {
    CHECK(ceil_scaled(Rational(1, 3), 10) == 4);
    CHECK(ceil_scaled(Rational(1, 2), 10) == 5);
    CHECK(ceil_scaled(Rational(0), 10) == 0);
}
