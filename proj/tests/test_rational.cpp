#include <doctest.h>

#include "slag/rational.hpp"

using slag::Rational;

TEST_CASE("construction reduces and normalizes sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(-3, 6).num() == -1);
    CHECK(Rational(-3, 6).den() == 2);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    // the headline arithmetic of the constant chain
    Rational delta0(2, 2381), d_l0(291, 2);
    CHECK(delta0 / d_l0 == Rational(4, 692871));
    CHECK(delta0 / (d_l0 + Rational(1)) == Rational(4, 697633));
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 2) >= Rational(7, 2));
    CHECK(Rational(10) > Rational(19, 2));
}

TEST_CASE("floor and predicates") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(7, 2).is_integer());
}

TEST_CASE("string round trip") {
    CHECK(Rational(4, 692871).to_string() == "4/692871");
    CHECK(Rational(10).to_string() == "10");
    CHECK(Rational::from_string("291/2") == Rational(291, 2));
    CHECK(Rational::from_string("-5") == Rational(-5));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(INT64_MAX), std::overflow_error);
}
