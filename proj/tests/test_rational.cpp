#include <doctest.h>

#include <sstream>

#include "oie/error.hpp"
#include "oie/rational.hpp"

using oie::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction and canonical form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), oie::InvalidInputError);
}

TEST_CASE("parse accepts the three literal forms") {
    CHECK(Rational::parse("47/5") == Rational(47, 5));
    CHECK(Rational::parse("9.4") == Rational(47, 5));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK(Rational::parse("1736253600") == Rational(1736253600L));
    CHECK(Rational::parse("10.01") == Rational(1001, 100));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), oie::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), oie::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), oie::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), oie::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), oie::ParseError);
    CHECK_THROWS_AS(Rational::parse("1e5"), oie::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2.5"), oie::ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), oie::ParseError);
}

TEST_CASE("str round-trips") {
    CHECK(Rational(47, 5).str() == "47/5");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(0).str() == "0");
    for (const auto* text : {"47/5", "3", "-1/2", "1736253600"}) {
        CHECK(Rational::parse(text).str() == text);
    }
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 10) * Rational(10) == Rational(1));
    CHECK(Rational(1) - Rational(47, 5) == Rational(-42, 5));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), oie::InvalidInputError);
}

TEST_CASE("ordering is by value") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(94, 10) == Rational(47, 5));
    CHECK(Rational(2) > Rational(3, 2));
    CHECK(Rational(1, 2) <= Rational(1, 2));
}

TEST_CASE("streaming uses str") {
    std::ostringstream os;
    os << Rational(47, 5) << " " << Rational(2);
    CHECK(os.str() == "47/5 2");
}

TEST_SUITE_END();
