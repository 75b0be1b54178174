#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udvg/rational.hpp"

using udvg::Rational;

TEST_CASE("construction and canonical string form") {
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(21, 10).str() == "21/10");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
}

TEST_CASE("parsing accepts rationals, integers and decimals") {
    CHECK(Rational::parse("21/10") == Rational(21, 10));
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("2.1") == Rational(21, 10));
    CHECK(Rational::parse("-0.525") == Rational(-21, 40));
    CHECK(Rational::parse("0.0") == Rational(0));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("1.85") == Rational(37, 20));
}

TEST_CASE("parse round-trips through str") {
    for (const char* s : {"0", "7", "-3", "21/10", "-3/2", "1234567/89"}) {
        CHECK(Rational::parse(s).str() == s);
    }
}

TEST_CASE("try_parse rejects garbage") {
    CHECK(!Rational::try_parse(""));
    CHECK(!Rational::try_parse("abc"));
    CHECK(!Rational::try_parse("1/0"));
    CHECK(!Rational::try_parse("1/"));
    CHECK(!Rational::try_parse("1.2.3"));
    CHECK(!Rational::try_parse("1 2"));
    CHECK(!Rational::try_parse("--1"));
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    // The classic double-arithmetic failure case stays exact here.
    Rational tenth(1, 10);
    Rational sum(0);
    for (int i = 0; i < 10; ++i) sum += tenth;
    CHECK(sum == Rational(1));
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 5).sign() == 1);
    CHECK(Rational(-7, 5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("to_double approximates") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(21, 10).to_double() == doctest::Approx(2.1));
}
