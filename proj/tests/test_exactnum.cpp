#include "kfano/rational.hpp"

#include "doctest.h"

#include <random>

using kfano::BigInt;
using kfano::Rational;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(-3, 6).num() == BigInt(-1));
    CHECK(Rational(-3, 6).den() == BigInt(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("field arithmetic") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("ordering is exact cross-multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 9) <= Rational(7, 9));
    // Magnitudes beyond 64-bit stay exact.
    Rational big = Rational(1) / Rational(3);
    for (int i = 0; i < 5; ++i)
        big = big * big;  // 3^-32
    CHECK(Rational(0) < big);
    CHECK(big < Rational(1, 1000000000));
}

TEST_CASE("pow with negative exponents") {
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(2) == Rational(0));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("cube_root recognizes exact cubes only") {
    CHECK(Rational(8).cube_root() == Rational(2));
    CHECK(Rational(27, 64).cube_root() == Rational(3, 4));
    CHECK(Rational(-8).cube_root() == Rational(-2));
    CHECK(Rational(0).cube_root() == Rational(0));
    CHECK(!Rational(2).cube_root().has_value());
    CHECK(!Rational(9, 4).cube_root().has_value());
    // A large perfect cube round-trips.
    Rational r(123456789, 1000);
    CHECK(r.pow(3).cube_root() == r);
}

TEST_CASE("string forms") {
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-5, 3).str() == "-5/3");
    CHECK(Rational(5).fraction_str() == "5/1");
    CHECK(Rational(-5, 3).fraction_str() == "-5/3");
    CHECK(Rational(0).fraction_str() == "0/1");
}

TEST_CASE("parse accepts p and p/q, rejects junk") {
    CHECK(Rational::parse("3/17") == Rational(3, 17));
    CHECK(Rational::parse("-5/9") == Rational(-5, 9));
    CHECK(Rational::parse("+4") == Rational(4));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(!Rational::parse("3/0").has_value());
    CHECK(!Rational::parse("x").has_value());
    CHECK(!Rational::parse("1/").has_value());
    CHECK(!Rational::parse("").has_value());
    CHECK(!Rational::parse("1/2/3").has_value());
    CHECK(!Rational::parse(" 1/2").has_value());
}

TEST_CASE("parse round-trips both string forms") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
        CHECK(Rational::parse(r.fraction_str()) == r);
    }
}

TEST_CASE("to_double is a faithful approximation") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-7, 4).to_double() == -1.75);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}
