#include <doctest.h>

#include <random>

#include "plurichern/error.hpp"
#include "plurichern/rational.hpp"

using namespace plurichern;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");

    const Rational zero(Integer(0), Integer(-7));
    CHECK(zero.denominator() == 1);
    CHECK(zero.str() == "0");
}

TEST_CASE("arithmetic is exact") {
    const Rational twelfth(Integer(1), Integer(12));
    const Rational eighth(Integer(1), Integer(8));
    CHECK(twelfth + eighth == Rational(Integer(5), Integer(24)));
    CHECK(twelfth - eighth == Rational(Integer(-1), Integer(24)));
    CHECK(twelfth * Rational(24) == Rational(2));
    CHECK(Rational(1) / Rational(3) * Rational(3) == Rational(1));
    CHECK((Rational(7) / Rational(2)).is_integer() == false);
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), Error);
    try {
        (void)(Rational(3) / Rational(0));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("floor, ceil and integer conversion") {
    const Rational r(Integer(-7), Integer(2));
    CHECK(r.floor() == -4);
    CHECK(r.ceil() == -3);
    CHECK(Rational(Integer(1024), Integer(17)).floor() == 60);
    CHECK_THROWS_AS((void)r.to_integer(), Error);
    CHECK(Rational(Integer(36), Integer(12)).to_integer() == 3);
}

TEST_CASE("comparison and approximation") {
    CHECK(Rational(Integer(1), Integer(3)) < Rational(Integer(1), Integer(2)));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(Integer(4088357), Integer(1048576)).approx() == "~3.899");
    CHECK(Rational(20).approx() == "~20");
}

TEST_CASE("parse inverts str on random fractions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long> den(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
        const Rational r(Integer(num(rng)), Integer(den(rng)));
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK_THROWS_AS(Rational::parse("1/"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse("3/0"), Error);
}
