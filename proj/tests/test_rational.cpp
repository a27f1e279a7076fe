#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conflap/rational.hpp"

using conflap::DivisionByZeroError;
using conflap::Rational;

TEST_CASE("construction normalizes") {
    Rational q(6, 4);
    CHECK(q.numerator() == 3);
    CHECK(q.denominator() == 2);

    Rational neg(3, -6);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);

    Rational zero(0, 5);
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);
    CHECK(zero.is_zero());

    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
}

TEST_CASE("string round trip") {
    CHECK(Rational("3/4").str() == "3/4");
    CHECK(Rational("-7").str() == "-7");
    CHECK(Rational("-6/4").str() == "-3/2");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational("abc"), conflap::ParseError);
}

TEST_CASE("arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), DivisionByZeroError);
    CHECK(a.inverse() == Rational(2));
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZeroError);
}

TEST_CASE("pow") {
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational::pow(Rational(7), 0) == Rational(1));
    CHECK(Rational::pow(Rational(0), 4) == Rational(0));
    CHECK_THROWS_AS(Rational::pow(Rational(0), -1), DivisionByZeroError);
}

TEST_CASE("arbitrary precision survives 40!") {
    Rational f(1);
    for (long i = 1; i <= 40; ++i) f *= Rational(i);
    Rational g = f;
    for (long i = 1; i <= 40; ++i) g /= Rational(i);
    CHECK(g == Rational(1));
    CHECK(f.denominator() == 1);
    CHECK(f.numerator().get_str().size() == 48);
}

TEST_CASE("sqrt_split") {
    auto s = Rational(4).sqrt_split();
    CHECK(s.square_root == Rational(2));
    CHECK(s.rest == Rational(1));

    s = Rational(8).sqrt_split();
    CHECK(s.square_root == Rational(2));
    CHECK(s.rest == Rational(2));

    s = Rational(1, 2).sqrt_split();  // 1/2 = (1/2)^2 * 2
    CHECK(s.square_root == Rational(1, 2));
    CHECK(s.rest == Rational(2));

    s = Rational(9, 4).sqrt_split();
    CHECK(s.square_root == Rational(3, 2));
    CHECK(s.rest == Rational(1));
}

TEST_CASE("field identities on random values") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int i = 0; i < 200; ++i) {
        Rational a(d(rng), 1 + std::abs(d(rng)));
        Rational b(d(rng), 1 + std::abs(d(rng)));
        Rational c(d(rng), 1 + std::abs(d(rng)));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
