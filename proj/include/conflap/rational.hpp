#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "conflap/errors.hpp"

namespace conflap {

struct SqrtSplit;

// Exact rational scalar, the coefficient field for everything in the library.
//
// Always stored normalized: denominator > 0, gcd(|numerator|, denominator) = 1,
// zero is 0/1. Arbitrary precision via GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit so scalars mix freely
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class v);
    // Accepts "7", "-7", "3/4". Throws ParseError on malformed input.
    explicit Rational(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // base^e with e any integer; throws DivisionByZeroError on 0^negative.
    static Rational pow(const Rational& base, long e);

    // Splits a positive value as square_root^2 * rest with rest a squarefree
    // positive integer (trial division). Used for radical bases.
    SqrtSplit sqrt_split() const;

    double to_double() const { return v_.get_d(); }
    // "num" or "num/den".
    std::string str() const;

private:
    mpq_class v_;
};

struct SqrtSplit {
    Rational square_root;
    Rational rest;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace conflap
