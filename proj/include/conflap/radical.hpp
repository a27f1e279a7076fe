#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conflap/rational_function.hpp"

namespace conflap {

// Element a + b*s of a quadratic extension with s^2 = u for a fixed base
// polynomial u. One radical per context; nesting is rejected by construction
// since a and b are plain rational functions. The derivation extends by
// d_i(s) = (d_i u) * s / (2u).
//
// Componentwise zero-testing of a + b*s is sound exactly when u is not a
// square in the underlying function field; every base used in this library
// (1 + x_{n+1} on the sphere, |y|^2 and scalar squarefree constants on the
// flat side) has that property.
class RadicalElement {
public:
    RadicalElement(Polynomial base, RationalFunction a, RationalFunction b);
    static RadicalElement pure_radical(Polynomial base);  // 0 + 1*s
    static RadicalElement from_rational(Polynomial base, RationalFunction a);

    const Polynomial& base() const { return base_; }
    const RationalFunction& rational_part() const { return a_; }
    const RationalFunction& radical_part() const { return b_; }
    int var_count() const { return a_.var_count(); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    RadicalElement operator-() const;
    friend RadicalElement operator+(const RadicalElement& x, const RadicalElement& y);
    friend RadicalElement operator-(const RadicalElement& x, const RadicalElement& y);
    friend RadicalElement operator*(const RadicalElement& x, const RadicalElement& y);
    friend RadicalElement operator/(const RadicalElement& x, const RadicalElement& y);
    RadicalElement inverse() const;
    RadicalElement pow(long e) const;

    bool equals(const RadicalElement& o) const;

    RadicalElement derivative(int var) const;
    // radical_value must square to u(point).
    Rational evaluate(const std::vector<Rational>& point, const Rational& radical_value) const;
    double evaluate_double(const std::vector<double>& point) const;  // positive branch

    std::string str(char letter = 'y') const;

private:
    Polynomial base_;
    RationalFunction a_;
    RationalFunction b_;
};

// Throws ContextMismatchError unless both elements share a base.
void check_same_base(const RadicalElement& x, const RadicalElement& y);

std::ostream& operator<<(std::ostream& os, const RadicalElement& x);

}  // namespace conflap
