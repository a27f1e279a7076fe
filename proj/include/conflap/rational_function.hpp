#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conflap/polynomial.hpp"

namespace conflap {

// Quotient of two polynomials, denominator nonzero. Equality is decided by
// cross-multiplication, never by gcd normal forms. A light normalization pass
// (monic denominator, common monomial cancellation, perfect-power peeling)
// keeps sizes down without affecting equality.
//
// The denominator is carried as base^exp with a monic base. All pipelines in
// this library produce denominators that are powers of a fixed polynomial
// (1+|y|^2, |y|^2, 1+x_{n+1}), and knowing the base lets derivative use
// (N/B^m)' = (N'B - m N B')/B^(m+1) and lets add/mul combine exponents
// instead of multiplying blind and cancelling after the fact.
class RationalFunction {
public:
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);  // den = 1
    static RationalFunction constant(int var_count, const Rational& c);
    static RationalFunction variable(int var_count, int index);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int var_count() const { return num_.var_count(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    std::optional<Polynomial> as_polynomial() const;
    std::optional<Rational> as_constant() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    // f == g iff num_f * den_g == num_g * den_f.
    bool equals(const RationalFunction& o) const;

    RationalFunction derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;  // throws PoleError
    double evaluate_double(const std::vector<double>& point) const;

    std::string str(char letter = 'y') const;

private:
    struct known_power_t {};
    // den = base^exp with base monic (or constant); skips power re-detection.
    RationalFunction(known_power_t, Polynomial num, Polynomial base, unsigned exp);

    Polynomial num_;
    Polynomial den_;       // always den_base_^den_exp_
    Polynomial den_base_;  // monic, or the constant 1
    unsigned den_exp_ = 1;

    void normalize_full();                  // detects the power structure
    void settle(Polynomial base, unsigned exp);  // peel + store, base known
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace conflap
