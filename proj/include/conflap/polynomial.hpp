#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conflap/rational.hpp"

namespace conflap {

// Exponent vector of a monomial; length always equals the variable count.
using Exponents = std::vector<unsigned>;

// Lexicographic with the highest-numbered variable most significant, so the
// leading term of x_{n+1}^2 + ... is x_{n+1}^2. Used for term maps, ideal
// reduction and display.
struct TermLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

using TermMap = std::map<Exponents, Rational, TermLess>;

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored zero coefficients; every exponent vector has length
// var_count. Immutable in spirit: all operations return new values.
class Polynomial {
public:
    explicit Polynomial(int var_count);
    static Polynomial constant(int var_count, const Rational& c);
    static Polynomial variable(int var_count, int index);  // 0-based
    static Polynomial monomial(int var_count, Exponents exps, const Rational& c);
    // x_first^2 + ... + x_{first+count-1}^2.
    static Polynomial sum_of_squares(int var_count, int first, int count);

    int var_count() const { return var_count_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> as_constant() const;  // engaged iff zero or degree 0
    bool is_one() const;

    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(int var) const;
    Rational coefficient(const Exponents& e) const;
    // Largest term in the order; nullptr for zero.
    const std::pair<const Exponents, Rational>* leading_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.var_count_ == b.var_count_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // Total order usable as a map key: var_count, then term sequence.
    int compare(const Polynomial& o) const;

    Polynomial derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate_double(const std::vector<double>& point) const;

    // Exact quotient this / divisor, or nullopt when the division is not exact.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    // Finds the largest m with *this == base^m (m >= 1) and returns (base, m).
    // Uses leading-term m-th root recursion; no factorization involved.
    std::pair<Polynomial, unsigned> perfect_power() const;

    // Componentwise minimum of all exponent vectors; the common monomial factor.
    Exponents common_monomial() const;
    Polynomial divide_by_monomial(const Exponents& m) const;

    // Grammar-compatible rendering, e.g. "y1^2*y2 + 3/2*y1". Variables are
    // 1-based in text.
    std::string str(char letter = 'y') const;

private:
    int var_count_;
    TermMap terms_;

    void add_term(const Exponents& e, const Rational& c);
    friend class RationalFunction;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace conflap
