#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conflap/radical.hpp"

namespace conflap {

enum class FnKind { polynomial, rational, radical };

// The coefficient function of the library: a polynomial, a rational function,
// or a quadratic-radical element, with arithmetic that promotes to the widest
// kind present. Immutable value type.
class FnElem {
public:
    FnElem(Polynomial p) : v_(std::move(p)) {}            // NOLINT: implicit
    FnElem(RationalFunction f) : v_(std::move(f)) {}      // NOLINT
    FnElem(RadicalElement r) : v_(std::move(r)) {}        // NOLINT
    static FnElem constant(int var_count, const Rational& c) {
        return FnElem(Polynomial::constant(var_count, c));
    }
    static FnElem variable(int var_count, int index) {
        return FnElem(Polynomial::variable(var_count, index));
    }

    FnKind kind() const { return static_cast<FnKind>(v_.index()); }
    int var_count() const;
    bool is_zero() const;
    bool is_radical() const { return kind() == FnKind::radical; }

    const Polynomial& poly() const { return std::get<Polynomial>(v_); }
    const RationalFunction& rational() const { return std::get<RationalFunction>(v_); }
    const RadicalElement& radical() const { return std::get<RadicalElement>(v_); }

    // Widening views. to_rational throws on a radical with nonzero s-part;
    // to_radical adopts the given base for non-radical elements.
    RationalFunction to_rational() const;
    RadicalElement to_radical(const Polynomial& base) const;
    std::optional<Polynomial> as_polynomial() const;
    std::optional<Rational> as_constant() const;
    // Base of the radical context, or nullptr for poly/rational elements.
    const Polynomial* radical_base() const;

    std::string str(char letter = 'y') const;

private:
    std::variant<Polynomial, RationalFunction, RadicalElement> v_;
};

FnElem operator+(const FnElem& f, const FnElem& g);
FnElem operator-(const FnElem& f, const FnElem& g);
FnElem operator*(const FnElem& f, const FnElem& g);
FnElem operator/(const FnElem& f, const FnElem& g);
FnElem operator-(const FnElem& f);
FnElem pow(const FnElem& f, long e);

// Exact partial derivative; 0-based variable index.
FnElem derivative(const FnElem& f, int var);

// Exact equality: term maps for polynomials, cross-multiplication for
// rationals, componentwise for radicals.
bool equals(const FnElem& f, const FnElem& g);

// Exact evaluation. radical_value is required for radical elements and must
// square to base(point).
Rational evaluate(const FnElem& f, const std::vector<Rational>& point,
                  const std::optional<Rational>& radical_value = std::nullopt);
double evaluate_double(const FnElem& f, const std::vector<double>& point);

// p(values_1, ..., values_n): composition with arbitrary elements.
FnElem substitute(const Polynomial& p, const std::vector<FnElem>& values);
// Rational or polynomial f only; radical inputs need an explicit image for s,
// which substitute_radical supplies.
FnElem substitute(const FnElem& f, const std::vector<FnElem>& values);
// a + b*s with s mapped to s_image.
FnElem substitute_radical(const RadicalElement& x, const std::vector<FnElem>& values,
                          const FnElem& s_image);

std::ostream& operator<<(std::ostream& os, const FnElem& f);

}  // namespace conflap
