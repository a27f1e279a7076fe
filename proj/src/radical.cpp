#include "conflap/radical.hpp"

#include <cmath>
#include <ostream>

namespace conflap {

RadicalElement::RadicalElement(Polynomial base, RationalFunction a, RationalFunction b)
    : base_(std::move(base)), a_(std::move(a)), b_(std::move(b)) {
    if (base_.var_count() != a_.var_count() || a_.var_count() != b_.var_count())
        throw ContextMismatchError("radical base/components varCount mismatch");
    if (base_.is_zero()) throw DomainError("radical base must be nonzero");
}

RadicalElement RadicalElement::pure_radical(Polynomial base) {
    int vc = base.var_count();
    return RadicalElement(std::move(base), RationalFunction::constant(vc, 0),
                          RationalFunction::constant(vc, 1));
}

RadicalElement RadicalElement::from_rational(Polynomial base, RationalFunction a) {
    int vc = base.var_count();
    return RadicalElement(std::move(base), std::move(a), RationalFunction::constant(vc, 0));
}

void check_same_base(const RadicalElement& x, const RadicalElement& y) {
    if (x.base() != y.base())
        throw ContextMismatchError("mismatched radical base: s^2 = " + x.base().str() +
                                   " vs s^2 = " + y.base().str());
}

RadicalElement RadicalElement::operator-() const { return {base_, -a_, -b_}; }

RadicalElement operator+(const RadicalElement& x, const RadicalElement& y) {
    check_same_base(x, y);
    return {x.base_, x.a_ + y.a_, x.b_ + y.b_};
}

RadicalElement operator-(const RadicalElement& x, const RadicalElement& y) {
    check_same_base(x, y);
    return {x.base_, x.a_ - y.a_, x.b_ - y.b_};
}

RadicalElement operator*(const RadicalElement& x, const RadicalElement& y) {
    check_same_base(x, y);
    RationalFunction u{x.base_};
    return {x.base_, x.a_ * y.a_ + x.b_ * y.b_ * u, x.a_ * y.b_ + y.a_ * x.b_};
}

RadicalElement operator/(const RadicalElement& x, const RadicalElement& y) {
    return x * y.inverse();
}

RadicalElement RadicalElement::inverse() const {
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 u); the norm vanishes only for the
    // zero element because u is not a square
    RationalFunction u{base_};
    RationalFunction norm = a_ * a_ - b_ * b_ * u;
    if (norm.is_zero()) throw DivisionByZeroError("inverse of zero radical element");
    return {base_, a_ / norm, -(b_ / norm)};
}

RadicalElement RadicalElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RadicalElement result = from_rational(base_, RationalFunction::constant(var_count(), 1));
    RadicalElement acc = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1ul) result = result * acc;
        u >>= 1ul;
        if (u > 0) acc = acc * acc;
    }
    return result;
}

bool RadicalElement::equals(const RadicalElement& o) const {
    check_same_base(*this, o);
    return a_.equals(o.a_) && b_.equals(o.b_);
}

RadicalElement RadicalElement::derivative(int var) const {
    RationalFunction u{base_};
    RationalFunction du{base_.derivative(var)};
    RationalFunction db = b_.derivative(var);
    if (!b_.is_zero() && !du.is_zero())
        db = db + b_ * du / (RationalFunction::constant(var_count(), 2) * u);
    return {base_, a_.derivative(var), db};
}

Rational RadicalElement::evaluate(const std::vector<Rational>& point,
                                  const Rational& radical_value) const {
    Rational u_at = base_.evaluate(point);
    if (radical_value * radical_value != u_at)
        throw DomainError("radicalValue^2 != base(point)");
    return a_.evaluate(point) + b_.evaluate(point) * radical_value;
}

double RadicalElement::evaluate_double(const std::vector<double>& point) const {
    double u_at = base_.evaluate_double(point);
    return a_.evaluate_double(point) + b_.evaluate_double(point) * std::sqrt(u_at);
}

std::string RadicalElement::str(char letter) const {
    if (b_.is_zero()) return a_.str(letter);
    std::string s = "sqrt(" + base_.str(letter) + ")";
    std::string rad = "(" + b_.str(letter) + ")*" + s;
    if (a_.is_zero()) return rad;
    return a_.str(letter) + " + " + rad;
}

std::ostream& operator<<(std::ostream& os, const RadicalElement& x) { return os << x.str(); }

}  // namespace conflap
