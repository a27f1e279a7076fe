#include "conflap/rational_function.hpp"

#include <algorithm>
#include <ostream>

namespace conflap {

namespace {

void check_same_vars(const RationalFunction& a, const RationalFunction& b) {
    if (a.var_count() != b.var_count())
        throw ContextMismatchError("mismatched varCount: " + std::to_string(a.var_count()) +
                                   " vs " + std::to_string(b.var_count()));
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)),
      den_(std::move(den)),
      den_base_(Polynomial::constant(num_.var_count(), 1)) {
    if (num_.var_count() != den_.var_count())
        throw ContextMismatchError("num/den varCount mismatch");
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    normalize_full();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)),
      den_(Polynomial::constant(num_.var_count(), 1)),
      den_base_(den_) {}

RationalFunction::RationalFunction(known_power_t, Polynomial num, Polynomial base,
                                   unsigned exp)
    : num_(std::move(num)), den_(num_.var_count()), den_base_(std::move(base)) {
    if (den_base_.is_zero())
        throw DivisionByZeroError("rational function with zero denominator");
    settle(den_base_, exp);
}

RationalFunction RationalFunction::constant(int var_count, const Rational& c) {
    return RationalFunction(Polynomial::constant(var_count, c));
}

RationalFunction RationalFunction::variable(int var_count, int index) {
    return RationalFunction(Polynomial::variable(var_count, index));
}

// Shared tail: given den = base^exp (base monic or constant), peel common
// base factors out of the numerator and store the final shape.
void RationalFunction::settle(Polynomial base, unsigned exp) {
    int vars = num_.var_count();
    if (num_.is_zero() || exp == 0 || base.is_one()) {
        den_ = Polynomial::constant(vars, 1);
        den_base_ = den_;
        den_exp_ = 1;
        if (num_.is_zero()) return;
        if (auto c = base.as_constant(); c && exp != 0 && !c->is_one())
            num_ = Rational::pow(*c, exp).inverse() * num_;
        return;
    }
    if (auto c = base.as_constant()) {
        num_ = Rational::pow(*c, exp).inverse() * num_;
        den_ = Polynomial::constant(vars, 1);
        den_base_ = den_;
        den_exp_ = 1;
        return;
    }
    // monic base
    Rational lc = base.leading_term()->second;
    if (!lc.is_one()) {
        num_ = Rational::pow(lc, exp).inverse() * num_;
        base = lc.inverse() * base;
    }
    while (exp > 0) {
        auto q = num_.divide_exact(base);
        if (!q) break;
        num_ = std::move(*q);
        --exp;
    }
    if (exp == 0) {
        den_ = Polynomial::constant(vars, 1);
        den_base_ = den_;
        den_exp_ = 1;
        return;
    }
    den_base_ = std::move(base);
    den_exp_ = exp;
    den_ = den_base_.pow(exp);
}

void RationalFunction::normalize_full() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(var_count(), 1);
        den_base_ = den_;
        den_exp_ = 1;
        return;
    }
    if (auto c = den_.as_constant()) {
        settle(den_, 1);
        return;
    }
    // cancel the common monomial factor, e.g. y1^2/y1
    Exponents mn = num_.common_monomial();
    Exponents md = den_.common_monomial();
    Exponents common(mn.size());
    bool any = false;
    for (std::size_t i = 0; i < mn.size(); ++i) {
        common[i] = std::min(mn[i], md[i]);
        any = any || common[i] > 0;
    }
    if (any) {
        num_ = num_.divide_by_monomial(common);
        den_ = den_.divide_by_monomial(common);
    }
    auto [base, m] = den_.total_degree() >= 2 ? den_.perfect_power()
                                              : std::pair{den_, 1u};
    settle(std::move(base), m);
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
    if (!den_.is_constant()) return std::nullopt;
    Rational c = *den_.as_constant();
    return c.is_one() ? num_ : c.inverse() * num_;
}

std::optional<Rational> RationalFunction::as_constant() const {
    auto p = as_polynomial();
    if (!p) return std::nullopt;
    return p->as_constant();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    check_same_vars(a, b);
    if (a.den_ == b.den_)
        return RationalFunction(RationalFunction::known_power_t{}, a.num_ + b.num_,
                                a.den_base_, a.den_exp_);
    if (a.den_base_ == b.den_base_) {
        // powers of a shared base combine at the larger exponent
        unsigned hi = std::max(a.den_exp_, b.den_exp_);
        Polynomial lift_a =
            a.num_ * a.den_base_.pow(hi - a.den_exp_);
        Polynomial lift_b =
            b.num_ * b.den_base_.pow(hi - b.den_exp_);
        return RationalFunction(RationalFunction::known_power_t{}, lift_a + lift_b,
                                a.den_base_, hi);
    }
    if (a.den_.is_constant())
        return RationalFunction(RationalFunction::known_power_t{},
                                *a.as_polynomial() * b.den_ + b.num_, b.den_base_,
                                b.den_exp_);
    if (b.den_.is_constant())
        return RationalFunction(RationalFunction::known_power_t{},
                                a.num_ + *b.as_polynomial() * a.den_, a.den_base_,
                                a.den_exp_);
    if (auto q = a.den_.divide_exact(b.den_))
        return RationalFunction(RationalFunction::known_power_t{}, a.num_ + b.num_ * *q,
                                a.den_base_, a.den_exp_);
    if (auto q = b.den_.divide_exact(a.den_))
        return RationalFunction(RationalFunction::known_power_t{}, a.num_ * *q + b.num_,
                                b.den_base_, b.den_exp_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    check_same_vars(a, b);
    if (a.den_.is_constant())
        return RationalFunction(RationalFunction::known_power_t{},
                                *a.as_polynomial() * b.num_, b.den_base_, b.den_exp_);
    if (b.den_.is_constant())
        return RationalFunction(RationalFunction::known_power_t{},
                                a.num_ * *b.as_polynomial(), a.den_base_, a.den_exp_);
    if (a.den_base_ == b.den_base_)
        return RationalFunction(RationalFunction::known_power_t{}, a.num_ * b.num_,
                                a.den_base_, a.den_exp_ + b.den_exp_);
    // cross-cancel before multiplying
    if (auto q = b.num_.divide_exact(a.den_)) {
        if (auto p = a.num_.divide_exact(b.den_)) return RationalFunction(*p * *q);
        return RationalFunction(RationalFunction::known_power_t{}, a.num_ * *q,
                                b.den_base_, b.den_exp_);
    }
    if (auto p = a.num_.divide_exact(b.den_))
        return RationalFunction(RationalFunction::known_power_t{}, *p * b.num_,
                                a.den_base_, a.den_exp_);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of the zero function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return constant(var_count(), 1);
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(known_power_t{}, num_.pow(static_cast<unsigned>(e)), den_base_,
                            den_exp_ * static_cast<unsigned>(e));
}

bool RationalFunction::equals(const RationalFunction& o) const {
    check_same_vars(*this, o);
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::derivative(int var) const {
    Polynomial dn = num_.derivative(var);
    if (den_.is_constant())
        return RationalFunction(known_power_t{}, std::move(dn), den_base_, den_exp_);
    // (N / B^m)' = (N' B - m N B') / B^(m+1)
    Polynomial db = den_base_.derivative(var);
    Polynomial num2 = dn * den_base_ - Rational(static_cast<long>(den_exp_)) * (num_ * db);
    return RationalFunction(known_power_t{}, std::move(num2), den_base_, den_exp_ + 1);
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw PoleError("pole: denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

double RationalFunction::evaluate_double(const std::vector<double>& point) const {
    return num_.evaluate_double(point) / den_.evaluate_double(point);
}

std::string RationalFunction::str(char letter) const {
    if (den_.is_one()) return num_.str(letter);
    std::string n = num_.term_count() > 1 ? "(" + num_.str(letter) + ")" : num_.str(letter);
    std::string d = den_.term_count() > 1 ? "(" + den_.str(letter) + ")" : den_.str(letter);
    return n + " / " + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
}

}  // namespace conflap
