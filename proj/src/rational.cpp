#include "conflap/rational.hpp"

#include <ostream>

namespace conflap {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            v_ = mpq_class(mpz_class(text));
        } else {
            mpz_class num(text.substr(0, slash));
            mpz_class den(text.substr(slash + 1));
            if (den == 0) throw DivisionByZeroError("rational with zero denominator");
            v_ = mpq_class(num, den);
            v_.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal '" + text + "'", 0);
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero()) {
        if (e < 0) throw DivisionByZeroError("zero to a negative power");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), ae);
    mpq_class r = e > 0 ? mpq_class(num, den) : mpq_class(den, num);
    r.canonicalize();
    return Rational(std::move(r));
}

SqrtSplit Rational::sqrt_split() const {
    if (sign() <= 0) throw DomainError("sqrt_split requires a positive value");
    // p/q = (1/q)^2 * (p*q); peel square divisors of p*q by trial division.
    mpz_class pq = numerator() * denominator();
    mpz_class root = 1;
    for (mpz_class d = 2; d * d <= pq; ++d) {
        mpz_class dd = d * d;
        while (mpz_divisible_p(pq.get_mpz_t(), dd.get_mpz_t())) {
            pq /= dd;
            root *= d;
        }
    }
    SqrtSplit out;
    out.square_root = Rational(mpq_class(root, denominator()));
    out.rest = Rational(pq);
    return out;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace conflap
