#include "conflap/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace conflap {

namespace {

void check_var_count(int var_count) {
    if (var_count < 1) throw DomainError("var_count must be >= 1");
}

void check_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.var_count() != b.var_count())
        throw ContextMismatchError("mismatched varCount: " + std::to_string(a.var_count()) +
                                   " vs " + std::to_string(b.var_count()));
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool divides_exps(const Exponents& d, const Exponents& e) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i]) return false;
    return true;
}

Exponents sub_exps(const Exponents& e, const Exponents& d) {
    Exponents r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r[i] = e[i] - d[i];
    return r;
}

}  // namespace

Polynomial::Polynomial(int var_count) : var_count_(var_count) { check_var_count(var_count); }

Polynomial Polynomial::constant(int var_count, const Rational& c) {
    Polynomial p(var_count);
    if (!c.is_zero()) p.terms_.emplace(Exponents(var_count, 0), c);
    return p;
}

Polynomial Polynomial::variable(int var_count, int index) {
    check_var_count(var_count);
    if (index < 0 || index >= var_count)
        throw DomainError("variable index " + std::to_string(index) + " out of range");
    Exponents e(var_count, 0);
    e[index] = 1;
    return monomial(var_count, std::move(e), 1);
}

Polynomial Polynomial::monomial(int var_count, Exponents exps, const Rational& c) {
    Polynomial p(var_count);
    if (exps.size() != static_cast<std::size_t>(var_count))
        throw ContextMismatchError("exponent vector length != varCount");
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

Polynomial Polynomial::sum_of_squares(int var_count, int first, int count) {
    Polynomial p(var_count);
    for (int i = first; i < first + count; ++i) {
        Exponents e(var_count, 0);
        if (i < 0 || i >= var_count) throw DomainError("sum_of_squares variable out of range");
        e[i] = 2;
        p.terms_.emplace(std::move(e), Rational(1));
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
}

std::optional<Rational> Polynomial::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
}

bool Polynomial::is_one() const {
    auto c = as_constant();
    return c && c->is_one();
}

long Polynomial::total_degree() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        deg = std::max(deg, d);
    }
    return deg;
}

long Polynomial::degree_in(int var) const {
    long deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<long>(e[var]));
    return deg;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponents, Rational>* Polynomial::leading_term() const {
    if (terms_.empty()) return nullptr;
    return &*terms_.rbegin();
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(var_count_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_vars(a, b);
    Polynomial r(a.var_count_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exps(ea, eb), ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial(p.var_count_);
    Polynomial r(p.var_count_);
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(var_count_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

int Polynomial::compare(const Polynomial& o) const {
    if (var_count_ != o.var_count_) return var_count_ < o.var_count_ ? -1 : 1;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    TermLess less;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (less(it->first, jt->first)) return -1;
        if (less(jt->first, it->first)) return 1;
        if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
    }
    if (it != terms_.end()) return 1;
    if (jt != o.terms_.end()) return -1;
    return 0;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= var_count_)
        throw DomainError("derivative index " + std::to_string(var) + " out of range");
    Polynomial r(var_count_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, Rational(static_cast<long>(e[var])) * c);
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<std::size_t>(var_count_))
        throw ContextMismatchError("point length != varCount");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < var_count_; ++i)
            if (e[i] > 0) t *= Rational::pow(point[i], e[i]);
        total += t;
    }
    return total;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
    if (point.size() != static_cast<std::size_t>(var_count_))
        throw ContextMismatchError("point length != varCount");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < var_count_; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t *= point[i];
        total += t;
    }
    return total;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    check_same_vars(*this, divisor);
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (auto c = divisor.as_constant()) return c->inverse() * *this;
    Polynomial rem = *this;
    Polynomial quot(var_count_);
    const auto* dlt = divisor.leading_term();
    while (!rem.is_zero()) {
        const auto* rlt = rem.leading_term();
        if (!divides_exps(dlt->first, rlt->first)) return std::nullopt;
        Exponents qe = sub_exps(rlt->first, dlt->first);
        Rational qc = rlt->second / dlt->second;
        Polynomial qterm = monomial(var_count_, qe, qc);
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

std::pair<Polynomial, unsigned> Polynomial::perfect_power() const {
    long deg = total_degree();
    if (deg <= 0) return {*this, 1};
    const auto* lt = leading_term();
    for (long m = deg; m >= 2; --m) {
        if (deg % m != 0) continue;
        if (m % 2 == 0 && lt->second.sign() < 0) continue;
        // leading term must itself be an m-th power
        bool ok = true;
        Exponents base_exp(lt->first.size());
        for (std::size_t i = 0; i < lt->first.size(); ++i) {
            if (lt->first[i] % m != 0) { ok = false; break; }
            base_exp[i] = lt->first[i] / static_cast<unsigned>(m);
        }
        if (!ok) continue;
        mpz_class num_root, den_root, check;
        mpz_root(num_root.get_mpz_t(), lt->second.numerator().get_mpz_t(),
                 static_cast<unsigned long>(m));
        mpz_pow_ui(check.get_mpz_t(), num_root.get_mpz_t(), static_cast<unsigned long>(m));
        if (check != lt->second.numerator()) continue;
        mpz_root(den_root.get_mpz_t(), lt->second.denominator().get_mpz_t(),
                 static_cast<unsigned long>(m));
        mpz_pow_ui(check.get_mpz_t(), den_root.get_mpz_t(), static_cast<unsigned long>(m));
        if (check != lt->second.denominator()) continue;

        // grow the candidate root downward from its leading term: each next
        // term t satisfies m * t * LT(base)^(m-1) = LT(remainder)
        Rational base_lc{mpq_class(num_root, den_root)};
        Rational step_div = Rational(m) * Rational::pow(base_lc, m - 1);
        Exponents step_exp(base_exp.size());
        for (std::size_t i = 0; i < base_exp.size(); ++i)
            step_exp[i] = base_exp[i] * static_cast<unsigned>(m - 1);
        Polynomial base = monomial(var_count_, base_exp, base_lc);
        TermLess less;
        bool failed = false;
        for (int guard = 0;; ++guard) {
            Polynomial diff = *this - base.pow(static_cast<unsigned>(m));
            if (diff.is_zero()) break;
            if (guard > 4096) { failed = true; break; }
            const auto* dt = diff.leading_term();
            if (!divides_exps(step_exp, dt->first)) { failed = true; break; }
            Exponents te = sub_exps(dt->first, step_exp);
            if (!less(te, base_exp)) { failed = true; break; }
            base += monomial(var_count_, te, dt->second / step_div);
        }
        if (!failed) return {base, static_cast<unsigned>(m)};
    }
    return {*this, 1};
}

Exponents Polynomial::common_monomial() const {
    Exponents m(var_count_, 0);
    if (terms_.empty()) return m;
    m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < var_count_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Polynomial Polynomial::divide_by_monomial(const Exponents& m) const {
    Polynomial r(var_count_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(sub_exps(e, m), c);
    return r;
}

std::string Polynomial::str(char letter) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // display from the leading term down
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool all_zero = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        bool wrote = false;
        if (!mag.is_one() || all_zero) {
            os << mag.str();
            wrote = true;
        }
        for (int i = 0; i < var_count_; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << letter << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace conflap
