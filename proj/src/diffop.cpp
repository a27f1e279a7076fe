#include "conflap/diffop.hpp"

#include <atomic>
#include <ostream>
#include <sstream>

namespace conflap {

namespace {

std::atomic<std::size_t> g_term_cap{200000};

void check_same_vars(const DiffOp& p, const DiffOp& q) {
    if (p.var_count() != q.var_count())
        throw ContextMismatchError("mismatched operator varCount");
}

std::size_t fn_monomials(const FnElem& f) {
    switch (f.kind()) {
        case FnKind::polynomial: return f.poly().term_count();
        case FnKind::rational:
            return f.rational().num().term_count() + f.rational().den().term_count();
        case FnKind::radical: {
            const auto& r = f.radical();
            return r.rational_part().num().term_count() +
                   r.rational_part().den().term_count() +
                   r.radical_part().num().term_count() +
                   r.radical_part().den().term_count();
        }
    }
    return 0;
}

Rational binomial(unsigned n, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i)
        r = r * Rational(static_cast<long>(n - i)) / Rational(static_cast<long>(i + 1));
    return r;
}

Rational multi_binomial(const MultiIndex& a, const MultiIndex& g) {
    Rational r(1);
    for (std::size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], g[i]);
    return r;
}

// Memoized mixed partials of a single coefficient.
class DerivativeTable {
public:
    explicit DerivativeTable(const FnElem& f) {
        memo_.emplace(MultiIndex(static_cast<std::size_t>(f.var_count()), 0), f);
    }

    const FnElem& get(const MultiIndex& gamma) {
        MultiIndex key = gamma;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        // recurse along the first nonzero slot
        std::size_t slot = 0;
        while (gamma[slot] == 0) ++slot;
        MultiIndex prev = gamma;
        prev[slot] -= 1;
        const FnElem& below = get(prev);
        auto [jt, _] = memo_.emplace(std::move(key),
                                     derivative(below, static_cast<int>(slot)));
        return jt->second;
    }

private:
    // keyed by the gamma stripped to its own length; empty key = the function
    std::map<MultiIndex, FnElem, TermLess> memo_;
};

// iterate all gamma <= alpha componentwise
bool next_sub_index(MultiIndex& g, const MultiIndex& alpha) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < alpha[i]) {
            ++g[i];
            return true;
        }
        g[i] = 0;
    }
    return false;
}

}  // namespace

std::size_t term_cap() { return g_term_cap.load(); }
void set_term_cap(std::size_t cap) { g_term_cap.store(cap == 0 ? 1 : cap); }

DiffOp DiffOp::identity(int var_count) {
    return multiplication(FnElem::constant(var_count, 1));
}

DiffOp DiffOp::partial(int var_count, int var, unsigned order) {
    if (var < 0 || var >= var_count) throw DomainError("partial variable out of range");
    MultiIndex idx(var_count, 0);
    idx[var] = order;
    return term(FnElem::constant(var_count, 1), idx);
}

DiffOp DiffOp::multiplication(FnElem f) {
    MultiIndex idx(static_cast<std::size_t>(f.var_count()), 0);
    return term(std::move(f), std::move(idx));
}

DiffOp DiffOp::term(FnElem coeff, MultiIndex idx) {
    if (idx.size() != static_cast<std::size_t>(coeff.var_count()))
        throw ContextMismatchError("multi-index length != varCount");
    DiffOp p(coeff.var_count());
    p.add_term(idx, coeff);
    return p;
}

DiffOp DiffOp::laplacian(int n) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    DiffOp p(n);
    for (int i = 0; i < n; ++i) {
        MultiIndex idx(n, 0);
        idx[i] = 2;
        p.add_term(idx, FnElem::constant(n, 1));
    }
    return p;
}

DiffOp DiffOp::euler(int n) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    DiffOp p(n);
    for (int i = 0; i < n; ++i) {
        MultiIndex idx(n, 0);
        idx[i] = 1;
        p.add_term(idx, FnElem::variable(n, i));
    }
    return p;
}

DiffOp DiffOp::m_weight(int n, long w) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    Polynomial u = Polynomial::constant(n, 1) + Polynomial::sum_of_squares(n, 0, n);
    RationalFunction f =
        RationalFunction::constant(n, Rational::pow(Rational(2), w)) *
        RationalFunction(u).pow(-w);
    return multiplication(FnElem(std::move(f)));
}

DiffOp DiffOp::radial_sq(int n) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    return multiplication(FnElem(Polynomial::sum_of_squares(n, 0, n)));
}

void DiffOp::add_term(const MultiIndex& idx, const FnElem& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(idx, coeff);
    if (!inserted) {
        FnElem sum = it->second + coeff;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    }
}

bool DiffOp::is_zero() const {
    for (const auto& [idx, c] : terms_)
        if (!c.is_zero()) return false;
    return true;
}

long DiffOp::order() const {
    long best = -1;
    for (const auto& [idx, c] : terms_) {
        long o = 0;
        for (unsigned e : idx) o += e;
        best = std::max(best, o);
    }
    return best;
}

std::size_t DiffOp::monomial_count() const {
    std::size_t total = 0;
    for (const auto& [idx, c] : terms_) total += fn_monomials(c);
    return total;
}

DiffOp DiffOp::operator-() const {
    DiffOp r(var_count_);
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
    return r;
}

DiffOp operator+(const DiffOp& p, const DiffOp& q) {
    check_same_vars(p, q);
    DiffOp r = p;
    for (const auto& [idx, c] : q.terms_) r.add_term(idx, c);
    return r;
}

DiffOp operator-(const DiffOp& p, const DiffOp& q) { return p + (-q); }

DiffOp operator*(const Rational& c, const DiffOp& p) {
    if (c.is_zero()) return DiffOp::zero(p.var_count());
    DiffOp r(p.var_count());
    FnElem cf = FnElem::constant(p.var_count(), c);
    for (const auto& [idx, coeff] : p.terms_) r.terms_.emplace(idx, cf * coeff);
    return r;
}

FnElem DiffOp::apply(const FnElem& f) const {
    if (f.var_count() != var_count_)
        throw ContextMismatchError("operator/function varCount mismatch");
    DerivativeTable table(f);
    FnElem acc = FnElem::constant(var_count_, 0);
    for (const auto& [idx, c] : terms_) acc = acc + c * table.get(idx);
    return acc;
}

DiffOp DiffOp::pow(unsigned k) const {
    DiffOp result = identity(var_count_);
    for (unsigned i = 0; i < k; ++i) result = compose(*this, result);
    return result;
}

std::optional<std::pair<MultiIndex, FnElem>> DiffOp::first_term() const {
    if (terms_.empty()) return std::nullopt;
    return std::make_pair(terms_.begin()->first, terms_.begin()->second);
}

std::string DiffOp::str(char letter) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        std::string c = it->second.str(letter);
        if (c.find(' ') != std::string::npos) c = "(" + c + ")";
        os << c << " * d[";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (i) os << ",";
            os << it->first[i];
        }
        os << "]";
    }
    return os.str();
}

DiffOp compose(const DiffOp& p, const DiffOp& q) {
    check_same_vars(p, q);
    const std::size_t cap = term_cap();
    DiffOp r(p.var_count());
    for (const auto& [beta, b] : q.terms()) {
        DerivativeTable table(b);
        for (const auto& [alpha, a] : p.terms()) {
            // d^alpha (b d^beta) = sum_{gamma <= alpha} C(alpha,gamma)
            //                      (d^gamma b) d^(alpha-gamma+beta)
            MultiIndex gamma(alpha.size(), 0);
            do {
                const FnElem& db = table.get(gamma);
                if (db.is_zero()) continue;
                MultiIndex out(alpha.size());
                for (std::size_t i = 0; i < out.size(); ++i)
                    out[i] = alpha[i] - gamma[i] + beta[i];
                Rational binom = multi_binomial(alpha, gamma);
                FnElem contrib = a * db;
                if (!binom.is_one())
                    contrib = FnElem::constant(p.var_count(), binom) * contrib;
                r.add_term(out, contrib);
            } while (next_sub_index(gamma, alpha));
        }
        std::size_t total = r.monomial_count();
        if (total > cap) throw TermCapError(total, cap);
    }
    return r;
}

DiffOp commutator(const DiffOp& p, const DiffOp& q) {
    return compose(p, q) - compose(q, p);
}

DiffOp linear_combine(const std::vector<Rational>& coeffs, const std::vector<DiffOp>& ops) {
    if (coeffs.size() != ops.size())
        throw ContextMismatchError("linear_combine needs equal list lengths");
    if (ops.empty()) throw DomainError("linear_combine of nothing");
    DiffOp r(ops.front().var_count());
    for (std::size_t i = 0; i < ops.size(); ++i) r = r + coeffs[i] * ops[i];
    return r;
}

bool equal(const DiffOp& p, const DiffOp& q) {
    check_same_vars(p, q);
    FnElem zero = FnElem::constant(p.var_count(), 0);
    auto it = p.terms().begin();
    auto jt = q.terms().begin();
    TermLess less;
    while (it != p.terms().end() || jt != q.terms().end()) {
        if (jt == q.terms().end() || (it != p.terms().end() && less(it->first, jt->first))) {
            if (!it->second.is_zero()) return false;
            ++it;
        } else if (it == p.terms().end() || less(jt->first, it->first)) {
            if (!jt->second.is_zero()) return false;
            ++jt;
        } else {
            if (!equals(it->second, jt->second)) return false;
            ++it;
            ++jt;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const DiffOp& p) { return os << p.str(); }

}  // namespace conflap
