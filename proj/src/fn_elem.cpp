#include "conflap/fn_elem.hpp"

#include <ostream>

namespace conflap {

namespace {

void check_same_vars(const FnElem& f, const FnElem& g) {
    if (f.var_count() != g.var_count())
        throw ContextMismatchError("mismatched varCount: " + std::to_string(f.var_count()) +
                                   " vs " + std::to_string(g.var_count()));
}

// Widest kind of the pair decides the arithmetic domain.
template <typename PolyOp, typename RatOp, typename RadOp>
FnElem promote_apply(const FnElem& f, const FnElem& g, PolyOp pop, RatOp qop, RadOp rop) {
    check_same_vars(f, g);
    if (f.kind() == FnKind::radical || g.kind() == FnKind::radical) {
        const Polynomial* base = f.radical_base();
        if (!base) base = g.radical_base();
        RadicalElement x = f.to_radical(*base);
        RadicalElement y = g.to_radical(*base);
        return rop(x, y);
    }
    if (f.kind() == FnKind::rational || g.kind() == FnKind::rational)
        return qop(f.to_rational(), g.to_rational());
    return pop(f.poly(), g.poly());
}

}  // namespace

int FnElem::var_count() const {
    return std::visit([](const auto& x) { return x.var_count(); }, v_);
}

bool FnElem::is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

RationalFunction FnElem::to_rational() const {
    switch (kind()) {
        case FnKind::polynomial: return RationalFunction(poly());
        case FnKind::rational: return rational();
        case FnKind::radical:
            if (radical().radical_part().is_zero()) return radical().rational_part();
            throw ContextMismatchError("radical element with nonzero s-part is not rational");
    }
    throw std::logic_error("unreachable");
}

RadicalElement FnElem::to_radical(const Polynomial& base) const {
    switch (kind()) {
        case FnKind::polynomial:
            return RadicalElement::from_rational(base, RationalFunction(poly()));
        case FnKind::rational: return RadicalElement::from_rational(base, rational());
        case FnKind::radical: {
            if (radical().base() != base)
                throw ContextMismatchError("mismatched radical base");
            return radical();
        }
    }
    throw std::logic_error("unreachable");
}

std::optional<Polynomial> FnElem::as_polynomial() const {
    switch (kind()) {
        case FnKind::polynomial: return poly();
        case FnKind::rational: return rational().as_polynomial();
        case FnKind::radical:
            if (!radical().radical_part().is_zero()) return std::nullopt;
            return radical().rational_part().as_polynomial();
    }
    return std::nullopt;
}

std::optional<Rational> FnElem::as_constant() const {
    auto p = as_polynomial();
    if (!p) return std::nullopt;
    return p->as_constant();
}

const Polynomial* FnElem::radical_base() const {
    if (kind() != FnKind::radical) return nullptr;
    return &radical().base();
}

std::string FnElem::str(char letter) const {
    return std::visit([&](const auto& x) { return x.str(letter); }, v_);
}

FnElem operator+(const FnElem& f, const FnElem& g) {
    return promote_apply(
        f, g, [](const auto& a, const auto& b) { return FnElem(a + b); },
        [](const auto& a, const auto& b) { return FnElem(a + b); },
        [](const auto& a, const auto& b) { return FnElem(a + b); });
}

FnElem operator-(const FnElem& f, const FnElem& g) {
    return promote_apply(
        f, g, [](const auto& a, const auto& b) { return FnElem(a - b); },
        [](const auto& a, const auto& b) { return FnElem(a - b); },
        [](const auto& a, const auto& b) { return FnElem(a - b); });
}

FnElem operator*(const FnElem& f, const FnElem& g) {
    return promote_apply(
        f, g, [](const auto& a, const auto& b) { return FnElem(a * b); },
        [](const auto& a, const auto& b) { return FnElem(a * b); },
        [](const auto& a, const auto& b) { return FnElem(a * b); });
}

FnElem operator/(const FnElem& f, const FnElem& g) {
    if (g.is_zero()) throw DivisionByZeroError();
    return promote_apply(
        f, g,
        [](const Polynomial& a, const Polynomial& b) {
            return FnElem(RationalFunction(a) / RationalFunction(b));
        },
        [](const auto& a, const auto& b) { return FnElem(a / b); },
        [](const auto& a, const auto& b) { return FnElem(a / b); });
}

FnElem operator-(const FnElem& f) {
    switch (f.kind()) {
        case FnKind::polynomial: return FnElem(-f.poly());
        case FnKind::rational: return FnElem(-f.rational());
        case FnKind::radical: return FnElem(-f.radical());
    }
    throw std::logic_error("unreachable");
}

FnElem pow(const FnElem& f, long e) {
    switch (f.kind()) {
        case FnKind::polynomial:
            if (e >= 0) return FnElem(f.poly().pow(static_cast<unsigned>(e)));
            return FnElem(RationalFunction(f.poly()).pow(e));
        case FnKind::rational: return FnElem(f.rational().pow(e));
        case FnKind::radical: return FnElem(f.radical().pow(e));
    }
    throw std::logic_error("unreachable");
}

FnElem derivative(const FnElem& f, int var) {
    switch (f.kind()) {
        case FnKind::polynomial: return FnElem(f.poly().derivative(var));
        case FnKind::rational: return FnElem(f.rational().derivative(var));
        case FnKind::radical: return FnElem(f.radical().derivative(var));
    }
    throw std::logic_error("unreachable");
}

bool equals(const FnElem& f, const FnElem& g) {
    check_same_vars(f, g);
    if (f.kind() == FnKind::radical || g.kind() == FnKind::radical) {
        const Polynomial* base = f.radical_base();
        if (!base) base = g.radical_base();
        return f.to_radical(*base).equals(g.to_radical(*base));
    }
    if (f.kind() == FnKind::rational || g.kind() == FnKind::rational)
        return f.to_rational().equals(g.to_rational());
    return f.poly() == g.poly();
}

Rational evaluate(const FnElem& f, const std::vector<Rational>& point,
                  const std::optional<Rational>& radical_value) {
    switch (f.kind()) {
        case FnKind::polynomial: return f.poly().evaluate(point);
        case FnKind::rational: return f.rational().evaluate(point);
        case FnKind::radical:
            if (!radical_value)
                throw DomainError("radical element evaluation needs a radicalValue");
            return f.radical().evaluate(point, *radical_value);
    }
    throw std::logic_error("unreachable");
}

double evaluate_double(const FnElem& f, const std::vector<double>& point) {
    switch (f.kind()) {
        case FnKind::polynomial: return f.poly().evaluate_double(point);
        case FnKind::rational: return f.rational().evaluate_double(point);
        case FnKind::radical: return f.radical().evaluate_double(point);
    }
    throw std::logic_error("unreachable");
}

FnElem substitute(const Polynomial& p, const std::vector<FnElem>& values) {
    if (values.size() != static_cast<std::size_t>(p.var_count()))
        throw ContextMismatchError("substitution needs one value per variable");
    if (values.empty()) throw DomainError("empty substitution");
    int out_vars = values.front().var_count();
    FnElem acc = FnElem::constant(out_vars, 0);
    // per-variable power cache; exponents are small in every caller
    std::vector<std::vector<FnElem>> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        powers[i].push_back(FnElem::constant(out_vars, 1));
    auto power = [&](std::size_t i, unsigned e) -> const FnElem& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * values[i]);
        return powers[i][e];
    };
    for (const auto& [e, c] : p.terms()) {
        FnElem term = FnElem::constant(out_vars, c);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

FnElem substitute(const FnElem& f, const std::vector<FnElem>& values) {
    switch (f.kind()) {
        case FnKind::polynomial: return substitute(f.poly(), values);
        case FnKind::rational:
            return substitute(f.rational().num(), values) /
                   substitute(f.rational().den(), values);
        case FnKind::radical:
            throw ContextMismatchError(
                "substitute on a radical element needs an explicit s image");
    }
    throw std::logic_error("unreachable");
}

FnElem substitute_radical(const RadicalElement& x, const std::vector<FnElem>& values,
                          const FnElem& s_image) {
    FnElem a = substitute(FnElem(x.rational_part()), values);
    FnElem b = substitute(FnElem(x.radical_part()), values);
    return a + b * s_image;
}

std::ostream& operator<<(std::ostream& os, const FnElem& f) { return os << f.str(); }

}  // namespace conflap
