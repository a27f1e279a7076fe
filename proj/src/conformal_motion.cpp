#include "conflap/conformal_motion.hpp"

#include <algorithm>
#include <cctype>

namespace conflap {

namespace {

long floor_div2(long e) { return e % 2 == 0 ? e / 2 : (e - 1) / 2; }

Polynomial radial_poly(int n) { return Polynomial::sum_of_squares(n, 0, n); }

}  // namespace

void FactoredRational::multiply_scalar(const Rational& c) {
    if (c.is_zero()) throw DomainError("factored value must be nonzero");
    scalar_ *= c;
}

void FactoredRational::multiply_factor(Polynomial p, int exponent) {
    if (p.is_zero()) throw DomainError("factored value must be nonzero");
    if (exponent == 0) return;
    if (auto c = p.as_constant()) {
        multiply_scalar(Rational::pow(*c, exponent));
        return;
    }
    Rational lc = p.leading_term()->second;
    if (!lc.is_one()) {
        p = lc.inverse() * p;
        multiply_scalar(Rational::pow(lc, exponent));
    }
    auto it = std::find_if(factors_.begin(), factors_.end(),
                           [&](const auto& f) { return f.first == p; });
    if (it != factors_.end()) {
        it->second += exponent;
        if (it->second == 0) factors_.erase(it);
        return;
    }
    factors_.emplace_back(std::move(p), exponent);
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return a.first.compare(b.first) < 0; });
}

FactoredRational FactoredRational::times(const FactoredRational& o) const {
    FactoredRational r = *this;
    r.multiply_scalar(o.scalar_);
    for (const auto& [p, e] : o.factors_) r.multiply_factor(p, e);
    return r;
}

RationalFunction FactoredRational::to_rational() const {
    RationalFunction r = RationalFunction::constant(var_count_, scalar_);
    for (const auto& [p, e] : factors_) r = r * RationalFunction(p).pow(e);
    return r;
}

Polynomial FactoredRational::radical_base() const {
    if (scalar_.sign() <= 0)
        throw DomainError("half powers need a positive factored value");
    Polynomial base = Polynomial::constant(var_count_, scalar_.sqrt_split().rest);
    for (const auto& [p, e] : factors_)
        if (e % 2 != 0) base = base * p;
    return base;
}

FactoredRational FactoredRational::radical_base_factored() const {
    if (scalar_.sign() <= 0)
        throw DomainError("half powers need a positive factored value");
    FactoredRational base(var_count_, scalar_.sqrt_split().rest);
    for (const auto& [p, e] : factors_)
        if (e % 2 != 0) base.multiply_factor(p, 1);
    return base;
}

FnElem FactoredRational::half_power(long twice_w) const {
    if (twice_w % 2 == 0) {
        long w = twice_w / 2;
        RationalFunction r = RationalFunction::constant(var_count_, Rational::pow(scalar_, w));
        for (const auto& [p, e] : factors_) r = r * RationalFunction(p).pow(e * w);
        return FnElem(r);
    }
    // odd: this^(m + 1/2) = this^m * sqrt(this)
    long m = floor_div2(twice_w);
    auto split = scalar_.sqrt_split();
    RationalFunction outside =
        RationalFunction::constant(var_count_, Rational::pow(scalar_, m) * split.square_root);
    Polynomial base = Polynomial::constant(var_count_, split.rest);
    for (const auto& [p, e] : factors_) {
        long flat = e * m + floor_div2(e);
        outside = outside * RationalFunction(p).pow(flat);
        if (e % 2 != 0) base = base * p;
    }
    if (base.is_one()) return FnElem(outside);
    return FnElem(RadicalElement(base, RationalFunction::constant(var_count_, 0), outside));
}

ConformalMotion ConformalMotion::translation(int n, std::vector<Rational> v) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    if (v.size() != static_cast<std::size_t>(n))
        throw DomainError("translation vector length != n");
    ConformalMotion m(n);
    m.kind_ = Kind::translation;
    m.name_ = "translation";
    m.shift_ = std::move(v);
    for (int i = 0; i < n; ++i)
        m.map_.push_back(RationalFunction(Polynomial::variable(n, i) +
                                          Polynomial::constant(n, m.shift_[i])));
    return m;
}

ConformalMotion ConformalMotion::rotation(int n, std::vector<std::vector<Rational>> matrix) {
    if (n < 2) throw DomainError("rotation needs n >= 2");
    if (matrix.size() != static_cast<std::size_t>(n))
        throw DomainError("rotation matrix must be n x n");
    for (const auto& row : matrix)
        if (row.size() != static_cast<std::size_t>(n))
            throw DomainError("rotation matrix must be n x n");
    // exact orthogonality: R^T R = I
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational dot(0);
            for (int k = 0; k < n; ++k) dot += matrix[k][i] * matrix[k][j];
            if (dot != Rational(i == j ? 1 : 0))
                throw DomainError("rotation matrix is not exactly orthogonal");
        }
    }
    ConformalMotion m(n);
    m.kind_ = Kind::rotation;
    m.name_ = "rotation";
    m.matrix_ = std::move(matrix);
    for (int i = 0; i < n; ++i) {
        Polynomial row(n);
        for (int j = 0; j < n; ++j)
            row += m.matrix_[i][j] * Polynomial::variable(n, j);
        m.map_.push_back(RationalFunction(std::move(row)));
    }
    return m;
}

ConformalMotion ConformalMotion::rotation34(int n) {
    if (n < 2) throw DomainError("rotation needs n >= 2");
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) mat[i][i] = Rational(1);
    mat[0][0] = Rational(3, 5);
    mat[0][1] = Rational(4, 5);
    mat[1][0] = Rational(-4, 5);
    mat[1][1] = Rational(3, 5);
    return rotation(n, std::move(mat));
}

ConformalMotion ConformalMotion::dilation(int n, Rational lambda) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    if (lambda.sign() <= 0) throw DomainError("dilation factor must be positive");
    ConformalMotion m(n);
    m.kind_ = Kind::dilation;
    m.name_ = "dilation";
    m.lambda_ = lambda;
    for (int i = 0; i < n; ++i)
        m.map_.push_back(RationalFunction(lambda * Polynomial::variable(n, i)));
    m.omega_.multiply_scalar(lambda);
    return m;
}

ConformalMotion ConformalMotion::inversion(int n) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    ConformalMotion m(n);
    m.kind_ = Kind::inversion;
    m.name_ = "inversion";
    Polynomial r2 = radial_poly(n);
    for (int i = 0; i < n; ++i)
        m.map_.push_back(RationalFunction(Polynomial::variable(n, i), r2));
    m.omega_.multiply_factor(r2, -1);
    return m;
}

ConformalMotion ConformalMotion::compose(const ConformalMotion& first,
                                         const ConformalMotion& second) {
    if (first.n() != second.n()) throw ContextMismatchError("motion dimension mismatch");
    int n = first.n();
    ConformalMotion m(n);
    m.kind_ = Kind::composite;
    m.name_ = first.name_ + "," + second.name_;
    m.first_ = std::make_shared<ConformalMotion>(first);
    m.second_ = std::make_shared<ConformalMotion>(second);
    // C(y) = second(first(y)): substitute first's map into second's
    std::vector<FnElem> inner;
    for (const auto& f : first.map_) inner.emplace_back(f);
    for (const auto& g : second.map_) {
        FnElem composed = substitute(FnElem(g), inner);
        m.map_.push_back(composed.to_rational());
    }
    // Omega_{second o first} = (Omega_second o first) * Omega_first
    m.omega_ = first.pull_factored(second.omega()).times(first.omega());
    return m;
}

ConformalMotion ConformalMotion::by_name(const std::string& name, int n) {
    if (name == "translation") {
        std::vector<Rational> e1(n, Rational(0));
        e1[0] = Rational(1);
        return translation(n, std::move(e1));
    }
    if (name == "rotation") return rotation34(n);
    if (name == "dilation") return dilation(n, Rational(2));
    if (name == "inversion") return inversion(n);
    throw DomainError("unknown motion '" + name +
                      "' (expected translation|rotation|dilation|inversion)");
}

ConformalMotion ConformalMotion::parse_pipeline(const std::string& spec, int n) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.empty() || parts.front().empty()) throw DomainError("empty motion spec");
    ConformalMotion m = by_name(parts.front(), n);
    for (std::size_t i = 1; i < parts.size(); ++i)
        m = compose(m, by_name(parts[i], n));
    return m;
}

ConformalMotion ConformalMotion::inverse() const {
    switch (kind_) {
        case Kind::translation: {
            std::vector<Rational> neg;
            for (const auto& c : shift_) neg.push_back(-c);
            return translation(n_, std::move(neg));
        }
        case Kind::rotation: {
            std::vector<std::vector<Rational>> t(n_, std::vector<Rational>(n_, Rational(0)));
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) t[i][j] = matrix_[j][i];
            return rotation(n_, std::move(t));
        }
        case Kind::dilation: return dilation(n_, lambda_.inverse());
        case Kind::inversion: return inversion(n_);
        case Kind::composite: return compose(second_->inverse(), first_->inverse());
    }
    throw std::logic_error("unreachable");
}

namespace {

// P(y/|y|^2) * |y|^(2 deg P) as a polynomial, with shared |y|^2 power cache.
Polynomial homogenize_inverted(const Polynomial& p, const Polynomial& r2,
                               std::vector<Polynomial>& r2_pows) {
    long d = p.total_degree();
    Polynomial out(p.var_count());
    for (const auto& [exps, c] : p.terms()) {
        long a = 0;
        for (unsigned e : exps) a += e;
        std::size_t need = static_cast<std::size_t>(d - a);
        while (r2_pows.size() <= need) r2_pows.push_back(r2_pows.back() * r2);
        out += Polynomial::monomial(p.var_count(), exps, c) * r2_pows[need];
    }
    return out;
}

}  // namespace

FnElem ConformalMotion::pull_rational(const FnElem& f) const {
    switch (kind_) {
        case Kind::translation:
        case Kind::rotation:
        case Kind::dilation: {
            std::vector<FnElem> values;
            values.reserve(map_.size());
            for (const auto& c : map_) values.emplace_back(c);
            return substitute(f, values);
        }
        case Kind::inversion: {
            Polynomial r2 = radial_poly(n_);
            std::vector<Polynomial> r2_pows{Polynomial::constant(n_, 1)};
            RationalFunction rf = f.to_rational();
            if (rf.is_zero()) return f;
            long a = rf.num().total_degree();
            long b = rf.den().total_degree();
            Polynomial num = homogenize_inverted(rf.num(), r2, r2_pows);
            Polynomial den = homogenize_inverted(rf.den(), r2, r2_pows);
            // f o I = num |y|^(2b) / (den |y|^(2a))
            if (b >= a) {
                while (r2_pows.size() <= static_cast<std::size_t>(b - a))
                    r2_pows.push_back(r2_pows.back() * r2);
                return FnElem(RationalFunction(num * r2_pows[b - a], den));
            }
            while (r2_pows.size() <= static_cast<std::size_t>(a - b))
                r2_pows.push_back(r2_pows.back() * r2);
            return FnElem(RationalFunction(num, den * r2_pows[a - b]));
        }
        case Kind::composite:
            return first_->pull_rational(second_->pull_rational(f));
    }
    throw std::logic_error("unreachable");
}

FnElem ConformalMotion::pullback(const FnElem& f) const {
    if (f.kind() == FnKind::radical)
        throw ContextMismatchError("radical pullback needs the factored base");
    return pull_rational(f);
}

FnElem ConformalMotion::pullback_radical(const RadicalElement& x,
                                         const FactoredRational& base_factored) const {
    if (x.base() != base_factored.radical_base())
        throw ContextMismatchError("radical base does not match its factored form");
    // s^2 = u, so s o C = sqrt(u o C) expressed in the pulled-back base
    FactoredRational pulled = pull_factored(base_factored.radical_base_factored());
    FnElem s_image = pulled.half_power(1);
    FnElem a = pull_rational(FnElem(x.rational_part()));
    FnElem b = pull_rational(FnElem(x.radical_part()));
    return a + b * s_image;
}

Polynomial ConformalMotion::pull_poly_affine(const Polynomial& p) const {
    std::vector<FnElem> values;
    values.reserve(map_.size());
    for (const auto& c : map_) values.emplace_back(c);
    FnElem image = substitute(p, values);
    auto poly = image.as_polynomial();
    if (!poly) throw std::logic_error("affine pullback left the polynomial ring");
    return *poly;
}

FactoredRational ConformalMotion::pull_factored(const FactoredRational& f) const {
    switch (kind_) {
        case Kind::translation:
        case Kind::rotation:
        case Kind::dilation: {
            FactoredRational out(n_, f.scalar());
            for (const auto& [p, e] : f.factors()) out.multiply_factor(pull_poly_affine(p), e);
            return out;
        }
        case Kind::inversion: {
            // a degree-d factor P becomes P~ / |y|^(2d) with
            // P~ = sum_alpha c_alpha y^alpha |y|^(2(d - |alpha|))
            FactoredRational out(n_, f.scalar());
            Polynomial r2 = radial_poly(n_);
            for (const auto& [p, e] : f.factors()) {
                long d = p.total_degree();
                Polynomial image(n_);
                for (const auto& [exps, c] : p.terms()) {
                    long a = 0;
                    for (unsigned x_ : exps) a += x_;
                    image += c * Polynomial::monomial(n_, exps, Rational(1)) *
                             r2.pow(static_cast<unsigned>(d - a));
                }
                out.multiply_factor(std::move(image), e);
                out.multiply_factor(r2, static_cast<int>(-d) * e);
            }
            return out;
        }
        case Kind::composite:
            // F o (second o first) = (F o second) o first
            return first_->pull_factored(second_->pull_factored(f));
    }
    throw std::logic_error("unreachable");
}

bool ConformalMotion::jacobian_is_conformal() const {
    RationalFunction omega2 = omega_.to_rational().pow(2);
    for (int a = 0; a < n_; ++a) {
        for (int b = a; b < n_; ++b) {
            RationalFunction dot = RationalFunction::constant(n_, 0);
            for (int i = 0; i < n_; ++i)
                dot = dot + map_[i].derivative(a) * map_[i].derivative(b);
            RationalFunction expect =
                a == b ? omega2 : RationalFunction::constant(n_, 0);
            if (!dot.equals(expect)) return false;
        }
    }
    return true;
}

}  // namespace conflap
