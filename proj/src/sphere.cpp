#include "conflap/sphere.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>

namespace conflap {

namespace {

void check_sphere_dim(int n) {
    if (n < 1) throw DomainError("sphere dimension must be >= 1");
}

// numeric shadow with sphere sampling
void check_sphere_identity(Report& report, const std::string& id, const std::string& desc,
                           const SphereFunction& lhs, const SphereFunction& rhs,
                           const VerifyOptions& opt) {
    try {
        bool ok = lhs.equals(rhs);
        std::string witness;
        if (!ok) witness = "lhs = " + lhs.str() + "; rhs = " + rhs.str();
        report.add_outcome(id, desc, ok, witness);
        if (ok && opt.shadow)
            report.cases.push_back(shadow_case(id + "/shadow", lhs.value(), rhs.value(),
                                               opt.shadow_cfg, SampleDomain::sphere));
    } catch (const TermCapError& e) {
        report.add_limit(id, desc, e.what());
    }
}

}  // namespace

Polynomial sphere_ideal_generator(int n) {
    check_sphere_dim(n);
    return Polynomial::sum_of_squares(n + 1, 0, n + 1) - Polynomial::constant(n + 1, 1);
}

Polynomial sphere_radical_base(int n) {
    check_sphere_dim(n);
    return Polynomial::constant(n + 1, 1) + Polynomial::variable(n + 1, n);
}

Polynomial reduce_poly_mod_sphere(int n, const Polynomial& p) {
    check_sphere_dim(n);
    int vars = n + 1;
    if (p.var_count() != vars)
        throw ContextMismatchError("sphere reduction expects n+1 ambient variables");
    // substitute x_{n+1}^(2q + r) -> (1 - |x'|^2)^q x_{n+1}^r termwise
    Polynomial rest = Polynomial::constant(vars, 1) - Polynomial::sum_of_squares(vars, 0, n);
    std::vector<Polynomial> rest_pows{Polynomial::constant(vars, 1)};
    Polynomial out(vars);
    for (const auto& [e, c] : p.terms()) {
        unsigned last = e[n];
        if (last < 2) {
            out += Polynomial::monomial(vars, e, c);
            continue;
        }
        unsigned q = last / 2;
        Exponents stripped = e;
        stripped[n] = last % 2;
        while (rest_pows.size() <= q) rest_pows.push_back(rest_pows.back() * rest);
        out += Polynomial::monomial(vars, stripped, c) * rest_pows[q];
    }
    return out;
}

FnElem reduce_mod_sphere(int n, const FnElem& f) {
    switch (f.kind()) {
        case FnKind::polynomial: return FnElem(reduce_poly_mod_sphere(n, f.poly()));
        case FnKind::rational: {
            // the denominator keeps its ambient form (reducing it would break
            // the power structure that add/mul cancellation relies on); only
            // its nonvanishing mod the ideal is checked
            if (reduce_poly_mod_sphere(n, f.rational().den()).is_zero())
                throw DomainError("denominator vanishes identically on the sphere");
            Polynomial num = reduce_poly_mod_sphere(n, f.rational().num());
            return FnElem(RationalFunction(std::move(num), f.rational().den()));
        }
        case FnKind::radical: {
            const RadicalElement& r = f.radical();
            if (r.base() != sphere_radical_base(n))
                throw ContextMismatchError("sphere radical base must be 1 + x_{n+1}");
            FnElem a = reduce_mod_sphere(n, FnElem(r.rational_part()));
            FnElem b = reduce_mod_sphere(n, FnElem(r.radical_part()));
            return FnElem(RadicalElement(r.base(), a.to_rational(), b.to_rational()));
        }
    }
    throw std::logic_error("unreachable");
}

SphereFunction::SphereFunction(int n, FnElem ambient_value)
    : n_(n), value_(reduce_mod_sphere(n, ambient_value)) {
    if (ambient_value.var_count() != n + 1)
        throw ContextMismatchError("sphere function expects n+1 ambient variables");
}

bool SphereFunction::is_zero() const {
    if (value_.kind() == FnKind::radical)
        return value_.radical().rational_part().num().is_zero() &&
               value_.radical().radical_part().num().is_zero();
    // the stored representative is already reduced
    return value_.is_zero();
}

bool SphereFunction::equals(const SphereFunction& o) const {
    if (n_ != o.n_) throw ContextMismatchError("sphere dimension mismatch");
    return (*this - o).is_zero();
}

SphereFunction operator+(const SphereFunction& a, const SphereFunction& b) {
    return SphereFunction(a.n_, a.value_ + b.value_);
}

SphereFunction operator-(const SphereFunction& a, const SphereFunction& b) {
    return SphereFunction(a.n_, a.value_ - b.value_);
}

SphereFunction operator*(const SphereFunction& a, const SphereFunction& b) {
    return SphereFunction(a.n_, a.value_ * b.value_);
}

SphereFunction operator*(const Rational& c, const SphereFunction& a) {
    return SphereFunction(a.n_, FnElem::constant(a.ambient_vars(), c) * a.value_);
}

SphereFunction sphere_laplacian(const SphereFunction& u) {
    int vars = u.ambient_vars();
    const FnElem& f = u.value();
    FnElem lap = FnElem::constant(vars, 0);
    for (int i = 0; i < vars; ++i) lap = lap + derivative(derivative(f, i), i);
    auto euler = [&](const FnElem& g) {
        FnElem acc = FnElem::constant(vars, 0);
        for (int i = 0; i < vars; ++i)
            acc = acc + FnElem::variable(vars, i) * derivative(g, i);
        return acc;
    };
    FnElem ef = euler(f);
    FnElem result = lap - euler(ef) - FnElem::constant(vars, Rational(u.n() - 1)) * ef;
    return SphereFunction(u.n(), std::move(result));
}

std::vector<Rational> c_constants(int n, int k) {
    check_sphere_dim(n);
    if (k < 1) throw DomainError("order k must be >= 1");
    std::vector<Rational> out;
    Rational half_n(n, 2);
    for (int j = 1; j <= k; ++j)
        out.push_back((half_n + Rational(j - 1)) * (half_n - Rational(j)));
    return out;
}

SphereOpSpec SphereOpSpec::make(int n, int k) { return {n, k, c_constants(n, k)}; }

SphereFunction sphere_power_apply(const SphereOpSpec& spec, const SphereFunction& u) {
    if (spec.n != u.n()) throw ContextMismatchError("operator/function dimension mismatch");
    SphereFunction acc = u;
    for (const Rational& c : spec.constants) acc = sphere_laplacian(acc) - c * acc;
    return acc;
}

SphereFunction stereographic_pullback(int n, const RationalFunction& f) {
    check_sphere_dim(n);
    if (f.var_count() != n) throw ContextMismatchError("flat function must have n variables");
    int vars = n + 1;
    Polynomial den = sphere_radical_base(n);  // 1 + x_{n+1}
    std::vector<FnElem> values;
    for (int i = 0; i < n; ++i)
        values.push_back(FnElem(RationalFunction(Polynomial::variable(vars, i), den)));
    return SphereFunction(n, substitute(FnElem(f), values));
}

SphereFunction weight_mult(int n, long twice_w, const SphereFunction& u) {
    if (u.n() != n) throw ContextMismatchError("dimension mismatch");
    if (twice_w == 0) return u;
    int vars = n + 1;
    Polynomial base = sphere_radical_base(n);
    FnElem factor = FnElem::constant(vars, 1);
    if (twice_w % 2 == 0) {
        factor = pow(FnElem(base), twice_w / 2);
    } else {
        long m = twice_w % 2 == 0 ? twice_w / 2 : (twice_w - 1) / 2;  // floor(w)
        RationalFunction outside = RationalFunction(base).pow(m);
        factor = FnElem(RadicalElement(base, RationalFunction::constant(vars, 0), outside));
    }
    return SphereFunction(n, factor * u.value());
}

Rational spectrum_eigenvalue(int n, int k, int l) {
    Rational eig(-static_cast<long>(l) * (l + n - 1));
    Rational mu(1);
    for (const Rational& c : c_constants(n, k)) mu *= eig - c;
    return mu;
}

namespace {

// exact solve of (columns | rhs) by Gaussian elimination; the system must be
// consistent (it is: harmonic projections exist and are unique)
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> rows,
                                  std::vector<Rational> rhs, std::size_t unknowns) {
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_of_col(unknowns, SIZE_MAX);
    for (std::size_t col = 0; col < unknowns && pivot_row < rows.size(); ++col) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t r = pivot_row; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) { sel = r; break; }
        if (sel == SIZE_MAX) continue;
        std::swap(rows[sel], rows[pivot_row]);
        std::swap(rhs[sel], rhs[pivot_row]);
        Rational inv = rows[pivot_row][col].inverse();
        for (auto& v : rows[pivot_row]) v *= inv;
        rhs[pivot_row] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (std::size_t c2 = 0; c2 < unknowns; ++c2)
                rows[r][c2] -= factor * rows[pivot_row][c2];
            rhs[r] -= factor * rhs[pivot_row];
        }
        pivot_of_col[col] = pivot_row;
        ++pivot_row;
    }
    std::vector<Rational> out(unknowns, Rational(0));
    for (std::size_t col = 0; col < unknowns; ++col)
        if (pivot_of_col[col] != SIZE_MAX) out[col] = rhs[pivot_of_col[col]];
    return out;
}

Polynomial ambient_laplacian(const Polynomial& p) {
    Polynomial acc(p.var_count());
    for (int i = 0; i < p.var_count(); ++i) acc += p.derivative(i).derivative(i);
    return acc;
}

// harmonic component of x_axis^l: x_axis^l + sum_j c_j r^(2j) x_axis^(l-2j)
Polynomial zonal_harmonic(int vars, int axis, int l) {
    Polynomial r2 = Polynomial::sum_of_squares(vars, 0, vars);
    Polynomial x = Polynomial::variable(vars, axis);
    std::vector<Polynomial> candidates;  // r^(2j) x^(l-2j), j = 0..l/2
    for (int j = 0; 2 * j <= l; ++j)
        candidates.push_back(r2.pow(static_cast<unsigned>(j)) *
                             x.pow(static_cast<unsigned>(l - 2 * j)));
    std::size_t unknowns = candidates.size() - 1;
    if (unknowns == 0) return candidates[0];
    // require Delta(cand0 + sum_j c_j cand_j) = 0, coefficientwise
    std::vector<Polynomial> lap;
    for (const auto& cand : candidates) lap.push_back(ambient_laplacian(cand));
    // collect all monomials appearing in any laplacian
    std::vector<Exponents> keys;
    for (const auto& q : lap)
        for (const auto& [e, c] : q.terms()) keys.push_back(e);
    std::sort(keys.begin(), keys.end(), TermLess());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& key : keys) {
        std::vector<Rational> row;
        for (std::size_t j = 1; j < lap.size(); ++j) row.push_back(lap[j].coefficient(key));
        rows.push_back(std::move(row));
        rhs.push_back(-lap[0].coefficient(key));
    }
    std::vector<Rational> sol = solve_exact(std::move(rows), std::move(rhs), unknowns);
    Polynomial h = candidates[0];
    for (std::size_t j = 0; j < unknowns; ++j) h += sol[j] * candidates[j + 1];
    if (!ambient_laplacian(h).is_zero())
        throw std::logic_error("zonal harmonic construction failed Delta h = 0");
    return h;
}

}  // namespace

std::vector<Polynomial> harmonic_basis(int n, int l) {
    check_sphere_dim(n);
    if (l < 0) throw DomainError("harmonic degree must be >= 0");
    int vars = n + 1;
    std::vector<Polynomial> out;
    out.push_back(zonal_harmonic(vars, 0, l));
    if (l >= 1) out.push_back(zonal_harmonic(vars, n, l));
    return out;
}

Report verify_conformality(int n, const VerifyOptions& opt) {
    check_sphere_dim(n);
    Report report;
    report.command = "verify conformality";
    report.params["n"] = std::to_string(n);
    report.seed = opt.shadow_cfg.seed;

    // sigma: y -> (2y/(1+|y|^2), (1-|y|^2)/(1+|y|^2))
    Polynomial one = Polynomial::constant(n, 1);
    Polynomial r2 = Polynomial::sum_of_squares(n, 0, n);
    Polynomial den = one + r2;
    std::vector<RationalFunction> sigma;
    for (int i = 0; i < n; ++i)
        sigma.push_back(RationalFunction(Rational(2) * Polynomial::variable(n, i), den));
    sigma.push_back(RationalFunction(one - r2, den));

    RationalFunction conformal2 = RationalFunction(Rational(2) * one, den).pow(2);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            RationalFunction dot = RationalFunction::constant(n, 0);
            for (const auto& component : sigma)
                dot = dot + component.derivative(a) * component.derivative(b);
            RationalFunction expect = a == b ? conformal2 : RationalFunction::constant(n, 0);
            std::string id =
                "gram-" + std::to_string(a + 1) + "-" + std::to_string(b + 1);
            bool ok = dot.equals(expect);
            report.add_outcome(id, "Gram entry (" + std::to_string(a + 1) + "," +
                                       std::to_string(b + 1) + ") of D sigma^T D sigma",
                               ok, ok ? "" : dot.str());
            if (ok && opt.shadow)
                report.cases.push_back(shadow_case(id + "/shadow", FnElem(dot),
                                                   FnElem(expect), opt.shadow_cfg));
        }
    }
    // sigma*(1 + x_{n+1}) = 2/(1+|y|^2)
    RationalFunction pulled = RationalFunction(one) + sigma[n];
    RationalFunction expect = RationalFunction(Rational(2) * one, den);
    bool ok = pulled.equals(expect);
    report.add_outcome("sigma-pullback", "sigma*(1 + x_{n+1}) = 2/(1+|y|^2)", ok,
                       ok ? "" : pulled.str());
    if (ok && opt.shadow)
        report.cases.push_back(
            shadow_case("sigma-pullback/shadow", FnElem(pulled), FnElem(expect),
                        opt.shadow_cfg));
    return report;
}

Report verify_intertwining_weight(int n, long w, const RationalFunction& f,
                                  const VerifyOptions& opt) {
    check_sphere_dim(n);
    Report report;
    report.command = "verify intertwining";
    report.params["n"] = std::to_string(n);
    report.params["w"] = std::to_string(w);
    report.seed = opt.shadow_cfg.seed;

    Polynomial one = Polynomial::constant(n, 1);
    RationalFunction mw =
        RationalFunction::constant(n, Rational::pow(Rational(2), w)) *
        RationalFunction(one + Polynomial::sum_of_squares(n, 0, n)).pow(-w);
    SphereFunction lhs = stereographic_pullback(n, mw * f);
    SphereFunction rhs = weight_mult(n, 2 * w, stereographic_pullback(n, f));
    check_sphere_identity(report, "w" + std::to_string(w),
                          "Phi*(M_w f) = (1+x_{n+1})^w Phi* f, f = " + f.str(), lhs, rhs,
                          opt);
    return report;
}

Report verify_yamabe(int n, int max_degree, const VerifyOptions& opt) {
    check_sphere_dim(n);
    Report report;
    report.command = "verify yamabe";
    report.params["n"] = std::to_string(n);
    report.params["max-degree"] = std::to_string(max_degree);
    report.seed = opt.shadow_cfg.seed;

    Rational c1 = c_constants(n, 1)[0];
    DiffOp lap = DiffOp::laplacian(n);
    int idx = 0;
    for (const Polynomial& f : monomials_up_to(n, max_degree)) {
        std::ostringstream id;
        id << "f-" << std::setw(3) << std::setfill('0') << idx++;
        SphereFunction pf = stereographic_pullback(n, RationalFunction(f));
        SphereFunction lhs_in = weight_mult(n, 2 - n, pf);
        SphereFunction lhs = sphere_laplacian(lhs_in) - c1 * lhs_in;
        FnElem df = lap.apply(FnElem(f));
        SphereFunction rhs =
            weight_mult(n, -2 - n, stereographic_pullback(n, df.to_rational()));
        check_sphere_identity(report, id.str(), "f = " + f.str(), lhs, rhs, opt);
    }

    // named witnesses
    if (n == 2) {
        SphereFunction img = stereographic_pullback(2, RationalFunction::variable(2, 0));
        check_sphere_identity(report, "witness-harmonic",
                              "Delta_S (x1/(1+x3)) = 0 on the sphere",
                              sphere_laplacian(img),
                              SphereFunction(2, FnElem::constant(3, 0)), opt);
    }
    if (n == 4) {
        SphereFunction u(4, FnElem(RationalFunction(Polynomial::constant(5, 1),
                                                    sphere_radical_base(4))));
        check_sphere_identity(report, "witness-eigen",
                              "(Delta_S - 2) (1+x5)^{-1} = 0",
                              sphere_laplacian(u) - Rational(2) * u,
                              SphereFunction(4, FnElem::constant(5, 0)), opt);
    }
    return report;
}

Report verify_main(int n, int k, int max_degree, const VerifyOptions& opt) {
    check_sphere_dim(n);
    if (k < 1) throw DomainError("order k must be >= 1");
    Report report;
    report.command = "verify main";
    report.params["n"] = std::to_string(n);
    report.params["k"] = std::to_string(k);
    report.params["max-degree"] = std::to_string(max_degree);
    report.seed = opt.shadow_cfg.seed;

    SphereOpSpec spec = SphereOpSpec::make(n, k);
    DiffOp lap = DiffOp::laplacian(n);
    int idx = 0;
    for (const Polynomial& f : monomials_up_to(n, max_degree)) {
        std::ostringstream id;
        id << "f-" << std::setw(3) << std::setfill('0') << idx++;
        SphereFunction lhs = sphere_power_apply(
            spec, weight_mult(n, 2 * static_cast<long>(k) - n,
                              stereographic_pullback(n, RationalFunction(f))));
        FnElem dkf = FnElem(f);
        for (int i = 0; i < k; ++i) dkf = lap.apply(dkf);
        SphereFunction rhs =
            weight_mult(n, -2 * static_cast<long>(k) - n,
                        stereographic_pullback(n, dkf.to_rational()));
        check_sphere_identity(report, id.str(), "f = " + f.str(), lhs, rhs, opt);
    }
    return report;
}

Report spectrum_check(int n, int k, int l_max, const VerifyOptions& opt) {
    check_sphere_dim(n);
    if (k < 1) throw DomainError("order k must be >= 1");
    if (l_max < 0) throw DomainError("l_max must be >= 0");
    Report report;
    report.command = "spectrum";
    report.params["n"] = std::to_string(n);
    report.params["k"] = std::to_string(k);
    report.params["l-max"] = std::to_string(l_max);
    report.seed = opt.shadow_cfg.seed;

    SphereOpSpec spec = SphereOpSpec::make(n, k);
    for (int l = 0; l <= l_max; ++l) {
        Rational mu = spectrum_eigenvalue(n, k, l);
        int hi = 0;
        for (const Polynomial& h : harmonic_basis(n, l)) {
            SphereFunction hs(n, FnElem(h));
            SphereFunction got = sphere_power_apply(spec, hs);
            std::string id = "l" + std::to_string(l) + "-h" + std::to_string(hi++);
            check_sphere_identity(report, id,
                                  "mu_" + std::to_string(l) + " = " + mu.str() +
                                      " on h = " + h.str('x'),
                                  got, mu * hs, opt);
        }
    }
    return report;
}

}  // namespace conflap
