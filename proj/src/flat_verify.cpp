#include "conflap/flat_verify.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

namespace conflap {

namespace {

std::string witness_of(const DiffOp& diff) {
    auto t = diff.first_term();
    if (!t) return "0";
    std::ostringstream os;
    std::string c = t->second.str();
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    os << c << " * d[";
    for (std::size_t i = 0; i < t->first.size(); ++i) {
        if (i) os << ",";
        os << t->first[i];
    }
    os << "]";
    return os.str();
}

// One exact operator-identity case, with optional numeric shadow: both sides
// applied to low-degree monomials and sampled.
void check_op_identity(Report& report, const std::string& id, const std::string& desc,
                       const DiffOp& lhs, const DiffOp& rhs, const VerifyOptions& opt) {
    try {
        DiffOp diff = lhs - rhs;
        bool ok = diff.is_zero();
        report.add_outcome(id, desc, ok, ok ? "" : witness_of(diff));
        if (ok && opt.shadow) {
            double max_err = 0.0;
            bool shadow_ok = true;
            for (const Polynomial& f : monomials_up_to(lhs.var_count(), 2)) {
                CompareOutcome out = sample_compare_outcome(
                    lhs.apply(FnElem(f)), rhs.apply(FnElem(f)), opt.shadow_cfg);
                max_err = std::max(max_err, out.max_error);
                shadow_ok = shadow_ok && out.ok;
            }
            std::ostringstream ss;
            ss << "numeric shadow, max err " << max_err;
            report.add_outcome(id + "/shadow", ss.str(), shadow_ok, "numeric disagreement");
        }
    } catch (const TermCapError& e) {
        report.add_limit(id, desc, e.what());
    }
}

void check_fn_identity(Report& report, const std::string& id, const std::string& desc,
                       const FnElem& lhs, const FnElem& rhs, const VerifyOptions& opt,
                       SampleDomain domain = SampleDomain::flat) {
    try {
        bool ok = equals(lhs, rhs);
        std::string witness;
        if (!ok) witness = "lhs = " + lhs.str() + "; rhs = " + rhs.str();
        report.add_outcome(id, desc, ok, witness);
        if (ok && opt.shadow)
            report.cases.push_back(shadow_case(id + "/shadow", lhs, rhs, opt.shadow_cfg,
                                               domain));
    } catch (const TermCapError& e) {
        report.add_limit(id, desc, e.what());
    }
}

}  // namespace

std::vector<Polynomial> monomials_up_to(int n, int max_degree) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    if (max_degree < 0) throw DomainError("max_degree must be >= 0");
    std::vector<Exponents> exps;
    Exponents cur(n, 0);
    // enumerate exponent vectors of total degree <= max_degree, low degrees first
    for (int total = 0; total <= max_degree; ++total) {
        std::vector<Exponents> level;
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == n - 1) {
                cur[var] = static_cast<unsigned>(left);
                level.push_back(cur);
                return;
            }
            for (int d = left; d >= 0; --d) {
                cur[var] = static_cast<unsigned>(d);
                rec(var + 1, left - d);
            }
        };
        rec(0, total);
        for (auto& e : level) exps.push_back(std::move(e));
    }
    std::vector<Polynomial> out;
    out.reserve(exps.size());
    for (auto& e : exps) out.push_back(Polynomial::monomial(n, std::move(e), Rational(1)));
    return out;
}

std::pair<DiffOp, DiffOp> build_rn_sides(int n, int k) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    if (k < 1) throw DomainError("order k must be >= 1");
    DiffOp lap = DiffOp::laplacian(n);
    DiffOp m2 = DiffOp::m_weight(n, 2);
    DiffOp mm2 = DiffOp::m_weight(n, -2);

    DiffOp lhs = lap;
    for (int j = 2; j <= k; ++j) {
        DiffOp factor = lap + Rational(static_cast<long>(j) * (j - 1)) * m2;
        lhs = compose(factor, compose(mm2, lhs));
    }

    DiffOp m1k = DiffOp::m_weight(n, 1 - k);
    DiffOp rhs = compose(m1k, compose(lap.pow(static_cast<unsigned>(k)), m1k));
    return {std::move(lhs), std::move(rhs)};
}

Report verify_rn(int n, int k, const VerifyOptions& opt) {
    Report report;
    report.command = "verify rn";
    report.params["n"] = std::to_string(n);
    report.params["k"] = std::to_string(k);
    report.seed = opt.shadow_cfg.seed;
    std::string id = "rn-n" + std::to_string(n) + "-k" + std::to_string(k);
    try {
        auto [lhs, rhs] = build_rn_sides(n, k);
        check_op_identity(report, id,
                          "flat factorization identity, order " + std::to_string(k), lhs,
                          rhs, opt);
    } catch (const TermCapError& e) {
        report.add_limit(id, "flat factorization identity", e.what());
    }
    return report;
}

Report verify_commutators(int n, int w_min, int w_max, int k_max,
                          const VerifyOptions& opt) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    if (w_min > w_max) throw DomainError("empty weight range");
    if (k_max < 1) throw DomainError("k_max must be >= 1");
    Report report;
    report.command = "verify comm";
    report.params["n"] = std::to_string(n);
    report.params["w-range"] = std::to_string(w_min) + ".." + std::to_string(w_max);
    report.params["k-max"] = std::to_string(k_max);
    report.seed = opt.shadow_cfg.seed;

    DiffOp lap = DiffOp::laplacian(n);
    DiffOp euler = DiffOp::euler(n);
    DiffOp q = DiffOp::radial_sq(n);
    DiffOp ident = DiffOp::identity(n);
    DiffOp m1 = DiffOp::m_weight(n, 1);

    // [L, X] = 2 L
    {
        DiffOp expected = Rational(2) * lap;
        if (opt.inject_bug) expected = expected + ident;  // deliberate corruption
        check_op_identity(report, "comm1", "[L,X] = 2L", commutator(lap, euler), expected,
                          opt);
    }

    // [X, M_w] = -w |y|^2 M_{w+1}
    for (int w = w_min; w <= w_max; ++w) {
        DiffOp mw = DiffOp::m_weight(n, w);
        DiffOp rhs = Rational(-w) * compose(q, DiffOp::m_weight(n, w + 1));
        check_op_identity(report, "comm2-w" + std::to_string(w),
                          "[X,M_w] = -w|y|^2 M_{w+1}, w = " + std::to_string(w),
                          commutator(euler, mw), rhs, opt);
    }

    // [L, M_w], both printed forms, and their agreement
    auto comm3_rhs = [&](int w) {
        DiffOp inner = Rational(2) * euler + Rational(n) * ident -
                       Rational(w - 1) * compose(m1, q);
        return Rational(-w) * compose(DiffOp::m_weight(n, w), compose(inner, m1));
    };
    auto comm3_alt_rhs = [&](int w) {
        DiffOp inner = Rational(2) * euler + Rational(n) * ident -
                       Rational(w + 1) * compose(m1, q);
        return Rational(-w) * compose(DiffOp::m_weight(n, w + 1), inner);
    };
    for (int w = w_min; w <= w_max; ++w) {
        DiffOp lhs = commutator(lap, DiffOp::m_weight(n, w));
        check_op_identity(report, "comm3-w" + std::to_string(w),
                          "[L,M_w] = -w M_w (2X+n-(w-1)M_1|y|^2) M_1, w = " +
                              std::to_string(w),
                          lhs, comm3_rhs(w), opt);
        check_op_identity(report, "comm3alt-w" + std::to_string(w),
                          "[L,M_w] = -w M_{w+1} (2X+n-(w+1)M_1|y|^2), w = " +
                              std::to_string(w),
                          lhs, comm3_alt_rhs(w), opt);
        check_op_identity(report, "comm3-forms-w" + std::to_string(w),
                          "the two printed forms agree, w = " + std::to_string(w),
                          comm3_rhs(w), comm3_alt_rhs(w), opt);
    }

    // [L^k, M_{-1}] = k (2X + n + 2(k-1)) L^(k-1)
    DiffOp mneg1 = DiffOp::m_weight(n, -1);
    for (int k = 1; k <= k_max; ++k) {
        DiffOp lhs = commutator(lap.pow(static_cast<unsigned>(k)), mneg1);
        DiffOp inner =
            Rational(2) * euler + Rational(n + 2 * (static_cast<long>(k) - 1)) * ident;
        DiffOp rhs = Rational(k) * compose(inner, lap.pow(static_cast<unsigned>(k - 1)));
        check_op_identity(report, "comm4-k" + std::to_string(k),
                          "[L^k,M_{-1}] = k(2X+n+2(k-1))L^(k-1), k = " + std::to_string(k),
                          lhs, rhs, opt);
    }

    // the k=1 case of the power identity is the w=-1 case of the alternative form
    {
        DiffOp via_k1 = Rational(1) * compose(Rational(2) * euler + Rational(n) * ident,
                                              DiffOp::identity(n));
        check_op_identity(report, "comm4-k1-is-comm3alt-wm1",
                          "k=1 power case coincides with the w=-1 alternative form",
                          via_k1, comm3_alt_rhs(-1), opt);
    }

    return report;
}

FnElem motion_pullback(const ConformalMotion& motion, const FnElem& f) {
    return motion.pullback(f);
}

namespace {

// The covariance pipeline for one test function:
//   compare L^k f with (C^{-1})*( Omega^{-n/2-k} L^k ( Omega^{n/2-k} (f o C) ) )
struct TranslawChecker {
    int n;
    int k;
    const ConformalMotion& motion;
    ConformalMotion inv;
    FnElem w_plus;
    FnElem w_minus;
    DiffOp lap;

    TranslawChecker(int n_, int k_, const ConformalMotion& motion_)
        : n(n_),
          k(k_),
          motion(motion_),
          inv(motion_.inverse()),
          w_plus(motion_.omega().half_power(n_ - 2 * static_cast<long>(k_))),
          w_minus(motion_.omega().half_power(-n_ - 2 * static_cast<long>(k_))),
          lap(DiffOp::laplacian(n_)) {}

    FnElem lap_k(FnElem g) const {
        for (int i = 0; i < k; ++i) g = lap.apply(g);
        return g;
    }

    void check(Report& report, const std::string& id, const Polynomial& f,
               const VerifyOptions& opt) const {
        FnElem lhs = lap_k(FnElem(f));
        FnElem g = motion.pullback(FnElem(f));
        g = w_plus * g;
        g = lap_k(g);
        g = w_minus * g;
        FnElem rhs = g.is_radical() ? inv.pullback_radical(g.radical(), motion.omega())
                                    : inv.pullback(g);
        check_fn_identity(report, id, "f = " + f.str(), lhs, rhs, opt);
    }
};

}  // namespace

Report verify_translaw(int n, int k, const ConformalMotion& motion, int max_degree,
                       const VerifyOptions& opt) {
    if (k < 1) throw DomainError("order k must be >= 1");
    if (motion.n() != n) throw ContextMismatchError("motion dimension != n");
    Report report;
    report.command = "verify covariance";
    report.params["n"] = std::to_string(n);
    report.params["k"] = std::to_string(k);
    report.params["max-degree"] = std::to_string(max_degree);
    report.params["motion"] = motion.name();
    report.seed = opt.shadow_cfg.seed;

    // type invariant: the Jacobian realizes the conformal factor
    report.add_outcome("jacobian", "J^T J = Omega^2 I for " + motion.name(),
                       motion.jacobian_is_conformal(), "Gram matrix mismatch");

    TranslawChecker checker(n, k, motion);
    int idx = 0;
    for (const Polynomial& f : monomials_up_to(n, max_degree)) {
        std::ostringstream id;
        id << "f-" << std::setw(3) << std::setfill('0') << idx++;
        checker.check(report, id.str(), f, opt);
    }
    return report;
}

Report verify_translaw_single(int n, int k, const ConformalMotion& motion,
                              const Polynomial& f, const VerifyOptions& opt) {
    if (k < 1) throw DomainError("order k must be >= 1");
    if (f.var_count() != n) throw ContextMismatchError("test function must have n variables");
    Report report;
    report.command = "verify covariance";
    report.params["n"] = std::to_string(n);
    report.params["k"] = std::to_string(k);
    report.params["motion"] = motion.name();
    report.seed = opt.shadow_cfg.seed;
    TranslawChecker(n, k, motion).check(report, "f-user", f, opt);
    return report;
}

std::vector<ConformalMotion> default_motions(int n, bool include_pairs) {
    std::vector<ConformalMotion> gens;
    gens.push_back(ConformalMotion::by_name("translation", n));
    if (n >= 2) gens.push_back(ConformalMotion::by_name("rotation", n));
    gens.push_back(ConformalMotion::by_name("dilation", n));
    gens.push_back(ConformalMotion::by_name("inversion", n));
    if (!include_pairs) return gens;
    std::vector<ConformalMotion> out = gens;
    for (const auto& a : gens)
        for (const auto& b : gens) out.push_back(ConformalMotion::compose(a, b));
    return out;
}

Report verify_covariance(int n, int k, int max_degree, bool include_pairs,
                         const VerifyOptions& opt) {
    Report report;
    report.command = "verify covariance";
    report.params["n"] = std::to_string(n);
    report.params["k"] = std::to_string(k);
    report.params["max-degree"] = std::to_string(max_degree);
    report.seed = opt.shadow_cfg.seed;
    for (const ConformalMotion& motion : default_motions(n, include_pairs)) {
        Report sub = verify_translaw(n, k, motion, max_degree, opt);
        report.absorb(sub, motion.name());
    }
    return report;
}

}  // namespace conflap
