#include "conflap/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace conflap {

namespace {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long pick(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Polynomial poly(int vars, int max_deg, int max_terms = 4) {
        Polynomial p(vars);
        long terms = pick(1, max_terms);
        for (long t = 0; t < terms; ++t) {
            Exponents e(vars, 0);
            int budget = max_deg;
            for (int v = 0; v < vars; ++v) {
                int d = static_cast<int>(pick(0, budget));
                e[v] = static_cast<unsigned>(d);
                budget -= d;
            }
            long c = pick(-6, 6);
            p += Polynomial::monomial(vars, e, Rational(c == 0 ? 1 : c));
        }
        return p;
    }

    // rational function whose denominator cannot vanish mod the sphere ideal:
    // a positive constant plus nonnegative squares
    RationalFunction safe_rational(int vars, int max_deg) {
        Polynomial den = Polynomial::constant(vars, pick(1, 3));
        for (int v = 0; v < vars; ++v) {
            long a = pick(0, 2);
            if (a > 0) {
                Exponents e(vars, 0);
                e[v] = 2;
                den += Polynomial::monomial(vars, e, Rational(a));
            }
        }
        return RationalFunction(poly(vars, max_deg), den);
    }

    DiffOp op(int vars, int max_order, int coeff_deg) {
        DiffOp p(vars);
        long terms = pick(1, 3);
        for (long t = 0; t < terms; ++t) {
            MultiIndex idx(vars, 0);
            int budget = max_order;
            for (int v = 0; v < vars; ++v) {
                int d = static_cast<int>(pick(0, budget));
                idx[v] = static_cast<unsigned>(d);
                budget -= d;
            }
            p.add_term(idx, FnElem(poly(vars, coeff_deg, 3)));
        }
        if (p.is_zero()) p.add_term(MultiIndex(vars, 0), FnElem::constant(vars, 1));
        return p;
    }
};

using SuiteBody = std::function<bool(Gen&, std::string*)>;

void run_suite(Report& report, const std::string& id, const std::string& what,
               std::uint64_t seed, int instances, const SuiteBody& body) {
    Gen gen(seed);
    for (int i = 0; i < instances; ++i) {
        std::string witness;
        bool ok = false;
        try {
            ok = body(gen, &witness);
        } catch (const Error& e) {
            witness = e.what();
        }
        if (!ok) {
            report.add_fail(id, what + " (failed at instance " + std::to_string(i) + ")",
                            witness);
            return;
        }
    }
    report.add_pass(id, what + " (" + std::to_string(instances) + " instances)");
}

}  // namespace

Report run_property_suites(std::uint64_t seed, int instances) {
    Report report;
    report.command = "properties";
    report.seed = seed;
    report.params["instances"] = std::to_string(instances);

    run_suite(report, "leibniz", "d(fg) = (df)g + f(dg)", seed ^ 0x1, instances,
              [](Gen& g, std::string* w) {
                  int vars = static_cast<int>(g.pick(1, 3));
                  int var = static_cast<int>(g.pick(0, vars - 1));
                  FnElem f{g.safe_rational(vars, 3)};
                  FnElem h{g.poly(vars, 3)};
                  bool ok = equals(derivative(f * h, var),
                                   derivative(f, var) * h + f * derivative(h, var));
                  if (!ok) *w = "f = " + f.str() + ", g = " + h.str();
                  return ok;
              });

    run_suite(report, "partials-commute", "d_i d_j f = d_j d_i f", seed ^ 0x2, instances,
              [](Gen& g, std::string* w) {
                  int vars = static_cast<int>(g.pick(2, 3));
                  int a = static_cast<int>(g.pick(0, vars - 1));
                  int b = static_cast<int>(g.pick(0, vars - 1));
                  FnElem f{g.safe_rational(vars, 4)};
                  bool ok = equals(derivative(derivative(f, a), b),
                                   derivative(derivative(f, b), a));
                  if (!ok) *w = "f = " + f.str();
                  return ok;
              });

    run_suite(report, "compose-assoc", "(PQ)R = P(QR) as operators", seed ^ 0x3, instances,
              [](Gen& g, std::string* w) {
                  int vars = static_cast<int>(g.pick(1, 3));
                  DiffOp p = g.op(vars, 2, 2), q = g.op(vars, 2, 2), r = g.op(vars, 2, 2);
                  bool ok = equal(compose(compose(p, q), r), compose(p, compose(q, r)));
                  if (!ok) *w = "P = " + p.str();
                  return ok;
              });

    run_suite(report, "apply-hom", "(PQ)f = P(Qf)", seed ^ 0x4, instances,
              [](Gen& g, std::string* w) {
                  int vars = static_cast<int>(g.pick(1, 3));
                  DiffOp p = g.op(vars, 2, 2), q = g.op(vars, 2, 2);
                  FnElem f{g.poly(vars, 3)};
                  bool ok = equals(compose(p, q).apply(f), p.apply(q.apply(f)));
                  if (!ok) *w = "f = " + f.str();
                  return ok;
              });

    run_suite(report, "commutator-laws",
              "[P,Q] = -[Q,P], bilinearity, and the Jacobi identity", seed ^ 0x5,
              instances, [](Gen& g, std::string* w) {
                  int vars = static_cast<int>(g.pick(1, 2));
                  DiffOp p = g.op(vars, 2, 2), q = g.op(vars, 2, 2), r = g.op(vars, 1, 1);
                  if (!equal(commutator(p, q), -commutator(q, p))) {
                      *w = "antisymmetry";
                      return false;
                  }
                  Rational a(g.pick(-3, 3)), b(g.pick(-3, 3));
                  DiffOp lin = commutator(a * p + b * q, r);
                  if (!equal(lin, a * commutator(p, r) + b * commutator(q, r))) {
                      *w = "bilinearity";
                      return false;
                  }
                  DiffOp jacobi = commutator(p, commutator(q, r)) +
                                  commutator(q, commutator(r, p)) +
                                  commutator(r, commutator(p, q));
                  if (!jacobi.is_zero()) {
                      *w = "jacobi: " + jacobi.str();
                      return false;
                  }
                  return true;
              });

    run_suite(report, "reduce-idempotent",
              "sphere reduction is idempotent and multiplicative", seed ^ 0x6, instances,
              [](Gen& g, std::string* w) {
                  int n = static_cast<int>(g.pick(1, 3));
                  Polynomial p = g.poly(n + 1, 4);
                  Polynomial q = g.poly(n + 1, 3);
                  Polynomial rp = reduce_poly_mod_sphere(n, p);
                  if (reduce_poly_mod_sphere(n, rp) != rp) {
                      *w = "idempotence: " + p.str('x');
                      return false;
                  }
                  Polynomial lhs = reduce_poly_mod_sphere(n, p * q);
                  Polynomial rhs = reduce_poly_mod_sphere(
                      n, reduce_poly_mod_sphere(n, p) * reduce_poly_mod_sphere(n, q));
                  if (lhs != rhs) {
                      *w = "multiplicativity: " + p.str('x');
                      return false;
                  }
                  Polynomial sum = reduce_poly_mod_sphere(n, p + q);
                  if (sum != rp + reduce_poly_mod_sphere(n, q)) {
                      *w = "additivity: " + p.str('x');
                      return false;
                  }
                  return true;
              });

    run_suite(report, "extension-independence",
              "Delta_S ignores how the function extends off the sphere", seed ^ 0x7,
              instances, [](Gen& g, std::string* w) {
                  int n = static_cast<int>(g.pick(1, 3));
                  FnElem f = g.pick(0, 1) ? FnElem(g.safe_rational(n + 1, 3))
                                          : FnElem(g.poly(n + 1, 3));
                  Polynomial extension = g.poly(n + 1, 2);
                  SphereFunction base(n, f);
                  SphereFunction padded(
                      n, f + FnElem(sphere_ideal_generator(n) * extension));
                  bool ok = sphere_laplacian(base).equals(sphere_laplacian(padded));
                  if (!ok) *w = "F = " + f.str('x') + ", G = " + extension.str('x');
                  return ok;
              });

    return report;
}

Report run_all(const AllOptions& opt) {
    Report report;
    report.command = "all";
    report.params["n-max"] = std::to_string(opt.n_max);
    report.params["k-max"] = std::to_string(opt.k_max);
    report.params["shadow"] = opt.shadow ? "on" : "off";
    report.seed = opt.seed;

    auto wanted = [&](const std::string& section) {
        return opt.only.empty() || opt.only.count(section) > 0;
    };
    VerifyOptions vopt;
    vopt.shadow = opt.shadow;
    vopt.shadow_cfg = opt.shadow_cfg;
    vopt.shadow_cfg.seed = opt.seed;

    if (wanted("rn")) {
        for (int n = 1; n <= opt.n_max; ++n)
            for (int k = 1; k <= opt.k_max; ++k)
                report.absorb(verify_rn(n, k, vopt), "rn");
    }
    if (wanted("comm")) {
        for (int n = 1; n <= opt.n_max; ++n)
            report.absorb(verify_commutators(n, -3, 3, 5, vopt), "comm/n" + std::to_string(n));
    }
    if (wanted("covariance")) {
        for (int n = 2; n <= std::min(4, opt.n_max); ++n)
            for (int k = 1; k <= std::min(2, opt.k_max); ++k)
                report.absorb(verify_covariance(n, k, 2 * k + 2, true, vopt),
                              "cov/n" + std::to_string(n) + "k" + std::to_string(k));
    }
    if (wanted("conformality")) {
        for (int n = 1; n <= opt.n_max; ++n)
            report.absorb(verify_conformality(n, vopt), "conf/n" + std::to_string(n));
    }
    if (wanted("yamabe")) {
        for (int n = 2; n <= std::min(4, opt.n_max); ++n)
            report.absorb(verify_yamabe(n, 3, vopt), "yam/n" + std::to_string(n));
    }
    if (wanted("main")) {
        const std::pair<int, int> grid[] = {{2, 1}, {2, 2}, {2, 3}, {4, 1},
                                            {4, 2}, {3, 1}, {3, 2}};
        for (auto [n, k] : grid) {
            if (n > opt.n_max || k > opt.k_max) continue;
            report.absorb(verify_main(n, k, 2 * k + 1, vopt),
                          "main/n" + std::to_string(n) + "k" + std::to_string(k));
        }
    }
    if (wanted("spectrum")) {
        for (int n = 2; n <= std::min(4, opt.n_max); ++n)
            for (int k = 1; k <= std::min(2, opt.k_max); ++k)
                report.absorb(spectrum_check(n, k, 4, vopt),
                              "spec/n" + std::to_string(n) + "k" + std::to_string(k));
    }
    if (wanted("properties")) {
        report.absorb(run_property_suites(opt.seed, opt.property_instances), "prop");
        Report fd = fd_suite(vopt.shadow_cfg);
        report.absorb(fd, "prop/fd");
    }
    return report;
}

}  // namespace conflap
