#include "conflap/numcheck.hpp"

#include <cmath>
#include <sstream>

namespace conflap {

namespace detail {

bool guarded_eval(const FnElem& f, const std::vector<double>& point, double margin,
                  double* out) {
    switch (f.kind()) {
        case FnKind::polynomial:
            *out = f.poly().evaluate_double(point);
            return true;
        case FnKind::rational: {
            double den = f.rational().den().evaluate_double(point);
            if (std::abs(den) < margin) return false;
            *out = f.rational().num().evaluate_double(point) / den;
            return true;
        }
        case FnKind::radical: {
            const RadicalElement& r = f.radical();
            double u = r.base().evaluate_double(point);
            if (u < margin) return false;  // stay clear of the branch point
            double da = r.rational_part().den().evaluate_double(point);
            double db = r.radical_part().den().evaluate_double(point);
            if (std::abs(da) < margin || std::abs(db) < margin) return false;
            *out = r.rational_part().num().evaluate_double(point) / da +
                   r.radical_part().num().evaluate_double(point) / db * std::sqrt(u);
            return true;
        }
    }
    return false;
}

double error_metric(double a, double b) {
    double mag = std::max(std::abs(a), std::abs(b));
    double diff = std::abs(a - b);
    if (mag < 1e-10) return diff;  // both sides vanish: absolute fallback
    return diff / mag;
}

}  // namespace detail

namespace {

// One accepted sample point for the pair (lhs, rhs), or false when the redraw
// budget runs out.
bool draw_point(SampleRng& rng, const SampleConfig& cfg, SampleDomain domain, int vars,
                const FnElem& lhs, const FnElem& rhs, std::vector<double>* point,
                double* lval, double* rval) {
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        std::vector<double> p(vars);
        for (int i = 0; i < vars; ++i) p[i] = rng.in(cfg.box_lo, cfg.box_hi);
        if (domain == SampleDomain::sphere) {
            double norm = 0;
            for (double x : p) norm += x * x;
            norm = std::sqrt(norm);
            if (norm < 0.1) continue;
            for (double& x : p) x /= norm;
            // stay away from the south pole where 1 + x_last vanishes
            if (1.0 + p.back() < cfg.pole_margin) continue;
        }
        double l, r;
        if (!detail::guarded_eval(lhs, p, cfg.pole_margin, &l)) continue;
        if (!detail::guarded_eval(rhs, p, cfg.pole_margin, &r)) continue;
        *point = std::move(p);
        *lval = l;
        *rval = r;
        return true;
    }
    return false;
}

}  // namespace

CompareOutcome sample_compare_outcome(const FnElem& lhs, const FnElem& rhs,
                                      const SampleConfig& cfg, SampleDomain domain) {
    if (lhs.var_count() != rhs.var_count())
        throw ContextMismatchError("sample_compare sides disagree on varCount");
    CompareOutcome out;
    SampleRng rng(cfg.seed);
    int vars = lhs.var_count();
    for (int s = 0; s < cfg.sample_count; ++s) {
        std::vector<double> point;
        double l = 0, r = 0;
        if (!draw_point(rng, cfg, domain, vars, lhs, rhs, &point, &l, &r)) {
            out.ok = false;
            out.note = "no pole-free sample after " + std::to_string(cfg.max_retries) +
                       " retries";
            return out;
        }
        out.max_error = std::max(out.max_error, detail::error_metric(l, r));
        ++out.samples;
    }
    out.ok = out.max_error <= cfg.tolerance;
    std::ostringstream ss;
    ss << out.samples << " samples, max err " << out.max_error;
    out.note = ss.str();
    return out;
}

Report sample_compare(const FnElem& lhs, const FnElem& rhs, const SampleConfig& cfg,
                      SampleDomain domain) {
    Report report;
    report.command = "numcheck sample_compare";
    report.seed = cfg.seed;
    report.params["samples"] = std::to_string(cfg.sample_count);
    std::ostringstream tol;
    tol << cfg.tolerance;
    report.params["tol"] = tol.str();
    report.cases.push_back(shadow_case("compare", lhs, rhs, cfg, domain));
    return report;
}

ReportCase shadow_case(std::string id, const FnElem& lhs, const FnElem& rhs,
                       const SampleConfig& cfg, SampleDomain domain) {
    CompareOutcome out = sample_compare_outcome(lhs, rhs, cfg, domain);
    ReportCase c;
    c.id = std::move(id);
    c.description = out.note;
    c.status = out.ok ? CaseStatus::pass : CaseStatus::fail;
    if (!out.ok) c.witness = "lhs: " + lhs.str() + " vs rhs: " + rhs.str();
    return c;
}

Report fd_crosscheck(const FnElem& f, int var, const std::vector<double>& point, double h) {
    if (var < 0 || var >= f.var_count()) throw DomainError("fd variable out of range");
    if (point.size() != static_cast<std::size_t>(f.var_count()))
        throw ContextMismatchError("fd point length != varCount");

    const double margin = 1e-9;  // only reject genuine stencil poles
    std::vector<double> hi = point, lo = point;
    hi[var] += h;
    lo[var] -= h;
    double f_hi, f_lo, exact;
    if (!detail::guarded_eval(f, hi, margin, &f_hi) ||
        !detail::guarded_eval(f, lo, margin, &f_lo) ||
        !detail::guarded_eval(derivative(f, var), point, margin, &exact))
        throw PoleError("pole within the finite-difference stencil");
    double fd = (f_hi - f_lo) / (2 * h);
    double diff = std::abs(fd - exact);
    bool ok = diff <= std::max(1e-6, 1e-6 * std::abs(exact));

    Report report;
    report.command = "numcheck fd";
    std::ostringstream desc;
    desc << "d/d" << (var + 1) << ": exact " << exact << " vs central diff " << fd;
    ReportCase c;
    c.id = "fd";
    c.description = desc.str();
    c.status = ok ? CaseStatus::pass : CaseStatus::fail;
    if (!ok) c.witness = "|diff| = " + std::to_string(diff);
    report.cases.push_back(std::move(c));
    return report;
}

Report fd_suite(const SampleConfig& cfg, int function_count, int points_per_fn) {
    Report report;
    report.command = "numcheck fd_suite";
    report.seed = cfg.seed;
    report.params["functions"] = std::to_string(function_count);
    report.params["points"] = std::to_string(points_per_fn);
    SampleRng rng(cfg.seed);

    auto random_poly = [&](int vars, int max_deg) {
        Polynomial p(vars);
        int terms = 1 + static_cast<int>(rng.unit() * 4);
        for (int t = 0; t < terms; ++t) {
            Exponents e(vars, 0);
            int budget = max_deg;
            for (int v = 0; v < vars; ++v) {
                int d = static_cast<int>(rng.unit() * (budget + 1));
                e[v] = static_cast<unsigned>(d);
                budget -= d;
            }
            long c = static_cast<long>(rng.unit() * 12) - 6;
            if (c == 0) c = 1;
            p += Polynomial::monomial(vars, e, Rational(c));
        }
        return p;
    };

    int failures = 0;
    for (int i = 0; i < function_count; ++i) {
        int vars = 1 + static_cast<int>(rng.unit() * 3);
        if (vars > 3) vars = 3;
        Polynomial num = random_poly(vars, 3);
        Polynomial den = random_poly(vars, 2);
        if (den.is_zero()) den = Polynomial::constant(vars, 1);
        FnElem f{RationalFunction(num, den)};
        int var = static_cast<int>(rng.unit() * vars);
        if (var >= vars) var = vars - 1;
        int done = 0;
        for (int attempt = 0; attempt < cfg.max_retries && done < points_per_fn; ++attempt) {
            std::vector<double> point(vars);
            for (int v = 0; v < vars; ++v) point[v] = rng.in(cfg.box_lo, cfg.box_hi);
            // reject near-pole stencils up front
            double dval;
            if (!detail::guarded_eval(FnElem{RationalFunction(den)}, point, cfg.pole_margin,
                                      &dval) ||
                std::abs(dval) < cfg.pole_margin)
                continue;
            try {
                Report one = fd_crosscheck(f, var, point);
                if (!one.passed()) ++failures;
                ++done;
            } catch (const PoleError&) {
                continue;
            }
        }
        if (done < points_per_fn) {
            report.add_fail("fn" + std::to_string(i), "could not find sample points",
                            f.str());
            continue;
        }
    }
    report.add_outcome("summary",
                       std::to_string(function_count) + " functions x " +
                           std::to_string(points_per_fn) + " points",
                       failures == 0, std::to_string(failures) + " failures");
    return report;
}

}  // namespace conflap
