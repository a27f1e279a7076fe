// conflap — exact verification of conformal-Laplacian operator identities.
//
// Subcommands map one-to-one onto the identities they check:
//   verify rn            [L+k(k-1)M_2]M_{-2}...[L+2M_2]M_{-2}L = M_{1-k}L^k M_{1-k}
//   verify comm          [L,X]=2L, [X,M_w]=-w|y|^2M_{w+1},
//                        [L,M_w]=-wM_w(2X+n-(w-1)M_1|y|^2)M_1 (+ alt form),
//                        [L^k,M_{-1}]=k(2X+n+2(k-1))L^(k-1)
//   verify covariance    L^k = (C^{-1})* Omega^{-n/2-k} L^k Omega^{n/2-k} C*
//   verify conformality  D sigma^T D sigma = (2/(1+|y|^2))^2 I
//   verify yamabe        (L_S - c_1) M^{1-n/2} Phi* = M^{-1-n/2} Phi* L
//   verify main          prod_j(L_S - c_j) M^{k-n/2} Phi* = M^{-k-n/2} Phi* L^k
//   spectrum             eigenvalues prod_j(-l(l+n-1) - c_j) on explicit harmonics
//   numcheck             finite-difference and sampling cross-checks
//   all                  everything above plus the property suites
//
// Exit codes: 0 all pass, 1 mathematical mismatch, 2 usage error, 3 term cap.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "conflap/expr.hpp"
#include "conflap/suites.hpp"

using namespace conflap;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct CommonFlags {
    std::string format = "text";
    std::string shadow = "off";
    std::string radical = "auto";
    int samples = 20;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    std::size_t cap = 0;  // 0 = leave default / env
    std::string apply_to;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--shadow", flags.shadow,
                    "Numeric shadow of every exact pass: on|off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--radical", flags.radical,
                    "Radical mode: auto|on|off (auto enables the quadratic "
                    "extension exactly when a half-integer weight appears)")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    cmd->add_option("--samples", flags.samples, "Samples per numeric shadow case");
    cmd->add_option("--tol", flags.tol, "Relative tolerance for numeric shadows");
    cmd->add_option("--seed", flags.seed, "PRNG seed (mt19937_64)");
    cmd->add_option("--term-cap", flags.cap,
                    "Monomial budget per operator (also env CONFLAP_TERM_CAP)");
}

VerifyOptions make_options(const CommonFlags& flags) {
    VerifyOptions opt;
    opt.shadow = flags.shadow == "on";
    opt.shadow_cfg.sample_count = flags.samples;
    opt.shadow_cfg.tolerance = flags.tol;
    opt.shadow_cfg.seed = flags.seed;
    return opt;
}

void apply_term_cap(const CommonFlags& flags) {
    if (flags.cap > 0) {
        set_term_cap(flags.cap);
        return;
    }
    if (const char* env = std::getenv("CONFLAP_TERM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) set_term_cap(static_cast<std::size_t>(v));
    }
}

// odd n needs the radical extension for half-integer weights
void check_radical_flag(const CommonFlags& flags, bool needs_radical) {
    if (needs_radical && flags.radical == "off")
        throw DomainError(
            "this run needs half-integer weights; --radical off cannot represent them");
}

int emit(const Report& report, const CommonFlags& flags) {
    if (flags.format == "json")
        std::cout << to_json(report);
    else
        std::cout << to_text(report);
    if (report.hit_limit()) return kExitLimit;
    return report.passed() ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic verifier for conformal powers of the Laplacian"};
    app.require_subcommand(1);

    CommonFlags flags;

    // ---- verify ----
    CLI::App* verify = app.add_subcommand("verify", "run one identity verifier");
    verify->require_subcommand(1);

    int n = 2, k = 1, k_max = 5, max_degree = -1, l_max = 4;
    std::string w_range = "-3..3";
    std::string motion_spec;
    long weight = 1;
    bool inject_bug = false;
    bool no_pairs = false;

    CLI::App* rn = verify->add_subcommand(
        "rn", "flat factorization identity [L+k(k-1)M_2]M_{-2}...L = M_{1-k}L^k M_{1-k}");
    rn->add_option("--n", n, "dimension")->required();
    rn->add_option("--k", k, "order")->required();
    add_common(rn, flags);
    rn->add_option("--apply-to", flags.apply_to,
                   "also apply both sides to this polynomial (grammar: y1^2*y2 + 3/2*y1)");

    CLI::App* comm = verify->add_subcommand("comm", "commutator identities");
    comm->add_option("--n", n, "dimension")->required();
    comm->add_option("--w-range", w_range, "integer weight range lo..hi");
    comm->add_option("--k-max", k_max, "max power in [L^k, M_{-1}]");
    comm->add_flag("--inject-bug", inject_bug)->group("");  // hidden harness hook
    add_common(comm, flags);
    comm->add_option("--apply-to", flags.apply_to,
                     "also apply both sides of each identity to this polynomial");

    CLI::App* cov = verify->add_subcommand(
        "covariance", "conformal covariance of L^k under the motion group");
    cov->add_option("--n", n, "dimension")->required();
    cov->add_option("--k", k, "order");
    cov->add_option("--max-degree", max_degree, "monomial family degree (default 2k+2)");
    cov->add_option("--motion", motion_spec,
                    "comma-separated pipeline of translation|rotation|dilation|inversion "
                    "(default: all generators and length-2 compositions)");
    cov->add_flag("--no-pairs", no_pairs, "generators only");
    add_common(cov, flags);
    cov->add_option("--apply-to", flags.apply_to, "extra test polynomial");

    CLI::App* conf = verify->add_subcommand(
        "conformality", "inverse stereographic map is conformal");
    conf->add_option("--n", n, "dimension")->required();
    add_common(conf, flags);

    CLI::App* yam = verify->add_subcommand(
        "yamabe", "second-order intertwining (L_S - c_1) M^{1-n/2} Phi* = M^{-1-n/2} Phi* L");
    yam->add_option("--n", n, "dimension")->required();
    yam->add_option("--max-degree", max_degree, "monomial family degree (default 3)");
    add_common(yam, flags);
    yam->add_option("--apply-to", flags.apply_to, "extra test polynomial");

    CLI::App* main_cmd = verify->add_subcommand(
        "main", "order-2k intertwining prod(L_S - c_j) M^{k-n/2} Phi* = M^{-k-n/2} Phi* L^k");
    main_cmd->add_option("--n", n, "dimension")->required();
    main_cmd->add_option("--k", k, "order")->required();
    main_cmd->add_option("--max-degree", max_degree, "monomial family degree (default 2k+1)");
    add_common(main_cmd, flags);
    main_cmd->add_option("--apply-to", flags.apply_to, "extra test polynomial");

    CLI::App* intertw = verify->add_subcommand(
        "intertwining", "weight intertwining Phi*(M_w f) = (1+x_{n+1})^w Phi* f");
    intertw->add_option("--n", n, "dimension")->required();
    intertw->add_option("--w", weight, "integer weight");
    add_common(intertw, flags);
    intertw->add_option("--apply-to", flags.apply_to, "test function f (default y1)");

    // ---- spectrum ----
    CLI::App* spec = app.add_subcommand(
        "spectrum", "eigenvalues of prod_j (L_S - c_j) on explicit harmonics");
    spec->add_option("--n", n, "dimension")->required();
    spec->add_option("--k", k, "order")->required();
    spec->add_option("--l-max", l_max, "max harmonic degree");
    add_common(spec, flags);

    // ---- numcheck ----
    CLI::App* num = app.add_subcommand(
        "numcheck", "finite-difference cross-check of exact differentiation");
    int fd_functions = 100, fd_points = 5;
    num->add_option("--functions", fd_functions, "random rational functions to test");
    num->add_option("--points", fd_points, "points per function");
    add_common(num, flags);
    num->add_option("--apply-to", flags.apply_to,
                    "check d/dy1 of this polynomial instead of the random sweep");
    num->add_option("--n", n, "variables for --apply-to");

    // ---- all ----
    CLI::App* all = app.add_subcommand("all", "the full verification battery");
    int n_max = 4, km = 3, instances = 200;
    std::vector<std::string> only;
    all->add_option("--n-max", n_max, "max dimension");
    all->add_option("--k-max", km, "max order");
    all->add_option("--instances", instances, "instances per property suite");
    all->add_option("--only", only,
                    "restrict to sections: rn comm covariance conformality yamabe main "
                    "spectrum properties")
        ->delimiter(',');
    add_common(all, flags);  // shadow defaults to on here unless passed explicitly

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        apply_term_cap(flags);
        VerifyOptions opt = make_options(flags);

        if (rn->parsed()) {
            Report report = verify_rn(n, k, opt);
            if (!flags.apply_to.empty()) {
                Polynomial f = parse_polynomial(flags.apply_to, n, 'y');
                auto [lhs, rhs] = build_rn_sides(n, k);
                FnElem l = lhs.apply(FnElem(f)), r = rhs.apply(FnElem(f));
                bool ok = equals(l, r);
                report.add_outcome("user-fn", "both sides applied to " + f.str(), ok,
                                   ok ? "" : "lhs = " + l.str() + "; rhs = " + r.str());
            }
            return emit(report, flags);
        }
        if (comm->parsed()) {
            auto dots = w_range.find("..");
            if (dots == std::string::npos)
                throw DomainError("--w-range must look like -3..3");
            int w_min = std::stoi(w_range.substr(0, dots));
            int w_max = std::stoi(w_range.substr(dots + 2));
            opt.inject_bug = inject_bug;
            Report report = verify_commutators(n, w_min, w_max, k_max, opt);
            if (!flags.apply_to.empty()) {
                Polynomial f = parse_polynomial(flags.apply_to, n, 'y');
                DiffOp lap = DiffOp::laplacian(n), x = DiffOp::euler(n);
                FnElem l = commutator(lap, x).apply(FnElem(f));
                FnElem r = (Rational(2) * lap).apply(FnElem(f));
                bool ok = equals(l, r);
                report.add_outcome("user-fn", "[L,X] f vs 2 L f on " + f.str(), ok,
                                   ok ? "" : l.str() + " vs " + r.str());
            }
            return emit(report, flags);
        }
        if (cov->parsed()) {
            if (max_degree < 0) max_degree = 2 * k + 2;
            Report report;
            if (!motion_spec.empty()) {
                ConformalMotion motion = ConformalMotion::parse_pipeline(motion_spec, n);
                check_radical_flag(flags, n % 2 == 1 &&
                                              !motion.omega().radical_base().is_one());
                report = verify_translaw(n, k, motion, max_degree, opt);
            } else {
                // the default family includes the inversion
                check_radical_flag(flags, n % 2 == 1);
                report = verify_covariance(n, k, max_degree, !no_pairs, opt);
            }
            if (!flags.apply_to.empty()) {
                Polynomial f = parse_polynomial(flags.apply_to, n, 'y');
                ConformalMotion motion =
                    motion_spec.empty() ? ConformalMotion::by_name("inversion", n)
                                        : ConformalMotion::parse_pipeline(motion_spec, n);
                Report one = verify_translaw_single(n, k, motion, f, opt);
                report.absorb(one, "user-fn");
            }
            return emit(report, flags);
        }
        if (conf->parsed()) return emit(verify_conformality(n, opt), flags);
        if (yam->parsed()) {
            if (max_degree < 0) max_degree = 3;
            check_radical_flag(flags, n % 2 == 1);
            Report report = verify_yamabe(n, max_degree, opt);
            return emit(report, flags);
        }
        if (main_cmd->parsed()) {
            if (max_degree < 0) max_degree = 2 * k + 1;
            check_radical_flag(flags, n % 2 == 1);
            Report report = verify_main(n, k, max_degree, opt);
            return emit(report, flags);
        }
        if (intertw->parsed()) {
            RationalFunction f =
                flags.apply_to.empty()
                    ? RationalFunction::variable(n, 0)
                    : RationalFunction(parse_polynomial(flags.apply_to, n, 'y'));
            return emit(verify_intertwining_weight(n, weight, f, opt), flags);
        }
        if (spec->parsed()) return emit(spectrum_check(n, k, l_max, opt), flags);
        if (num->parsed()) {
            if (!flags.apply_to.empty()) {
                Polynomial f = parse_polynomial(flags.apply_to, n, 'y');
                std::vector<double> point(n, 0.5);
                Report report = fd_crosscheck(FnElem(f), 0, point);
                report.seed = flags.seed;
                return emit(report, flags);
            }
            Report report = fd_suite(opt.shadow_cfg, fd_functions, fd_points);
            return emit(report, flags);
        }
        if (all->parsed()) {
            static const std::set<std::string> known_sections{
                "rn",     "comm", "covariance", "conformality",
                "yamabe", "main", "spectrum",   "properties"};
            for (const auto& section : only)
                if (!known_sections.count(section))
                    throw DomainError("unknown section '" + section + "' for --only");
            AllOptions aopt;
            aopt.n_max = n_max;
            aopt.k_max = km;
            aopt.seed = flags.seed;
            aopt.shadow = all->count("--shadow") > 0 ? flags.shadow == "on" : true;
            aopt.shadow_cfg = opt.shadow_cfg;
            aopt.property_instances = instances;
            aopt.only = std::set<std::string>(only.begin(), only.end());
            return emit(run_all(aopt), flags);
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const TermCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ContextMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
