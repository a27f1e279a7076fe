// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Criteria 1-7 run with the numeric shadow enabled (20 samples,
// tolerance 1e-8, seed 42); criterion 9 then audits that every exact pass
// produced a passing shadow companion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "conflap/suites.hpp"

using namespace conflap;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<Report>& collected() {
    static std::vector<Report> reports;
    return reports;
}

VerifyOptions shadowed() {
    VerifyOptions opt;
    opt.shadow = true;
    opt.shadow_cfg.sample_count = 20;
    opt.shadow_cfg.tolerance = 1e-8;
    opt.shadow_cfg.seed = 42;
    return opt;
}

void announce(int criterion, const std::string& what, bool ok) {
    std::cout << "ACCEPTANCE C" << criterion << " [" << (ok ? "PASS" : "FAIL") << "] "
              << what << std::endl;
}

bool all_cases_pass(const Report& r, const char* fail_context) {
    if (r.passed()) return true;
    for (const auto& c : r.cases)
        if (c.status != CaseStatus::pass)
            std::cout << "  failing case (" << fail_context << "): " << c.id << " — "
                      << c.description << (c.witness ? " witness: " + *c.witness : "")
                      << "\n";
    return false;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    const char* bin = std::getenv("CONFLAP_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("C1: flat factorization identity, exact, (n,k) in {1..4}^2") {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        for (int k = 1; k <= 4 && ok; ++k) {
            auto t0 = Clock::now();
            Report r = verify_rn(n, k, shadowed());
            double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            ok = all_cases_pass(r, "rn") && secs < 60.0;
            if (secs >= 60.0)
                std::cout << "  rn n=" << n << " k=" << k << " took " << secs << "s\n";
            collected().push_back(std::move(r));
        }
    }
    // the order-1 case is the identity L = L on both sides
    for (int n = 1; n <= 4; ++n) {
        auto [lhs, rhs] = build_rn_sides(n, 1);
        ok = ok && equal(lhs, DiffOp::laplacian(n)) && equal(rhs, DiffOp::laplacian(n));
    }
    announce(1, "verify rn exact for n,k <= 4 (k=1 tautology included, < 60 s/case)", ok);
    CHECK(ok);
}

TEST_CASE("C2: commutator identities, exact, n in {1..4}, w in [-3,3], k <= 5") {
    bool ok = true;
    bool saw_forms = false, saw_coincidence = false;
    for (int n = 1; n <= 4 && ok; ++n) {
        Report r = verify_commutators(n, -3, 3, 5, shadowed());
        ok = all_cases_pass(r, "comm");
        for (const auto& c : r.cases) {
            if (c.id.rfind("comm3-forms-", 0) == 0) saw_forms = true;
            if (c.id == "comm4-k1-is-comm3alt-wm1") saw_coincidence = true;
        }
        collected().push_back(std::move(r));
    }
    ok = ok && saw_forms && saw_coincidence;
    announce(2, "verify comm exact incl. both printed forms and the k=1/w=-1 coincidence",
             ok);
    CHECK(ok);
}

TEST_CASE("C3: conformal covariance on generators and all length-2 compositions") {
    bool ok = true;
    for (int n = 2; n <= 4 && ok; ++n) {
        for (int k = 1; k <= 2 && ok; ++k) {
            Report r = verify_covariance(n, k, 2 * k + 2, /*include_pairs=*/true,
                                         shadowed());
            ok = all_cases_pass(r, "covariance");
            // 4 generators + 16 ordered pairs
            std::size_t motions = 20;
            std::size_t family = monomials_up_to(n, 2 * k + 2).size();
            std::size_t exact_cases = motions * (family + 1);
            std::size_t seen = 0;
            for (const auto& c : r.cases)
                if (c.id.find("/shadow") == std::string::npos) ++seen;
            ok = ok && seen == exact_cases;
            collected().push_back(std::move(r));
        }
    }
    announce(3,
             "verify covariance for translation/rotation/dilation/inversion and all "
             "pairs, n in {2,3,4}, k in {1,2}, deg <= 2k+2 (odd n radical)",
             ok);
    CHECK(ok);
}

TEST_CASE("C4: conformality of the inverse stereographic map, n in {1..4}") {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        Report r = verify_conformality(n, shadowed());
        ok = all_cases_pass(r, "conformality");
        collected().push_back(std::move(r));
    }
    announce(4, "verify conformality: Gram = (2/(1+|y|^2))^2 I and the weight pullback",
             ok);
    CHECK(ok);
}

TEST_CASE("C5: second-order intertwining for n in {2,4} and n=3 radical") {
    bool ok = true;
    bool witnesses = true;
    for (int n : {2, 4, 3}) {
        Report r = verify_yamabe(n, 3, shadowed());
        ok = ok && all_cases_pass(r, "yamabe");
        if (n == 2 || n == 4) {
            bool found = false;
            for (const auto& c : r.cases)
                if (c.id.rfind("witness-", 0) == 0 && c.status == CaseStatus::pass)
                    found = true;
            witnesses = witnesses && found;
        }
        collected().push_back(std::move(r));
    }
    ok = ok && witnesses;
    announce(5, "verify yamabe for n in {2,4} and n=3 (radical), deg <= 3, with the "
                "named witness identities", ok);
    CHECK(ok);
}

TEST_CASE("C6: order-2k intertwining on the pinned (n,k) grid") {
    bool ok = true;
    const std::pair<int, int> grid[] = {{2, 1}, {2, 2}, {2, 3}, {4, 1},
                                        {4, 2}, {3, 1}, {3, 2}};
    for (auto [n, k] : grid) {
        Report r = verify_main(n, k, 2 * k + 1, shadowed());
        ok = ok && all_cases_pass(r, "main");
        collected().push_back(std::move(r));
    }
    // (n,k) = (2,1) reproduces the second-order criterion case for case
    {
        Report main21 = verify_main(2, 1, 3);
        Report yam2 = verify_yamabe(2, 3);
        std::size_t m = 0, y = 0;
        for (const auto& c : main21.cases)
            if (c.id.rfind("f-", 0) == 0 && c.status == CaseStatus::pass) ++m;
        for (const auto& c : yam2.cases)
            if (c.id.rfind("f-", 0) == 0 && c.status == CaseStatus::pass) ++y;
        ok = ok && m == y && m == monomials_up_to(2, 3).size();
    }
    announce(6, "verify main for (2,1),(2,2),(2,3),(4,1),(4,2),(3,1),(3,2), deg <= 2k+1",
             ok);
    CHECK(ok);
}

TEST_CASE("C7: spectrum oracle against the closed-form eigenvalues") {
    bool ok = true;
    for (int n = 2; n <= 4 && ok; ++n) {
        for (int k = 1; k <= 2 && ok; ++k) {
            Report r = spectrum_check(n, k, 4, shadowed());
            ok = all_cases_pass(r, "spectrum");
            collected().push_back(std::move(r));
        }
    }
    ok = ok && spectrum_eigenvalue(2, 2, 1) == Rational(0);
    ok = ok && spectrum_eigenvalue(4, 2, 0) == Rational(0);
    ok = ok && c_constants(4, 3) ==
                   std::vector<Rational>{Rational(2), Rational(0), Rational(-4)};
    ok = ok && c_constants(2, 2) == std::vector<Rational>{Rational(0), Rational(-2)};
    announce(7, "spectrum: mu_l = prod(-l(l+n-1) - c_j) on explicit harmonics, "
                "c-tables exact", ok);
    CHECK(ok);
}

TEST_CASE("C8: randomized property suites, 200 seeded instances each") {
    Report r = run_property_suites(42, 200);
    bool ok = all_cases_pass(r, "properties") && r.cases.size() == 7;
    announce(8, "property suites: Leibniz, commuting partials, associativity, "
                "apply-homomorphism, commutator laws, reduce idempotence, "
                "extension independence", ok);
    CHECK(ok);
}

TEST_CASE("C9: numeric shadow of every exact pass, 20 samples at 1e-8") {
    std::size_t shadows = 0, failures = 0;
    for (const Report& r : collected()) {
        for (const auto& c : r.cases) {
            if (c.id.find("/shadow") == std::string::npos) continue;
            ++shadows;
            if (c.status != CaseStatus::pass) {
                ++failures;
                std::cout << "  shadow failure: " << c.id << " — " << c.description
                          << "\n";
            }
        }
    }
    Report fd = fd_suite(SampleConfig{}, 100, 5);
    bool ok = shadows > 0 && failures == 0 && all_cases_pass(fd, "fd");
    std::cout << "  (" << shadows << " shadow cases audited)\n";
    announce(9, "numeric shadow concurs with every exact pass; fd sweep clean", ok);
    CHECK(ok);
}

TEST_CASE("C10: CLI contract — JSON round trip, exit codes, determinism, goldens") {
    bool ok = true;

    // JSON round trip through the real binary
    CliResult rn = run_cli("verify rn --n 2 --k 2 --format json");
    ok = ok && rn.exit_code == 0;
    Report parsed = report_from_json(rn.out);
    ok = ok && to_json(parsed) == rn.out && parsed.passed();

    // exit-code mapping
    ok = ok && run_cli("verify main --k 0 --n 2").exit_code == 2;
    ok = ok && run_cli("verify comm --n 2 --w-range 0..0 --k-max 1 --inject-bug")
                       .exit_code == 1;
    ok = ok && run_cli("verify rn --n 3 --k 3 --term-cap 40").exit_code == 3;
    ok = ok && run_cli("spectrum --n 3 --k 2 --l-max 3").exit_code == 0;

    // deterministic output for a fixed seed
    std::string args = "verify main --n 2 --k 1 --max-degree 2 --shadow on --seed 42 "
                       "--format json";
    ok = ok && run_cli(args).out == run_cli(args).out;

    // golden files
    const char* golden = std::getenv("CONFLAP_GOLDEN");
    REQUIRE(golden != nullptr);
    auto slurp = [&](const std::string& name) {
        std::string path = std::string(golden) + "/" + name;
        FILE* f = fopen(path.c_str(), "rb");
        REQUIRE(f != nullptr);
        std::string data;
        std::array<char, 4096> buf;
        std::size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) data.append(buf.data(), got);
        fclose(f);
        return data;
    };
    ok = ok && run_cli("verify rn --n 2 --k 2 --format json").out == slurp("rn_n2_k2.json");
    ok = ok && run_cli("spectrum --n 2 --k 1 --l-max 2 --format json").out ==
                   slurp("spectrum_n2_k1_l2.json");
    announce(10, "CLI: JSON round trip, exit codes 0/1/2/3, deterministic seeds, goldens",
             ok);
    CHECK(ok);
}
