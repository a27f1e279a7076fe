#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "conflap/report.hpp"

using namespace conflap;

namespace {

std::string bin_path() {
    const char* p = std::getenv("CONFLAP_BIN");
    REQUIRE(p != nullptr);
    return p;
}

std::string golden_dir() {
    const char* p = std::getenv("CONFLAP_GOLDEN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    RunResult r;
    std::string cmd = env_prefix + bin_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("exit code 0 on a passing identity, and the JSON parses") {
    RunResult r = run("verify rn --n 2 --k 3 --format json");
    CHECK(r.exit_code == 0);
    Report rep = report_from_json(r.out);
    CHECK(rep.passed());
    CHECK(rep.command == "verify rn");
}

TEST_CASE("exit code 1 on a mathematical mismatch") {
    RunResult r = run("verify comm --n 2 --w-range 0..0 --k-max 1 --inject-bug --format json");
    CHECK(r.exit_code == 1);
    Report rep = report_from_json(r.out);
    CHECK_FALSE(rep.passed());
    bool witnessed = false;
    for (const auto& c : rep.cases)
        if (c.status == CaseStatus::fail && c.witness) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run("verify main --n 2 --k 0").exit_code == 2);
    CHECK(run("verify rn --n 2").exit_code == 2);          // missing --k
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("verify covariance --n 3 --k 1 --radical off").exit_code == 2);
    // parse errors in --apply-to carry a position and exit 2
    CHECK(run("verify rn --n 2 --k 1 --apply-to 'y1 +'").exit_code == 2);
    CHECK(run("verify rn --n 2 --k 1 --apply-to 'z9'").exit_code == 2);
}

TEST_CASE("exit code 3 when the term cap trips") {
    RunResult r = run("verify rn --n 3 --k 3 --term-cap 50 --format json");
    CHECK(r.exit_code == 3);
    Report rep = report_from_json(r.out);
    CHECK(rep.hit_limit());
    // the environment variable spells the same cap
    RunResult env = run("verify rn --n 3 --k 3 --format json",
                        "CONFLAP_TERM_CAP=50 ");
    CHECK(env.exit_code == 3);
}

TEST_CASE("golden outputs are byte-stable") {
    for (const auto& [args, file] :
         {std::pair{std::string("verify rn --n 2 --k 2 --format json"),
                    std::string("rn_n2_k2.json")},
          std::pair{std::string("spectrum --n 2 --k 1 --l-max 2 --format json"),
                    std::string("spectrum_n2_k1_l2.json")},
          std::pair{std::string(
                        "verify comm --n 1 --w-range -1..1 --k-max 2 --shadow on "
                        "--seed 7 --format json"),
                    std::string("comm_n1_shadow.json")}}) {
        RunResult r = run(args);
        CHECK(r.exit_code == 0);
        CHECK(r.out == slurp(golden_dir() + "/" + file));
    }
}

TEST_CASE("fixed seed makes shadow runs deterministic") {
    std::string args = "verify yamabe --n 2 --max-degree 1 --shadow on --seed 99 --format json";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("verify yamabe --n 2 --max-degree 1 --shadow on --seed 100 --format json");
    CHECK(c.out != a.out);  // seed is recorded in the report
}

TEST_CASE("exit code matches the JSON overall status") {
    for (const std::string& args :
         {std::string("verify conformality --n 2 --format json"),
          std::string("spectrum --n 4 --k 2 --l-max 1 --format json"),
          std::string("numcheck --functions 5 --points 2 --format json")}) {
        RunResult r = run(args);
        Report rep = report_from_json(r.out);
        CHECK((r.exit_code == 0) == rep.passed());
    }
}

TEST_CASE("user function hatch") {
    RunResult r = run("verify covariance --n 2 --k 1 --motion inversion "
                      "--apply-to 'y1^2*y2 + 3/2*y1' --format json");
    CHECK(r.exit_code == 0);
    Report rep = report_from_json(r.out);
    bool found = false;
    for (const auto& c : rep.cases)
        if (c.id.find("user-fn") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("text mode emits one line per case") {
    RunResult r = run("verify conformality --n 1");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    Report rep = report_from_json(run("verify conformality --n 1 --format json").out);
    CHECK(lines == static_cast<int>(rep.cases.size()) + 2);  // header + overall
}
