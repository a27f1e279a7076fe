#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conflap/errors.hpp"
#include "conflap/report.hpp"

using namespace conflap;

namespace {

Report sample_report() {
    Report r;
    r.command = "verify rn";
    r.params["n"] = "2";
    r.params["k"] = "3";
    r.seed = 42;
    r.add_pass("a-001", "first case");
    r.add_fail("a-002", "second case", "1 * d[0,0]");
    r.add_skip("a-003", "third case");
    return r;
}

}  // namespace

TEST_CASE("overall status rules") {
    Report r;
    r.command = "x";
    r.add_pass("a", "ok");
    r.add_skip("b", "later");
    CHECK(r.overall() == CaseStatus::pass);  // skipped does not poison
    r.add_fail("c", "bad", "w");
    CHECK(r.overall() == CaseStatus::fail);
    Report l;
    l.command = "y";
    l.add_limit("a", "too big", "cap");
    CHECK(l.overall() == CaseStatus::limit);
    CHECK(l.hit_limit());
}

TEST_CASE("json round trip") {
    Report r = sample_report();
    std::string text = to_json(r);
    Report back = report_from_json(text);
    CHECK(back == r);
    // and the compact form
    CHECK(report_from_json(to_json(r, false)) == r);
}

TEST_CASE("json carries the frozen schema fields") {
    std::string text = to_json(sample_report());
    for (const char* field :
         {"\"tool\"", "\"version\"", "\"command\"", "\"params\"", "\"cases\"",
          "\"id\"", "\"description\"", "\"status\"", "\"witness\"", "\"seed\""})
        CHECK(text.find(field) != std::string::npos);
    CHECK(text.find("\"conflap\"") != std::string::npos);
    // witness is omitted when absent
    Report no_witness;
    no_witness.command = "x";
    no_witness.add_pass("a", "fine");
    CHECK(to_json(no_witness).find("witness") == std::string::npos);
}

TEST_CASE("exit-status mapping follows overall") {
    CHECK(std::string(status_name(CaseStatus::pass)) == "pass");
    CHECK(std::string(status_name(CaseStatus::limit)) == "limit");
    CHECK(status_from_name("skipped") == CaseStatus::skipped);
    CHECK_THROWS_AS(status_from_name("bogus"), ParseError);
}

TEST_CASE("text format has one line per case") {
    Report r = sample_report();
    std::string text = to_text(r);
    CHECK(text.find("[pass] a-001") != std::string::npos);
    CHECK(text.find("[fail] a-002") != std::string::npos);
    CHECK(text.find("witness: 1 * d[0,0]") != std::string::npos);
    CHECK(text.find("overall: fail") != std::string::npos);
}

TEST_CASE("cases sort canonically by id") {
    Report r;
    r.command = "x";
    r.add_pass("b", "second");
    r.add_pass("a", "first");
    std::string text = to_json(r);
    CHECK(text.find("\"a\"") < text.find("\"b\""));
}

TEST_CASE("malformed json is rejected with position info") {
    CHECK_THROWS_AS(report_from_json("{not json"), ParseError);
    CHECK_THROWS_AS(report_from_json("{\"command\": \"x\"}"), ParseError);
}

TEST_CASE("absorb prefixes case ids") {
    Report outer;
    outer.command = "all";
    Report inner = sample_report();
    outer.absorb(inner, "rn/n2");
    CHECK(outer.cases.size() == 3);
    CHECK(outer.cases[0].id == "rn/n2/a-001");
}
