#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conflap {

inline constexpr const char* kToolName = "conflap";
inline constexpr const char* kToolVersion = "1.0.0";

enum class CaseStatus { pass, fail, skipped, limit };

const char* status_name(CaseStatus s);
CaseStatus status_from_name(const std::string& name);

struct ReportCase {
    std::string id;
    std::string description;
    CaseStatus status = CaseStatus::pass;
    std::optional<std::string> witness;

    friend bool operator==(const ReportCase&, const ReportCase&) = default;
};

// Structured verification outcome: what ran, with which parameters, and a
// deterministic list of per-case results. overall() is pass iff no case
// failed or hit a resource limit; skipped cases do not poison the run.
struct Report {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<ReportCase> cases;
    std::uint64_t seed = 42;

    CaseStatus overall() const;
    bool passed() const { return overall() == CaseStatus::pass; }
    bool hit_limit() const;

    void add_pass(std::string id, std::string description);
    void add_fail(std::string id, std::string description, std::string witness);
    void add_skip(std::string id, std::string description);
    void add_limit(std::string id, std::string description, std::string witness);
    void add_outcome(std::string id, std::string description, bool ok, std::string witness);

    // Appends another report's cases under "prefix/" and merges params.
    void absorb(const Report& sub, const std::string& prefix);
    // Canonical order: sort cases by id.
    void sort_cases();

    friend bool operator==(const Report&, const Report&) = default;
};

// Frozen JSON schema:
// { tool, version, command, params, cases: [ { id, description, status,
//   witness? } ], status, seed }
std::string to_json(const Report& report, bool pretty = true);
Report report_from_json(const std::string& text);

// One line per case plus a trailing overall line.
std::string to_text(const Report& report);

}  // namespace conflap
