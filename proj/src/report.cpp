#include "conflap/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "conflap/errors.hpp"

namespace conflap {

using ordered_json = nlohmann::ordered_json;

const char* status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::skipped: return "skipped";
        case CaseStatus::limit: return "limit";
    }
    return "fail";
}

CaseStatus status_from_name(const std::string& name) {
    if (name == "pass") return CaseStatus::pass;
    if (name == "fail") return CaseStatus::fail;
    if (name == "skipped") return CaseStatus::skipped;
    if (name == "limit") return CaseStatus::limit;
    throw ParseError("unknown status '" + name + "'", 0);
}

CaseStatus Report::overall() const {
    for (const auto& c : cases)
        if (c.status == CaseStatus::fail || c.status == CaseStatus::limit)
            return c.status;
    return CaseStatus::pass;
}

bool Report::hit_limit() const {
    return std::any_of(cases.begin(), cases.end(),
                       [](const ReportCase& c) { return c.status == CaseStatus::limit; });
}

void Report::add_pass(std::string id, std::string description) {
    cases.push_back({std::move(id), std::move(description), CaseStatus::pass, std::nullopt});
}

void Report::add_fail(std::string id, std::string description, std::string witness) {
    cases.push_back(
        {std::move(id), std::move(description), CaseStatus::fail, std::move(witness)});
}

void Report::add_skip(std::string id, std::string description) {
    cases.push_back({std::move(id), std::move(description), CaseStatus::skipped, std::nullopt});
}

void Report::add_limit(std::string id, std::string description, std::string witness) {
    cases.push_back(
        {std::move(id), std::move(description), CaseStatus::limit, std::move(witness)});
}

void Report::add_outcome(std::string id, std::string description, bool ok,
                         std::string witness) {
    if (ok)
        add_pass(std::move(id), std::move(description));
    else
        add_fail(std::move(id), std::move(description), std::move(witness));
}

void Report::absorb(const Report& sub, const std::string& prefix) {
    for (const auto& c : sub.cases) {
        ReportCase copy = c;
        copy.id = prefix + "/" + copy.id;
        cases.push_back(std::move(copy));
    }
}

void Report::sort_cases() {
    std::stable_sort(cases.begin(), cases.end(),
                     [](const ReportCase& a, const ReportCase& b) { return a.id < b.id; });
}

std::string to_json(const Report& report, bool pretty) {
    Report sorted = report;
    sorted.sort_cases();
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = sorted.command;
    j["params"] = ordered_json::object();
    for (const auto& [k, v] : sorted.params) j["params"][k] = v;
    j["cases"] = ordered_json::array();
    for (const auto& c : sorted.cases) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["description"] = c.description;
        jc["status"] = status_name(c.status);
        if (c.witness) jc["witness"] = *c.witness;
        j["cases"].push_back(std::move(jc));
    }
    j["status"] = status_name(sorted.overall());
    j["seed"] = sorted.seed;
    return pretty ? j.dump(2) + "\n" : j.dump();
}

Report report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    Report r;
    try {
        r.command = j.at("command").get<std::string>();
        for (const auto& [k, v] : j.at("params").items())
            r.params[k] = v.get<std::string>();
        for (const auto& jc : j.at("cases")) {
            ReportCase c;
            c.id = jc.at("id").get<std::string>();
            c.description = jc.at("description").get<std::string>();
            c.status = status_from_name(jc.at("status").get<std::string>());
            if (jc.contains("witness")) c.witness = jc.at("witness").get<std::string>();
            r.cases.push_back(std::move(c));
        }
        r.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report JSON missing fields: ") + e.what(), 0);
    }
    return r;
}

std::string to_text(const Report& report) {
    Report sorted = report;
    sorted.sort_cases();
    std::ostringstream os;
    os << sorted.command;
    for (const auto& [k, v] : sorted.params) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& c : sorted.cases) {
        os << "  [" << status_name(c.status) << "] " << c.id << ": " << c.description;
        if (c.witness) os << "  witness: " << *c.witness;
        os << "\n";
    }
    os << "overall: " << status_name(sorted.overall()) << " (" << sorted.cases.size()
       << " cases)\n";
    return os.str();
}

}  // namespace conflap
