#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace schurmzf {

/// One verified equality inside a report.
struct CheckLine {
    std::string name;
    std::string lhs_decimal, rhs_decimal;
    std::string lhs_rational, rhs_rational;  // exact mode only
    std::string abs_diff, rel_diff;
    bool pass = false;
};

/// Structured outcome of one identity check. Key order and number formatting
/// are fixed so that identical configurations give byte-identical reports
/// (elapsed_ms aside).
struct VerificationReport {
    std::string identity;
    std::string shape;
    long bound = 0;
    std::string mode;    // "exact" or "float"
    std::string status;  // exact_pass | float_pass | limit_only_pass | fail
    bool pass = false;
    std::vector<CheckLine> checks;  // first entry is the primary identity
    std::vector<std::pair<std::string, long long>> counts;
    std::vector<std::pair<std::string, std::string>> notes;
    double elapsed_ms = 0.0;

    const CheckLine& primary() const { return checks.front(); }
};

inline nlohmann::ordered_json to_json(const CheckLine& line, bool exact_mode) {
    nlohmann::ordered_json j;
    j["name"] = line.name;
    j["lhs"] = nlohmann::ordered_json{{"decimal", line.lhs_decimal}};
    j["rhs"] = nlohmann::ordered_json{{"decimal", line.rhs_decimal}};
    if (exact_mode) {
        j["lhs"]["rational"] = line.lhs_rational;
        j["rhs"]["rational"] = line.rhs_rational;
    }
    j["abs_diff"] = line.abs_diff;
    j["rel_diff"] = line.rel_diff;
    j["pass"] = line.pass;
    return j;
}

inline nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["shape"] = report.shape;
    j["N"] = report.bound;
    j["mode"] = report.mode;
    j["status"] = report.status;
    j["pass"] = report.pass;
    const bool exact_mode = report.mode == "exact";
    if (!report.checks.empty()) {
        const CheckLine& main = report.checks.front();
        j["lhs"] = to_json(main, exact_mode)["lhs"];
        j["rhs"] = to_json(main, exact_mode)["rhs"];
        j["abs_diff"] = main.abs_diff;
        j["rel_diff"] = main.rel_diff;
    }
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckLine& line : report.checks) checks.push_back(to_json(line, exact_mode));
    j["checks"] = checks;
    nlohmann::ordered_json counts;
    for (const auto& [key, value] : report.counts) counts[key] = value;
    j["counts"] = counts;
    if (!report.notes.empty()) {
        nlohmann::ordered_json notes;
        for (const auto& [key, value] : report.notes) notes[key] = value;
        j["notes"] = notes;
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

/// Human-oriented one-liner for logs and the CLI summary stream.
inline std::string summary_line(const VerificationReport& report) {
    std::string out = report.pass ? "[PASS] " : "[FAIL] ";
    out += report.identity;
    if (!report.shape.empty()) out += " shape=" + report.shape;
    out += " N=" + std::to_string(report.bound);
    out += " mode=" + report.mode;
    if (!report.checks.empty()) out += " diff=" + report.checks.front().abs_diff;
    return out;
}

}  // namespace schurmzf
