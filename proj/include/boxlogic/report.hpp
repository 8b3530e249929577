#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace boxlogic {

/// One verification check: a stable id, a verdict, structured counts and an
/// optional counterexample witness. Reports are machine-readable so CI and
/// the CLI can consume them without parsing prose.
struct CheckResult {
    std::string check_id;
    bool pass = false;
    nlohmann::json counts = nlohmann::json::object();
    nlohmann::json counterexample; // null when pass

    nlohmann::json to_json() const {
        nlohmann::json j{{"check_id", check_id}, {"status", pass ? "pass" : "fail"}};
        if (!counts.empty()) j["counts"] = counts;
        if (!counterexample.is_null()) j["counterexample"] = counterexample;
        return j;
    }
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.check_id == id) return &c;
        return nullptr;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(Report other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) arr.push_back(c.to_json());
        return nlohmann::json{{"checks", arr}, {"overall", all_pass() ? "pass" : "fail"}};
    }
};

} // namespace boxlogic
