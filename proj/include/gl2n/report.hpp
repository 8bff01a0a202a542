#pragma once

// Machine-readable verification reports: one report per CLI invocation,
// one entry per executed check, pass/fail rollup in `overall`.

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gl2n/congruence.hpp"

namespace gl2n {

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    double max_abs_error = 0.0;
    int samples_used = 0;
    long remainder_terms = 0;
    double elapsed_ms = 0.0;

    bool passed() const { return status != CheckStatus::fail; }
    const char* path() const { return samples_used == 0 ? "exact" : "numeric"; }

    static CheckResult from_verdict(std::string name, const CongruenceVerdict& v, double ms) {
        return {std::move(name), v.status, v.max_abs_error, v.samples_used, v.remainder_terms, ms};
    }
};

struct VerificationReport {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    std::vector<CheckResult> checks;
    nlohmann::ordered_json result;  // optional command-specific payload

    bool overall_pass() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json out;
        out["command"] = command;
        out["inputs"] = inputs;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json j;
            j["name"] = c.name;
            j["status"] = to_string(c.status);
            j["max_abs_error"] = c.max_abs_error;
            j["path"] = c.path();
            j["elapsed_ms"] = c.elapsed_ms;
            arr.push_back(std::move(j));
        }
        out["checks"] = std::move(arr);
        if (!result.is_null()) out["result"] = result;
        out["overall"] = overall_pass() ? "pass" : "fail";
        return out;
    }
};

/// Run one named check, timing it.
template <class Fn>
CheckResult timed_check(const std::string& name, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CongruenceVerdict v = fn();
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return CheckResult::from_verdict(name, v, ms);
}

}  // namespace gl2n
