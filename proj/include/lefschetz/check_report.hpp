#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace lefschetz {

/// Outcome of one verification: stable check id, the parameters it ran
/// with, pass/fail, and optional witness data (kernel vectors, differing
/// monomials, traces, ...).
struct CheckReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    nlohmann::json witness;  // null unless a check attaches data

    nlohmann::json to_json() const {
        return nlohmann::json{{"check", check},
                              {"params", params},
                              {"status", pass ? "pass" : "fail"},
                              {"witness", witness}};
    }
};

inline bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace lefschetz
