#include "fockbundle/report.hpp"

#include <algorithm>

namespace fockbundle {

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

json slot_states_to_json(const SlotStates& states) {
    json out = json::object();
    for (const auto& [slot, set] : states) {
        if (set.empty()) continue;
        out["slot" + std::to_string(slot)] = json(std::vector<long>(set.begin(), set.end()));
    }
    return out;
}

json to_json(const CheckRecord& rec) {
    json j;
    j["name"] = rec.name;
    j["anchor"] = rec.anchor;
    j["max_deviation"] = rec.max_deviation;
    j["tolerance"] = rec.tolerance;
    j["pass"] = rec.pass;
    j["excluded_states"] = slot_states_to_json(rec.excluded);
    if (rec.elapsed_ms) j["elapsed_ms"] = *rec.elapsed_ms;
    if (!rec.details.empty()) j["details"] = rec.details;
    return j;
}

json to_json(const VerificationReport& report) {
    json j;
    j["suite"] = report.suite;
    j["parameters"] = report.parameters;
    j["checks"] = json::array();
    for (const auto& c : report.checks) j["checks"].push_back(to_json(c));
    j["pass"] = report.pass();
    return j;
}

}  // namespace fockbundle
