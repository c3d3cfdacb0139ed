#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fockbundle/fock.hpp"

namespace fockbundle {

using json = nlohmann::json;

/// One verified identity or property.
struct CheckRecord {
    std::string name;
    std::string anchor;  // formula the check verifies
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    SlotStates excluded;
    std::optional<double> elapsed_ms;
    json details = json::object();
};

struct VerificationReport {
    std::string suite;
    json parameters = json::object();
    std::vector<CheckRecord> checks;

    bool pass() const;
    void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
    const CheckRecord* find(const std::string& name) const;
};

json slot_states_to_json(const SlotStates& states);
json to_json(const CheckRecord& rec);
json to_json(const VerificationReport& report);

}  // namespace fockbundle
