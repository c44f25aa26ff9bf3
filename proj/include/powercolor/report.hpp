#ifndef POWERCOLOR_REPORT_HPP
#define POWERCOLOR_REPORT_HPP

#include <deque>
#include <string>
#include <vector>

#include "json.hpp"

namespace powercolor {

/// One named step or axiom inside a verification run. A failing item always
/// carries at least one witness string describing the offending objects.
struct CheckItem {
    std::string name;
    bool pass = true;
    std::vector<std::string> witnesses;
};

/// Structured pass/fail record for one claim. Witness strings cite vertices
/// with 1-based ids, matching the on-disk file formats. Items live in a
/// deque so references handed out by add_item stay valid as items are added.
struct VerificationReport {
    std::string claim;
    std::string params;
    std::deque<CheckItem> items;
    double elapsed_ms = 0.0;

    bool passed() const {
        for (const auto& item : items)
            if (!item.pass) return false;
        return true;
    }

    CheckItem& add_item(const std::string& name) {
        items.push_back(CheckItem{name, true, {}});
        return items.back();
    }

    void fail(CheckItem& item, const std::string& witness) {
        item.pass = false;
        item.witnesses.push_back(witness);
    }

    /// JSON object with fixed keys: claim, params, status, witnesses,
    /// elapsed_ms. Witnesses are flattened as "<item>: <detail>" strings.
    /// elapsed_ms is emitted as 0 unless with_timing is set, so that equal
    /// runs produce byte-identical output.
    nlohmann::ordered_json to_json(bool with_timing = false) const;

    std::string to_text() const;
};

std::string reports_to_text(const std::vector<VerificationReport>& reports);

/// Consolidated report document: {"schema":1, "command":..., "params":...,
/// "seed":..., "status":..., "checks":[...]}.
nlohmann::ordered_json consolidated_json(const std::string& command,
                                         const nlohmann::ordered_json& params,
                                         unsigned long long seed,
                                         const std::vector<VerificationReport>& reports,
                                         bool with_timing = false);

}  // namespace powercolor

#endif
