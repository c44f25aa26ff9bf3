#include "powercolor/report.hpp"

#include <sstream>

namespace powercolor {

nlohmann::ordered_json VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["params"] = params;
    j["status"] = passed() ? "pass" : "fail";
    auto witnesses = nlohmann::ordered_json::array();
    for (const auto& item : items) {
        if (item.pass) continue;
        for (const auto& w : item.witnesses) witnesses.push_back(item.name + ": " + w);
    }
    j["witnesses"] = witnesses;
    j["elapsed_ms"] = with_timing ? elapsed_ms : 0.0;
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "claim " << claim;
    if (!params.empty()) out << " (" << params << ")";
    out << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& item : items) {
        out << "  [" << (item.pass ? "ok" : "FAIL") << "] " << item.name << "\n";
        for (const auto& w : item.witnesses) out << "        witness: " << w << "\n";
    }
    return out.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) out << r.to_text();
    return out.str();
}

nlohmann::ordered_json consolidated_json(const std::string& command,
                                         const nlohmann::ordered_json& params,
                                         unsigned long long seed,
                                         const std::vector<VerificationReport>& reports,
                                         bool with_timing) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["params"] = params;
    doc["seed"] = seed;
    bool all = true;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        all = all && r.passed();
        checks.push_back(r.to_json(with_timing));
    }
    doc["status"] = all ? "pass" : "fail";
    doc["checks"] = checks;
    return doc;
}

}  // namespace powercolor
