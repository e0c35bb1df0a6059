#include "mil/report.hpp"

#include <json.hpp>

#include <sstream>

namespace mil {

using ordered_json = nlohmann::ordered_json;

const char* claim_status_name(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    default: return "inconclusive";
    }
}

ClaimStatus ScenarioReport::overall() const {
    bool open = false;
    for (const ClaimResult& c : claims) {
        if (c.status == ClaimStatus::fail) return ClaimStatus::fail;
        if (c.status == ClaimStatus::inconclusive) open = true;
    }
    return open ? ClaimStatus::inconclusive : ClaimStatus::pass;
}

ClaimStatus combine_status(const std::vector<ScenarioReport>& reports) {
    bool open = false;
    for (const ScenarioReport& r : reports) {
        ClaimStatus s = r.overall();
        if (s == ClaimStatus::fail) return ClaimStatus::fail;
        if (s == ClaimStatus::inconclusive) open = true;
    }
    return open ? ClaimStatus::inconclusive : ClaimStatus::pass;
}

std::string field_blurb(const FieldPtr& f) {
    std::string base = "GF(" + std::to_string(f->p) + ")";
    if (f->r == 1) return base;
    std::string mod;
    for (unsigned i = f->r + 1; i-- > 0;) {
        unsigned c = f->modulus[i];
        if (c == 0) continue;
        if (!mod.empty()) mod += " + ";
        if (i == 0) {
            mod += std::to_string(c);
        } else {
            if (c != 1) mod += std::to_string(c) + "*";
            mod += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return "GF(" + std::to_string(f->q) + ") = " + base + "[t]/(" + mod + ")";
}

namespace {

ordered_json report_json(const ScenarioReport& r, bool timings) {
    ordered_json j;
    j["scenario"] = r.scenario;
    j["section"] = r.section;
    j["anchor"] = r.anchor;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["overall"] = claim_status_name(r.overall());
    j["fields"] = r.fields;
    ordered_json claims = ordered_json::array();
    for (const ClaimResult& c : r.claims) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = claim_status_name(c.status);
        cj["detail"] = c.detail;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (!c.obstruction.empty()) cj["obstruction"] = c.obstruction;
        claims.push_back(std::move(cj));
    }
    j["claims"] = std::move(claims);
    if (timings) j["seconds"] = r.seconds;
    return j;
}

} // namespace

std::string reports_to_json(const std::vector<ScenarioReport>& reports, unsigned seed,
                            bool timings) {
    ordered_json j;
    j["toolkit"] = kToolkitVersion;
    j["seed"] = seed;
    j["overall"] = claim_status_name(combine_status(reports));
    ordered_json arr = ordered_json::array();
    for (const ScenarioReport& r : reports) arr.push_back(report_json(r, timings));
    j["scenarios"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<ScenarioReport>& reports, bool timings) {
    std::ostringstream out;
    std::size_t total = 0;
    for (const ScenarioReport& r : reports) {
        out << r.scenario;
        if (!r.parameters.empty()) {
            out << " (";
            bool first = true;
            for (const auto& [k, v] : r.parameters) {
                if (!first) out << ", ";
                out << k << "=" << v;
                first = false;
            }
            out << ")";
        }
        out << ": " << claim_status_name(r.overall());
        if (timings) out << "  [" << r.seconds << "s]";
        out << "\n";
        for (const ClaimResult& c : r.claims) {
            ++total;
            out << "  [" << claim_status_name(c.status) << "] " << c.name << ": " << c.detail
                << "\n";
            if (!c.obstruction.empty()) out << "      obstruction: " << c.obstruction << "\n";
            if (!c.witness.empty()) out << "      witness: " << c.witness << "\n";
        }
    }
    out << "overall: " << claim_status_name(combine_status(reports)) << " (" << reports.size()
        << " scenario" << (reports.size() == 1 ? "" : "s") << ", " << total << " claim"
        << (total == 1 ? "" : "s") << ")\n";
    return out.str();
}

namespace {

bool check_node(const ordered_json& schema, const ordered_json& value, const std::string& path,
                std::string* error) {
    auto fail = [&](const std::string& why) {
        if (error) *error = path + ": " + why;
        return false;
    };
    if (schema.contains("enum")) {
        for (const auto& option : schema["enum"])
            if (value == option) return true;
        return fail("value not among the allowed alternatives");
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        if (t == "object" && !value.is_object()) return fail("expected an object");
        if (t == "array" && !value.is_array()) return fail("expected an array");
        if (t == "string" && !value.is_string()) return fail("expected a string");
        if (t == "integer" && !value.is_number_integer()) return fail("expected an integer");
        if (t == "number" && !value.is_number()) return fail("expected a number");
        if (t == "boolean" && !value.is_boolean()) return fail("expected a boolean");
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            const std::string k = key.get<std::string>();
            if (!value.contains(k)) return fail("missing required key \"" + k + "\"");
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [k, sub] : schema["properties"].items()) {
            if (!value.contains(k)) continue;
            if (!check_node(sub, value[k], path + "." + k, error)) return false;
        }
    }
    if (schema.contains("items") && value.is_array()) {
        std::size_t i = 0;
        for (const auto& elem : value) {
            if (!check_node(schema["items"], elem, path + "[" + std::to_string(i) + "]", error))
                return false;
            ++i;
        }
    }
    return true;
}

} // namespace

bool validate_report_json(const std::string& report_json_text, const std::string& schema_json,
                          std::string* error) {
    ordered_json report = ordered_json::parse(report_json_text, nullptr, false);
    if (report.is_discarded()) {
        if (error) *error = "report is not valid JSON";
        return false;
    }
    ordered_json schema = ordered_json::parse(schema_json, nullptr, false);
    if (schema.is_discarded()) {
        if (error) *error = "schema is not valid JSON";
        return false;
    }
    return check_node(schema, report, "$", error);
}

} // namespace mil
