#ifndef MIL_REPORT_HPP
#define MIL_REPORT_HPP

#include "mil/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace mil {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class ClaimStatus { pass, fail, inconclusive };

const char* claim_status_name(ClaimStatus s);

/// One checked statement inside a scenario.  A witness, when present, is a
/// certificate in the polynomial grammar; several polynomials are joined
/// with "; ".
struct ClaimResult {
    std::string name;
    ClaimStatus status = ClaimStatus::inconclusive;
    std::string detail;
    std::string witness;
    std::string obstruction;
};

/// Outcome of one scenario run.  The section and anchor fields are the
/// catalog's cross-reference data for the scenario.
struct ScenarioReport {
    std::string scenario;
    std::string section;
    std::string anchor;
    std::map<std::string, unsigned> parameters;
    std::vector<std::string> fields; // descriptions of the moduli touched
    std::vector<ClaimResult> claims;
    double seconds = 0.0;

    /// fail if any claim fails, else inconclusive if any claim is open,
    /// else pass.
    ClaimStatus overall() const;
};

ClaimStatus combine_status(const std::vector<ScenarioReport>& reports);

/// Human-readable description of a field, e.g.
/// "GF(4) = GF(2)[t]/(t^2 + t + 1)".
std::string field_blurb(const FieldPtr& f);

/// Deterministic serialization: fixed key order, and no wall-clock data
/// unless timings is set, so equal runs yield equal bytes.
std::string reports_to_json(const std::vector<ScenarioReport>& reports, unsigned seed,
                            bool timings = false);
std::string reports_to_text(const std::vector<ScenarioReport>& reports, bool timings = false);

/// Structural validation against the shipped schema.  Supports the subset
/// of JSON Schema the schema file uses: type, required, properties, items
/// and enum.
bool validate_report_json(const std::string& report_json, const std::string& schema_json,
                          std::string* error = nullptr);

} // namespace mil

#endif
