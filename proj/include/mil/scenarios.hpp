#ifndef MIL_SCENARIOS_HPP
#define MIL_SCENARIOS_HPP

#include "mil/decide.hpp"
#include "mil/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mil {

struct ScenarioParams {
    std::optional<unsigned> q;
    std::optional<unsigned> n;
    std::optional<unsigned> m;
    std::optional<unsigned> p;
    unsigned max_degree = 0; // 0 keeps each scenario's own depth
    unsigned budget = 1;     // multiplies the search budgets
    unsigned seed = 0;
    bool recheck = false;    // reparse and reverify every reported witness
};

struct ScenarioInfo {
    std::string name;
    std::string section; // cross-reference label
    std::string anchor;  // quote locating the verified statements
    std::string summary;
};

/// The built-in scenarios in catalog order; "all" is expanded by callers.
const std::vector<ScenarioInfo>& scenario_catalog();

bool is_known_scenario(const std::string& name);

/// Runs one scenario.  Unknown names raise std::invalid_argument; an
/// enumeration cap overflow becomes a failing claim in the report.
ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params = {});

/// Runs the named scenarios, on up to jobs threads, and returns the
/// reports sorted by scenario name regardless of completion order.
std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names,
                                          const ScenarioParams& params = {}, unsigned jobs = 1);

/// A named group from the catalog's constructions together with its
/// decided properties, used by the inheritance and sanity scenarios.
struct CorpusVerdict {
    std::string name;
    MatrixGroup group;
    DifferentData diff;
    DspOutcome dsp = DspOutcome::inconclusive;
    CoregularityVerdict coreg;
};

std::vector<CorpusVerdict> corpus_verdicts(const CoregularityBudget& budget = {});

/// Text description of a named group construction.  Specs look like
/// "gu3:q=2:sub=Htilde", "unitary:q=2:n=2", "symplectic:q=3:m=2",
/// "orthogonal-odd:q=3:m=2", "orthogonal-even:q=2:m=2", "go3:q=3:sub=Hminus",
/// "symmetric:p=2:m=6:sub=H", "s3", "diag:q=7:m=3", "transvection:q=3",
/// "trivial:q=3:n=2".  Bad specs raise std::invalid_argument.
std::string describe_group(const std::string& spec);

} // namespace mil

#endif
