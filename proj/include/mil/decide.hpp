#ifndef MIL_DECIDE_HPP
#define MIL_DECIDE_HPP

#include "mil/different.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mil {

enum class DspOutcome { holds, fails, inconclusive };

struct DspVerdict {
    DspOutcome outcome = DspOutcome::inconclusive;
    Polynomial witness;      // preimage of theta under the twisted transfer, when it holds
    std::string obstruction; // tag when it fails, note when inconclusive
};

/// Decides the direct summand property by solving for a degree-delta
/// preimage of theta under the twisted transfer.  Requires certified
/// exponents; dimension of the solve is capped to keep runs bounded.
DspVerdict dsp_decide(const MatrixGroup& g, const DifferentData& diff, unsigned dim_cap = 2000);

/// Necessary condition for p-groups: a p-group whose transvections do not
/// generate it cannot be a direct summand.  Silent (inconclusive) when they
/// do generate.
DspVerdict dsp_pgroup_criterion(const MatrixGroup& g);

struct CoregularityBudget {
    std::size_t tuple_cap = 4096; // basis-aligned tuples tried per multiset
    unsigned random_tries = 128;  // seeded random combinations per multiset
    unsigned seed = 2024;
    unsigned max_lift = 3; // scalar extensions GF(q^s) tried, s = 2..max_lift
};

struct CoregularityVerdict {
    enum class Status { coregular, not_coregular, inconclusive };
    Status status = Status::inconclusive;
    std::vector<unsigned> degrees; // certified generator degrees when coregular
    std::vector<Polynomial> hsop;  // certified system of parameters
    FieldPtr hsop_field;           // field of the witnesses, possibly an extension
    std::string obstruction;
    std::vector<std::string> notes; // one line per rejected or unresolved multiset
};

/// Decides whether the invariant ring is a polynomial ring: arithmetic and
/// Hilbert-series filters reject impossible generator-degree multisets, and
/// a certified system of parameters in invariant degrees proves the rest.
CoregularityVerdict coregularity_decide(const MatrixGroup& g, const DifferentData& diff,
                                        const CoregularityBudget& budget = {});

/// Criterion for abelian p-groups, where the direct summand property and
/// coregularity are equivalent.
DspVerdict dsp_abelian_criterion(const MatrixGroup& g, const DifferentData& diff,
                                 const CoregularityBudget& budget = {});

struct SerreCheck {
    bool applicable = false; // only coregular verdicts constrain the group
    bool passed = true;      // coregular groups must be reflection groups
};

SerreCheck serre_check(const MatrixGroup& g, const CoregularityVerdict& verdict);

struct DegreeIdentities {
    bool product_matches = false; // product of degrees = group order
    bool sum_matches = false;     // sum of (degree - 1) = degree of theta
};

DegreeIdentities degree_identities(const std::vector<unsigned>& degrees, std::size_t order,
                                   unsigned delta);

struct ContractionCheck {
    bool holds = true;
    unsigned degree = 0; // first degree where expansion-contraction grows
    Polynomial witness;  // invariant in the expanded ideal but not the original
};

/// Degreewise test that extending an invariant ideal to the full ring and
/// contracting back gives the ideal itself.
ContractionCheck ideal_contraction_check(const MatrixGroup& g, const std::vector<Polynomial>& gens,
                                         unsigned max_degree);

/// Deduplicated spans of small subsets of a fixed sample-vector pool.
std::vector<Subspace> sample_subspaces(const MatrixGroup& g);

struct InheritanceCaseResult {
    Subspace subspace;
    std::size_t stabilizer_order = 0;
    std::optional<DspOutcome> dsp; // absent when that premise was off
    std::optional<CoregularityVerdict::Status> coreg;
};

struct InheritanceReport {
    std::vector<InheritanceCaseResult> cases;
    unsigned violations = 0; // property failed on a stabilizer despite the premise
    unsigned unresolved = 0; // budget ran out before a stabilizer was decided
};

/// Checks that pointwise stabilizers of sampled subspaces inherit the
/// direct summand property and coregularity from the ambient group, for
/// whichever premises are asserted.
InheritanceReport inheritance_check(const MatrixGroup& g, bool dsp_premise, bool coreg_premise,
                                    const CoregularityBudget& budget = {});

} // namespace mil

#endif
