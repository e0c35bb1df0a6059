#ifndef MIL_GROUP_HPP
#define MIL_GROUP_HPP

#include "mil/linalg.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mil {

/// Thrown when group enumeration would exceed the configured cap; carries
/// the partial element count reached before giving up.
struct CapExceeded : std::runtime_error {
    CapExceeded(std::size_t found, std::size_t cap)
        : std::runtime_error("group enumeration exceeded the cap of " + std::to_string(cap) +
                             " elements (at least " + std::to_string(found) + " found)"),
          partial(found) {}
    std::size_t partial;
};

struct ElementInfo {
    unsigned order = 0;
    unsigned fixed_dim = 0;
    bool pseudo_reflection = false;
    bool transvection = false;
};

bool is_pseudo_reflection(const Matrix& g);
bool is_transvection(const Matrix& g);
unsigned element_order(const Matrix& g);
ElementInfo classify_element(const Matrix& g);

/// A fully enumerated finite matrix group.  Elements are stored sorted by
/// the canonical matrix order (shape, then the row-major entry tuple), so
/// indices, coset choices, and reports are deterministic.  Immutable after
/// construction; per-element classification is precomputed.
class MatrixGroup {
public:
    /// Default-constructed groups are empty placeholders; every usable
    /// group comes from closure, from_elements, or trivial.
    MatrixGroup() = default;

    /// Enumeration size limit: 10^6 by default, overridable through the
    /// MIL_CAP environment variable (read on each call).
    static std::size_t default_cap();

    static MatrixGroup closure(const std::vector<Matrix>& generators, std::size_t cap = 0);
    /// Wraps an already-complete element list; closure under products and
    /// the presence of the identity are verified (exhaustively up to 1000
    /// elements, sampled above that).
    static MatrixGroup from_elements(std::vector<Matrix> elements,
                                     std::vector<Matrix> generators = {});
    static MatrixGroup trivial(const FieldPtr& f, unsigned n);

    const FieldPtr& field() const { return f_; }
    unsigned dim() const { return n_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<Matrix>& elements() const { return elems_; }
    const std::vector<Matrix>& generators() const { return gens_; }
    const Matrix& element(std::size_t i) const { return elems_[i]; }
    const ElementInfo& info(std::size_t i) const { return info_[i]; }

    bool contains(const Matrix& g) const;
    std::optional<std::size_t> index_of(const Matrix& g) const;
    bool is_subgroup_of(const MatrixGroup& bigger) const;
    bool is_abelian() const;
    /// True when |G| is a power of the field characteristic.
    bool is_p_group() const;
    Matrix identity() const { return Matrix::identity(f_, n_); }

    bool operator==(const MatrixGroup& o) const { return f_ == o.f_ && elems_ == o.elems_; }
    bool operator!=(const MatrixGroup& o) const { return !(*this == o); }
    std::size_t hash() const;

private:
    void finalize();
    FieldPtr f_;
    unsigned n_ = 0;
    std::vector<Matrix> gens_;
    std::vector<Matrix> elems_;
    std::vector<ElementInfo> info_;
};

/// Subgroup fixing a subspace pointwise.
MatrixGroup point_stabilizer(const MatrixGroup& g, const Subspace& u);

struct ReflectionCensus {
    std::vector<Matrix> pseudo_reflections;
    std::vector<Matrix> transvections; // the unipotent ones among them
};

ReflectionCensus reflection_census(const MatrixGroup& g);
MatrixGroup reflection_subgroup(const MatrixGroup& g);
MatrixGroup transvection_subgroup(const MatrixGroup& g);

/// Right coset decomposition G = union of H g_i, H fixed.
struct CosetDecomposition {
    std::vector<Matrix> representatives;
};

CosetDecomposition right_cosets(const MatrixGroup& g, const MatrixGroup& h);

/// Result of stripping coordinates the whole group fixes, when the
/// remaining coordinates span a stable complement.
struct SplitResult {
    bool split = false;
    MatrixGroup restricted;        // equals the input group when !split
    std::vector<unsigned> kept;    // 0-based coordinates of the active block
    std::vector<unsigned> dropped; // pointwise-fixed coordinates removed
};

SplitResult split_trivial_summand(const MatrixGroup& g);

std::string group_to_json(const MatrixGroup& g);
MatrixGroup group_from_json(const std::string& text);

} // namespace mil

#endif
