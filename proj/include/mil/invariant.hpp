#ifndef MIL_INVARIANT_HPP
#define MIL_INVARIANT_HPP

#include "mil/group.hpp"
#include "mil/poly.hpp"

#include <optional>
#include <vector>

namespace mil {

/// A multiplicative character of a matrix group, stored as one field value
/// per element in the group's canonical order.
class Character {
public:
    /// Default-constructed characters are empty placeholders; usable ones
    /// come from trivial or from_values.
    Character() = default;

    static Character trivial(MatrixGroup g);
    static Character from_values(MatrixGroup g, std::vector<fval> values);

    const MatrixGroup& group() const { return g_; }
    fval value(std::size_t i) const { return vals_[i]; }
    fval value_of(const Matrix& m) const;
    bool is_trivial() const;
    Character inverse() const;
    bool operator==(const Character& other) const { return vals_ == other.vals_ && g_ == other.g_; }

private:
    MatrixGroup g_;
    std::vector<fval> vals_;
};

/// The character by which g scales f, when f is a semi-invariant.
std::optional<Character> character_of_semi_invariant(const MatrixGroup& g, const Polynomial& f);

/// Canonical basis of the degree-d invariants, via kernels of the induced
/// action of the generators on the monomial basis.
std::vector<Polynomial> invariant_space(const MatrixGroup& g, unsigned d);

struct GradedDims {
    std::vector<unsigned> dims; // dims[d] for d = 0 .. truncation
    unsigned truncation() const { return static_cast<unsigned>(dims.size()) - 1; }
};

GradedDims hilbert_function(const MatrixGroup& g, unsigned truncation);

std::vector<Polynomial> semi_invariant_space(const MatrixGroup& g, const Character& chi, unsigned d);

Polynomial transfer(const MatrixGroup& g, const Polynomial& f);
Polynomial twisted_transfer(const MatrixGroup& g, const Character& chi, const Polynomial& f);
/// Sum over right coset representatives of h in g; composing the h-transfer
/// with this recovers the g-transfer.
Polynomial relative_transfer(const MatrixGroup& g, const MatrixGroup& h, const Polynomial& f);

struct CoinvariantBound {
    unsigned bound = 0;    // monomials of degree < bound generate A over A^G
    bool certified = true; // false when the degree budget ran out first
};

CoinvariantBound coinvariant_bound(const MatrixGroup& g, unsigned budget_degree = 64);

struct DegreeCheck {
    unsigned degree = 0;
    bool pass = false;
    unsigned expected_dim = 0; // dim A^G_degree
    unsigned spanned_dim = 0;  // dim of the subalgebra's graded piece
};

/// Degreewise test that the given invariants generate A^G up to max_degree.
std::vector<DegreeCheck> algebra_generation_check(const MatrixGroup& g, const std::vector<Polynomial>& gens,
                                                  unsigned max_degree);

/// The same group with matrix entries embedded into GF(q^s).
MatrixGroup lift_group(const MatrixGroup& g, unsigned s);
Polynomial lift_polynomial(const Polynomial& f, const FieldPtr& sup);

} // namespace mil

#endif
