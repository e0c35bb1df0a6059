#ifndef MIL_FAMILIES_HPP
#define MIL_FAMILIES_HPP

#include "mil/group.hpp"
#include "mil/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mil {

/// Writes q = p^r with p prime; rejects non prime powers.
std::pair<unsigned, unsigned> factor_prime_power(unsigned q);

/// A classical form together with the predicate its isometries satisfy.
struct FormSpec {
    enum class Kind { hermitian, alternating, symmetric_bilinear, quadratic };
    Kind kind;
    Matrix gram;
    Polynomial quadratic; // set only for Kind::quadratic

    static FormSpec hermitian(Matrix j);
    static FormSpec alternating(Matrix j);
    static FormSpec symmetric_bilinear(Matrix j);
    static FormSpec quadratic_form(Polynomial q);
};

bool form_membership(const Matrix& g, const FormSpec& form);

/// Point stabilizers of <e_3> in the three-dimensional unitary group over
/// GF(q^2), with the diagonal twist tau of order q+1 and the chain of
/// intermediate subgroups.  H_m is the subgroup whose middle diagonal
/// entry runs over the m-th roots of unity, so |H_m| = m q^3, H_1 is the
/// special-unitary stabilizer and H_{q+1} the full one.
struct Gu3Data {
    FieldPtr field; // GF(q^2)
    unsigned q = 0;
    fval eta = 0; // primitive (q+1)-th root of unity
    Matrix tau;
    MatrixGroup H;      // = H_{q+1}
    MatrixGroup Htilde; // = H_1
    std::vector<std::pair<unsigned, MatrixGroup>> subgroups; // (m, H_m), m | q+1
    FormSpec form;
};

Gu3Data gu3_stabilizers(unsigned q);

/// A block-unitriangular abelian transvection group together with the
/// normalizer generators and the form its big group preserves.
struct TransvectionFamily {
    FieldPtr field;
    unsigned q = 0;
    unsigned block = 0; // acts on k^{2*block}
    MatrixGroup group;
    std::vector<Matrix> normalizer_gens;
    FormSpec form;
};

/// B anti-hermitian over GF(q^2); order q^{n^2}.
TransvectionFamily unitary_transvection_family(unsigned q, unsigned n);
/// B symmetric over GF(q); order q^{m(m+1)/2}.
TransvectionFamily symplectic_stabilizer(unsigned q, unsigned m);
/// B alternating over GF(q), q odd; order q^{m(m-1)/2}.
TransvectionFamily orthogonal_plus_stabilizer_odd(unsigned q, unsigned m);
/// B symmetric with zero diagonal over GF(q), q even; order q^{m(m-1)/2}.
TransvectionFamily orthogonal_plus_stabilizer_even(unsigned q, unsigned m);

/// Point stabilizers of <e_3> in the orthogonal group of 2 x1 x3 + x2^2
/// over GF(q), q odd: H has order 2q, its index-two part Hminus order q.
struct Go3Data {
    FieldPtr field;
    MatrixGroup H;
    MatrixGroup Hminus;
    FormSpec form;
};

Go3Data go3_stabilizers(unsigned q);

/// The symmetric group S_m in characteristic p | m on the quotient of the
/// sum-zero submodule by the all-ones vector, with the block subgroup and
/// the distinguished subspaces used by its stabilizer arguments.
/// Coordinates are taken in the images of e_1-e_2, e_2-e_3, ...,
/// e_{m-2}-e_{m-1}.
struct SymmetricFamilyData {
    FieldPtr field; // F_p
    unsigned p = 0, m = 0, mprime = 0;
    std::vector<Matrix> sm_generators; // images of (1 2) and (1 2 ... m)
    MatrixGroup group;                 // the full image of S_m
    MatrixGroup H;                     // image of the block product of S_p's
    Matrix sigma;                      // image of the product of p-cycles
    Subspace U1;                       // image of <v_1, ..., v_{m'}>
    std::optional<Subspace> U;         // image of U1 + <w>, when defined
};

SymmetricFamilyData symmetric_family(unsigned p, unsigned m);

/// Matrix of a permutation (0-based images) in the quotient coordinates
/// used by symmetric_family.
Matrix symmetric_family_matrix(const FieldPtr& f, unsigned m, const std::vector<unsigned>& perm);

MatrixGroup s3_permutation_group();                         // inside GL_3(F_7)
MatrixGroup diagonal_cyclic_group(unsigned q, unsigned m);  // diag(lambda, 1), m | q-1
MatrixGroup transvection_hyperplane_group(unsigned q);      // all lower 2x2 unipotents
std::vector<MatrixGroup> sanity_groups();

} // namespace mil

#endif
