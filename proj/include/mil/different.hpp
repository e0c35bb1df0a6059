#ifndef MIL_DIFFERENT_HPP
#define MIL_DIFFERENT_HPP

#include "mil/invariant.hpp"

#include <string>
#include <vector>

namespace mil {

struct HyperplaneRecord {
    Polynomial form;     // monic linear form cutting the hyperplane
    MatrixGroup inertia; // pointwise stabilizer W_alpha
    unsigned e_alpha;    // tame cyclic part, |W_alpha| / q_alpha
    unsigned q_alpha;    // transvections in W_alpha plus the identity
    std::size_t orbit;   // index into ReflectionArrangement::orbits
};

struct ReflectionArrangement {
    std::vector<HyperplaneRecord> hyperplanes;
    std::vector<std::vector<std::size_t>> orbits;
};

/// Reflecting hyperplanes of the group with inertia data, grouped into
/// orbits of the ambient action.
ReflectionArrangement reflection_arrangement(const MatrixGroup& g);

struct DifferentBudget {
    unsigned witness_degree = 24;     // scan depth for maximality witnesses
    std::size_t witness_count = 5000; // monomials tried per orbit
    unsigned cov_degree = 20;         // fallback module-generator bound depth
};

/// Exponents are certified inside the inertia group of one representative
/// per orbit; the rest of the group is unramified there.
struct DifferentData {
    ReflectionArrangement arrangement;
    std::vector<unsigned> exponents; // per hyperplane, constant on orbits
    Polynomial theta;                // product of hyperplane forms
    Character chi;                   // its character
    unsigned delta = 0;              // degree of theta
    bool certified = true;           // false when budgets ran out first
    unsigned cov_bound = 0;          // largest module-generator bound needed
    /// Per orbit: a polynomial whose twisted transfer over the inertia
    /// group of the first hyperplane in the orbit is not divisible by the
    /// next power of the hyperplane form.
    std::vector<std::string> orbit_witnesses;
};

DifferentData different(const MatrixGroup& g, const DifferentBudget& budget = {});

struct DifferentFactorization {
    Polynomial theta_h;    // factor over the hyperplanes vanishing on U
    Polynomial theta_quot; // complementary factor
    bool quot_vanishes_on_u = false; // must stay false
    bool intrinsic_divides = false;  // theta of H divides theta_h
    bool intrinsic_equal = false;
};

/// Splits the different of g along the point stabilizer h of u.
DifferentFactorization different_factorization(const MatrixGroup& g, const MatrixGroup& h, const Subspace& u,
                                               const DifferentBudget& budget = {});

/// Largest k with ell^k dividing f; f must be nonzero and ell linear.
unsigned multiplicity_of_linear(const Polynomial& f, const Polynomial& ell);

} // namespace mil

#endif
