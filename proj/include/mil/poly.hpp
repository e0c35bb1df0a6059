#ifndef MIL_POLY_HPP
#define MIL_POLY_HPP

#include "mil/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mil {

/// Monomials are packed into a word, one exponent byte per variable
/// (variable x1 in the low byte).  This caps supported instances at 8
/// variables and total degree 255, which covers every group this toolkit
/// is meant for; constructors enforce the caps loudly.
using Mono = std::uint64_t;

constexpr unsigned kMaxVars = 8;
constexpr unsigned kMaxDegree = 255;

inline unsigned mono_exp(Mono m, unsigned var) { return (m >> (8 * var)) & 0xFF; }
unsigned mono_degree(Mono m);
Mono mono_pack(const std::vector<unsigned>& exps);
std::vector<unsigned> mono_exponents(Mono m, unsigned nvars);
Mono mono_mul(Mono a, Mono b);
bool mono_divides(Mono a, Mono b); // a | b
Mono mono_div(Mono b, Mono a);     // b / a, requires divisibility

/// Graded reverse lexicographic order with x1 < x2 < ... < xn: lower total
/// degree first; on equal degree, the monomial with the larger exponent at
/// the first differing variable (scanning from x1 up) comes first.
bool grevlex_less(Mono a, Mono b);

/// All monomials in n variables of total degree d, ascending grevlex.
std::vector<Mono> homogeneous_basis(unsigned nvars, unsigned d);

struct Term {
    Mono m;
    fval c;
    bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

/// Multivariate polynomial over a finite field with a canonical term
/// layout: terms sorted ascending in grevlex, zero coefficients dropped.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(FieldPtr field, unsigned nvars) : f(std::move(field)), n(nvars) { check_vars(); }

    static Polynomial zero(const FieldPtr& f, unsigned nvars) { return Polynomial(f, nvars); }
    static Polynomial constant(const FieldPtr& f, unsigned nvars, fval c);
    static Polynomial variable(const FieldPtr& f, unsigned nvars, unsigned var);
    static Polynomial monomial(const FieldPtr& f, unsigned nvars,
                               const std::vector<unsigned>& exps, fval c);
    static Polynomial from_terms(const FieldPtr& f, unsigned nvars, std::vector<Term> terms);
    /// Homogeneous linear form sum_i coeffs[i] * x_{i+1}.
    static Polynomial linear_form(const FieldPtr& f, const std::vector<fval>& coeffs);

    const FieldPtr& field() const { return f; }
    unsigned nvars() const { return n; }
    const std::vector<Term>& terms() const { return ts; }
    bool is_zero() const { return ts.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    fval coefficient_of(Mono m) const;
    Term lead_term() const; // grevlex-greatest term, requires nonzero
    Polynomial homogeneous_component(unsigned d) const;
    Polynomial make_monic() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(fval c) const;
    Polynomial pow(unsigned e) const;
    /// The p^k-th power map: coefficients through Frobenius, exponents
    /// scaled; exact in characteristic p.
    Polynomial frobenius_power(unsigned k) const;

    bool operator==(const Polynomial& o) const { return n == o.n && ts == o.ts && f == o.f; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const;
    std::size_t hash() const;

    fval evaluate(const std::vector<fval>& point) const;

    std::string str() const;
    static Polynomial parse(const FieldPtr& f, unsigned nvars, std::string_view text);

private:
    void check_vars() const;
    friend class LinearSubstitution;
    FieldPtr f;
    unsigned n = 0;
    std::vector<Term> ts;
};

/// Substitution of every variable by a fixed polynomial (rows), with
/// memoized row powers so repeated applications stay cheap.
class LinearSubstitution {
public:
    LinearSubstitution(FieldPtr f, unsigned nvars, std::vector<Polynomial> rows);
    /// Substitution x_j -> (row j of m) . x used by the group action.
    static LinearSubstitution from_matrix_rows(const Matrix& m);
    Polynomial apply(const Polynomial& g) const;

private:
    const Polynomial& row_power(unsigned var, unsigned e) const;
    FieldPtr f;
    unsigned n;
    std::vector<Polynomial> rows_;
    mutable std::vector<std::vector<Polynomial>> pows_;
};

/// Contravariant action (g . f)(v) = f(g^{-1} v): substitutes x_j by the
/// j-th row of g^{-1} applied to the variable vector.
Polynomial act(const Matrix& g, const Polynomial& f);
/// Substitution cache for acting many times with the same g.
LinearSubstitution action_substitution(const Matrix& g);
/// Plain composition f(g v), no inverse.
Polynomial compose_linear(const Polynomial& f, const Matrix& g);

struct DivisionByLinear {
    bool exact = false;
    Polynomial quotient;
    Polynomial remainder; // the failure witness when not exact
};

/// Division with remainder by a nonzero linear form.
DivisionByLinear divide_by_linear(const Polynomial& f, const Polynomial& ell);

/// Coefficient coordinates on the homogeneous piece of one degree.
class DegreeBasis {
public:
    DegreeBasis(FieldPtr f, unsigned nvars, unsigned d);
    const FieldPtr& field() const { return f_; }
    unsigned nvars() const { return n_; }
    unsigned dim() const { return static_cast<unsigned>(monos_.size()); }
    unsigned degree() const { return d_; }
    Mono mono(unsigned i) const { return monos_[i]; }
    unsigned index(Mono m) const;
    std::vector<fval> to_vec(const Polynomial& g) const;
    Polynomial from_vec(const std::vector<fval>& v) const;
    /// Rows of the returned matrix are the coefficient vectors of the polys.
    Matrix rows_from(const std::vector<Polynomial>& polys) const;

private:
    FieldPtr f_;
    unsigned n_, d_;
    std::vector<Mono> monos_;
    std::unordered_map<Mono, unsigned> index_;
};

/// Degree-d slice of the ideal generated by homogeneous polynomials, as a
/// subspace of the degree-d coefficient space.
Subspace ideal_graded_piece(const std::vector<Polynomial>& gens, unsigned d,
                            const DegreeBasis& basis);

struct OrbitProduct {
    Polynomial product;
    unsigned orbit_size = 0;
    unsigned stabilizer_order = 0;
};

/// Product of the distinct images of f under the listed group elements.
/// The element list must be a full group; the orbit-stabilizer identity
/// |orbit| * |stabilizer| = |G| is asserted.
OrbitProduct orbit_product(const std::vector<Matrix>& group_elements, const Polynomial& f);

} // namespace mil

#endif
