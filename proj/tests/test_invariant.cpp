#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mil/families.hpp"
#include "mil/invariant.hpp"

#include <algorithm>

using namespace mil;

namespace {

/// Invariants computed the slow way, intersecting over every element.
std::vector<Polynomial> invariants_by_all_elements(const MatrixGroup& g, unsigned d) {
    const MatrixGroup full = MatrixGroup::from_elements(g.elements(), g.elements());
    return invariant_space(full, d);
}

Subspace poly_span(const DegreeBasis& basis, const std::vector<Polynomial>& polys) {
    std::vector<std::vector<fval>> rows;
    for (const Polynomial& p : polys) rows.push_back(basis.to_vec(p));
    return rows.empty() ? Subspace::zero(basis.field(), basis.dim())
                        : Subspace::from_vectors(basis.field(), basis.dim(), rows);
}

} // namespace

TEST_CASE("characters validate and divide out") {
    const MatrixGroup s3 = s3_permutation_group();
    const Character triv = Character::trivial(s3);
    CHECK(triv.is_trivial());
    CHECK(triv.value_of(s3.element(2)) == 1);

    const MatrixGroup diag = diagonal_cyclic_group(7, 3);
    // the determinant is a character; build it by hand
    std::vector<fval> det_vals;
    for (const Matrix& m : diag.elements()) det_vals.push_back(m.at(0, 0));
    const Character det = Character::from_values(diag, det_vals);
    CHECK_FALSE(det.is_trivial());
    for (std::size_t i = 0; i < diag.order(); ++i)
        CHECK(diag.field()->mul(det.value(i), det.inverse().value(i)) == 1);

    CHECK_THROWS_AS(Character::from_values(diag, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Character::from_values(diag, {1, 0, 1}), std::invalid_argument);
    std::vector<fval> bad = det_vals;
    bad[*diag.index_of(diag.identity())] = 2; // a character sends the identity to 1
    CHECK_THROWS_AS(Character::from_values(diag, bad), std::invalid_argument);
}

TEST_CASE("semi-invariant character recovery") {
    const Gu3Data data = gu3_stabilizers(2);
    const FieldPtr f = data.field;
    const Polynomial h = orbit_product(data.Htilde.elements(), Polynomial::variable(f, 3, 1)).product;
    CHECK(h == Polynomial::parse(f, 3, "x2^4 + x1^3*x2"));

    const auto chi = character_of_semi_invariant(data.H, h);
    REQUIRE(chi.has_value());
    CHECK(chi->value_of(data.tau) == data.eta);
    CHECK_FALSE(chi->is_trivial());

    // an actual invariant has the trivial character
    const Polynomial x1 = Polynomial::variable(f, 3, 0);
    const auto chi1 = character_of_semi_invariant(data.H, x1);
    REQUIRE(chi1.has_value());
    CHECK(chi1->is_trivial());

    // x2 itself is moved off its own line
    CHECK_FALSE(character_of_semi_invariant(data.H, Polynomial::variable(f, 3, 1)).has_value());
}

TEST_CASE("invariant spaces of the trivial group count all monomials") {
    const MatrixGroup triv = MatrixGroup::trivial(make_field(3, 1), 2);
    const GradedDims dims = hilbert_function(triv, 6);
    for (unsigned d = 0; d <= 6; ++d) CHECK(dims.dims[d] == d + 1);
}

TEST_CASE("generator kernels agree with intersecting over all elements") {
    const Gu3Data data = gu3_stabilizers(2);
    const TransvectionFamily fam = unitary_transvection_family(2, 2);
    const MatrixGroup s3 = s3_permutation_group();
    for (unsigned d = 1; d <= 4; ++d) {
        CHECK(invariant_space(data.H, d).size() == invariants_by_all_elements(data.H, d).size());
        CHECK(invariant_space(fam.group, d).size() == invariants_by_all_elements(fam.group, d).size());
        CHECK(invariant_space(s3, d).size() == invariants_by_all_elements(s3, d).size());
    }
}

TEST_CASE("unitary stabilizer invariants of low degree") {
    const Gu3Data data = gu3_stabilizers(2);
    const FieldPtr f = data.field;

    const std::vector<Polynomial> deg1 = invariant_space(data.H, 1);
    REQUIRE(deg1.size() == 1);
    CHECK(deg1[0] == Polynomial::variable(f, 3, 0));

    const Polynomial big = Polynomial::parse(f, 3, "x1*x3^2 + x2^3 + x3*x1^2");
    const DegreeBasis basis3(f, 3, 3);
    const std::vector<Polynomial> deg3 = invariant_space(data.H, 3);
    CHECK(poly_span(basis3, deg3).contains(basis3.to_vec(big)));

    // graded dimensions decompose over the powers of h
    const GradedDims dh = hilbert_function(data.H, 12);
    const GradedDims dht = hilbert_function(data.Htilde, 12);
    CHECK(dh.dims[0] == 1);
    CHECK(dh.dims[1] == 1);
    CHECK(dht.dims[1] == 1);
    for (unsigned d = 0; d <= 12; ++d) {
        unsigned expect = 0;
        for (unsigned i = 0; i <= 2; ++i)
            if (d >= 4 * i) expect += dh.dims[d - 4 * i];
        CHECK(dht.dims[d] == expect);
    }
}

TEST_CASE("hilbert dimensions start at the fixed linear forms") {
    const TransvectionFamily fam = unitary_transvection_family(2, 2);
    const GradedDims dims = hilbert_function(fam.group, 2);
    CHECK(dims.dims[0] == 1);
    CHECK(dims.dims[1] == 2); // x1, x2 are the fixed forms
}

TEST_CASE("semi-invariant spaces refine the invariants") {
    const Gu3Data data = gu3_stabilizers(2);
    const FieldPtr f = data.field;
    const Polynomial h = Polynomial::parse(f, 3, "x2^4 + x1^3*x2");
    const Character chi = *character_of_semi_invariant(data.H, h);

    const DegreeBasis basis4(f, 3, 4);
    const std::vector<Polynomial> semi = semi_invariant_space(data.H, chi, 4);
    CHECK(poly_span(basis4, semi).contains(basis4.to_vec(h)));

    // the trivial character recovers the invariants in every degree
    for (unsigned d = 1; d <= 5; ++d) {
        const auto inv = invariant_space(data.H, d);
        const auto semi_triv = semi_invariant_space(data.H, Character::trivial(data.H), d);
        CHECK(inv.size() == semi_triv.size());
        const DegreeBasis basis(f, 3, d);
        CHECK(poly_span(basis, inv) == poly_span(basis, semi_triv));
    }
}

TEST_CASE("transfer sums over the group") {
    const FieldPtr f3 = make_field(3, 1);
    const MatrixGroup tv = transvection_hyperplane_group(3);
    CHECK(transfer(tv, Polynomial::constant(f3, 2, 1)).is_zero());
    CHECK(transfer(tv, Polynomial::parse(f3, 2, "x2^2")) == Polynomial::parse(f3, 2, "2*x1^2"));

    // non-modular groups average back to the identity on invariants
    const MatrixGroup s3 = s3_permutation_group();
    const FieldPtr f7 = s3.field();
    const Polynomial e1 = Polynomial::parse(f7, 3, "x1 + x2 + x3");
    CHECK(transfer(s3, e1.scaled(f7->inv(f7->embed_int(6)))) == e1);

    // the transfer lands in the invariant ring and is linear over it
    const Polynomial sample = Polynomial::parse(f7, 3, "x1^2*x2 + 3*x3");
    const Polynomial tr = transfer(s3, sample);
    for (const Matrix& m : s3.generators()) CHECK(act(m, tr) == tr);
    CHECK(transfer(s3, e1 * sample) == e1 * tr);
}

TEST_CASE("relative transfer composes through cosets") {
    const MatrixGroup s3 = s3_permutation_group();
    const Subspace e1_line = Subspace::from_vectors(s3.field(), 3, {{1, 0, 0}});
    const MatrixGroup s2 = point_stabilizer(s3, e1_line);
    REQUIRE(s2.order() == 2);

    const Polynomial sample = Polynomial::parse(s3.field(), 3, "x1^2*x2 + x3");
    CHECK(transfer(s3, sample) == transfer(s2, relative_transfer(s3, s2, sample)));

    const Gu3Data data = gu3_stabilizers(2);
    const Polynomial sample2 = Polynomial::parse(data.field, 3, "x2^2*x3 + g*x1");
    CHECK(transfer(data.H, sample2) == transfer(data.Htilde, relative_transfer(data.H, data.Htilde, sample2)));
}

TEST_CASE("coinvariant bounds") {
    CHECK(coinvariant_bound(MatrixGroup::trivial(make_field(5, 1), 2)).bound == 1);

    const CoinvariantBound s3_bound = coinvariant_bound(s3_permutation_group());
    CHECK(s3_bound.bound == 4); // degrees 1,2,3 give top coinvariant degree 3
    CHECK(s3_bound.certified);

    CHECK(coinvariant_bound(transvection_hyperplane_group(3)).bound == 3);
    CHECK(coinvariant_bound(transvection_hyperplane_group(4)).bound == 4);
    CHECK(coinvariant_bound(diagonal_cyclic_group(7, 3)).bound == 3);

    const CoinvariantBound capped = coinvariant_bound(s3_permutation_group(), 2);
    CHECK_FALSE(capped.certified);
    CHECK(capped.bound == 2);
}

TEST_CASE("algebra generation checks") {
    const FieldPtr f3 = make_field(3, 1);
    const MatrixGroup triv = MatrixGroup::trivial(f3, 2);
    const std::vector<Polynomial> coords{Polynomial::variable(f3, 2, 0), Polynomial::variable(f3, 2, 1)};
    for (const DegreeCheck& c : algebra_generation_check(triv, coords, 6)) CHECK(c.pass);

    const Gu3Data data = gu3_stabilizers(2);
    const FieldPtr f = data.field;
    const Polynomial x1 = Polynomial::variable(f, 3, 0);
    const Polynomial big = Polynomial::parse(f, 3, "x1*x3^2 + x2^3 + x3*x1^2");
    const Polynomial norm3 = orbit_product(data.Htilde.elements(), Polynomial::variable(f, 3, 2)).product;
    CHECK(norm3.degree() == 8);
    const Polynomial h = Polynomial::parse(f, 3, "x2^4 + x1^3*x2");

    for (const DegreeCheck& c : algebra_generation_check(data.Htilde, {x1, big, norm3, h}, 12)) CHECK(c.pass);

    const auto partial = algebra_generation_check(data.Htilde, {x1, big, norm3}, 4);
    for (const DegreeCheck& c : partial) {
        if (c.degree < 4) {
            CHECK(c.pass);
        } else {
            CHECK_FALSE(c.pass); // h is missing
            CHECK(c.expected_dim == c.spanned_dim + 1);
        }
    }

    CHECK_THROWS_AS(algebra_generation_check(data.Htilde, {Polynomial::variable(f, 3, 1)}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(algebra_generation_check(triv, {Polynomial::parse(f3, 2, "x1 + x2^2")}, 2),
                    std::invalid_argument);
}

TEST_CASE("field extension lifts") {
    const MatrixGroup s3 = s3_permutation_group();
    const MatrixGroup lifted = lift_group(s3, 2);
    CHECK(lifted.order() == 6);
    CHECK(lifted.field()->q == 49);

    const TransvectionFamily fam = unitary_transvection_family(2, 2);
    const MatrixGroup big = lift_group(fam.group, 2);
    CHECK(big.order() == 16);
    CHECK(big.field()->q == 16);

    // lifted invariants stay invariant
    const Polynomial e1 = Polynomial::parse(s3.field(), 3, "x1 + x2 + x3");
    const Polynomial lifted_e1 = lift_polynomial(e1, lifted.field());
    for (const Matrix& m : lifted.generators()) CHECK(act(m, lifted_e1) == lifted_e1);

    CHECK_THROWS_AS(lift_group(s3, 0), std::invalid_argument);
}
