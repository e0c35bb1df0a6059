#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mil/different.hpp"
#include "mil/families.hpp"

#include <algorithm>
#include <set>

using namespace mil;

namespace {

/// Checks theta against its character on every element.
bool semi_invariant_everywhere(const MatrixGroup& g, const DifferentData& d) {
    for (std::size_t i = 0; i < g.order(); ++i)
        if (act(g.element(i), d.theta) != d.theta.scaled(d.chi.value(i))) return false;
    return true;
}

/// Structural checks every arrangement must satisfy.
void check_arrangement(const MatrixGroup& g, const DifferentData& d) {
    const auto& hs = d.arrangement.hyperplanes;
    std::size_t reflections = 0;
    for (const HyperplaneRecord& rec : hs) {
        CHECK(rec.inertia.order() == static_cast<std::size_t>(rec.e_alpha) * rec.q_alpha);
        reflections += rec.inertia.order() - 1;
        CHECK(rec.form.degree() == 1);
        CHECK(rec.form.lead_term().c == 1);
    }
    CHECK(reflections == reflection_census(g).pseudo_reflections.size());

    std::set<std::size_t> covered;
    for (std::size_t o = 0; o < d.arrangement.orbits.size(); ++o)
        for (std::size_t i : d.arrangement.orbits[o]) {
            CHECK(hs[i].orbit == o);
            covered.insert(i);
        }
    CHECK(covered.size() == hs.size());

    for (std::size_t i = 0; i < hs.size(); ++i) {
        CHECK(d.exponents[i] >= std::max(hs[i].e_alpha - 1, hs[i].q_alpha - 1));
        for (std::size_t j : d.arrangement.orbits[hs[i].orbit]) CHECK(d.exponents[j] == d.exponents[i]);
    }

    CHECK(semi_invariant_everywhere(g, d));
    unsigned total = 0;
    for (unsigned e : d.exponents) total += e;
    CHECK(d.delta == total);
}

/// Re-runs the stored witness for one orbit inside the inertia group of
/// the orbit representative.
bool witness_rechecks(const MatrixGroup& g, const DifferentData& d, std::size_t o) {
    const std::size_t rep = d.arrangement.orbits[o][0];
    const HyperplaneRecord& hr = d.arrangement.hyperplanes[rep];
    const Polynomial theta_hat = hr.form.pow(d.exponents[rep] + 1);
    const auto chi_hat = character_of_semi_invariant(hr.inertia, theta_hat);
    REQUIRE(chi_hat.has_value());
    const Polynomial tt = twisted_transfer(
        hr.inertia, *chi_hat, Polynomial::parse(g.field(), g.dim(), d.orbit_witnesses[o]));
    if (tt.is_zero()) return false;
    return multiplicity_of_linear(tt, hr.form) < d.exponents[rep] + 1;
}

} // namespace

TEST_CASE("multiplicity of a linear factor") {
    const FieldPtr f = make_field(7, 1);
    const Polynomial x1 = Polynomial::variable(f, 2, 0);
    const Polynomial x2 = Polynomial::variable(f, 2, 1);
    const Polynomial prod = x1 * x1 * (x1 + x2);
    CHECK(multiplicity_of_linear(prod, x1) == 2);
    CHECK(multiplicity_of_linear(prod, x1 + x2) == 1);
    CHECK(multiplicity_of_linear(prod, x2) == 0);
    CHECK_THROWS_AS(multiplicity_of_linear(Polynomial::zero(f, 2), x1), std::invalid_argument);
}

TEST_CASE("diagonal cyclic groups are tame with one hyperplane") {
    for (unsigned e : {3u, 6u}) {
        const MatrixGroup g = diagonal_cyclic_group(7, e);
        const DifferentData d = different(g);
        REQUIRE(d.arrangement.hyperplanes.size() == 1);
        const HyperplaneRecord& rec = d.arrangement.hyperplanes[0];
        CHECK(rec.e_alpha == e);
        CHECK(rec.q_alpha == 1);
        CHECK(d.exponents == std::vector<unsigned>{e - 1});
        CHECK(d.theta == Polynomial::variable(g.field(), 2, 0).pow(e - 1));
        CHECK(d.delta == e - 1);
        CHECK(d.certified);
        CHECK(witness_rechecks(g, d, 0));
        check_arrangement(g, d);
    }
}

TEST_CASE("transvection hyperplane groups are wild with one hyperplane") {
    for (unsigned q : {3u, 4u}) {
        const MatrixGroup g = transvection_hyperplane_group(q);
        const DifferentData d = different(g);
        REQUIRE(d.arrangement.hyperplanes.size() == 1);
        const HyperplaneRecord& rec = d.arrangement.hyperplanes[0];
        CHECK(rec.e_alpha == 1);
        CHECK(rec.q_alpha == q);
        CHECK(d.delta == q - 1);
        CHECK(d.theta == Polynomial::variable(g.field(), 2, 0).pow(q - 1));
        CHECK(d.chi.is_trivial());
        CHECK(d.certified);
        CHECK(witness_rechecks(g, d, 0));
        check_arrangement(g, d);
    }
}

TEST_CASE("symmetric group on three letters") {
    const MatrixGroup g = s3_permutation_group();
    const DifferentData d = different(g);
    REQUIRE(d.arrangement.hyperplanes.size() == 3);
    REQUIRE(d.arrangement.orbits.size() == 1);
    CHECK(d.delta == 3);
    CHECK(d.certified);

    const FieldPtr f = g.field();
    const Polynomial x1 = Polynomial::variable(f, 3, 0);
    const Polynomial x2 = Polynomial::variable(f, 3, 1);
    const Polynomial x3 = Polynomial::variable(f, 3, 2);
    CHECK(d.theta == (x2 - x1) * (x3 - x1) * (x3 - x2));

    const Matrix swap12 = Matrix::from_ints(f, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    const Matrix cyc = Matrix::from_ints(f, 3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    CHECK(d.chi.value_of(swap12) == f->neg(1));
    CHECK(d.chi.value_of(cyc) == 1);
    check_arrangement(g, d);
}

TEST_CASE("block unitary stabilizers") {
    const TransvectionFamily fam2 = unitary_transvection_family(2, 2);
    const DifferentData d2 = different(fam2.group);
    CHECK(d2.arrangement.hyperplanes.size() == 5);
    CHECK(d2.arrangement.orbits.size() == 5);
    for (unsigned e : d2.exponents) CHECK(e == 1);
    CHECK(d2.delta == 5);
    CHECK(d2.certified);
    CHECK(d2.chi.is_trivial());
    for (std::size_t o = 0; o < 5; ++o) CHECK(witness_rechecks(fam2.group, d2, o));
    check_arrangement(fam2.group, d2);

    const TransvectionFamily fam3 = unitary_transvection_family(3, 2);
    const DifferentData d3 = different(fam3.group);
    CHECK(d3.arrangement.hyperplanes.size() == 10);
    CHECK(d3.arrangement.orbits.size() == 10);
    for (unsigned e : d3.exponents) CHECK(e == 2);
    CHECK(d3.delta == 20);
    CHECK(d3.certified);
    for (std::size_t o = 0; o < 10; ++o) CHECK(witness_rechecks(fam3.group, d3, o));
    check_arrangement(fam3.group, d3);
}

TEST_CASE("block symplectic stabilizers") {
    const TransvectionFamily fam2 = symplectic_stabilizer(2, 2);
    const DifferentData d2 = different(fam2.group);
    CHECK(d2.arrangement.hyperplanes.size() == 3);
    for (unsigned e : d2.exponents) CHECK(e == 1);
    CHECK(d2.delta == 3);
    CHECK(d2.certified);
    check_arrangement(fam2.group, d2);

    const TransvectionFamily fam3 = symplectic_stabilizer(3, 2);
    const DifferentData d3 = different(fam3.group);
    CHECK(d3.arrangement.hyperplanes.size() == 4);
    for (unsigned e : d3.exponents) CHECK(e == 2);
    CHECK(d3.delta == 8);
    CHECK(d3.certified);
    check_arrangement(fam3.group, d3);
}

TEST_CASE("unitary point stabilizer and its unipotent part") {
    const Gu3Data gu3 = gu3_stabilizers(2);

    const DifferentData dh = different(gu3.H);
    REQUIRE(dh.arrangement.hyperplanes.size() == 5);
    REQUIRE(dh.arrangement.orbits.size() == 2);
    CHECK(dh.delta == 9);
    CHECK(dh.certified);
    unsigned tame = 0, wild = 0;
    for (const HyperplaneRecord& rec : dh.arrangement.hyperplanes) {
        if (rec.q_alpha == 1) {
            CHECK(rec.e_alpha == 3);
            ++tame;
        } else {
            CHECK(rec.q_alpha == 2);
            CHECK(rec.e_alpha == 1);
            ++wild;
        }
    }
    CHECK(tame == 4);
    CHECK(wild == 1);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(dh.exponents[i] == (dh.arrangement.hyperplanes[i].q_alpha == 1 ? 2 : 1));
    check_arrangement(gu3.H, dh);

    const DifferentData dht = different(gu3.Htilde);
    REQUIRE(dht.arrangement.hyperplanes.size() == 1);
    CHECK(dht.delta == 1);
    CHECK(dht.theta == Polynomial::variable(gu3.field, 3, 0));
    CHECK(dht.chi.is_trivial());
    CHECK(dht.certified);
    check_arrangement(gu3.Htilde, dht);
}

TEST_CASE("orthogonal stabilizers in odd characteristic") {
    const Go3Data go3 = go3_stabilizers(3);

    const DifferentData dh = different(go3.H);
    REQUIRE(dh.arrangement.hyperplanes.size() == 3);
    REQUIRE(dh.arrangement.orbits.size() == 1);
    for (const HyperplaneRecord& rec : dh.arrangement.hyperplanes) {
        CHECK(rec.e_alpha == 2);
        CHECK(rec.q_alpha == 1);
    }
    CHECK(dh.delta == 3);
    CHECK(dh.certified);
    const Matrix flip = Matrix::from_ints(go3.field, 3, 3, {1, 0, 0, 0, -1, 0, 0, 0, 1});
    CHECK(dh.chi.value_of(flip) == go3.field->neg(1));
    check_arrangement(go3.H, dh);

    const DifferentData dm = different(go3.Hminus);
    CHECK(dm.arrangement.hyperplanes.empty());
    CHECK(dm.delta == 0);
    CHECK(dm.theta == Polynomial::constant(go3.field, 3, 1));
    CHECK(dm.chi.is_trivial());
    CHECK(dm.certified);
}

TEST_CASE("symmetric family stabilizers") {
    const SymmetricFamilyData p2 = symmetric_family(2, 6);
    const DifferentData dh = different(p2.H);
    CHECK(dh.arrangement.hyperplanes.size() == 3);
    CHECK(dh.arrangement.orbits.size() == 3);
    CHECK(dh.delta == 3);
    CHECK(dh.certified);
    check_arrangement(p2.H, dh);

    const SymmetricFamilyData p3 = symmetric_family(3, 6);
    const MatrixGroup sigma = MatrixGroup::closure({p3.sigma});
    const DifferentData ds = different(sigma);
    CHECK(ds.arrangement.hyperplanes.empty());
    CHECK(ds.delta == 0);
    CHECK(ds.certified);
}

TEST_CASE("factorization along a pointwise stabilized subspace") {
    const Gu3Data gu3 = gu3_stabilizers(2);
    const FieldPtr f = gu3.field;

    const Subspace wall = Subspace::from_vectors(
        f, 3, {{0, 1, 0}, {0, 0, 1}});
    const MatrixGroup w = point_stabilizer(gu3.H, wall);
    REQUIRE(w.order() == 2);

    const DifferentFactorization split = different_factorization(gu3.H, w, wall);
    CHECK(split.theta_h == Polynomial::variable(f, 3, 0));
    CHECK(split.theta_quot.degree() == 8);
    CHECK_FALSE(split.quot_vanishes_on_u);
    CHECK(split.intrinsic_divides);
    CHECK(split.intrinsic_equal);
    CHECK(split.theta_h * split.theta_quot == different(gu3.H).theta);

    CHECK_THROWS_AS(different_factorization(gu3.H, gu3.Htilde, wall), std::invalid_argument);
}

TEST_CASE("factorization at the extreme subspaces") {
    const MatrixGroup g = s3_permutation_group();
    const FieldPtr f = g.field();
    const Polynomial theta = different(g).theta;

    const Subspace zero = Subspace::zero(f, 3);
    const DifferentFactorization at_zero = different_factorization(g, g, zero);
    CHECK(at_zero.theta_h == theta);
    CHECK(at_zero.theta_quot == Polynomial::constant(f, 3, 1));
    CHECK_FALSE(at_zero.quot_vanishes_on_u);
    CHECK(at_zero.intrinsic_equal);

    const Subspace full = Subspace::full(f, 3);
    const DifferentFactorization at_full =
        different_factorization(g, MatrixGroup::trivial(f, 3), full);
    CHECK(at_full.theta_h == Polynomial::constant(f, 3, 1));
    CHECK(at_full.theta_quot == theta);
    CHECK_FALSE(at_full.quot_vanishes_on_u);
    CHECK(at_full.intrinsic_equal);
}

TEST_CASE("factorization along a reflection axis") {
    const MatrixGroup g = s3_permutation_group();
    const FieldPtr f = g.field();

    const Subspace axis = Subspace::from_vectors(f, 3, {{1, 1, 0}});
    const MatrixGroup h = point_stabilizer(g, axis);
    REQUIRE(h.order() == 2);

    const DifferentFactorization split = different_factorization(g, h, axis);
    const Polynomial x1 = Polynomial::variable(f, 3, 0);
    const Polynomial x2 = Polynomial::variable(f, 3, 1);
    const Polynomial x3 = Polynomial::variable(f, 3, 2);
    CHECK(split.theta_h == x2 - x1);
    CHECK(split.theta_quot == (x3 - x1) * (x3 - x2));
    CHECK_FALSE(split.quot_vanishes_on_u);
    CHECK(split.intrinsic_divides);
    CHECK(split.intrinsic_equal);
}
