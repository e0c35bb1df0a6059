#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mil/decide.hpp"
#include "mil/families.hpp"

#include <algorithm>
#include <string>

using namespace mil;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

bool some_note_contains(const CoregularityVerdict& v, const std::string& needle) {
    return std::any_of(v.notes.begin(), v.notes.end(),
                       [&](const std::string& s) { return contains(s, needle); });
}

/// A direct-summand witness must map back to theta under the twisted
/// transfer of theta's own character.
void check_dsp_witness(const MatrixGroup& g, const DifferentData& d, const DspVerdict& v) {
    REQUIRE(v.outcome == DspOutcome::holds);
    CHECK(twisted_transfer(g, d.chi, v.witness) == d.theta);
}

/// Independent re-certification of a coregularity verdict: the parameter
/// system is invariant, has the claimed degrees, and its ideal fills the
/// whole polynomial ring one degree past the coinvariant top.
void check_coregular_witness(const MatrixGroup& g, const DifferentData& d,
                             const CoregularityVerdict& v) {
    REQUIRE(v.status == CoregularityVerdict::Status::coregular);
    REQUIRE(v.hsop.size() == v.degrees.size());
    REQUIRE(v.hsop_field != nullptr);
    const bool lifted = v.hsop_field != g.field();
    const MatrixGroup gw = lifted ? lift_group(g, v.hsop_field->r / g.field()->r) : g;
    REQUIRE(gw.field() == v.hsop_field);
    for (std::size_t i = 0; i < v.hsop.size(); ++i) {
        CHECK(v.hsop[i].degree() == static_cast<int>(v.degrees[i]));
        for (const Matrix& m : gw.generators()) CHECK(act(m, v.hsop[i]) == v.hsop[i]);
    }
    const unsigned dstar = d.delta + 1;
    DegreeBasis basis(v.hsop_field, g.dim(), dstar);
    CHECK(ideal_graded_piece(v.hsop, dstar, basis).dim() == basis.dim());
    const DegreeIdentities ids = degree_identities(v.degrees, g.order(), d.delta);
    CHECK(ids.product_matches);
    CHECK(ids.sum_matches);
    const SerreCheck sc = serre_check(g, v);
    CHECK(sc.applicable);
    CHECK(sc.passed);
}

} // namespace

TEST_CASE("coregular sanity groups certify their classical degrees") {
    {
        MatrixGroup g = s3_permutation_group();
        DifferentData d = different(g);
        CoregularityVerdict v = coregularity_decide(g, d);
        CHECK(v.degrees == std::vector<unsigned>{1, 2, 3});
        check_coregular_witness(g, d, v);

        CoregularityVerdict again = coregularity_decide(g, d);
        REQUIRE(again.hsop.size() == v.hsop.size());
        for (std::size_t i = 0; i < v.hsop.size(); ++i) CHECK(again.hsop[i] == v.hsop[i]);
    }
    {
        MatrixGroup g = diagonal_cyclic_group(7, 3);
        DifferentData d = different(g);
        CoregularityVerdict v = coregularity_decide(g, d);
        CHECK(v.degrees == std::vector<unsigned>{1, 3});
        check_coregular_witness(g, d, v);
    }
    {
        MatrixGroup g = transvection_hyperplane_group(3);
        DifferentData d = different(g);
        CoregularityVerdict v = coregularity_decide(g, d);
        CHECK(v.degrees == std::vector<unsigned>{1, 3});
        check_coregular_witness(g, d, v);
    }
    {
        FieldPtr f = make_field(3, 1);
        MatrixGroup g = MatrixGroup::trivial(f, 2);
        DifferentData d = different(g);
        CoregularityVerdict v = coregularity_decide(g, d);
        CHECK(v.degrees == std::vector<unsigned>{1, 1});
        check_coregular_witness(g, d, v);
    }
}

TEST_CASE("the transfer system certifies direct summands") {
    {
        MatrixGroup g = s3_permutation_group();
        DifferentData d = different(g);
        check_dsp_witness(g, d, dsp_decide(g, d));
    }
    {
        MatrixGroup g = diagonal_cyclic_group(7, 3);
        DifferentData d = different(g);
        check_dsp_witness(g, d, dsp_decide(g, d));
    }
    {
        MatrixGroup g = transvection_hyperplane_group(3);
        DifferentData d = different(g);
        check_dsp_witness(g, d, dsp_decide(g, d));
    }
    {
        FieldPtr f = make_field(2, 1);
        MatrixGroup g = MatrixGroup::trivial(f, 3);
        DifferentData d = different(g);
        check_dsp_witness(g, d, dsp_decide(g, d));
    }
}

TEST_CASE("the transfer system cap yields an explicit inconclusive") {
    MatrixGroup g = s3_permutation_group();
    DifferentData d = different(g);
    DspVerdict v = dsp_decide(g, d, 2);
    CHECK(v.outcome == DspOutcome::inconclusive);
    CHECK(contains(v.obstruction, "cap"));
}

TEST_CASE("unitary point stabilizers decide both ways") {
    Gu3Data gu = gu3_stabilizers(2);

    DifferentData dh = different(gu.H);
    DspVerdict vh = dsp_decide(gu.H, dh);
    check_dsp_witness(gu.H, dh, vh);

    CoregularityVerdict ch = coregularity_decide(gu.H, dh);
    CHECK(ch.degrees == std::vector<unsigned>{1, 3, 8});
    check_coregular_witness(gu.H, dh, ch);

    DifferentData dt = different(gu.Htilde);
    DspVerdict vt = dsp_decide(gu.Htilde, dt);
    CHECK(vt.outcome == DspOutcome::fails);
    CHECK(vt.obstruction == "linear-system-infeasible");

    CoregularityVerdict ct = coregularity_decide(gu.Htilde, dt);
    CHECK(ct.status == CoregularityVerdict::Status::not_coregular);
    CHECK(contains(ct.obstruction, "degree-sum"));
    CHECK(serre_check(gu.Htilde, ct).applicable == false);
}

TEST_CASE("ideal expansion-contraction detects the hypersurface relation") {
    Gu3Data gu = gu3_stabilizers(2);
    const FieldPtr& f = gu.field;
    const Polynomial x1 = Polynomial::variable(f, 3, 0);
    const Polynomial big_f = Polynomial::parse(f, 3, "x1*x3^2 + x2^3 + x3*x1^2");
    const Polynomial norm = orbit_product(gu.Htilde.elements(), Polynomial::variable(f, 3, 2)).product;
    REQUIRE(norm.degree() == 8);

    ContractionCheck bad = ideal_contraction_check(gu.Htilde, {x1, big_f, norm}, 8);
    CHECK_FALSE(bad.holds);
    CHECK(bad.degree == 4);

    DegreeBasis basis(f, 3, 4);
    const Polynomial h = Polynomial::parse(f, 3, "x2^4 + x1^3*x2");
    for (const Matrix& m : gu.Htilde.generators()) CHECK(act(m, h) == h);
    Subspace expanded = ideal_graded_piece({x1, big_f, norm}, 4, basis);
    CHECK(expanded.contains(basis.to_vec(h)));
    CHECK(expanded.contains(basis.to_vec(bad.witness)));

    std::vector<std::vector<fval>> inside;
    for (const Polynomial& b : invariant_space(gu.Htilde, 3)) inside.push_back(basis.to_vec(x1 * b));
    for (const Polynomial& b : invariant_space(gu.Htilde, 1)) inside.push_back(basis.to_vec(big_f * b));
    Subspace contracted = Subspace::from_vectors(f, basis.dim(), inside);
    CHECK_FALSE(contracted.contains(basis.to_vec(h)));
    CHECK_FALSE(contracted.contains(basis.to_vec(bad.witness)));

    ContractionCheck good = ideal_contraction_check(gu.H, {x1, big_f, norm}, 10);
    CHECK(good.holds);

    CHECK_THROWS_AS(ideal_contraction_check(gu.H, {Polynomial::variable(f, 3, 1)}, 4),
                    std::invalid_argument);
}

TEST_CASE("abelian p-groups tie the summand property to coregularity") {
    {
        TransvectionFamily fam = unitary_transvection_family(2, 2);
        DifferentData d = different(fam.group);
        CoregularityVerdict cv = coregularity_decide(fam.group, d);
        CHECK(cv.status == CoregularityVerdict::Status::not_coregular);
        CHECK(contains(cv.obstruction, "Hilbert"));
        CHECK(some_note_contains(cv, "degrees 1,2,2,4"));
        CHECK(some_note_contains(cv, "predicted dimension 1 at degree 1"));

        DspVerdict by_criterion = dsp_abelian_criterion(fam.group, d);
        CHECK(by_criterion.outcome == DspOutcome::fails);
        CHECK(by_criterion.obstruction == "abelian-not-coregular");

        DspVerdict direct = dsp_decide(fam.group, d);
        CHECK(direct.outcome == DspOutcome::fails);
        CHECK(direct.obstruction == "linear-system-infeasible");
    }
    {
        TransvectionFamily fam = unitary_transvection_family(3, 2);
        DifferentData d = different(fam.group);
        CoregularityVerdict cv = coregularity_decide(fam.group, d);
        CHECK(cv.status == CoregularityVerdict::Status::not_coregular);
        CHECK(contains(cv.obstruction, "degree-sum"));
        CHECK(dsp_abelian_criterion(fam.group, d).outcome == DspOutcome::fails);
    }
    {
        TransvectionFamily fam = symplectic_stabilizer(2, 2);
        DifferentData d = different(fam.group);
        CHECK(dsp_abelian_criterion(fam.group, d).outcome == DspOutcome::fails);
        DspVerdict direct = dsp_decide(fam.group, d);
        CHECK(direct.outcome == DspOutcome::fails);
    }
    {
        TransvectionFamily fam = symplectic_stabilizer(3, 2);
        DifferentData d = different(fam.group);
        CHECK(dsp_abelian_criterion(fam.group, d).outcome == DspOutcome::fails);
        DspVerdict direct = dsp_decide(fam.group, d);
        CHECK(direct.outcome == DspOutcome::fails);
    }

    MatrixGroup s3 = s3_permutation_group();
    DifferentData ds3 = different(s3);
    CHECK_THROWS_AS(dsp_abelian_criterion(s3, ds3), std::invalid_argument);
}

TEST_CASE("transvection generation is necessary for p-group summands") {
    CHECK(dsp_pgroup_criterion(orthogonal_plus_stabilizer_odd(3, 2).group).outcome ==
          DspOutcome::fails);
    CHECK(dsp_pgroup_criterion(orthogonal_plus_stabilizer_odd(3, 2).group).obstruction ==
          "p-group-not-transvection-generated");
    CHECK(dsp_pgroup_criterion(orthogonal_plus_stabilizer_even(2, 2).group).outcome ==
          DspOutcome::fails);
    CHECK(dsp_pgroup_criterion(go3_stabilizers(3).Hminus).outcome == DspOutcome::fails);

    SymmetricFamilyData f4 = symmetric_family(3, 6);
    MatrixGroup sigma = MatrixGroup::closure({f4.sigma});
    CHECK(sigma.order() == 3);
    CHECK(dsp_pgroup_criterion(sigma).outcome == DspOutcome::fails);

    CHECK(dsp_pgroup_criterion(symplectic_stabilizer(2, 2).group).outcome ==
          DspOutcome::inconclusive);
    CHECK(dsp_pgroup_criterion(symmetric_family(2, 6).H).outcome == DspOutcome::inconclusive);

    CHECK_THROWS_AS(dsp_pgroup_criterion(s3_permutation_group()), std::invalid_argument);
}

TEST_CASE("symmetric family stabilizers fail both criteria") {
    SymmetricFamilyData f4 = symmetric_family(2, 6);
    DifferentData d = different(f4.H);
    CHECK(f4.H.order() == 8);
    CHECK(f4.H.is_abelian());

    CoregularityVerdict cv = coregularity_decide(f4.H, d);
    CHECK(cv.status == CoregularityVerdict::Status::not_coregular);

    DspVerdict by_criterion = dsp_abelian_criterion(f4.H, d);
    CHECK(by_criterion.outcome == DspOutcome::fails);
    DspVerdict direct = dsp_decide(f4.H, d);
    CHECK(direct.outcome == DspOutcome::fails);
}

TEST_CASE("sampled subspaces are canonical and nonzero") {
    MatrixGroup g = s3_permutation_group();
    std::vector<Subspace> subs = sample_subspaces(g);
    CHECK_FALSE(subs.empty());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        CHECK(subs[i].dim() >= 1);
        for (std::size_t j = i + 1; j < subs.size(); ++j) CHECK_FALSE(subs[i] == subs[j]);
    }
    CHECK(std::any_of(subs.begin(), subs.end(), [](const Subspace& s) { return s.dim() == 3; }));
}

TEST_CASE("point stabilizers inherit both properties from decided groups") {
    {
        MatrixGroup g = s3_permutation_group();
        InheritanceReport rep = inheritance_check(g, true, true);
        CHECK_FALSE(rep.cases.empty());
        CHECK(rep.violations == 0);
        CHECK(rep.unresolved == 0);
        for (const InheritanceCaseResult& c : rep.cases) {
            REQUIRE(c.dsp.has_value());
            REQUIRE(c.coreg.has_value());
            CHECK(*c.dsp == DspOutcome::holds);
            CHECK(*c.coreg == CoregularityVerdict::Status::coregular);
        }
    }
    {
        Gu3Data gu = gu3_stabilizers(2);
        InheritanceReport rep = inheritance_check(gu.H, true, true);
        CHECK_FALSE(rep.cases.empty());
        CHECK(rep.violations == 0);
        CHECK(rep.unresolved == 0);
    }
    {
        TransvectionFamily fam = unitary_transvection_family(2, 2);
        InheritanceReport rep = inheritance_check(fam.group, false, false);
        CHECK(rep.cases.empty());
        CHECK(rep.violations == 0);
    }
}

TEST_CASE("uncertified or mismatched inputs are refused") {
    MatrixGroup g = s3_permutation_group();
    DifferentData d = different(g);

    DifferentData broken = d;
    broken.certified = false;
    CHECK_THROWS_AS(dsp_decide(g, broken), std::domain_error);
    CHECK_THROWS_AS(coregularity_decide(g, broken), std::domain_error);

    MatrixGroup other = diagonal_cyclic_group(7, 3);
    DifferentData dother = different(other);
    CHECK_THROWS_AS(dsp_decide(g, dother), std::invalid_argument);

    CHECK_THROWS_AS(degree_identities({1, 0, 3}, 6, 3), std::invalid_argument);
}
