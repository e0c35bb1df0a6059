#include "mil/scenarios.hpp"

#include "mil/families.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mil {

namespace {

unsigned long long upow(unsigned long long b, unsigned e) {
    unsigned long long r = 1;
    while (e--) r *= b;
    return r;
}

Polynomial ppow(const Polynomial& b, unsigned e) {
    Polynomial r = Polynomial::constant(b.field(), b.nvars(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * b;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

bool some_note(const CoregularityVerdict& v, const std::string& needle) {
    for (const std::string& n : v.notes)
        if (contains(n, needle)) return true;
    return false;
}

std::string join_degree_list(const std::vector<unsigned>& ds) {
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ds[i]);
    }
    return out;
}

bool invariant_under(const std::vector<Matrix>& gens, const Polynomial& p) {
    for (const Matrix& g : gens)
        if (act(g, p) != p) return false;
    return true;
}

Subspace group_fixed_space(const MatrixGroup& g) {
    Subspace s = Subspace::full(g.field(), g.dim());
    for (const Matrix& m : g.generators()) s = s.intersect(fixed_space(m));
    return s;
}

bool group_has(const MatrixGroup& g, const Matrix& m) {
    return std::binary_search(g.elements().begin(), g.elements().end(), m);
}

std::string join_polys(const std::vector<Polynomial>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += "; ";
        out += ps[i].str();
    }
    return out;
}

std::vector<std::string> split_witness(const std::string& w) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= w.size()) {
        std::size_t semi = w.find(';', start);
        if (semi == std::string::npos) semi = w.size();
        std::size_t lo = start, hi = semi;
        while (lo < hi && w[lo] == ' ') ++lo;
        while (hi > lo && w[hi - 1] == ' ') --hi;
        if (hi > lo) out.push_back(w.substr(lo, hi - lo));
        start = semi + 1;
    }
    return out;
}

CoregularityBudget scaled_budget(const ScenarioParams& p) {
    const unsigned mult = p.budget ? p.budget : 1;
    CoregularityBudget b;
    b.tuple_cap *= mult;
    b.random_tries *= mult;
    b.seed = p.seed;
    return b;
}

const char* dsp_name(DspOutcome o) {
    switch (o) {
    case DspOutcome::holds: return "holds";
    case DspOutcome::fails: return "fails";
    default: return "inconclusive";
    }
}

const char* coreg_name(CoregularityVerdict::Status s) {
    switch (s) {
    case CoregularityVerdict::Status::coregular: return "coregular";
    case CoregularityVerdict::Status::not_coregular: return "not coregular";
    default: return "inconclusive";
    }
}

ClaimStatus expect_dsp(DspOutcome got, DspOutcome want) {
    if (got == want) return ClaimStatus::pass;
    if (got == DspOutcome::inconclusive) return ClaimStatus::inconclusive;
    return ClaimStatus::fail;
}

ClaimStatus expect_coreg(CoregularityVerdict::Status got, CoregularityVerdict::Status want) {
    if (got == want) return ClaimStatus::pass;
    if (got == CoregularityVerdict::Status::inconclusive) return ClaimStatus::inconclusive;
    return ClaimStatus::fail;
}

struct Builder {
    ScenarioReport rep;
    bool recheck = false;

    ClaimResult& add(const std::string& name, ClaimStatus st, const std::string& detail,
                     const std::string& obstruction = std::string()) {
        ClaimResult c;
        c.name = name;
        c.status = st;
        c.detail = detail;
        c.obstruction = obstruction;
        rep.claims.push_back(std::move(c));
        return rep.claims.back();
    }

    ClaimResult& check(const std::string& name, bool ok, const std::string& detail,
                       const std::string& obstruction = std::string()) {
        return add(name, ok ? ClaimStatus::pass : ClaimStatus::fail, detail, obstruction);
    }

    void touch(const FieldPtr& f) {
        if (!f) return;
        std::string b = field_blurb(f);
        for (const std::string& s : rep.fields)
            if (s == b) return;
        rep.fields.push_back(b);
    }
};

using Reverify = std::function<std::string(const std::vector<Polynomial>&)>;

void attach_witness(Builder& B, ClaimResult& c, const std::vector<Polynomial>& polys,
                    const FieldPtr& f, unsigned nvars, const Reverify& reverify) {
    c.witness = join_polys(polys);
    if (!B.recheck || c.status != ClaimStatus::pass || c.witness.empty()) return;
    std::vector<Polynomial> back;
    try {
        for (const std::string& s : split_witness(c.witness))
            back.push_back(Polynomial::parse(f, nvars, s));
    } catch (const std::exception& e) {
        c.status = ClaimStatus::fail;
        c.obstruction = std::string("recheck: witness failed to reparse: ") + e.what();
        return;
    }
    std::string why = reverify(back);
    if (why.empty()) {
        c.detail += "; witnesses reverified after reparse";
    } else {
        c.status = ClaimStatus::fail;
        c.obstruction = "recheck: " + why;
    }
}

/// Shared negative-family claims: the group is not coregular, and the
/// abelian criterion refutes the summand property with the direct solve
/// agreeing whenever its dimension stays under the cap.
void negative_verdict_claims(Builder& B, const MatrixGroup& g, const DifferentData& diff,
                             const ScenarioParams& P, const std::string& coreg_claim,
                             const std::string& dsp_claim, bool check_shapes,
                             const std::vector<std::string>& shape_needles) {
    if (!diff.certified) {
        B.add(coreg_claim, ClaimStatus::inconclusive,
              "the ramification exponents were not certified within budget");
        B.add(dsp_claim, ClaimStatus::inconclusive,
              "the ramification exponents were not certified within budget");
        return;
    }
    CoregularityVerdict v = coregularity_decide(g, diff, scaled_budget(P));
    {
        ClaimStatus st = expect_coreg(v.status, CoregularityVerdict::Status::not_coregular);
        std::string missing;
        if (check_shapes && st == ClaimStatus::pass) {
            for (const std::string& needle : shape_needles)
                if (!some_note(v, needle)) missing = needle;
            if (!missing.empty()) st = ClaimStatus::fail;
        }
        std::string detail = "no generator-degree multiset survives the arithmetic and "
                             "Hilbert-series filters";
        if (check_shapes)
            detail += missing.empty()
                          ? "; every multiset of shape (1,...,1,p^a,p^b) is rejected by the "
                            "ramification degree-sum"
                          : "; expected a rejection note matching \"" + missing + "\"";
        B.add(coreg_claim, st, detail, v.obstruction);
    }
    {
        DspVerdict abelian = dsp_abelian_criterion(g, diff, scaled_budget(P));
        DspVerdict direct = dsp_decide(g, diff, 600);
        ClaimStatus st = expect_dsp(abelian.outcome, DspOutcome::fails);
        if (st == ClaimStatus::pass && direct.outcome == DspOutcome::holds)
            st = ClaimStatus::fail;
        std::string detail = "the abelian criterion ties the summand property to coregularity "
                             "and refutes it";
        if (direct.outcome == DspOutcome::fails)
            detail += "; the direct transfer solve agrees";
        else if (direct.outcome == DspOutcome::inconclusive)
            detail += "; the direct solve stayed above its dimension cap";
        else
            detail += "; the direct solve DISAGREES";
        B.add(dsp_claim, st, detail, abelian.obstruction);
    }
}

const std::vector<ScenarioInfo>& catalog_infos();

Builder make_builder(const std::string& name, bool recheck) {
    Builder b;
    b.recheck = recheck;
    for (const ScenarioInfo& info : catalog_infos()) {
        if (info.name == name) {
            b.rep.scenario = info.name;
            b.rep.section = info.section;
            b.rep.anchor = info.anchor;
            return b;
        }
    }
    b.rep.scenario = name;
    return b;
}

ScenarioReport scen_example_gu3(const ScenarioParams& P) {
    const unsigned q = P.q.value_or(2);
    Builder B = make_builder("example-gu3", P.recheck);
    B.rep.parameters["q"] = q;
    Gu3Data data = gu3_stabilizers(q);
    const FieldPtr& f = data.field;
    B.touch(f);
    const unsigned qq = q * q;
    const unsigned q3 = q * qq;

    {
        bool ok = data.H.order() == std::size_t(q + 1) * q3 && data.Htilde.order() == q3;
        for (const auto& [m, hm] : data.subgroups) ok = ok && hm.order() == std::size_t(m) * q3;
        std::ostringstream d;
        d << "|H| = " << data.H.order() << " = (q+1)q^3, |H~| = " << data.Htilde.order()
          << " = q^3, and |H_m| = m q^3 for every m dividing q+1";
        B.check("subgroup-orders", ok, d.str());
    }

    Polynomial x1 = Polynomial::variable(f, 3, 0);
    Polynomial x2 = Polynomial::variable(f, 3, 1);
    Polynomial F = Polynomial::monomial(f, 3, {1, 0, q}, 1) +
                   Polynomial::monomial(f, 3, {0, q + 1, 0}, 1) +
                   Polynomial::monomial(f, 3, {q, 0, 1}, 1);
    Polynomial N3 = orbit_product(data.H.elements(), Polynomial::variable(f, 3, 2)).product;
    Polynomial h = orbit_product(data.Htilde.elements(), x2).product;

    {
        bool ok = F.degree() == int(q + 1) && N3.degree() == int(q3) && h.degree() == int(qq);
        ok = ok && invariant_under(data.H.generators(), x1) &&
             invariant_under(data.H.generators(), F) &&
             invariant_under(data.H.generators(), N3) &&
             invariant_under(data.Htilde.generators(), h);
        std::ostringstream d;
        d << "x1, the form F and the orbit norm of x3 are H-invariant of degrees 1, " << q + 1
          << ", " << q3 << "; the orbit norm h of x2 is an H~-invariant of degree " << qq;
        ClaimResult& c = B.check("fundamental-invariants", ok, d.str());
        attach_witness(B, c, {x1, F, N3, h}, f, 3,
                       [&](const std::vector<Polynomial>& ws) -> std::string {
                           if (ws.size() != 4) return "expected four polynomials";
                           for (unsigned i = 0; i < 3; ++i)
                               if (!invariant_under(data.H.generators(), ws[i]))
                                   return "a reparsed generator is not H-invariant";
                           if (!invariant_under(data.Htilde.generators(), ws[3]))
                               return "the reparsed h is not H~-invariant";
                           return std::string();
                       });
    }

    const unsigned depth = P.max_degree ? P.max_degree : (q == 2 ? 12u : 3 * qq);
    {
        GradedDims big = hilbert_function(data.Htilde, depth);
        GradedDims small = hilbert_function(data.H, depth);
        bool ok = true;
        for (unsigned d = 0; d <= depth && ok; ++d) {
            unsigned sum = 0;
            for (unsigned i = 0; i <= q; ++i)
                if (d >= i * qq) sum += small.dims[d - i * qq];
            ok = big.dims[d] == sum;
        }
        std::ostringstream det;
        det << "dim of the H~-invariants at each degree d <= " << depth
            << " equals the sum of the H-invariant dims at d - " << qq << "i, i = 0.." << q;
        B.check("module-decomposition", ok, det.str());
    }

    {
        auto checks = algebra_generation_check(data.Htilde, {x1, F, N3, h}, depth);
        bool ok = true;
        for (const DegreeCheck& c : checks) ok = ok && c.pass;
        B.check("generation-with-h", ok,
                "x1, F, N(x3) and h generate the H~-invariants degreewise to degree " +
                    std::to_string(depth));

        auto broken = algebra_generation_check(data.Htilde, {x1, F, N3}, qq);
        unsigned first_fail = 0;
        for (const DegreeCheck& c : broken)
            if (!c.pass) {
                first_fail = c.degree;
                break;
            }
        B.check("generation-needs-h", first_fail == qq,
                "dropping h, the subalgebra first misses an invariant exactly at degree " +
                    std::to_string(qq));
    }

    {
        const unsigned ideal_depth = P.max_degree ? P.max_degree : (q == 2 ? 16u : qq * (q + 1));
        std::vector<Polynomial> target = {x1, Polynomial::monomial(f, 3, {0, q + 1, 0}, 1),
                                          Polynomial::monomial(f, 3, {0, 0, q3}, 1)};
        bool ok = true;
        for (const auto& [m, hm] : data.subgroups) {
            std::vector<Polynomial> gens = {x1, F, N3, ppow(h, (q + 1) / m)};
            for (unsigned d = 1; d <= ideal_depth && ok; ++d) {
                DegreeBasis basis(f, 3, d);
                ok = ideal_graded_piece(gens, d, basis) == ideal_graded_piece(target, d, basis);
            }
        }
        B.check("ideal-identity", ok,
                "(x1, F, N(x3), h^{(q+1)/m}) and (x1, x2^{q+1}, x3^{q^3}) generate the same "
                "ideal degreewise to degree " +
                    std::to_string(ideal_depth) + " for every m | q+1");
    }

    DifferentData diffH = different(data.H);
    DifferentData diffHt = different(data.Htilde);
    if (!diffH.certified || !diffHt.certified) {
        B.add("ramification", ClaimStatus::inconclusive,
              "the ramification exponents were not certified within budget");
        return B.rep;
    }

    {
        DspVerdict v = dsp_decide(data.Htilde, diffHt);
        ContractionCheck cc = ideal_contraction_check(data.Htilde, {x1, F, N3}, 2 * qq);
        ClaimStatus st = expect_dsp(v.outcome, DspOutcome::fails);
        bool contraction_found = !cc.holds && cc.degree == qq;
        if (st == ClaimStatus::pass && !contraction_found) st = ClaimStatus::fail;
        std::ostringstream d;
        d << "the twisted-transfer system for H~ is infeasible, and expansion-contraction of "
             "(x1, F, N(x3)) grows at degree "
          << cc.degree;
        ClaimResult& c = B.add("summand-fails-inside", st, d.str(), v.obstruction);
        attach_witness(B, c, {cc.witness}, f, 3,
                       [&](const std::vector<Polynomial>& ws) -> std::string {
                           const Polynomial& w = ws[0];
                           if (!invariant_under(data.Htilde.generators(), w))
                               return "the contraction witness is not invariant";
                           if (w.degree() != int(qq)) return "the contraction witness changed degree";
                           DegreeBasis basis(f, 3, qq);
                           Subspace expanded = ideal_graded_piece({x1, F, N3}, qq, basis);
                           if (!expanded.contains(basis.to_vec(w)))
                               return "the witness left the expanded ideal";
                           std::vector<std::vector<fval>> rows;
                           for (const Polynomial& gen : {x1, F, N3}) {
                               const unsigned e = unsigned(gen.degree());
                               if (e > qq) continue;
                               for (const Polynomial& inv : invariant_space(data.Htilde, qq - e))
                                   rows.push_back(basis.to_vec(gen * inv));
                           }
                           Subspace rhs = Subspace::from_vectors(f, basis.dim(), rows);
                           if (rhs.contains(basis.to_vec(w)))
                               return "the witness lies in the contracted ideal after all";
                           return std::string();
                       });
    }

    {
        DspVerdict v = dsp_decide(data.H, diffH);
        ContractionCheck cc = ideal_contraction_check(data.H, {x1, F, N3}, 2 * qq + 2);
        ClaimStatus st = expect_dsp(v.outcome, DspOutcome::holds);
        if (st == ClaimStatus::pass && !cc.holds) st = ClaimStatus::fail;
        ClaimResult& c =
            B.add("summand-holds", st,
                  "the twisted transfer reaches theta for H, and expansion-contraction of "
                  "(x1, F, N(x3)) is stable to degree " +
                      std::to_string(2 * qq + 2),
                  v.obstruction);
        attach_witness(B, c, {v.witness}, f, 3,
                       [&](const std::vector<Polynomial>& ws) -> std::string {
                           if (twisted_transfer(data.H, diffH.chi, ws[0]) != diffH.theta)
                               return "the reparsed preimage no longer maps to theta";
                           return std::string();
                       });
    }

    {
        CoregularityVerdict v = coregularity_decide(data.H, diffH, scaled_budget(P));
        const std::vector<unsigned> want = {1, q + 1, q3};
        ClaimStatus st = expect_coreg(v.status, CoregularityVerdict::Status::coregular);
        if (st == ClaimStatus::pass && v.degrees != want) st = ClaimStatus::fail;
        if (st == ClaimStatus::pass) {
            SerreCheck sc = serre_check(data.H, v);
            DegreeIdentities di = degree_identities(v.degrees, data.H.order(), diffH.delta);
            if (!(sc.applicable && sc.passed && di.product_matches && di.sum_matches))
                st = ClaimStatus::fail;
        }
        std::string detail = "the H-invariants form a polynomial ring on degrees " +
                             join_degree_list(want) +
                             "; the degree product and ramification sum identities hold";
        ClaimResult& c = B.add("coregular", st, detail, v.obstruction);
        if (v.hsop_field) {
            B.touch(v.hsop_field);
            const unsigned s = v.hsop_field->r / f->r;
            MatrixGroup host = s == 1 ? data.H : lift_group(data.H, s);
            attach_witness(B, c, v.hsop, v.hsop_field, 3,
                           [&B, host, want, delta = diffH.delta,
                            hf = v.hsop_field](const std::vector<Polynomial>& ws) -> std::string {
                               if (ws.size() != want.size()) return "wrong parameter count";
                               for (std::size_t i = 0; i < ws.size(); ++i) {
                                   if (ws[i].degree() != int(want[i]))
                                       return "a parameter changed degree";
                                   if (!invariant_under(host.generators(), ws[i]))
                                       return "a reparsed parameter is not invariant";
                               }
                               DegreeBasis cert(hf, 3, delta + 1);
                               if (ideal_graded_piece(ws, delta + 1, cert).dim() != cert.dim())
                                   return "the reparsed parameters no longer certify";
                               return std::string();
                           });
        }
    }

    {
        CoregularityVerdict v = coregularity_decide(data.Htilde, diffHt, scaled_budget(P));
        ClaimStatus st = expect_coreg(v.status, CoregularityVerdict::Status::not_coregular);
        if (st == ClaimStatus::pass && !contains(v.obstruction, "degree-sum"))
            st = ClaimStatus::fail;
        B.add("not-coregular-inside", st,
              "every generator-degree multiset for H~ fails the degree-sum filter",
              v.obstruction);
    }
    return B.rep;
}

/// Rejection-note needles for the multisets (1,...,1,p^a,p^b) with
/// p^a p^b = |G| that the linear-invariant count forces on a group of
/// order q^{(slots/2)^2} with exactly slots-2 forced linear degrees.
std::vector<std::string> block_shape_needles(unsigned q, unsigned slots) {
    auto [p, e] = factor_prime_power(q);
    const unsigned half = slots / 2;
    const unsigned exponent_sum = e * half * half;
    std::vector<std::string> needles;
    for (unsigned a = 1; 2 * a <= exponent_sum; ++a) {
        std::vector<unsigned> ms(slots - 2, 1);
        ms.push_back(unsigned(upow(p, a)));
        ms.push_back(unsigned(upow(p, exponent_sum - a)));
        needles.push_back("degrees " + join_degree_list(ms));
    }
    return needles;
}

ScenarioReport scen_abelian_i(const ScenarioParams& P) {
    const unsigned q = P.q.value_or(2);
    const unsigned n = P.n.value_or(2);
    Builder B = make_builder("example-abelian-i", P.recheck);
    B.rep.parameters["q"] = q;
    B.rep.parameters["n"] = n;
    TransvectionFamily fam = unitary_transvection_family(q, n);
    B.touch(fam.field);

    B.check("order", fam.group.order() == upow(q, n * n),
            "the anti-hermitian block group on k^" + std::to_string(2 * n) + " has order q^" +
                std::to_string(n * n) + " = " + std::to_string(upow(q, n * n)));

    DifferentData diff = different(fam.group);
    const unsigned long long hyperplanes = (upow(q, 2 * n) - 1) / (q * q - 1);
    B.check("differential-degree",
            diff.certified && diff.delta == hyperplanes * (q - 1) &&
                diff.arrangement.hyperplanes.size() == hyperplanes,
            "the " + std::to_string(hyperplanes) +
                " reflecting hyperplanes each contribute q-1, so the different has degree " +
                std::to_string(hyperplanes * (q - 1)));

    {
        std::vector<std::vector<fval>> vs;
        for (unsigned i = 1; i < 2 * n; ++i) {
            std::vector<fval> v(2 * n, 0);
            v[i] = 1;
            vs.push_back(std::move(v));
        }
        Subspace hp = Subspace::from_vectors(fam.field, 2 * n, vs);
        MatrixGroup stab = point_stabilizer(fam.group, hp);
        DifferentData ds = different(stab);
        B.check("hyperplane-stabilizer", stab.order() == q && ds.certified && ds.delta == q - 1,
                "the point stabilizer of one reflecting hyperplane has order q and different "
                "degree q-1 = " +
                    std::to_string(q - 1));
    }

    negative_verdict_claims(B, fam.group, diff, P, "linear-degree-obstruction",
                            "summand-criteria-agree", n == 2,
                            n == 2 ? block_shape_needles(q, 2 * n)
                                   : std::vector<std::string>{});
    return B.rep;
}

ScenarioReport scen_abelian_ii(const ScenarioParams& P) {
    const unsigned q = P.q.value_or(2);
    const unsigned m = P.m.value_or(2);
    Builder B = make_builder("example-abelian-ii", P.recheck);
    B.rep.parameters["q"] = q;
    B.rep.parameters["m"] = m;
    TransvectionFamily fam = symplectic_stabilizer(q, m);
    B.touch(fam.field);

    B.check("order", fam.group.order() == upow(q, m * (m + 1) / 2),
            "the symmetric block group on k^" + std::to_string(2 * m) + " has order q^" +
                std::to_string(m * (m + 1) / 2) + " = " +
                std::to_string(upow(q, m * (m + 1) / 2)));

    DifferentData diff = different(fam.group);
    B.check("differential-degree", diff.certified && diff.delta == upow(q, m) - 1,
            "the different has degree q^m - 1 = " + std::to_string(upow(q, m) - 1));

    negative_verdict_claims(B, fam.group, diff, P, "not-coregular", "summand-criteria-agree",
                            false, {});
    return B.rep;
}

void transvection_family_claims(Builder& B, const TransvectionFamily& fam,
                                unsigned long long want_order, const std::string& blurb) {
    B.check("order", fam.group.order() == want_order,
            blurb + " has order " + std::to_string(want_order));
    B.check("transvection-generated",
            fam.group.is_abelian() && fam.group.is_p_group() &&
                transvection_subgroup(fam.group) == fam.group,
            "the stabilizer is an abelian p-group generated by its transvections");
    bool isometries = true;
    for (const Matrix& g : fam.group.elements()) isometries = isometries && form_membership(g, fam.form);
    bool normalized = true;
    for (const Matrix& nrm : fam.normalizer_gens) {
        const Matrix inv = nrm.inverse();
        for (const Matrix& g : fam.group.generators())
            normalized = normalized && group_has(fam.group, nrm * g * inv);
    }
    B.check("form-and-normalizer", isometries && normalized,
            "every element preserves the classical form and the listed normalizer generators "
            "normalize the stabilizer");
}

ScenarioReport scen_family_I(const ScenarioParams& P) {
    const unsigned q = P.q.value_or(2);
    const unsigned n = P.n.value_or(2);
    Builder B = make_builder("family-I", P.recheck);
    B.rep.parameters["q"] = q;
    B.rep.parameters["n"] = n;
    TransvectionFamily fam = unitary_transvection_family(q, n);
    B.touch(fam.field);
    transvection_family_claims(B, fam, upow(q, n * n), "the unitary transvection stabilizer");
    DifferentData diff = different(fam.group);
    negative_verdict_claims(B, fam.group, diff, P, "not-coregular", "summand-fails", false, {});
    return B.rep;
}

ScenarioReport scen_family_II(const ScenarioParams& P) {
    const unsigned q = P.q.value_or(2);
    const unsigned m = P.m.value_or(2);
    Builder B = make_builder("family-II", P.recheck);
    B.rep.parameters["q"] = q;
    B.rep.parameters["m"] = m;
    TransvectionFamily fam = symplectic_stabilizer(q, m);
    B.touch(fam.field);
    transvection_family_claims(B, fam, upow(q, m * (m + 1) / 2),
                               "the symplectic transvection stabilizer");
    DifferentData diff = different(fam.group);
    negative_verdict_claims(B, fam.group, diff, P, "not-coregular", "summand-fails", false, {});
    return B.rep;
}

void reflection_free_claims(Builder& B, const MatrixGroup& g, const FormSpec& form,
                            unsigned long long want_order, const ScenarioParams& P,
                            const std::string& prefix, const std::string& blurb) {
    B.check(prefix + "order", g.order() == want_order,
            blurb + " has order " + std::to_string(want_order));
    bool isometries = true;
    for (const Matrix& e : g.elements()) isometries = isometries && form_membership(e, form);
    B.check(prefix + "form-isometries", isometries, blurb + " preserves the classical form");
    ReflectionCensus census = reflection_census(g);
    B.check(prefix + "no-pseudo-reflections", census.pseudo_reflections.empty(),
            blurb + " contains no pseudo-reflection at all");
    DspVerdict v = dsp_pgroup_criterion(g);
    B.add(prefix + "summand-fails", expect_dsp(v.outcome, DspOutcome::fails),
          "a p-group that is not generated by transvections cannot be a direct summand",
          v.obstruction);
    DifferentData diff = different(g);
    if (diff.certified) {
        CoregularityVerdict cv = coregularity_decide(g, diff, scaled_budget(P));
        B.add(prefix + "not-coregular",
              expect_coreg(cv.status, CoregularityVerdict::Status::not_coregular),
              "with no reflecting hyperplane the degree-sum filter rejects every multiset",
              cv.obstruction);
    } else {
        B.add(prefix + "not-coregular", ClaimStatus::inconclusive,
              "the ramification exponents were not certified within budget");
    }
}

ScenarioReport scen_family_III_a(const ScenarioParams& P) {
    const unsigned q = P.q.value_or(3);
    const unsigned m = P.m.value_or(2);
    Builder B = make_builder("family-III-a", P.recheck);
    B.rep.parameters["q"] = q;
    B.rep.parameters["m"] = m;
    TransvectionFamily fam = orthogonal_plus_stabilizer_odd(q, m);
    B.touch(fam.field);
    reflection_free_claims(B, fam.group, fam.form, upow(q, m * (m - 1) / 2), P, "",
                           "the odd-characteristic orthogonal stabilizer");

    Go3Data g3 = go3_stabilizers(q);
    B.touch(g3.field);
    B.check("go3-orders", g3.H.order() == 2 * std::size_t(q) && g3.Hminus.order() == q,
            "the three-dimensional orthogonal point stabilizer has order 2q with an index-two "
            "part of order q");
    bool isometries = true;
    for (const Matrix& e : g3.H.elements()) isometries = isometries && form_membership(e, g3.form);
    B.check("go3-form-isometries", isometries,
            "the three-dimensional stabilizer preserves the quadratic form");
    ReflectionCensus census = reflection_census(g3.Hminus);
    DspVerdict v = dsp_pgroup_criterion(g3.Hminus);
    DifferentData dm = different(g3.Hminus);
    CoregularityVerdict cv;
    if (dm.certified) cv = coregularity_decide(g3.Hminus, dm, scaled_budget(P));
    bool ok = census.pseudo_reflections.empty() && v.outcome == DspOutcome::fails &&
              cv.status == CoregularityVerdict::Status::not_coregular;
    B.check("go3-minus-verdicts", ok,
            "the index-two part is reflection-free, is refuted by the transvection criterion "
            "and is not coregular",
            v.obstruction);
    return B.rep;
}

ScenarioReport scen_family_III_b(const ScenarioParams& P) {
    const unsigned q = P.q.value_or(2);
    const unsigned m = P.m.value_or(2);
    Builder B = make_builder("family-III-b", P.recheck);
    B.rep.parameters["q"] = q;
    B.rep.parameters["m"] = m;
    TransvectionFamily fam = orthogonal_plus_stabilizer_even(q, m);
    B.touch(fam.field);
    reflection_free_claims(B, fam.group, fam.form, upow(q, m * (m - 1) / 2), P, "",
                           "the even-characteristic orthogonal stabilizer");
    return B.rep;
}

void symmetric_odd_claims(Builder& B, unsigned p, unsigned m) {
    const std::string prefix = "p" + std::to_string(p) + "-";
    SymmetricFamilyData fam = symmetric_family(p, m);
    B.touch(fam.field);
    if (!fam.U) {
        B.add(prefix + "point-stabilizer", ClaimStatus::fail,
              "the distinguished subspace U is not defined for these parameters");
        return;
    }
    MatrixGroup stab = point_stabilizer(fam.group, *fam.U);
    MatrixGroup sigma_group = MatrixGroup::closure({fam.sigma});
    B.check(prefix + "point-stabilizer",
            stab.order() == p && group_has(stab, fam.sigma) && sigma_group.order() == p,
            "the point stabilizer of U is the cyclic group generated by sigma, of order " +
                std::to_string(p));
    B.check(prefix + "fixed-space",
            fixed_space(fam.sigma) == *fam.U && fam.U->dim() + 2 == fam.group.dim(),
            "the fixed space of sigma is exactly U, of codimension two, so sigma is not a "
            "pseudo-reflection");
    DspVerdict v = dsp_pgroup_criterion(stab);
    B.add(prefix + "summand-fails", expect_dsp(v.outcome, DspOutcome::fails),
          "the stabilizer is a transvection-free p-group, so it cannot be a direct summand",
          v.obstruction);
}

void symmetric_even_claims(Builder& B, unsigned m, const ScenarioParams& P) {
    SymmetricFamilyData fam = symmetric_family(2, m);
    B.touch(fam.field);
    const unsigned mprime = fam.mprime;

    bool elementary = fam.H.is_abelian() && fam.H.is_p_group();
    for (std::size_t i = 0; i < fam.H.order() && elementary; ++i)
        elementary = fam.H.info(i).order <= 2;
    B.check("p2-block-group", fam.H.order() == upow(2, mprime) && elementary,
            "the block subgroup is elementary abelian of order 2^" + std::to_string(mprime));

    ReflectionCensus census = reflection_census(fam.H);
    B.check("p2-reflection-census",
            census.pseudo_reflections.size() == mprime && census.transvections.size() == mprime,
            "the block subgroup contains exactly " + std::to_string(mprime) +
                " pseudo-reflections, all transvections");

    {
        std::vector<std::vector<fval>> vs;
        for (unsigned i = 0; i + 2 <= fam.group.dim(); i += 2) {
            std::vector<fval> v(fam.group.dim(), 0);
            v[i] = 1;
            vs.push_back(std::move(v));
        }
        Subspace want = Subspace::from_vectors(fam.field, fam.group.dim(), vs);
        B.check("p2-fixed-space", group_fixed_space(fam.H) == want,
                "the fixed space of the block subgroup is spanned by the odd-index coordinate "
                "images f1, f3, ...");
    }

    DifferentData diff = different(fam.H);
    if (!diff.certified) {
        B.add("p2-not-coregular", ClaimStatus::inconclusive,
              "the ramification exponents were not certified within budget");
        return;
    }
    {
        CoregularityVerdict v = coregularity_decide(fam.H, diff, scaled_budget(P));
        ClaimStatus st = expect_coreg(v.status, CoregularityVerdict::Status::not_coregular);
        bool counted = diff.delta == mprime;
        std::string needle;
        if (m == 6) {
            needle = "degrees 1,1,2,4";
            if (st == ClaimStatus::pass && !(some_note(v, needle) && counted))
                st = ClaimStatus::fail;
        }
        B.add("p2-not-coregular", st,
              "a polynomial invariant ring would need degree sum " +
                  std::to_string(diff.delta + fam.group.dim()) +
                  " but the census supplies only " + std::to_string(diff.delta) +
                  " reflections counted with exponents",
              v.obstruction);
    }
    {
        DspVerdict abelian = dsp_abelian_criterion(fam.H, diff, scaled_budget(P));
        DspVerdict direct = dsp_decide(fam.H, diff, 600);
        DspVerdict pg = dsp_pgroup_criterion(fam.H);
        bool ok = abelian.outcome == DspOutcome::fails && direct.outcome == DspOutcome::fails &&
                  pg.outcome == DspOutcome::inconclusive;
        B.check("p2-summand-fails", ok,
                "the abelian criterion and the direct transfer solve both refute the summand "
                "property even though the group is generated by transvections",
                abelian.obstruction);
    }
}

ScenarioReport scen_family_IV(const ScenarioParams& P) {
    Builder B = make_builder("family-IV", P.recheck);
    const unsigned m = P.m.value_or(6);
    B.rep.parameters["m"] = m;
    if (P.p) B.rep.parameters["p"] = *P.p;
    if (!P.p || *P.p % 2 == 1) symmetric_odd_claims(B, P.p ? *P.p : 3, m);
    if (!P.p || *P.p == 2) symmetric_even_claims(B, m, P);
    return B.rep;
}

ScenarioReport scen_thm1(const ScenarioParams& P) {
    Builder B = make_builder("thm1-inheritance", P.recheck);
    CoregularityBudget bud = scaled_budget(P);
    std::vector<CorpusVerdict> corpus = corpus_verdicts(bud);
    unsigned total_violations = 0;
    for (const CorpusVerdict& cv : corpus) {
        B.touch(cv.group.field());
        const bool dsp_premise = cv.dsp == DspOutcome::holds;
        const bool coreg_premise = cv.coreg.status == CoregularityVerdict::Status::coregular;
        std::string premises = std::string("premises: summand ") + dsp_name(cv.dsp) +
                               ", coregularity " + coreg_name(cv.coreg.status);
        if (!dsp_premise && !coreg_premise) {
            B.add("inherit-" + cv.name, ClaimStatus::pass,
                  premises + "; nothing to inherit, vacuously fine");
            continue;
        }
        InheritanceReport ir = inheritance_check(cv.group, dsp_premise, coreg_premise, bud);
        total_violations += ir.violations;
        ClaimStatus st = ir.violations    ? ClaimStatus::fail
                         : ir.unresolved  ? ClaimStatus::inconclusive
                                          : ClaimStatus::pass;
        std::ostringstream d;
        d << premises << "; " << ir.cases.size() << " sampled subspaces, " << ir.violations
          << " violations, " << ir.unresolved << " undecided stabilizers";
        B.add("inherit-" + cv.name, st, d.str());
    }
    B.check("no-violations", total_violations == 0,
            "no decided point stabilizer anywhere in the corpus loses an inherited property");
    return B.rep;
}

ScenarioReport scen_serre(const ScenarioParams& P) {
    Builder B = make_builder("cst-serre-sanity", P.recheck);
    CoregularityBudget bud = scaled_budget(P);
    std::vector<CorpusVerdict> corpus = corpus_verdicts(bud);
    auto find = [&corpus](const std::string& name) -> const CorpusVerdict& {
        for (const CorpusVerdict& cv : corpus)
            if (cv.name == name) return cv;
        throw std::logic_error("corpus member missing: " + name);
    };
    for (const CorpusVerdict& cv : corpus) B.touch(cv.group.field());

    {
        const CorpusVerdict& s3 = find("s3");
        ReflectionCensus census = reflection_census(s3.group);
        bool ok = s3.coreg.status == CoregularityVerdict::Status::coregular &&
                  s3.coreg.degrees == std::vector<unsigned>{1, 2, 3} && s3.diff.delta == 3 &&
                  census.pseudo_reflections.size() == 3;
        ClaimResult& c = B.check(
            "s3-coregular", ok,
            "the permutation group on three letters over GF(7) is coregular with degrees "
            "1, 2, 3, and its different degree 3 equals its pseudo-reflection count");
        if (ok && s3.coreg.hsop_field) {
            attach_witness(B, c, s3.coreg.hsop, s3.coreg.hsop_field, s3.group.dim(),
                           [&s3](const std::vector<Polynomial>& ws) -> std::string {
                               for (const Polynomial& w : ws)
                                   if (!invariant_under(s3.group.generators(), w))
                                       return "a reparsed parameter is not invariant";
                               DegreeBasis cert(s3.coreg.hsop_field, s3.group.dim(),
                                                s3.diff.delta + 1);
                               if (ideal_graded_piece(ws, s3.diff.delta + 1, cert).dim() !=
                                   cert.dim())
                                   return "the reparsed parameters no longer certify";
                               return std::string();
                           });
        }

        DspVerdict v = dsp_decide(s3.group, s3.diff);
        ClaimResult& cd = B.add("s3-summand", expect_dsp(v.outcome, DspOutcome::holds),
                                "the twisted transfer reaches theta, so the invariants are a "
                                "direct summand",
                                v.obstruction);
        attach_witness(B, cd, {v.witness}, s3.group.field(), s3.group.dim(),
                       [&s3](const std::vector<Polynomial>& ws) -> std::string {
                           if (twisted_transfer(s3.group, s3.diff.chi, ws[0]) != s3.diff.theta)
                               return "the reparsed preimage no longer maps to theta";
                           return std::string();
                       });
    }

    {
        const CorpusVerdict& d73 = find("diag-7-3");
        const CorpusVerdict& tv = find("transvection-3");
        const CorpusVerdict& triv = find("trivial-3-2");
        bool ok = d73.coreg.degrees == std::vector<unsigned>{1, 3} &&
                  tv.coreg.degrees == std::vector<unsigned>{1, 3} &&
                  triv.coreg.degrees == std::vector<unsigned>{1, 1};
        B.check("classical-degrees", ok,
                "the diagonal cyclic group and the transvection hyperplane group certify "
                "degrees 1, 3, and the trivial group certifies 1, 1");
    }

    {
        std::string members;
        bool all_ok = true;
        unsigned count = 0;
        for (const CorpusVerdict& cv : corpus) {
            if (cv.coreg.status != CoregularityVerdict::Status::coregular) continue;
            ++count;
            SerreCheck sc = serre_check(cv.group, cv.coreg);
            DegreeIdentities di =
                degree_identities(cv.coreg.degrees, cv.group.order(), cv.diff.delta);
            if (!(sc.applicable && sc.passed && di.product_matches && di.sum_matches))
                all_ok = false;
            if (!members.empty()) members += ", ";
            members += cv.name;
        }
        B.check("serre-and-degree-identities", all_ok && count > 0,
                "every confirmed-coregular corpus member (" + members +
                    ") is a reflection group whose degrees match the order and the different");
    }
    return B.rep;
}

const std::vector<ScenarioInfo>& catalog_infos() {
    static const std::vector<ScenarioInfo> infos = {
        {"example-gu3", "Section 2.1, Example (GU3)", "point stabilizer of $<e_3>$ inside",
         "three-dimensional unitary point stabilizers: generation, ideals, summand, "
         "coregularity"},
        {"example-abelian-i", "Section 2.1, Example (abelian), part (i)",
         "the action of transvection group $G_n$ on $k^{2n}$",
         "anti-hermitian block transvection groups are neither coregular nor summands"},
        {"example-abelian-ii", "Section 2.1, Example (abelian), part (ii)",
         "a symmetric $n\\times n$ matrix with coefficients",
         "symmetric block transvection groups are neither coregular nor summands"},
        {"family-I", "Section 3.1, family (I)", "(I) (Unitary pseudo-reflection groups)",
         "unitary transvection stabilizers: construction checks and negative verdicts"},
        {"family-II", "Section 3.1, family (II)", "(II) (Symplectic pseudo-reflection groups)",
         "symplectic transvection stabilizers: construction checks and negative verdicts"},
        {"family-III-a", "Section 3.1, family (III-a)",
         "(III-a) (Orthogonal reflection groups of odd characteristic)",
         "odd orthogonal stabilizers are reflection-free and fail both properties"},
        {"family-III-b", "Section 3.1, family (III-b)",
         "(III-b)  (Orthogonal pseudo-reflection groups of even characteristic)",
         "even orthogonal stabilizers are reflection-free and fail both properties"},
        {"family-IV", "Section 3.1, family (IV)", "the fixed point space of $\\sigma$ is $U$",
         "symmetric-group stabilizers fail the summand property in characteristics 2 and 3"},
        {"thm1-inheritance", "Section 1, Theorem (induction)",
         "also the direct summand property is inherited by point stabilizers",
         "point stabilizers of sampled subspaces inherit the decided properties"},
        {"cst-serre-sanity", "Introduction", "By a theorem of Serre",
         "classical sanity corpus: certified degrees, reflection groups, degree identities"},
    };
    return infos;
}

struct Entry {
    const char* name;
    ScenarioReport (*run)(const ScenarioParams&);
};

const Entry kEntries[] = {
    {"example-gu3", &scen_example_gu3},
    {"example-abelian-i", &scen_abelian_i},
    {"example-abelian-ii", &scen_abelian_ii},
    {"family-I", &scen_family_I},
    {"family-II", &scen_family_II},
    {"family-III-a", &scen_family_III_a},
    {"family-III-b", &scen_family_III_b},
    {"family-IV", &scen_family_IV},
    {"thm1-inheritance", &scen_thm1},
    {"cst-serre-sanity", &scen_serre},
};

} // namespace

const std::vector<ScenarioInfo>& scenario_catalog() { return catalog_infos(); }

bool is_known_scenario(const std::string& name) {
    for (const Entry& e : kEntries)
        if (name == e.name) return true;
    return false;
}

ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params) {
    const Entry* entry = nullptr;
    for (const Entry& e : kEntries)
        if (name == e.name) entry = &e;
    if (!entry) throw std::invalid_argument("unknown scenario \"" + name + "\"");
    const auto t0 = std::chrono::steady_clock::now();
    ScenarioReport rep;
    try {
        rep = entry->run(params);
    } catch (const CapExceeded& e) {
        rep = make_builder(name, false).rep;
        rep.claims.push_back({"enumeration-cap", ClaimStatus::fail,
                              "group enumeration hit the configured cap before the scenario "
                              "could finish",
                              "", std::string(e.what()) + "; raise MIL_CAP to proceed"});
    } catch (const std::exception& e) {
        rep = make_builder(name, false).rep;
        rep.claims.push_back(
            {"execution", ClaimStatus::fail, "the scenario did not run to completion", "",
             e.what()});
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names,
                                          const ScenarioParams& params, unsigned jobs) {
    for (const std::string& n : names)
        if (!is_known_scenario(n)) throw std::invalid_argument("unknown scenario \"" + n + "\"");
    std::vector<ScenarioReport> out(names.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&names, &params, &out, &next] {
        for (std::size_t i; (i = next.fetch_add(1)) < names.size();)
            out[i] = run_scenario(names[i], params);
    };
    const std::size_t workers = std::min<std::size_t>(jobs ? jobs : 1, names.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    std::stable_sort(out.begin(), out.end(), [](const ScenarioReport& a, const ScenarioReport& b) {
        return a.scenario < b.scenario;
    });
    return out;
}

std::vector<CorpusVerdict> corpus_verdicts(const CoregularityBudget& budget) {
    std::vector<CorpusVerdict> out;
    auto add = [&out, &budget](const std::string& name, const MatrixGroup& g) {
        CorpusVerdict v;
        v.name = name;
        v.group = g;
        v.diff = different(g);
        if (v.diff.certified) {
            v.coreg = coregularity_decide(g, v.diff, budget);
            if (g.is_abelian() && g.is_p_group())
                v.dsp = dsp_abelian_criterion(g, v.diff, budget).outcome;
            else
                v.dsp = dsp_decide(g, v.diff, 600).outcome;
        }
        out.push_back(std::move(v));
    };
    add("s3", s3_permutation_group());
    add("diag-7-3", diagonal_cyclic_group(7, 3));
    add("transvection-3", transvection_hyperplane_group(3));
    add("trivial-3-2", MatrixGroup::trivial(make_field(3, 1), 2));
    Gu3Data gu = gu3_stabilizers(2);
    add("gu3-2-H", gu.H);
    add("gu3-2-Htilde", gu.Htilde);
    add("unitary-2-2", unitary_transvection_family(2, 2).group);
    add("unitary-3-2", unitary_transvection_family(3, 2).group);
    add("symplectic-2-2", symplectic_stabilizer(2, 2).group);
    add("symplectic-3-2", symplectic_stabilizer(3, 2).group);
    add("orthogonal-odd-3-2", orthogonal_plus_stabilizer_odd(3, 2).group);
    add("orthogonal-even-2-2", orthogonal_plus_stabilizer_even(2, 2).group);
    Go3Data g3 = go3_stabilizers(3);
    add("go3-3-H", g3.H);
    add("go3-3-Hminus", g3.Hminus);
    add("symmetric-2-6-H", symmetric_family(2, 6).H);
    add("symmetric-3-6-sigma", MatrixGroup::closure({symmetric_family(3, 6).sigma}));
    return out;
}

namespace {

unsigned parse_num(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(text, &used);
        if (used != text.size() || v == 0) throw std::invalid_argument("");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad value \"" + text + "\" for " + key);
    }
}

struct GroupSpec {
    std::string family;
    std::map<std::string, std::string> kv;

    unsigned num(const std::string& key, unsigned fallback) const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : parse_num(it->second, key);
    }
    std::string sub(const std::string& fallback) const {
        auto it = kv.find("sub");
        return it == kv.end() ? fallback : it->second;
    }
};

GroupSpec parse_group_spec(const std::string& spec) {
    GroupSpec out;
    std::size_t start = 0;
    bool first = true;
    while (start <= spec.size()) {
        std::size_t colon = spec.find(':', start);
        if (colon == std::string::npos) colon = spec.size();
        std::string token = spec.substr(start, colon - start);
        if (first) {
            if (token.empty()) throw std::invalid_argument("empty group spec");
            out.family = token;
            first = false;
        } else {
            std::size_t eq = token.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
                throw std::invalid_argument("bad group spec token \"" + token + "\"");
            out.kv[token.substr(0, eq)] = token.substr(eq + 1);
        }
        start = colon + 1;
    }
    return out;
}

MatrixGroup resolve_group(const GroupSpec& s) {
    if (s.family == "s3") return s3_permutation_group();
    if (s.family == "diag") return diagonal_cyclic_group(s.num("q", 7), s.num("m", 3));
    if (s.family == "transvection") return transvection_hyperplane_group(s.num("q", 3));
    if (s.family == "trivial") {
        auto [p, r] = factor_prime_power(s.num("q", 3));
        return MatrixGroup::trivial(make_field(p, r), s.num("n", 2));
    }
    if (s.family == "gu3") {
        Gu3Data data = gu3_stabilizers(s.num("q", 2));
        const std::string sub = s.sub("H");
        if (sub == "H") return data.H;
        if (sub == "Htilde") return data.Htilde;
        if (sub.size() > 1 && sub[0] == 'H') {
            unsigned m = parse_num(sub.substr(1), "sub");
            for (const auto& [mm, hm] : data.subgroups)
                if (mm == m) return hm;
        }
        throw std::invalid_argument("unknown gu3 subgroup \"" + sub + "\"");
    }
    if (s.family == "unitary") return unitary_transvection_family(s.num("q", 2), s.num("n", 2)).group;
    if (s.family == "symplectic") return symplectic_stabilizer(s.num("q", 2), s.num("m", 2)).group;
    if (s.family == "orthogonal-odd")
        return orthogonal_plus_stabilizer_odd(s.num("q", 3), s.num("m", 2)).group;
    if (s.family == "orthogonal-even")
        return orthogonal_plus_stabilizer_even(s.num("q", 2), s.num("m", 2)).group;
    if (s.family == "go3") {
        Go3Data data = go3_stabilizers(s.num("q", 3));
        const std::string sub = s.sub("H");
        if (sub == "H") return data.H;
        if (sub == "Hminus") return data.Hminus;
        throw std::invalid_argument("unknown go3 subgroup \"" + sub + "\"");
    }
    if (s.family == "symmetric") {
        SymmetricFamilyData data = symmetric_family(s.num("p", 2), s.num("m", 6));
        const std::string sub = s.sub("group");
        if (sub == "group") return data.group;
        if (sub == "H") return data.H;
        if (sub == "sigma") return MatrixGroup::closure({data.sigma});
        throw std::invalid_argument("unknown symmetric subgroup \"" + sub + "\"");
    }
    throw std::invalid_argument("unknown group family \"" + s.family + "\"");
}

} // namespace

std::string describe_group(const std::string& spec) {
    MatrixGroup g = resolve_group(parse_group_spec(spec));
    std::ostringstream out;
    out << spec << "\n";
    out << "  field: " << field_blurb(g.field()) << "\n";
    out << "  dimension: " << g.dim() << "\n";
    out << "  order: " << g.order() << "\n";
    out << "  generators: " << g.generators().size() << "\n";
    out << "  abelian: " << (g.is_abelian() ? "yes" : "no")
        << ", p-group: " << (g.is_p_group() ? "yes" : "no") << "\n";
    ReflectionCensus census = reflection_census(g);
    out << "  pseudo-reflections: " << census.pseudo_reflections.size() << " ("
        << census.transvections.size() << " transvections)\n";
    out << "  fixed space dimension: " << group_fixed_space(g).dim() << "\n";
    DifferentData diff = different(g);
    out << "  reflecting hyperplanes: " << diff.arrangement.hyperplanes.size() << " in "
        << diff.arrangement.orbits.size() << " orbits\n";
    out << "  different degree: " << diff.delta
        << (diff.certified ? " (certified)" : " (budget ran out)") << "\n";
    return out.str();
}

} // namespace mil
