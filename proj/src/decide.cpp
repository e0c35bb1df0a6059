#include "mil/decide.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace mil {

namespace {

std::string join_degrees(const std::vector<unsigned>& ds) {
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ds[i]);
    }
    return out;
}

std::vector<std::size_t> divisors_from(std::size_t v, std::size_t lo) {
    std::vector<std::size_t> ds;
    for (std::size_t a = 1; a * a <= v; ++a) {
        if (v % a) continue;
        if (a >= lo) ds.push_back(a);
        const std::size_t b = v / a;
        if (b != a && b >= lo) ds.push_back(b);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

void multisets_rec(std::size_t remaining, std::size_t min_d, unsigned slots,
                   std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
    if (slots == 1) {
        if (remaining >= min_d && remaining <= kMaxDegree * 16ull) {
            cur.push_back(static_cast<unsigned>(remaining));
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (std::size_t d : divisors_from(remaining, min_d)) {
        cur.push_back(static_cast<unsigned>(d));
        multisets_rec(remaining / d, d, slots - 1, cur, out);
        cur.pop_back();
    }
}

/// Ordered factorizations |G| = d1 * ... * dn with d1 <= ... <= dn.
std::vector<std::vector<unsigned>> degree_multisets(std::size_t order, unsigned slots) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    multisets_rec(order, 1, slots, cur, out);
    return out;
}

std::vector<unsigned long long> series_coeffs(const std::vector<unsigned>& ds, unsigned trunc) {
    std::vector<unsigned long long> c(trunc + 1, 0);
    c[0] = 1;
    for (unsigned d : ds)
        for (unsigned i = d; i <= trunc; ++i) c[i] += c[i - d];
    return c;
}

bool next_combination(std::vector<unsigned>& c, unsigned limit) {
    const unsigned k = static_cast<unsigned>(c.size());
    for (unsigned back = 0; back < k; ++back) {
        const unsigned i = k - 1 - back;
        if (c[i] + 1 + back < limit) {
            ++c[i];
            for (unsigned j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct SlotGroup {
    unsigned degree = 0;
    unsigned count = 0;
};

std::vector<SlotGroup> group_degrees(const std::vector<unsigned>& ms) {
    std::vector<SlotGroup> groups;
    for (unsigned d : ms) {
        if (!groups.empty() && groups.back().degree == d)
            ++groups.back().count;
        else
            groups.push_back({d, 1});
    }
    return groups;
}

Polynomial random_combination(const std::vector<Polynomial>& basis, const FieldPtr& f,
                              unsigned nvars, std::mt19937& rng) {
    Polynomial p = Polynomial::zero(f, nvars);
    while (p.is_zero()) {
        p = Polynomial::zero(f, nvars);
        for (const Polynomial& b : basis) {
            const fval c = static_cast<fval>(rng() % f->q);
            if (c) p = p + b.scaled(c);
        }
    }
    return p;
}

struct HsopResult {
    bool found = false;
    std::vector<Polynomial> tuple;
    FieldPtr field;
};

/// Searches for a system of parameters in the prescribed invariant degrees:
/// basis-aligned tuples first, then seeded random combinations, then the
/// same over scalar extensions.  Certification is the single graded check
/// that the tuple's ideal fills the whole ring one past the top coinvariant
/// degree.
class HsopSearch {
public:
    HsopSearch(const MatrixGroup& g, const CoregularityBudget& budget)
        : g_(g), budget_(budget) {}

    HsopResult run(const std::vector<unsigned>& ms, unsigned dstar, std::size_t salt) {
        const auto groups = group_degrees(ms);
        HsopResult base = search_over(g_, groups, dstar, salt, true, base_cache_);
        if (base.found) return base;
        for (unsigned s = 2; s <= budget_.max_lift; ++s) {
            const MatrixGroup& lifted = lifted_group(s);
            HsopResult up = search_over(lifted, groups, dstar, salt + 7919ull * s, false,
                                        lift_cache_[s]);
            if (up.found) return up;
        }
        return {};
    }

private:
    using BasisCache = std::map<unsigned, std::vector<Polynomial>>;

    const MatrixGroup& lifted_group(unsigned s) {
        auto it = lifted_.find(s);
        if (it == lifted_.end()) it = lifted_.emplace(s, lift_group(g_, s)).first;
        return it->second;
    }

    static const std::vector<Polynomial>& degree_basis(const MatrixGroup& g, unsigned d,
                                                       BasisCache& cache) {
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, invariant_space(g, d)).first;
        return it->second;
    }

    HsopResult search_over(const MatrixGroup& g, const std::vector<SlotGroup>& groups,
                           unsigned dstar, std::size_t salt, bool aligned_phase,
                           BasisCache& cache) {
        const FieldPtr& f = g.field();
        const unsigned n = g.dim();
        std::vector<const std::vector<Polynomial>*> bases;
        for (const SlotGroup& sg : groups) {
            const auto& b = degree_basis(g, sg.degree, cache);
            if (b.size() < sg.count) return {};
            bases.push_back(&b);
        }
        DegreeBasis cert(f, n, dstar);
        auto certify = [&](const std::vector<Polynomial>& tuple) {
            return ideal_graded_piece(tuple, dstar, cert).dim() == cert.dim();
        };

        if (aligned_phase) {
            std::vector<std::vector<unsigned>> state;
            for (const SlotGroup& sg : groups) {
                std::vector<unsigned> first(sg.count);
                for (unsigned i = 0; i < sg.count; ++i) first[i] = i;
                state.push_back(std::move(first));
            }
            std::size_t tried = 0;
            while (tried < budget_.tuple_cap) {
                std::vector<Polynomial> tuple;
                for (std::size_t gi = 0; gi < groups.size(); ++gi)
                    for (unsigned idx : state[gi]) tuple.push_back((*bases[gi])[idx]);
                ++tried;
                if (certify(tuple)) return {true, std::move(tuple), f};
                std::size_t gi = groups.size();
                while (gi > 0) {
                    --gi;
                    if (next_combination(state[gi], static_cast<unsigned>(bases[gi]->size())))
                        break;
                    for (unsigned i = 0; i < groups[gi].count; ++i) state[gi][i] = i;
                    if (gi == 0) {
                        tried = budget_.tuple_cap;
                        break;
                    }
                }
                if (gi == 0 && tried >= budget_.tuple_cap) break;
            }
        }

        std::mt19937 rng(static_cast<std::mt19937::result_type>(
            budget_.seed + 0x9e3779b9ull * (salt + 1)));
        for (unsigned t = 0; t < budget_.random_tries; ++t) {
            std::vector<Polynomial> tuple;
            for (std::size_t gi = 0; gi < groups.size(); ++gi)
                for (unsigned i = 0; i < groups[gi].count; ++i)
                    tuple.push_back(random_combination(*bases[gi], f, n, rng));
            if (certify(tuple)) return {true, std::move(tuple), f};
        }
        return {};
    }

    const MatrixGroup& g_;
    const CoregularityBudget& budget_;
    std::map<unsigned, MatrixGroup> lifted_;
    BasisCache base_cache_;
    std::map<unsigned, BasisCache> lift_cache_;
};

} // namespace

DspVerdict dsp_decide(const MatrixGroup& g, const DifferentData& diff, unsigned dim_cap) {
    if (g.order() == 0) throw std::invalid_argument("dsp_decide needs a nonempty group");
    if (diff.chi.group() != g)
        throw std::invalid_argument("different data does not belong to the group");
    if (!diff.certified) throw std::domain_error("dsp_decide needs certified different exponents");
    const FieldPtr& f = g.field();
    const unsigned n = g.dim();
    DegreeBasis basis(f, n, diff.delta);
    DspVerdict v;
    if (basis.dim() > dim_cap) {
        v.outcome = DspOutcome::inconclusive;
        v.obstruction = "transfer system dimension " + std::to_string(basis.dim()) +
                        " exceeds the cap " + std::to_string(dim_cap);
        return v;
    }
    const unsigned dim = basis.dim();
    Matrix m(f, dim, dim);
    for (unsigned j = 0; j < dim; ++j) {
        const Polynomial mono = Polynomial::from_terms(f, n, {{basis.mono(j), 1}});
        const std::vector<fval> col = basis.to_vec(twisted_transfer(g, diff.chi, mono));
        for (unsigned i = 0; i < dim; ++i) m.set(i, j, col[i]);
    }
    Matrix rhs(f, dim, 1);
    const std::vector<fval> tv = basis.to_vec(diff.theta);
    for (unsigned i = 0; i < dim; ++i) rhs.set(i, 0, tv[i]);
    const LinearSolution sol = solve_linear(m, rhs);
    if (!sol.consistent) {
        v.outcome = DspOutcome::fails;
        v.obstruction = "linear-system-infeasible";
        return v;
    }
    std::vector<fval> x(dim);
    for (unsigned i = 0; i < dim; ++i) x[i] = sol.particular.at(i, 0);
    v.outcome = DspOutcome::holds;
    v.witness = basis.from_vec(x);
    return v;
}

DspVerdict dsp_pgroup_criterion(const MatrixGroup& g) {
    if (g.order() == 0) throw std::invalid_argument("dsp_pgroup_criterion needs a nonempty group");
    if (!g.is_p_group())
        throw std::invalid_argument("the transvection criterion applies to p-groups only");
    DspVerdict v;
    if (transvection_subgroup(g) == g) {
        v.outcome = DspOutcome::inconclusive;
        v.obstruction = "transvections generate the group; the criterion is silent";
    } else {
        v.outcome = DspOutcome::fails;
        v.obstruction = "p-group-not-transvection-generated";
    }
    return v;
}

CoregularityVerdict coregularity_decide(const MatrixGroup& g, const DifferentData& diff,
                                        const CoregularityBudget& budget) {
    if (g.order() == 0) throw std::invalid_argument("coregularity_decide needs a nonempty group");
    if (!diff.certified)
        throw std::domain_error("coregularity_decide needs certified different exponents");
    const unsigned n = g.dim();
    CoregularityVerdict out;

    const auto all = degree_multisets(g.order(), n);
    const unsigned target = diff.delta + n;
    const unsigned dim1 = static_cast<unsigned>(invariant_space(g, 1).size());
    std::vector<std::vector<unsigned>> arith;
    for (const auto& ms : all) {
        unsigned long long sum = 0;
        for (unsigned d : ms) sum += d;
        if (sum != target) {
            out.notes.push_back("degrees " + join_degrees(ms) + ": degree sum " +
                                std::to_string(sum) + ", the ramification forces " +
                                std::to_string(target));
            continue;
        }
        const unsigned ones = static_cast<unsigned>(std::count(ms.begin(), ms.end(), 1u));
        if (ones > dim1) {
            out.notes.push_back("degrees " + join_degrees(ms) + ": needs " + std::to_string(ones) +
                                " independent linear invariants, only " + std::to_string(dim1) +
                                " exist");
            continue;
        }
        arith.push_back(ms);
    }
    if (arith.empty()) {
        out.status = CoregularityVerdict::Status::not_coregular;
        out.obstruction = "every candidate generator-degree multiset fails the degree-sum or "
                          "linear-rank constraints";
        return out;
    }

    const GradedDims hd = hilbert_function(g, target);
    std::vector<std::vector<unsigned>> survivors;
    for (const auto& ms : arith) {
        const auto coeff = series_coeffs(ms, target);
        bool ok = true;
        for (unsigned t = 0; t <= target; ++t) {
            if (coeff[t] == hd.dims[t]) continue;
            out.notes.push_back("degrees " + join_degrees(ms) + ": predicted dimension " +
                                std::to_string(coeff[t]) + " at degree " + std::to_string(t) +
                                ", invariants have " + std::to_string(hd.dims[t]));
            ok = false;
            break;
        }
        if (ok) survivors.push_back(ms);
    }
    if (survivors.empty()) {
        out.status = CoregularityVerdict::Status::not_coregular;
        out.obstruction = "every candidate generator-degree multiset contradicts the Hilbert "
                          "series of the invariants";
        return out;
    }

    const unsigned dstar = diff.delta + 1;
    HsopSearch search(g, budget);
    for (std::size_t mi = 0; mi < survivors.size(); ++mi) {
        const auto& ms = survivors[mi];
        if (dstar > kMaxDegree) {
            out.notes.push_back("degrees " + join_degrees(ms) +
                                ": certification degree exceeds the monomial cap");
            continue;
        }
        HsopResult r = search.run(ms, dstar, mi);
        if (r.found) {
            out.status = CoregularityVerdict::Status::coregular;
            out.degrees = ms;
            out.hsop = std::move(r.tuple);
            out.hsop_field = r.field;
            return out;
        }
        out.notes.push_back("degrees " + join_degrees(ms) +
                            ": no certified parameter system within the search budget");
    }
    out.status = CoregularityVerdict::Status::inconclusive;
    out.obstruction = "a degree multiset survives the filters but no parameter system was found "
                      "within the search budget";
    return out;
}

DspVerdict dsp_abelian_criterion(const MatrixGroup& g, const DifferentData& diff,
                                 const CoregularityBudget& budget) {
    if (g.order() == 0) throw std::invalid_argument("dsp_abelian_criterion needs a nonempty group");
    if (!g.is_abelian() || !g.is_p_group())
        throw std::invalid_argument("the equivalence with coregularity needs an abelian p-group");
    const CoregularityVerdict cv = coregularity_decide(g, diff, budget);
    DspVerdict v;
    switch (cv.status) {
    case CoregularityVerdict::Status::coregular:
        v.outcome = DspOutcome::holds;
        v.obstruction = "";
        break;
    case CoregularityVerdict::Status::not_coregular:
        v.outcome = DspOutcome::fails;
        v.obstruction = "abelian-not-coregular";
        break;
    case CoregularityVerdict::Status::inconclusive:
        v.outcome = DspOutcome::inconclusive;
        v.obstruction = cv.obstruction;
        break;
    }
    return v;
}

SerreCheck serre_check(const MatrixGroup& g, const CoregularityVerdict& verdict) {
    SerreCheck s;
    s.applicable = verdict.status == CoregularityVerdict::Status::coregular;
    if (s.applicable) s.passed = reflection_subgroup(g) == g;
    return s;
}

DegreeIdentities degree_identities(const std::vector<unsigned>& degrees, std::size_t order,
                                   unsigned delta) {
    unsigned long long prod = 1, sum = 0;
    for (unsigned d : degrees) {
        if (d == 0) throw std::invalid_argument("generator degrees must be positive");
        prod *= d;
        sum += d - 1;
    }
    DegreeIdentities r;
    r.product_matches = prod == order;
    r.sum_matches = sum == delta;
    return r;
}

ContractionCheck ideal_contraction_check(const MatrixGroup& g, const std::vector<Polynomial>& gens,
                                         unsigned max_degree) {
    if (g.order() == 0)
        throw std::invalid_argument("ideal_contraction_check needs a nonempty group");
    if (gens.empty()) throw std::invalid_argument("ideal_contraction_check needs generators");
    const FieldPtr& f = g.field();
    const unsigned n = g.dim();
    for (const Polynomial& p : gens) {
        if (p.is_zero() || !p.is_homogeneous() || p.degree() == 0)
            throw std::invalid_argument("ideal generators must be homogeneous of positive degree");
        for (const Matrix& m : g.generators())
            if (act(m, p) != p) throw std::invalid_argument("ideal generators must be invariant");
    }
    ContractionCheck out;
    for (unsigned d = 1; d <= max_degree; ++d) {
        DegreeBasis basis(f, n, d);
        const std::vector<Polynomial> inv = invariant_space(g, d);
        if (inv.empty()) continue;
        const Subspace invsp = Subspace::from_rows(basis.rows_from(inv));
        const Subspace lhs = ideal_graded_piece(gens, d, basis).intersect(invsp);
        std::vector<std::vector<fval>> rvecs;
        for (const Polynomial& gen : gens) {
            const unsigned e = static_cast<unsigned>(gen.degree());
            if (e > d) continue;
            for (const Polynomial& b : invariant_space(g, d - e))
                rvecs.push_back(basis.to_vec(gen * b));
        }
        const Subspace rhs = Subspace::from_vectors(f, basis.dim(), rvecs);
        if (rhs.dim() == lhs.dim()) continue;
        for (unsigned i = 0; i < lhs.dim(); ++i) {
            std::vector<fval> row(lhs.basis().cols);
            for (unsigned j = 0; j < lhs.basis().cols; ++j) row[j] = lhs.basis().at(i, j);
            if (rhs.contains(row)) continue;
            out.holds = false;
            out.degree = d;
            out.witness = basis.from_vec(row);
            return out;
        }
    }
    return out;
}

std::vector<Subspace> sample_subspaces(const MatrixGroup& g) {
    const FieldPtr& f = g.field();
    const unsigned n = g.dim();
    std::vector<std::vector<fval>> pool;
    auto push_vec = [&](const std::vector<fval>& v) {
        if (std::all_of(v.begin(), v.end(), [](fval c) { return c == 0; })) return;
        if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
    };
    for (unsigned i = 0; i < n; ++i) {
        std::vector<fval> e(n, 0);
        e[i] = 1;
        push_vec(e);
    }
    if (n >= 2) {
        std::vector<fval> v(n, 0);
        v[0] = v[1] = 1;
        push_vec(v);
    }
    if (n >= 3) {
        std::vector<fval> v(n, 0);
        v[1] = v[2] = 1;
        push_vec(v);
    }
    push_vec(std::vector<fval>(n, 1));
    {
        std::vector<fval> v(n, 0);
        fval c = 1;
        for (unsigned i = 0; i < n; ++i) {
            v[i] = c;
            c = f->mul(c, f->primitive());
        }
        push_vec(v);
    }
    if (pool.size() > 8) pool.resize(8);

    std::map<Matrix, Subspace> spans;
    for (std::size_t mask = 1; mask < (std::size_t{1} << pool.size()); ++mask) {
        std::vector<std::vector<fval>> subset;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(pool[i]);
        Subspace s = Subspace::from_vectors(f, n, subset);
        spans.emplace(s.basis(), std::move(s));
    }
    std::vector<Subspace> out;
    out.reserve(spans.size());
    for (auto& [key, s] : spans) out.push_back(std::move(s));
    return out;
}

InheritanceReport inheritance_check(const MatrixGroup& g, bool dsp_premise, bool coreg_premise,
                                    const CoregularityBudget& budget) {
    InheritanceReport rep;
    if (!dsp_premise && !coreg_premise) return rep;
    struct Decision {
        std::optional<DspOutcome> dsp;
        std::optional<CoregularityVerdict::Status> coreg;
    };
    std::map<std::vector<Matrix>, Decision> cache;
    for (const Subspace& u : sample_subspaces(g)) {
        MatrixGroup h = point_stabilizer(g, u);
        if (h.order() == g.order()) continue;
        auto it = cache.find(h.elements());
        if (it == cache.end()) {
            Decision dec;
            const DifferentData dh = different(h);
            if (dsp_premise)
                dec.dsp = dh.certified ? dsp_decide(h, dh).outcome : DspOutcome::inconclusive;
            if (coreg_premise)
                dec.coreg = dh.certified ? coregularity_decide(h, dh, budget).status
                                         : CoregularityVerdict::Status::inconclusive;
            it = cache.emplace(h.elements(), std::move(dec)).first;
        }
        InheritanceCaseResult c;
        c.subspace = u;
        c.stabilizer_order = h.order();
        c.dsp = it->second.dsp;
        c.coreg = it->second.coreg;
        if (c.dsp) {
            if (*c.dsp == DspOutcome::fails) ++rep.violations;
            if (*c.dsp == DspOutcome::inconclusive) ++rep.unresolved;
        }
        if (c.coreg) {
            if (*c.coreg == CoregularityVerdict::Status::not_coregular) ++rep.violations;
            if (*c.coreg == CoregularityVerdict::Status::inconclusive) ++rep.unresolved;
        }
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

} // namespace mil
