#include "mil/different.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace mil {

namespace {

Mono unit_mono(unsigned var) { return Mono{1} << (8 * var); }

/// Monic linear form vanishing on a hyperplane given as a subspace.
Polynomial hyperplane_form(const FieldPtr& f, const Subspace& h) {
    const Matrix ker = h.basis().kernel();
    if (ker.rows != 1) throw std::domain_error("subspace is not a hyperplane");
    std::vector<fval> coeffs(ker.cols);
    for (unsigned j = 0; j < ker.cols; ++j) coeffs[j] = ker.at(0, j);
    unsigned lead = 0;
    for (unsigned j = 0; j < ker.cols; ++j)
        if (coeffs[j] != 0) lead = j;
    const fval scale = f->inv(coeffs[lead]);
    for (fval& c : coeffs) c = f->mul(c, scale);
    return Polynomial::linear_form(f, coeffs);
}

Polynomial theta_product(const FieldPtr& f, unsigned n, const std::vector<HyperplaneRecord>& hyperplanes,
                         const std::vector<unsigned>& exponents) {
    Polynomial out = Polynomial::constant(f, n, 1);
    for (std::size_t i = 0; i < hyperplanes.size(); ++i)
        if (exponents[i] > 0) out = out * hyperplanes[i].form.pow(exponents[i]);
    return out;
}

std::vector<unsigned> moving_variables(const MatrixGroup& g) {
    std::vector<unsigned> out;
    for (unsigned v = 0; v < g.dim(); ++v) {
        const Polynomial xv = Polynomial::variable(g.field(), g.dim(), v);
        for (const Matrix& m : g.generators())
            if (act(m, xv) != xv) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

/// Monomials in the given variables, ascending by total degree.
std::vector<Polynomial> witness_candidates(const FieldPtr& f, unsigned n, const std::vector<unsigned>& vars,
                                           unsigned max_degree, std::size_t max_count) {
    std::vector<Polynomial> out;
    auto emit = [&](auto&& self, std::size_t i, unsigned remaining, Mono m) -> void {
        if (out.size() >= max_count) return;
        if (i + 1 == vars.size()) {
            Mono full = m;
            for (unsigned k = 0; k < remaining; ++k) full = mono_mul(full, unit_mono(vars[i]));
            out.push_back(Polynomial::from_terms(f, n, {Term{full, 1}}));
            return;
        }
        Mono cur = m;
        for (unsigned e = 0; e <= remaining; ++e) {
            self(self, i + 1, remaining - e, cur);
            cur = mono_mul(cur, unit_mono(vars[i]));
        }
    };
    for (unsigned d = 0; d <= max_degree && out.size() < max_count; ++d) {
        if (vars.empty()) {
            if (d == 0) out.push_back(Polynomial::constant(f, n, 1));
        } else {
            emit(emit, 0, d, Mono{0});
        }
    }
    return out;
}

} // namespace

unsigned multiplicity_of_linear(const Polynomial& f, const Polynomial& ell) {
    if (f.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial is unbounded");
    unsigned count = 0;
    Polynomial rest = f;
    while (true) {
        const DivisionByLinear step = divide_by_linear(rest, ell);
        if (!step.exact) return count;
        rest = step.quotient;
        ++count;
    }
}

ReflectionArrangement reflection_arrangement(const MatrixGroup& g) {
    std::map<Subspace, std::size_t> index;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (!g.info(i).pseudo_reflection) continue;
        index.emplace(fixed_space(g.element(i)), 0);
    }
    std::vector<Subspace> ordered;
    for (auto& [space, idx] : index) {
        idx = ordered.size();
        ordered.push_back(space);
    }

    ReflectionArrangement arr;
    for (const Subspace& h : ordered) {
        HyperplaneRecord rec;
        rec.form = hyperplane_form(g.field(), h);
        rec.inertia = point_stabilizer(g, h);
        const std::size_t tv = reflection_census(rec.inertia).transvections.size();
        rec.q_alpha = static_cast<unsigned>(tv) + 1;
        if (rec.inertia.order() % rec.q_alpha != 0)
            throw std::domain_error("inertia group is not split by its transvections");
        rec.e_alpha = static_cast<unsigned>(rec.inertia.order()) / rec.q_alpha;
        rec.orbit = 0;
        arr.hyperplanes.push_back(std::move(rec));
    }

    const std::size_t none = ordered.size();
    std::vector<std::size_t> orbit_of(ordered.size(), none);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (orbit_of[i] != none) continue;
        const std::size_t id = arr.orbits.size();
        arr.orbits.push_back({});
        std::vector<std::size_t> frontier{i};
        orbit_of[i] = id;
        while (!frontier.empty()) {
            const std::size_t cur = frontier.back();
            frontier.pop_back();
            arr.orbits[id].push_back(cur);
            for (const Matrix& m : g.generators()) {
                const std::size_t next = index.at(ordered[cur].image(m));
                if (orbit_of[next] == none) {
                    orbit_of[next] = id;
                    frontier.push_back(next);
                }
            }
        }
        std::sort(arr.orbits[id].begin(), arr.orbits[id].end());
    }
    for (std::size_t i = 0; i < ordered.size(); ++i) arr.hyperplanes[i].orbit = orbit_of[i];
    return arr;
}

DifferentData different(const MatrixGroup& g, const DifferentBudget& budget) {
    const FieldPtr& f = g.field();
    const unsigned n = g.dim();

    DifferentData data;
    data.arrangement = reflection_arrangement(g);
    const auto& hs = data.arrangement.hyperplanes;
    const std::size_t norbits = data.arrangement.orbits.size();

    data.exponents.assign(hs.size(), 0);
    for (std::size_t i = 0; i < hs.size(); ++i)
        data.exponents[i] = std::max(hs[i].e_alpha - 1, hs[i].q_alpha - 1);
    data.orbit_witnesses.assign(norbits, "");

    if (hs.empty()) {
        data.theta = Polynomial::constant(f, n, 1);
        data.chi = Character::trivial(g);
        data.delta = 0;
        return data;
    }

    // the exponent at a hyperplane only depends on its inertia group: the
    // fixed field of the inertia is unramified there, so certification runs
    // inside each small single-hyperplane group, once per orbit
    for (std::size_t o = 0; o < norbits; ++o) {
        const std::size_t rep = data.arrangement.orbits[o][0];
        const MatrixGroup& w = hs[rep].inertia;
        const Polynomial& ell = hs[rep].form;
        unsigned d = data.exponents[rep];

        // a nonzero twisted transfer not divisible by ell^{d+1} refutes the
        // next exponent; the floor theorem supplies the matching lower bound
        auto refute = [&](unsigned level, const std::vector<Polynomial>& pool) -> bool {
            const Polynomial theta_hat = ell.pow(level);
            const auto chi_hat = character_of_semi_invariant(w, theta_hat);
            if (!chi_hat) throw std::domain_error("hyperplane power is not semi-invariant");
            for (const Polynomial& cand : pool) {
                Polynomial tt = twisted_transfer(w, *chi_hat, cand);
                if (tt.is_zero()) continue;
                if (multiplicity_of_linear(tt, ell) < level) {
                    data.orbit_witnesses[o] = cand.str();
                    return true;
                }
            }
            return false;
        };

        const std::vector<Polynomial> scan =
            witness_candidates(f, n, moving_variables(w), budget.witness_degree, budget.witness_count);
        if (!refute(d + 1, scan)) {
            // monomials below the module-generator bound of the inertia
            // group decide divisibility for every f at once, so the exact
            // exponent can be ratcheted up until a refutation appears
            const CoinvariantBound cov = coinvariant_bound(w, budget.cov_degree);
            data.cov_bound = std::max(data.cov_bound, cov.bound);
            if (!cov.certified) {
                data.certified = false; // this orbit stays at the floor
            } else {
                std::vector<unsigned> all_vars(n);
                for (unsigned v = 0; v < n; ++v) all_vars[v] = v;
                const std::vector<Polynomial> gens =
                    witness_candidates(f, n, all_vars, cov.bound == 0 ? 0 : cov.bound - 1,
                                       std::numeric_limits<std::size_t>::max());
                while (!refute(d + 1, gens)) {
                    ++d;
                    if (d >= hs[rep].e_alpha * hs[rep].q_alpha)
                        throw std::domain_error("different exponent exceeded the inertia order bound");
                }
            }
        }
        for (std::size_t i : data.arrangement.orbits[o]) data.exponents[i] = d;
    }

    data.theta = theta_product(f, n, hs, data.exponents);
    const auto chi = character_of_semi_invariant(g, data.theta);
    if (!chi) throw std::domain_error("the different is not semi-invariant");
    data.chi = *chi;
    data.delta = static_cast<unsigned>(data.theta.degree());
    return data;
}

DifferentFactorization different_factorization(const MatrixGroup& g, const MatrixGroup& h, const Subspace& u,
                                               const DifferentBudget& budget) {
    if (point_stabilizer(g, u) != h) throw std::invalid_argument("subgroup is not the point stabilizer");
    const FieldPtr& f = g.field();
    const unsigned n = g.dim();

    const DifferentData dg = different(g, budget);
    const auto& hs = dg.arrangement.hyperplanes;

    auto vanishes_on_u = [&](const Polynomial& form) {
        for (unsigned i = 0; i < u.dim(); ++i) {
            std::vector<fval> row(n);
            for (unsigned j = 0; j < n; ++j) row[j] = u.basis().at(i, j);
            if (form.evaluate(row) != 0) return false;
        }
        return true;
    };

    DifferentFactorization out;
    std::vector<unsigned> in_part(hs.size(), 0), out_part(hs.size(), 0);
    for (std::size_t i = 0; i < hs.size(); ++i)
        (vanishes_on_u(hs[i].form) ? in_part : out_part)[i] = dg.exponents[i];
    out.theta_h = theta_product(f, n, hs, in_part);
    out.theta_quot = theta_product(f, n, hs, out_part);
    // a product of linear forms lies in the ideal of U exactly when one
    // factor does
    out.quot_vanishes_on_u = false;
    for (std::size_t i = 0; i < hs.size(); ++i)
        if (out_part[i] > 0 && vanishes_on_u(hs[i].form)) out.quot_vanishes_on_u = true;

    const DifferentData dh = different(h, budget);
    Polynomial probe = out.theta_h;
    out.intrinsic_divides = true;
    for (std::size_t i = 0; i < dh.arrangement.hyperplanes.size() && out.intrinsic_divides; ++i)
        for (unsigned k = 0; k < dh.exponents[i]; ++k) {
            const DivisionByLinear step = divide_by_linear(probe, dh.arrangement.hyperplanes[i].form);
            if (!step.exact) {
                out.intrinsic_divides = false;
                break;
            }
            probe = step.quotient;
        }
    out.intrinsic_equal = out.intrinsic_divides && probe.degree() == 0;
    return out;
}

} // namespace mil
