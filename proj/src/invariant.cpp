#include "mil/invariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace mil {

namespace {

Polynomial mono_poly(const FieldPtr& f, unsigned nvars, Mono m) {
    return Polynomial::from_terms(f, nvars, {Term{m, 1}});
}

/// Matrix of f -> act(g, f) on the degree-d monomial basis.
Matrix induced_action(const Matrix& g, const DegreeBasis& basis) {
    LinearSubstitution sub = action_substitution(g);
    Matrix out(basis.field(), basis.dim(), basis.dim());
    for (unsigned j = 0; j < basis.dim(); ++j) {
        const Polynomial image = sub.apply(mono_poly(basis.field(), basis.nvars(), basis.mono(j)));
        const std::vector<fval> col = basis.to_vec(image);
        for (unsigned i = 0; i < basis.dim(); ++i) out.set(i, j, col[i]);
    }
    return out;
}

std::vector<Polynomial> eigenspace_basis(const MatrixGroup& g, unsigned d,
                                         const std::vector<fval>& gen_scalars) {
    const DegreeBasis basis(g.field(), g.dim(), d);
    const auto& gens = g.generators();
    Matrix stacked(g.field(), basis.dim() * static_cast<unsigned>(gens.size()), basis.dim());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Matrix m = induced_action(gens[k], basis);
        for (unsigned i = 0; i < basis.dim(); ++i) {
            for (unsigned j = 0; j < basis.dim(); ++j) {
                fval v = m.at(i, j);
                if (i == j) v = g.field()->sub(v, gen_scalars[k]);
                stacked.set(static_cast<unsigned>(k) * basis.dim() + i, j, v);
            }
        }
    }
    const Subspace ker = Subspace::from_rows(stacked.kernel());
    std::vector<Polynomial> out;
    for (unsigned i = 0; i < ker.dim(); ++i) {
        std::vector<fval> row(basis.dim());
        for (unsigned j = 0; j < basis.dim(); ++j) row[j] = ker.basis().at(i, j);
        out.push_back(basis.from_vec(row));
    }
    return out;
}

void check_same_field(const MatrixGroup& g, const Polynomial& f) {
    if (f.field() != g.field() || f.nvars() != g.dim())
        throw std::invalid_argument("polynomial does not live on the group's space");
}

} // namespace

Character Character::trivial(MatrixGroup g) {
    Character chi;
    chi.vals_.assign(g.order(), 1);
    chi.g_ = std::move(g);
    return chi;
}

Character Character::from_values(MatrixGroup g, std::vector<fval> values) {
    if (values.size() != g.order()) throw std::invalid_argument("one value per group element required");
    const FieldPtr& f = g.field();
    for (fval v : values)
        if (v == 0 || !f->valid(v)) throw std::invalid_argument("character values must be nonzero");

    // multiplicativity on generators x everything spreads to all products
    for (const Matrix& a : g.generators()) {
        const fval va = values[*g.index_of(a)];
        for (std::size_t i = 0; i < g.order(); ++i) {
            const fval lhs = values[*g.index_of(a * g.element(i))];
            if (lhs != f->mul(va, values[i])) throw std::invalid_argument("values are not multiplicative");
        }
    }
    Character chi;
    chi.g_ = std::move(g);
    chi.vals_ = std::move(values);
    return chi;
}

fval Character::value_of(const Matrix& m) const {
    const auto idx = g_.index_of(m);
    if (!idx) throw std::invalid_argument("element is not in the character's group");
    return vals_[*idx];
}

bool Character::is_trivial() const {
    return std::all_of(vals_.begin(), vals_.end(), [](fval v) { return v == 1; });
}

Character Character::inverse() const {
    Character chi;
    chi.g_ = g_;
    chi.vals_.reserve(vals_.size());
    for (fval v : vals_) chi.vals_.push_back(g_.field()->inv(v));
    return chi;
}

std::optional<Character> character_of_semi_invariant(const MatrixGroup& g, const Polynomial& f) {
    check_same_field(g, f);
    if (f.is_zero()) return std::nullopt;
    const FieldPtr& field = g.field();
    const fval lead = f.lead_term().c;
    std::vector<fval> values;
    values.reserve(g.order());
    for (const Matrix& m : g.elements()) {
        const Polynomial image = act(m, f);
        if (image.is_zero()) return std::nullopt;
        const Term lt = image.lead_term();
        if (lt.m != f.lead_term().m) return std::nullopt;
        const fval c = field->div(lt.c, lead);
        if (image != f.scaled(c)) return std::nullopt;
        values.push_back(c);
    }
    return Character::from_values(g, std::move(values));
}

std::vector<Polynomial> invariant_space(const MatrixGroup& g, unsigned d) {
    return eigenspace_basis(g, d, std::vector<fval>(g.generators().size(), 1));
}

GradedDims hilbert_function(const MatrixGroup& g, unsigned truncation) {
    GradedDims out;
    out.dims.reserve(truncation + 1);
    for (unsigned d = 0; d <= truncation; ++d)
        out.dims.push_back(static_cast<unsigned>(invariant_space(g, d).size()));
    return out;
}

std::vector<Polynomial> semi_invariant_space(const MatrixGroup& g, const Character& chi, unsigned d) {
    if (chi.group() != g) throw std::invalid_argument("character belongs to a different group");
    std::vector<fval> scalars;
    scalars.reserve(g.generators().size());
    for (const Matrix& m : g.generators()) scalars.push_back(chi.value_of(m));
    return eigenspace_basis(g, d, scalars);
}

Polynomial transfer(const MatrixGroup& g, const Polynomial& f) {
    check_same_field(g, f);
    Polynomial out = Polynomial::zero(f.field(), f.nvars());
    for (const Matrix& m : g.elements()) out = out + act(m, f);
    return out;
}

Polynomial twisted_transfer(const MatrixGroup& g, const Character& chi, const Polynomial& f) {
    check_same_field(g, f);
    if (chi.group() != g) throw std::invalid_argument("character belongs to a different group");
    const FieldPtr& field = g.field();
    Polynomial out = Polynomial::zero(f.field(), f.nvars());
    for (std::size_t i = 0; i < g.order(); ++i)
        out = out + act(g.element(i), f).scaled(field->inv(chi.value(i)));
    return out;
}

Polynomial relative_transfer(const MatrixGroup& g, const MatrixGroup& h, const Polynomial& f) {
    check_same_field(g, f);
    Polynomial out = Polynomial::zero(f.field(), f.nvars());
    for (const Matrix& rep : right_cosets(g, h).representatives) out = out + act(rep, f);
    return out;
}

CoinvariantBound coinvariant_bound(const MatrixGroup& g, unsigned budget_degree) {
    const FieldPtr& f = g.field();
    const unsigned n = g.dim();
    std::vector<Polynomial> ideal_basis; // degree d-1 piece of the ideal A * A^G_+
    for (unsigned d = 1; d <= budget_degree; ++d) {
        const DegreeBasis basis(f, n, d);
        std::vector<std::vector<fval>> rows;
        for (const Polynomial& b : ideal_basis)
            for (unsigned i = 0; i < n; ++i) rows.push_back(basis.to_vec(b * Polynomial::variable(f, n, i)));
        for (const Polynomial& u : invariant_space(g, d)) rows.push_back(basis.to_vec(u));

        const Subspace piece = rows.empty() ? Subspace::zero(f, basis.dim())
                                            : Subspace::from_vectors(f, basis.dim(), rows);
        if (piece.dim() == basis.dim()) return {d, true};

        ideal_basis.clear();
        for (unsigned i = 0; i < piece.dim(); ++i) {
            std::vector<fval> row(basis.dim());
            for (unsigned j = 0; j < basis.dim(); ++j) row[j] = piece.basis().at(i, j);
            ideal_basis.push_back(basis.from_vec(row));
        }
    }
    return {budget_degree, false};
}

std::vector<DegreeCheck> algebra_generation_check(const MatrixGroup& g, const std::vector<Polynomial>& gens,
                                                  unsigned max_degree) {
    const FieldPtr& f = g.field();
    const unsigned n = g.dim();
    for (const Polynomial& h : gens) {
        check_same_field(g, h);
        if (h.is_zero() || !h.is_homogeneous() || h.degree() == 0)
            throw std::invalid_argument("generators must be homogeneous of positive degree");
        for (const Matrix& m : g.generators())
            if (act(m, h) != h) throw std::invalid_argument("generator is not invariant");
    }

    std::vector<DegreeCheck> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        const DegreeBasis basis(f, n, d);
        std::vector<std::vector<fval>> rows;
        // products of generator powers of total degree exactly d
        auto descend = [&](auto&& self, std::size_t i, unsigned remaining, const Polynomial& current) -> void {
            if (remaining == 0) {
                rows.push_back(basis.to_vec(current));
                return;
            }
            if (i == gens.size()) return;
            Polynomial running = current;
            for (unsigned used = 0; used <= remaining; used += static_cast<unsigned>(gens[i].degree())) {
                self(self, i + 1, remaining - used, running);
                if (used + gens[i].degree() > remaining) break;
                running = running * gens[i];
            }
        };
        descend(descend, 0, d, Polynomial::constant(f, n, 1));

        const Subspace span = rows.empty() ? Subspace::zero(f, basis.dim())
                                           : Subspace::from_vectors(f, basis.dim(), rows);
        const unsigned expected = static_cast<unsigned>(invariant_space(g, d).size());
        out.push_back({d, span.dim() == expected, expected, span.dim()});
    }
    return out;
}

MatrixGroup lift_group(const MatrixGroup& g, unsigned s) {
    if (s == 0) throw std::invalid_argument("extension degree must be positive");
    const FieldPtr& sub = g.field();
    const FieldPtr sup = make_field(sub->p, sub->r * s);
    const SubfieldEmbedding emb = subfield_embedding(sub, sup);
    auto map_matrix = [&](const Matrix& m) {
        Matrix out(sup, m.rows, m.cols);
        for (unsigned i = 0; i < m.rows; ++i)
            for (unsigned j = 0; j < m.cols; ++j) out.set(i, j, emb(m.at(i, j)));
        return out;
    };
    std::vector<Matrix> elements, gens;
    for (const Matrix& m : g.elements()) elements.push_back(map_matrix(m));
    for (const Matrix& m : g.generators()) gens.push_back(map_matrix(m));
    return MatrixGroup::from_elements(std::move(elements), std::move(gens));
}

Polynomial lift_polynomial(const Polynomial& f, const FieldPtr& sup) {
    const SubfieldEmbedding emb = subfield_embedding(f.field(), sup);
    std::vector<Term> terms;
    for (const Term& t : f.terms()) terms.push_back({t.m, emb(t.c)});
    return Polynomial::from_terms(sup, f.nvars(), terms);
}

} // namespace mil
