#include "mil/group.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>

namespace mil {

bool is_pseudo_reflection(const Matrix& g) {
    if (g.rows != g.cols) throw std::invalid_argument("square matrix expected");
    return (g - Matrix::identity(g.f, g.rows)).rank() == 1;
}

bool is_transvection(const Matrix& g) {
    if (g.rows != g.cols) throw std::invalid_argument("square matrix expected");
    Matrix d = g - Matrix::identity(g.f, g.rows);
    return d.rank() == 1 && (d * d).is_zero();
}

unsigned element_order(const Matrix& g) {
    if (g.rows != g.cols) throw std::invalid_argument("square matrix expected");
    Matrix pow = g;
    unsigned ord = 1;
    while (!pow.is_identity()) {
        pow = pow * g;
        ++ord;
        if (ord > 1u << 24) throw std::domain_error("element order exceeds 2^24");
    }
    return ord;
}

ElementInfo classify_element(const Matrix& g) {
    ElementInfo e;
    Matrix d = g - Matrix::identity(g.f, g.rows);
    unsigned rk = d.rank();
    e.order = element_order(g);
    e.fixed_dim = g.rows - rk;
    e.pseudo_reflection = rk == 1;
    e.transvection = rk == 1 && (d * d).is_zero();
    return e;
}

std::size_t MatrixGroup::default_cap() {
    if (const char* s = std::getenv("MIL_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

void MatrixGroup::finalize() {
    std::sort(elems_.begin(), elems_.end());
    info_.clear();
    info_.reserve(elems_.size());
    for (const Matrix& g : elems_) info_.push_back(classify_element(g));
}

MatrixGroup MatrixGroup::closure(const std::vector<Matrix>& generators, std::size_t cap) {
    if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
    if (cap == 0) cap = default_cap();
    const FieldPtr& f = generators.front().f;
    unsigned n = generators.front().rows;
    for (const Matrix& g : generators) {
        if (g.f != f || g.rows != n || g.cols != n)
            throw std::invalid_argument("generators must be square over one field");
        if (n > 0 && g.rank() != n) throw std::invalid_argument("singular generator");
    }

    std::set<Matrix> seen;
    std::deque<Matrix> frontier;
    Matrix id = Matrix::identity(f, n);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Matrix cur = frontier.front();
        frontier.pop_front();
        for (const Matrix& g : generators) {
            Matrix next = cur * g;
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw CapExceeded(seen.size(), cap);
                frontier.push_back(next);
            }
        }
    }

    MatrixGroup out;
    out.f_ = f;
    out.n_ = n;
    out.gens_ = generators;
    out.elems_.assign(seen.begin(), seen.end());
    out.finalize();
    return out;
}

MatrixGroup MatrixGroup::from_elements(std::vector<Matrix> elements,
                                       std::vector<Matrix> generators) {
    if (elements.empty()) throw std::invalid_argument("a group has at least the identity");
    const FieldPtr& f = elements.front().f;
    unsigned n = elements.front().rows;
    for (const Matrix& g : elements)
        if (g.f != f || g.rows != n || g.cols != n)
            throw std::invalid_argument("elements must be square over one field");

    std::set<Matrix> seen(elements.begin(), elements.end());
    if (seen.size() != elements.size())
        throw std::invalid_argument("duplicate elements");
    if (!seen.count(Matrix::identity(f, n)))
        throw std::invalid_argument("element set lacks the identity");
    // closure under products; finiteness then gives inverses for free
    auto check = [&](const Matrix& a, const Matrix& b) {
        if (!seen.count(a * b)) throw std::invalid_argument("element set is not closed");
    };
    if (elements.size() <= 1000) {
        for (const Matrix& a : elements)
            for (const Matrix& b : elements) check(a, b);
    } else {
        std::mt19937 rng(2024);
        std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
        for (int k = 0; k < 4000; ++k) check(elements[pick(rng)], elements[pick(rng)]);
    }

    if (generators.empty()) {
        // greedy small generating set, so induced representations stack
        // few blocks
        std::set<Matrix> span{Matrix::identity(f, n)};
        for (const Matrix& g : elements) {
            if (span.count(g)) continue;
            generators.push_back(g);
            std::vector<Matrix> frontier(span.begin(), span.end());
            while (!frontier.empty()) {
                std::vector<Matrix> next;
                for (const Matrix& a : frontier)
                    for (const Matrix& b : generators) {
                        Matrix c = a * b;
                        if (span.insert(c).second) next.push_back(c);
                    }
                frontier = std::move(next);
            }
            if (span.size() == elements.size()) break;
        }
        if (generators.empty()) generators.push_back(Matrix::identity(f, n));
    }

    MatrixGroup out;
    out.f_ = f;
    out.n_ = n;
    out.gens_ = std::move(generators);
    out.elems_ = std::move(elements);
    out.finalize();
    return out;
}

MatrixGroup MatrixGroup::trivial(const FieldPtr& f, unsigned n) {
    return from_elements({Matrix::identity(f, n)});
}

bool MatrixGroup::contains(const Matrix& g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

std::optional<std::size_t> MatrixGroup::index_of(const Matrix& g) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
    if (it == elems_.end() || !(*it == g)) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

bool MatrixGroup::is_subgroup_of(const MatrixGroup& bigger) const {
    if (f_ != bigger.f_ || n_ != bigger.n_) return false;
    for (const Matrix& g : elems_)
        if (!bigger.contains(g)) return false;
    return true;
}

bool MatrixGroup::is_abelian() const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        for (std::size_t j = i + 1; j < elems_.size(); ++j)
            if (!(elems_[i] * elems_[j] == elems_[j] * elems_[i])) return false;
    return true;
}

bool MatrixGroup::is_p_group() const {
    std::size_t m = order();
    while (m % f_->p == 0) m /= f_->p;
    return m == 1;
}

std::size_t MatrixGroup::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const Matrix& g : elems_) {
        h ^= g.hash();
        h *= 1099511628211ull;
    }
    return h;
}

MatrixGroup point_stabilizer(const MatrixGroup& g, const Subspace& u) {
    if (u.ambient() != g.dim()) throw std::invalid_argument("subspace in the wrong space");
    const Matrix& basis = u.basis();
    std::vector<Matrix> fixers;
    for (const Matrix& m : g.elements()) {
        bool fixes = true;
        for (unsigned i = 0; i < basis.rows && fixes; ++i) {
            std::vector<fval> v(u.ambient());
            for (unsigned j = 0; j < u.ambient(); ++j) v[j] = basis.at(i, j);
            fixes = m.apply(v) == v;
        }
        if (fixes) fixers.push_back(m);
    }
    return MatrixGroup::from_elements(std::move(fixers));
}

ReflectionCensus reflection_census(const MatrixGroup& g) {
    ReflectionCensus c;
    for (std::size_t i = 0; i < g.order(); ++i) {
        const ElementInfo& e = g.info(i);
        if (e.pseudo_reflection) c.pseudo_reflections.push_back(g.element(i));
        if (e.transvection) c.transvections.push_back(g.element(i));
    }
    return c;
}

MatrixGroup reflection_subgroup(const MatrixGroup& g) {
    ReflectionCensus c = reflection_census(g);
    if (c.pseudo_reflections.empty()) return MatrixGroup::trivial(g.field(), g.dim());
    return MatrixGroup::closure(c.pseudo_reflections, g.order());
}

MatrixGroup transvection_subgroup(const MatrixGroup& g) {
    ReflectionCensus c = reflection_census(g);
    if (c.transvections.empty()) return MatrixGroup::trivial(g.field(), g.dim());
    return MatrixGroup::closure(c.transvections, g.order());
}

CosetDecomposition right_cosets(const MatrixGroup& g, const MatrixGroup& h) {
    if (!h.is_subgroup_of(g)) throw std::invalid_argument("not a subgroup");
    CosetDecomposition out;
    std::vector<bool> covered(g.order(), false);
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (covered[i]) continue;
        const Matrix& rep = g.element(i);
        out.representatives.push_back(rep);
        for (const Matrix& x : h.elements()) {
            auto idx = g.index_of(x * rep);
            if (!idx || covered[*idx])
                throw std::domain_error("coset decomposition is inconsistent");
            covered[*idx] = true;
        }
    }
    return out;
}

SplitResult split_trivial_summand(const MatrixGroup& g) {
    unsigned n = g.dim();
    const FieldPtr& f = g.field();
    // coordinates whose basis vector every element fixes
    std::vector<bool> in_s(n, false);
    for (unsigned j = 0; j < n; ++j) {
        bool fixed = true;
        for (const Matrix& m : g.elements()) {
            for (unsigned i = 0; i < n && fixed; ++i)
                fixed = m.at(i, j) == (i == j ? 1u : 0u);
            if (!fixed) break;
        }
        in_s[j] = fixed;
    }
    // shrink until the complementary coordinates form a stable block
    for (bool changed = true; changed;) {
        changed = false;
        for (unsigned s = 0; s < n && !changed; ++s) {
            if (!in_s[s]) continue;
            for (const Matrix& m : g.elements()) {
                for (unsigned c = 0; c < n; ++c)
                    if (!in_s[c] && m.at(s, c) != 0) {
                        in_s[s] = false;
                        changed = true;
                        break;
                    }
                if (changed) break;
            }
        }
    }

    SplitResult out;
    for (unsigned j = 0; j < n; ++j) (in_s[j] ? out.dropped : out.kept).push_back(j);
    if (out.dropped.empty()) {
        out.split = false;
        out.restricted = g;
        return out;
    }
    out.split = true;
    unsigned k = static_cast<unsigned>(out.kept.size());
    std::vector<Matrix> restricted;
    restricted.reserve(g.order());
    for (const Matrix& m : g.elements()) {
        Matrix r(f, k, k);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) r.set(i, j, m.at(out.kept[i], out.kept[j]));
        restricted.push_back(std::move(r));
    }
    std::sort(restricted.begin(), restricted.end());
    restricted.erase(std::unique(restricted.begin(), restricted.end(),
                                 [](const Matrix& a, const Matrix& b) { return a == b; }),
                     restricted.end());
    if (restricted.size() != g.order())
        throw std::domain_error("restriction to the active block is not faithful");
    out.restricted = MatrixGroup::from_elements(std::move(restricted));
    return out;
}

std::string group_to_json(const MatrixGroup& g) {
    nlohmann::json j;
    j["field"] = {{"p", g.field()->p}, {"r", g.field()->r}};
    j["n"] = g.dim();
    j["order"] = g.order();
    nlohmann::json gens = nlohmann::json::array();
    for (const Matrix& m : g.generators()) {
        nlohmann::json rows = nlohmann::json::array();
        for (unsigned i = 0; i < m.rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (unsigned jj = 0; jj < m.cols; ++jj)
                row.push_back(g.field()->elem_str(m.at(i, jj)));
            rows.push_back(row);
        }
        gens.push_back(rows);
    }
    j["generators"] = gens;
    return j.dump();
}

MatrixGroup group_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    auto f = make_field(j.at("field").at("p").get<unsigned>(),
                        j.at("field").at("r").get<unsigned>());
    unsigned n = j.at("n").get<unsigned>();
    std::vector<Matrix> gens;
    for (const auto& rows : j.at("generators")) {
        Matrix m(f, n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned jj = 0; jj < n; ++jj)
                m.set(i, jj, f->parse_elem(rows.at(i).at(jj).get<std::string>()));
        gens.push_back(std::move(m));
    }
    if (gens.empty()) return MatrixGroup::trivial(f, n);
    MatrixGroup g = MatrixGroup::closure(gens);
    if (j.contains("order") && g.order() != j.at("order").get<std::size_t>())
        throw std::invalid_argument("serialized order does not match the closure");
    return g;
}

} // namespace mil
