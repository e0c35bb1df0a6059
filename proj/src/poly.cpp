#include "mil/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mil {

unsigned mono_degree(Mono m) {
    unsigned d = 0;
    while (m) {
        d += m & 0xFF;
        m >>= 8;
    }
    return d;
}

Mono mono_pack(const std::vector<unsigned>& exps) {
    if (exps.size() > kMaxVars)
        throw std::invalid_argument("monomial supports at most 8 variables");
    Mono m = 0;
    unsigned total = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > kMaxDegree)
            throw std::invalid_argument("monomial exponent exceeds 255");
        total += exps[i];
        m |= static_cast<Mono>(exps[i]) << (8 * i);
    }
    if (total > kMaxDegree)
        throw std::invalid_argument("monomial degree exceeds 255");
    return m;
}

std::vector<unsigned> mono_exponents(Mono m, unsigned nvars) {
    std::vector<unsigned> e(nvars);
    for (unsigned i = 0; i < nvars; ++i) e[i] = mono_exp(m, i);
    return e;
}

Mono mono_mul(Mono a, Mono b) {
    if (mono_degree(a) + mono_degree(b) > kMaxDegree)
        throw std::domain_error("monomial product exceeds the degree cap");
    return a + b; // byte-wise carry impossible once total degree fits
}

bool mono_divides(Mono a, Mono b) {
    for (unsigned i = 0; i < kMaxVars; ++i)
        if (mono_exp(a, i) > mono_exp(b, i)) return false;
    return true;
}

Mono mono_div(Mono b, Mono a) {
    if (!mono_divides(a, b)) throw std::domain_error("monomial division is not exact");
    return b - a;
}

bool grevlex_less(Mono a, Mono b) {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    for (unsigned i = 0; i < kMaxVars; ++i) {
        unsigned ea = mono_exp(a, i), eb = mono_exp(b, i);
        if (ea != eb) return ea > eb;
    }
    return false;
}

std::vector<Mono> homogeneous_basis(unsigned nvars, unsigned d) {
    if (nvars == 0 || nvars > kMaxVars)
        throw std::invalid_argument("homogeneous_basis needs 1..8 variables");
    if (d > kMaxDegree) throw std::invalid_argument("degree exceeds 255");
    std::vector<Mono> out;
    std::vector<unsigned> exps(nvars, 0);
    // enumerate exponent vectors summing to d
    auto rec = [&](auto&& self, unsigned var, unsigned rem) -> void {
        if (var + 1 == nvars) {
            exps[var] = rem;
            out.push_back(mono_pack(exps));
            return;
        }
        for (unsigned e = 0; e <= rem; ++e) {
            exps[var] = e;
            self(self, var + 1, rem - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

void Polynomial::check_vars() const {
    if (!f) throw std::invalid_argument("polynomial needs a field");
    if (n == 0 || n > kMaxVars)
        throw std::invalid_argument("polynomial supports 1..8 variables");
}

Polynomial Polynomial::constant(const FieldPtr& f, unsigned nvars, fval c) {
    Polynomial r(f, nvars);
    if (c != 0) r.ts.push_back({0, c});
    return r;
}

Polynomial Polynomial::variable(const FieldPtr& f, unsigned nvars, unsigned var) {
    Polynomial r(f, nvars);
    if (var >= nvars) throw std::invalid_argument("variable index out of range");
    r.ts.push_back({static_cast<Mono>(1) << (8 * var), 1});
    return r;
}

Polynomial Polynomial::monomial(const FieldPtr& f, unsigned nvars,
                                const std::vector<unsigned>& exps, fval c) {
    Polynomial r(f, nvars);
    if (exps.size() != nvars) throw std::invalid_argument("exponent count mismatch");
    if (!f->valid(c)) throw std::invalid_argument("coefficient outside the field");
    if (c != 0) r.ts.push_back({mono_pack(exps), c});
    return r;
}

Polynomial Polynomial::from_terms(const FieldPtr& f, unsigned nvars, std::vector<Term> terms) {
    Polynomial r(f, nvars);
    std::unordered_map<Mono, fval> acc;
    for (const Term& t : terms) {
        if (!f->valid(t.c)) throw std::invalid_argument("coefficient outside the field");
        for (unsigned i = nvars; i < kMaxVars; ++i)
            if (mono_exp(t.m, i) != 0)
                throw std::invalid_argument("monomial uses a variable out of range");
        auto [it, fresh] = acc.try_emplace(t.m, t.c);
        if (!fresh) it->second = f->add(it->second, t.c);
    }
    for (auto& [m, c] : acc)
        if (c != 0) r.ts.push_back({m, c});
    std::sort(r.ts.begin(), r.ts.end(),
              [](const Term& a, const Term& b) { return grevlex_less(a.m, b.m); });
    return r;
}

Polynomial Polynomial::linear_form(const FieldPtr& f, const std::vector<fval>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) terms.push_back({static_cast<Mono>(1) << (8 * i), coeffs[i]});
    return from_terms(f, static_cast<unsigned>(coeffs.size()), std::move(terms));
}

int Polynomial::degree() const {
    if (ts.empty()) return -1;
    return static_cast<int>(mono_degree(ts.back().m));
}

bool Polynomial::is_homogeneous() const {
    if (ts.empty()) return true;
    unsigned d = mono_degree(ts.front().m);
    for (const Term& t : ts)
        if (mono_degree(t.m) != d) return false;
    return true;
}

fval Polynomial::coefficient_of(Mono m) const {
    for (const Term& t : ts)
        if (t.m == m) return t.c;
    return 0;
}

Term Polynomial::lead_term() const {
    if (ts.empty()) throw std::domain_error("zero polynomial has no lead term");
    return ts.back();
}

Polynomial Polynomial::homogeneous_component(unsigned d) const {
    Polynomial r(f, n);
    for (const Term& t : ts)
        if (mono_degree(t.m) == d) r.ts.push_back(t);
    return r;
}

Polynomial Polynomial::make_monic() const {
    if (ts.empty()) throw std::domain_error("cannot normalize the zero polynomial");
    return scaled(f->inv(ts.back().c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (f != o.f || n != o.n) throw std::invalid_argument("polynomial ring mismatch");
    Polynomial r(f, n);
    r.ts.reserve(ts.size() + o.ts.size());
    std::size_t i = 0, j = 0;
    while (i < ts.size() && j < o.ts.size()) {
        if (ts[i].m == o.ts[j].m) {
            fval c = f->add(ts[i].c, o.ts[j].c);
            if (c != 0) r.ts.push_back({ts[i].m, c});
            ++i, ++j;
        } else if (grevlex_less(ts[i].m, o.ts[j].m)) {
            r.ts.push_back(ts[i++]);
        } else {
            r.ts.push_back(o.ts[j++]);
        }
    }
    while (i < ts.size()) r.ts.push_back(ts[i++]);
    while (j < o.ts.size()) r.ts.push_back(o.ts[j++]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(f, n);
    r.ts.reserve(ts.size());
    for (const Term& t : ts) r.ts.push_back({t.m, f->neg(t.c)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(fval c) const {
    if (!f->valid(c)) throw std::invalid_argument("coefficient outside the field");
    Polynomial r(f, n);
    if (c == 0) return r;
    r.ts.reserve(ts.size());
    for (const Term& t : ts) r.ts.push_back({t.m, f->mul(t.c, c)});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (f != o.f || n != o.n) throw std::invalid_argument("polynomial ring mismatch");
    if (ts.empty() || o.ts.empty()) return Polynomial(f, n);
    std::unordered_map<Mono, fval> acc;
    acc.reserve(ts.size() * o.ts.size());
    for (const Term& a : ts)
        for (const Term& b : o.ts) {
            Mono m = mono_mul(a.m, b.m);
            fval c = f->mul(a.c, b.c);
            auto [it, fresh] = acc.try_emplace(m, c);
            if (!fresh) it->second = f->add(it->second, c);
        }
    Polynomial r(f, n);
    r.ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.ts.push_back({m, c});
    std::sort(r.ts.begin(), r.ts.end(),
              [](const Term& a, const Term& b) { return grevlex_less(a.m, b.m); });
    return r;
}

Polynomial Polynomial::frobenius_power(unsigned k) const {
    Polynomial r(f, n);
    r.ts.reserve(ts.size());
    unsigned long long scale = 1;
    for (unsigned i = 0; i < k; ++i) scale *= f->p;
    for (const Term& t : ts) {
        std::vector<unsigned> e = mono_exponents(t.m, n);
        for (unsigned& x : e) x = static_cast<unsigned>(x * scale);
        r.ts.push_back({mono_pack(e), f->frobenius_iter(t.c, k)});
    }
    std::sort(r.ts.begin(), r.ts.end(),
              [](const Term& a, const Term& b) { return grevlex_less(a.m, b.m); });
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(f, n, 1);
    if (e == 0) return r;
    if (ts.empty()) return Polynomial(f, n);
    // expand base p so the exact power maps do most of the work; the
    // leftover digits are small and handled by repeated multiplication
    unsigned k = 0;
    for (unsigned rem = e; rem; rem /= f->p, ++k) {
        unsigned digit = rem % f->p;
        if (digit == 0) continue;
        Polynomial block = frobenius_power(k);
        for (unsigned i = 0; i < digit; ++i) r = r * block;
    }
    return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (n != o.n) return n < o.n;
    std::size_t i = ts.size(), j = o.ts.size();
    // compare from the grevlex-greatest term down
    while (i > 0 && j > 0) {
        const Term& a = ts[i - 1];
        const Term& b = o.ts[j - 1];
        if (a.m != b.m) return grevlex_less(a.m, b.m);
        if (a.c != b.c) return a.c < b.c;
        --i, --j;
    }
    return i < j;
}

std::size_t Polynomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(n);
    for (const Term& t : ts) {
        mix(t.m);
        mix(t.c);
    }
    return h;
}

fval Polynomial::evaluate(const std::vector<fval>& point) const {
    if (point.size() != n) throw std::invalid_argument("evaluation point has wrong length");
    fval total = 0;
    for (const Term& t : ts) {
        fval v = t.c;
        for (unsigned i = 0; i < n; ++i) {
            unsigned e = mono_exp(t.m, i);
            if (e) v = f->mul(v, f->pow(point[i], e));
        }
        total = f->add(total, v);
    }
    return total;
}

std::string Polynomial::str() const {
    if (ts.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = ts.size(); k-- > 0;) {
        const Term& t = ts[k];
        if (!first) out << " + ";
        first = false;
        bool unit = (t.c == 1);
        if (!unit || t.m == 0) out << f->elem_str(t.c);
        bool anyvar = false;
        for (unsigned i = 0; i < n; ++i) {
            unsigned e = mono_exp(t.m, i);
            if (e == 0) continue;
            if (anyvar || !unit) out << "*";
            anyvar = true;
            out << "x" << (i + 1);
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    const FieldPtr& f;
    unsigned n;
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + why);
    }

    unsigned read_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("number too large");
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    // coefficient: decimal (prime-field style) or g / g^k
    fval read_coeff() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'g') {
            ++pos;
            unsigned e = 1;
            if (eat('^')) e = read_uint();
            return f->pow(f->primitive(), e);
        }
        unsigned v = read_uint();
        return f->embed_int(v);
    }

    // one term: [coeff] ['*'] (x<i> ['^' e])*
    Term read_term() {
        skip_ws();
        fval c = 1;
        bool saw_coeff = false;
        if (pos < s.size() &&
            (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == 'g')) {
            c = read_coeff();
            saw_coeff = true;
        }
        std::vector<unsigned> exps(n, 0);
        bool saw_var = false;
        for (;;) {
            skip_ws();
            if (saw_coeff || saw_var) {
                std::size_t save = pos;
                bool star = eat('*');
                skip_ws();
                if (pos >= s.size() || s[pos] != 'x') {
                    if (star) fail("expected a variable after '*'");
                    pos = save;
                    break;
                }
            } else if (pos >= s.size() || s[pos] != 'x') {
                break;
            }
            ++pos; // 'x'
            unsigned idx = read_uint();
            if (idx < 1 || idx > n) fail("variable index out of range");
            unsigned e = 1;
            if (eat('^')) e = read_uint();
            exps[idx - 1] += e;
            saw_var = true;
        }
        if (!saw_coeff && !saw_var) fail("expected a term");
        return {mono_pack(exps), c};
    }
};

} // namespace

Polynomial Polynomial::parse(const FieldPtr& f, unsigned nvars, std::string_view text) {
    PolyParser p{f, nvars, text};
    std::vector<Term> terms;
    p.skip_ws();
    bool neg = false;
    if (p.eat('-')) neg = true;
    for (;;) {
        Term t = p.read_term();
        if (neg) t.c = f->neg(t.c);
        terms.push_back(t);
        p.skip_ws();
        if (p.eat('+')) {
            neg = false;
        } else if (p.eat('-')) {
            neg = true;
        } else {
            break;
        }
    }
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return from_terms(f, nvars, std::move(terms));
}

LinearSubstitution::LinearSubstitution(FieldPtr field, unsigned nvars,
                                       std::vector<Polynomial> rows)
    : f(std::move(field)), n(nvars), rows_(std::move(rows)), pows_(nvars) {
    if (rows_.size() != n) throw std::invalid_argument("substitution needs one row per variable");
    for (const Polynomial& r : rows_)
        if (r.field() != f || r.nvars() != n)
            throw std::invalid_argument("substitution row in the wrong ring");
    for (unsigned i = 0; i < n; ++i) {
        pows_[i].push_back(Polynomial::constant(f, n, 1));
        pows_[i].push_back(rows_[i]);
    }
}

LinearSubstitution LinearSubstitution::from_matrix_rows(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("substitution matrix must be square");
    std::vector<Polynomial> rows;
    rows.reserve(m.rows);
    for (unsigned i = 0; i < m.rows; ++i) {
        std::vector<fval> coeffs(m.cols);
        for (unsigned j = 0; j < m.cols; ++j) coeffs[j] = m.at(i, j);
        rows.push_back(Polynomial::linear_form(m.f, coeffs));
    }
    return LinearSubstitution(m.f, m.rows, std::move(rows));
}

const Polynomial& LinearSubstitution::row_power(unsigned var, unsigned e) const {
    auto& cache = pows_[var];
    if (e < cache.size()) return cache[e];
    // grow through base-p blocks: exact power maps keep row powers sparse
    while (cache.size() <= e) {
        unsigned next = static_cast<unsigned>(cache.size());
        unsigned digit = next % f->p;
        if (digit == 0) {
            unsigned k = 0, m = next;
            while (m % f->p == 0) m /= f->p, ++k;
            cache.push_back(row_power(var, m).frobenius_power(k));
        } else {
            cache.push_back(cache[next - 1] * rows_[var]);
        }
    }
    return cache[e];
}

Polynomial LinearSubstitution::apply(const Polynomial& g) const {
    if (g.field() != f || g.nvars() != n)
        throw std::invalid_argument("substitution applied in the wrong ring");
    std::unordered_map<Mono, fval> acc;
    for (const Term& t : g.terms()) {
        Polynomial prod = Polynomial::constant(f, n, t.c);
        for (unsigned i = 0; i < n; ++i) {
            unsigned e = mono_exp(t.m, i);
            if (e) prod = prod * row_power(i, e);
        }
        for (const Term& u : prod.terms()) {
            auto [it, fresh] = acc.try_emplace(u.m, u.c);
            if (!fresh) it->second = f->add(it->second, u.c);
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, c});
    return Polynomial::from_terms(f, n, std::move(out));
}

LinearSubstitution action_substitution(const Matrix& g) {
    return LinearSubstitution::from_matrix_rows(g.inverse());
}

Polynomial act(const Matrix& g, const Polynomial& f) {
    return action_substitution(g).apply(f);
}

Polynomial compose_linear(const Polynomial& f, const Matrix& g) {
    return LinearSubstitution::from_matrix_rows(g).apply(f);
}

DivisionByLinear divide_by_linear(const Polynomial& f, const Polynomial& ell) {
    if (ell.field() != f.field() || ell.nvars() != f.nvars())
        throw std::invalid_argument("divisor in the wrong ring");
    if (ell.is_zero() || ell.degree() != 1 || !ell.is_homogeneous())
        throw std::invalid_argument("divisor must be a nonzero linear form");
    const FieldPtr& k = f.field();
    unsigned n = f.nvars();
    Term lead = ell.lead_term();
    unsigned var = 0;
    for (unsigned i = 0; i < n; ++i)
        if (mono_exp(lead.m, i)) var = i;
    fval lc_inv = k->inv(lead.c);
    Polynomial tail = ell - Polynomial::from_terms(k, n, {lead});

    DivisionByLinear out{true, Polynomial::zero(k, n), Polynomial::zero(k, n)};
    Polynomial rem = f;
    // peel terms containing the pivot variable; each step strictly lowers
    // the pivot-degree weight, so this terminates
    for (;;) {
        std::vector<Term> movable;
        for (const Term& t : rem.terms())
            if (mono_exp(t.m, var) > 0) movable.push_back(t);
        if (movable.empty()) break;
        unsigned emax = 0;
        for (const Term& t : movable) emax = std::max(emax, mono_exp(t.m, var));
        std::vector<Term> qts;
        for (const Term& t : movable)
            if (mono_exp(t.m, var) == emax) {
                Mono m = t.m - (static_cast<Mono>(1) << (8 * var));
                qts.push_back({m, k->mul(t.c, lc_inv)});
            }
        Polynomial qstep = Polynomial::from_terms(k, n, std::move(qts));
        out.quotient = out.quotient + qstep;
        rem = rem - qstep * ell;
    }
    out.remainder = rem;
    out.exact = rem.is_zero();
    return out;
}

DegreeBasis::DegreeBasis(FieldPtr f, unsigned nvars, unsigned d)
    : f_(std::move(f)), n_(nvars), d_(d), monos_(homogeneous_basis(nvars, d)) {
    index_.reserve(monos_.size());
    for (unsigned i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
}

unsigned DegreeBasis::index(Mono m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("monomial not in this degree");
    return it->second;
}

std::vector<fval> DegreeBasis::to_vec(const Polynomial& g) const {
    if (g.field() != f_ || g.nvars() != n_)
        throw std::invalid_argument("polynomial in the wrong ring");
    std::vector<fval> v(monos_.size(), 0);
    for (const Term& t : g.terms()) v[index(t.m)] = t.c;
    return v;
}

Polynomial DegreeBasis::from_vec(const std::vector<fval>& v) const {
    if (v.size() != monos_.size()) throw std::invalid_argument("coefficient vector length mismatch");
    std::vector<Term> ts;
    for (unsigned i = 0; i < v.size(); ++i)
        if (v[i] != 0) ts.push_back({monos_[i], v[i]});
    return Polynomial::from_terms(f_, n_, std::move(ts));
}

Matrix DegreeBasis::rows_from(const std::vector<Polynomial>& polys) const {
    Matrix m(f_, static_cast<unsigned>(polys.size()), dim());
    for (unsigned i = 0; i < polys.size(); ++i) {
        std::vector<fval> v = to_vec(polys[i]);
        for (unsigned j = 0; j < dim(); ++j) m.set(i, j, v[j]);
    }
    return m;
}

Subspace ideal_graded_piece(const std::vector<Polynomial>& gens, unsigned d,
                            const DegreeBasis& basis) {
    std::vector<Polynomial> rows;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("ideal generators must be homogeneous");
        unsigned dg = static_cast<unsigned>(g.degree());
        if (dg > d) continue;
        for (Mono m : homogeneous_basis(g.nvars(), d - dg)) {
            std::vector<Term> ts;
            for (const Term& t : g.terms()) ts.push_back({mono_mul(t.m, m), t.c});
            rows.push_back(Polynomial::from_terms(g.field(), g.nvars(), std::move(ts)));
        }
    }
    if (rows.empty()) return Subspace::zero(basis.field(), basis.dim());
    return Subspace::from_rows(basis.rows_from(rows));
}

OrbitProduct orbit_product(const std::vector<Matrix>& group_elements, const Polynomial& f) {
    if (group_elements.empty()) throw std::invalid_argument("empty element list");
    std::vector<Polynomial> images;
    for (const Matrix& g : group_elements) {
        Polynomial img = act(g, f);
        bool seen = false;
        for (const Polynomial& h : images)
            if (h == img) {
                seen = true;
                break;
            }
        if (!seen) images.push_back(img);
    }
    OrbitProduct out;
    out.orbit_size = static_cast<unsigned>(images.size());
    if (group_elements.size() % images.size() != 0)
        throw std::domain_error("orbit size does not divide the group order");
    out.stabilizer_order = static_cast<unsigned>(group_elements.size() / images.size());
    out.product = Polynomial::constant(f.field(), f.nvars(), 1);
    for (const Polynomial& h : images) out.product = out.product * h;
    return out;
}

} // namespace mil
