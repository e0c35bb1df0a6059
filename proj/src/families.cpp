#include "mil/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mil {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

/// [[I, 0], [B, I]] acting on k^{2n}, lower-left block B.
Matrix block_unipotent(const Matrix& b) {
    const unsigned n = b.rows;
    Matrix g = Matrix::identity(b.f, 2 * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) g.set(n + i, j, b.at(i, j));
    return g;
}

/// [[0, I], [eps*I, 0]] as a 2n x 2n Gram matrix.
Matrix split_gram(const FieldPtr& f, unsigned n, fval eps) {
    Matrix j(f, 2 * n, 2 * n);
    for (unsigned i = 0; i < n; ++i) {
        j.set(i, n + i, 1);
        j.set(n + i, i, eps);
    }
    return j;
}

std::vector<fval> all_elements(const FieldPtr& f) {
    std::vector<fval> out(f->q);
    std::iota(out.begin(), out.end(), fval{0});
    return out;
}

/// Fills the entries listed in slots with every combination drawn from the
/// per-slot candidate lists, calling emit for each completed matrix.
template <typename Emit>
void enumerate_entries(Matrix& b, const std::vector<std::pair<unsigned, unsigned>>& slots,
                       const std::vector<std::vector<fval>>& candidates, std::size_t k, Emit&& emit) {
    if (k == slots.size()) {
        emit(b);
        return;
    }
    for (fval v : candidates[k]) {
        b.set(slots[k].first, slots[k].second, v);
        enumerate_entries(b, slots, candidates, k + 1, emit);
    }
}

/// All n x n matrices over GF(q^2) with conj(B) = -B^T.
std::vector<Matrix> antihermitian_matrices(const FieldPtr& f, unsigned n) {
    std::vector<fval> diag;
    for (fval x : all_elements(f))
        if (f->frobenius(x) == f->neg(x)) diag.push_back(x);

    std::vector<std::pair<unsigned, unsigned>> slots;
    std::vector<std::vector<fval>> candidates;
    for (unsigned i = 0; i < n; ++i) {
        slots.emplace_back(i, i);
        candidates.push_back(diag);
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
            candidates.push_back(all_elements(f));
        }

    std::vector<Matrix> out;
    Matrix b(f, n, n);
    enumerate_entries(b, slots, candidates, 0, [&](Matrix& m) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) m.set(j, i, f->neg(f->frobenius(m.at(i, j))));
        out.push_back(m);
    });
    return out;
}

/// All n x n matrices over GF(q) with B = B^T; zero_diag restricts the
/// diagonal to 0, and skew asks for B = -B^T instead.
std::vector<Matrix> bilinear_block_matrices(const FieldPtr& f, unsigned n, bool zero_diag, bool skew) {
    std::vector<std::pair<unsigned, unsigned>> slots;
    std::vector<std::vector<fval>> candidates;
    if (!zero_diag)
        for (unsigned i = 0; i < n; ++i) {
            slots.emplace_back(i, i);
            candidates.push_back(all_elements(f));
        }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
            candidates.push_back(all_elements(f));
        }

    std::vector<Matrix> out;
    Matrix b(f, n, n);
    enumerate_entries(b, slots, candidates, 0, [&](Matrix& m) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) m.set(j, i, skew ? f->neg(m.at(i, j)) : m.at(i, j));
        out.push_back(m);
    });
    return out;
}

std::vector<Matrix> normalizer_block_gens(const FieldPtr& f, unsigned n, bool conjugate_second) {
    std::vector<Matrix> tops;
    Matrix d = Matrix::identity(f, n);
    d.set(0, 0, f->primitive());
    tops.push_back(d);
    if (n >= 2) {
        Matrix e = Matrix::identity(f, n);
        e.set(0, 1, 1);
        tops.push_back(e);
        Matrix c(f, n, n);
        for (unsigned i = 0; i + 1 < n; ++i) c.set(i, i + 1, 1);
        c.set(n - 1, 0, 1);
        tops.push_back(c);
    }

    std::vector<Matrix> out;
    for (const Matrix& a : tops) {
        Matrix bottom = a.inverse().transpose();
        if (conjugate_second) bottom = bottom.entrywise_conj();
        Matrix g(f, 2 * n, 2 * n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                g.set(i, j, a.at(i, j));
                g.set(n + i, n + j, bottom.at(i, j));
            }
        out.push_back(g);
    }
    return out;
}

TransvectionFamily make_block_family(const FieldPtr& f, unsigned q, unsigned n,
                                     std::vector<Matrix> blocks, FormSpec form, bool conjugate) {
    std::vector<Matrix> elements;
    elements.reserve(blocks.size());
    for (const Matrix& b : blocks) elements.push_back(block_unipotent(b));

    TransvectionFamily fam;
    fam.field = f;
    fam.q = q;
    fam.block = n;
    fam.form = std::move(form);
    fam.group = MatrixGroup::from_elements(elements);
    fam.normalizer_gens = normalizer_block_gens(f, n, conjugate);
    for (const Matrix& g : fam.group.elements())
        if (!form_membership(g, fam.form)) throw std::domain_error("family element breaks its form");
    return fam;
}

/// Coordinates of a sum-zero vector u in the images of e_i - e_{i+1}:
/// partial sums c_i = u_1 + ... + u_i for i < m-1, then the class of the
/// all-ones vector is removed by adding i * c_{m-1} to the i-th entry.
std::vector<fval> quotient_coords(const FieldPtr& f, const std::vector<fval>& u) {
    const unsigned m = static_cast<unsigned>(u.size());
    fval sum = 0;
    for (fval x : u) sum = f->add(sum, x);
    if (sum != 0) throw std::invalid_argument("vector has nonzero coordinate sum");

    std::vector<fval> c(m - 1, 0);
    fval run = 0;
    for (unsigned i = 0; i + 1 < m; ++i) {
        run = f->add(run, u[i]);
        c[i] = run;
    }
    std::vector<fval> out(m - 2, 0);
    const fval last = c[m - 2];
    for (unsigned i = 0; i + 2 < m; ++i)
        out[i] = f->add(c[i], f->mul(f->embed_int(static_cast<long long>(i) + 1), last));
    return out;
}

std::vector<unsigned> cycle_perm(unsigned m, unsigned lo, unsigned hi) {
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    for (unsigned i = lo; i < hi; ++i) perm[i] = i + 1;
    perm[hi] = lo;
    return perm;
}

std::vector<unsigned> swap_perm(unsigned m, unsigned i, unsigned j) {
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    std::swap(perm[i], perm[j]);
    return perm;
}

} // namespace

std::pair<unsigned, unsigned> factor_prime_power(unsigned q) {
    require(q >= 2, "prime power must be at least 2");
    unsigned p = 0;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {q, 1};
    unsigned r = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    require(rest == 1, "not a prime power: " + std::to_string(q));
    return {p, r};
}

FormSpec FormSpec::hermitian(Matrix j) {
    require(j.rows == j.cols && j.rows > 0, "Gram matrix must be square");
    require(j.f->has_conj(), "hermitian form needs a quadratic extension field");
    require(j.conj_transpose() == j, "hermitian Gram must equal its conjugate transpose");
    FormSpec s;
    s.kind = Kind::hermitian;
    s.gram = std::move(j);
    return s;
}

FormSpec FormSpec::alternating(Matrix j) {
    require(j.rows == j.cols && j.rows > 0, "Gram matrix must be square");
    for (unsigned i = 0; i < j.rows; ++i) require(j.at(i, i) == 0, "alternating Gram needs zero diagonal");
    require(j.transpose() == j.scaled(j.f->neg(1)), "alternating Gram must be skew-symmetric");
    FormSpec s;
    s.kind = Kind::alternating;
    s.gram = std::move(j);
    return s;
}

FormSpec FormSpec::symmetric_bilinear(Matrix j) {
    require(j.rows == j.cols && j.rows > 0, "Gram matrix must be square");
    require(j.transpose() == j, "symmetric Gram must equal its transpose");
    FormSpec s;
    s.kind = Kind::symmetric_bilinear;
    s.gram = std::move(j);
    return s;
}

FormSpec FormSpec::quadratic_form(Polynomial q) {
    require(!q.is_zero() && q.is_homogeneous() && q.degree() == 2, "quadratic form must be homogeneous of degree 2");
    FormSpec s;
    s.kind = Kind::quadratic;
    s.quadratic = std::move(q);
    return s;
}

bool form_membership(const Matrix& g, const FormSpec& form) {
    if (form.kind == FormSpec::Kind::quadratic) {
        if (g.rows != g.cols || g.rows != form.quadratic.nvars()) throw std::invalid_argument("matrix size mismatch");
        return compose_linear(form.quadratic, g) == form.quadratic;
    }
    if (g.rows != g.cols || g.rows != form.gram.rows) throw std::invalid_argument("matrix size mismatch");
    const Matrix lhs = form.kind == FormSpec::Kind::hermitian
                           ? g.transpose() * form.gram * g.entrywise_conj()
                           : g.transpose() * form.gram * g;
    return lhs == form.gram;
}

Gu3Data gu3_stabilizers(unsigned q) {
    const auto [p, r] = factor_prime_power(q);
    const FieldPtr f = make_field(p, 2 * r);

    Gu3Data data;
    data.field = f;
    data.q = q;
    data.eta = f->pow(f->primitive(), q - 1);

    Matrix j(f, 3, 3);
    j.set(0, 2, 1);
    j.set(1, 1, 1);
    j.set(2, 0, 1);
    data.form = FormSpec::hermitian(j);

    std::vector<fval> roots; // the (q+1)-th roots of unity
    for (fval b : all_elements(f))
        if (b != 0 && f->pow(b, q + 1) == 1) roots.push_back(b);
    if (roots.size() != q + 1) throw std::domain_error("wrong number of roots of unity");

    std::vector<Matrix> elements;
    for (fval a : all_elements(f)) {
        const fval aq = f->frobenius(a);
        const fval trace_target = f->neg(f->mul(a, aq));
        for (fval c : all_elements(f)) {
            if (f->add(c, f->frobenius(c)) != trace_target) continue;
            for (fval b : roots) {
                Matrix g = Matrix::identity(f, 3);
                g.set(1, 0, a);
                g.set(1, 1, b);
                g.set(2, 0, c);
                g.set(2, 1, f->neg(f->mul(b, aq)));
                if (!form_membership(g, data.form)) throw std::domain_error("stabilizer element breaks the form");
                elements.push_back(g);
            }
        }
    }
    data.H = MatrixGroup::from_elements(elements);

    data.tau = Matrix::identity(f, 3);
    data.tau.set(1, 1, f->inv(data.eta));
    if (!data.H.contains(data.tau)) throw std::domain_error("diagonal twist missing from stabilizer");

    for (unsigned m = 1; m <= q + 1; ++m) {
        if ((q + 1) % m != 0) continue;
        std::vector<Matrix> sub;
        for (const Matrix& g : data.H.elements())
            if (f->pow(g.at(1, 1), m) == 1) sub.push_back(g);
        data.subgroups.emplace_back(m, MatrixGroup::from_elements(sub));
    }
    data.Htilde = data.subgroups.front().second;
    return data;
}

TransvectionFamily unitary_transvection_family(unsigned q, unsigned n) {
    require(n >= 2, "need at least two blocks");
    const auto [p, r] = factor_prime_power(q);
    const FieldPtr f = make_field(p, 2 * r);
    FormSpec form = FormSpec::hermitian(split_gram(f, n, 1));
    return make_block_family(f, q, n, antihermitian_matrices(f, n), std::move(form), true);
}

TransvectionFamily symplectic_stabilizer(unsigned q, unsigned m) {
    require(m >= 1, "need at least one block");
    const auto [p, r] = factor_prime_power(q);
    const FieldPtr f = make_field(p, r);
    FormSpec form = FormSpec::alternating(split_gram(f, m, f->neg(1)));
    return make_block_family(f, q, m, bilinear_block_matrices(f, m, false, false), std::move(form), false);
}

TransvectionFamily orthogonal_plus_stabilizer_odd(unsigned q, unsigned m) {
    require(m >= 2, "need at least two blocks");
    const auto [p, r] = factor_prime_power(q);
    require(p != 2, "odd characteristic required");
    const FieldPtr f = make_field(p, r);
    FormSpec form = FormSpec::symmetric_bilinear(split_gram(f, m, 1));
    return make_block_family(f, q, m, bilinear_block_matrices(f, m, true, true), std::move(form), false);
}

TransvectionFamily orthogonal_plus_stabilizer_even(unsigned q, unsigned m) {
    require(m >= 2, "need at least two blocks");
    const auto [p, r] = factor_prime_power(q);
    require(p == 2, "even characteristic required");
    const FieldPtr f = make_field(p, r);
    Polynomial qform = Polynomial::zero(f, 2 * m);
    for (unsigned i = 0; i < m; ++i)
        qform = qform + Polynomial::variable(f, 2 * m, i) * Polynomial::variable(f, 2 * m, m + i);
    FormSpec form = FormSpec::quadratic_form(std::move(qform));
    return make_block_family(f, q, m, bilinear_block_matrices(f, m, true, false), std::move(form), false);
}

Go3Data go3_stabilizers(unsigned q) {
    const auto [p, r] = factor_prime_power(q);
    require(p != 2, "odd characteristic required");
    const FieldPtr f = make_field(p, r);

    Go3Data data;
    data.field = f;
    Polynomial qf = Polynomial::parse(f, 3, "2*x1*x3 + x2^2");
    data.form = FormSpec::quadratic_form(qf);

    const fval half = f->inv(f->embed_int(2));
    std::vector<Matrix> full, minus;
    for (fval a : {f->embed_int(1), f->neg(1)}) {
        for (fval b : all_elements(f)) {
            Matrix g = Matrix::identity(f, 3);
            g.set(1, 0, f->neg(b));
            g.set(1, 1, a);
            g.set(2, 0, f->neg(f->mul(half, f->mul(b, b))));
            g.set(2, 1, f->mul(a, b));
            if (!form_membership(g, data.form)) throw std::domain_error("stabilizer element breaks the form");
            full.push_back(g);
            if (a == 1) minus.push_back(g);
        }
    }
    data.H = MatrixGroup::from_elements(full);
    data.Hminus = MatrixGroup::from_elements(minus);
    return data;
}

Matrix symmetric_family_matrix(const FieldPtr& f, unsigned m, const std::vector<unsigned>& perm) {
    require(perm.size() == m && m >= 3, "permutation must have one image per point");
    Matrix g(f, m - 2, m - 2);
    for (unsigned jcol = 0; jcol + 2 < m; ++jcol) {
        std::vector<fval> u(m, 0);
        u[perm[jcol]] = f->add(u[perm[jcol]], 1);
        u[perm[jcol + 1]] = f->sub(u[perm[jcol + 1]], 1);
        const std::vector<fval> d = quotient_coords(f, u);
        for (unsigned i = 0; i + 2 < m; ++i) g.set(i, jcol, d[i]);
    }
    return g;
}

SymmetricFamilyData symmetric_family(unsigned p, unsigned m) {
    require(m >= 5 && m % p == 0, "need p | m with at least five points");
    const auto [pp, rr] = factor_prime_power(p);
    require(rr == 1 && pp == p, "characteristic must be prime");
    const FieldPtr f = make_field(p, 1);

    SymmetricFamilyData data;
    data.field = f;
    data.p = p;
    data.m = m;
    data.mprime = m / p;

    data.sm_generators = {symmetric_family_matrix(f, m, swap_perm(m, 0, 1)),
                          symmetric_family_matrix(f, m, cycle_perm(m, 0, m - 1))};
    data.group = MatrixGroup::closure(data.sm_generators);

    std::vector<Matrix> block_gens;
    for (unsigned blk = 0; blk < data.mprime; ++blk)
        for (unsigned i = blk * p; i + 1 < (blk + 1) * p; ++i)
            block_gens.push_back(symmetric_family_matrix(f, m, swap_perm(m, i, i + 1)));
    data.H = MatrixGroup::closure(block_gens);

    std::vector<unsigned> sigma_perm(m);
    std::iota(sigma_perm.begin(), sigma_perm.end(), 0u);
    for (unsigned blk = 0; blk < data.mprime; ++blk) {
        for (unsigned i = blk * p; i + 1 < (blk + 1) * p; ++i) sigma_perm[i] = i + 1;
        sigma_perm[(blk + 1) * p - 1] = blk * p;
    }
    data.sigma = symmetric_family_matrix(f, m, sigma_perm);

    std::vector<std::vector<fval>> rows;
    for (unsigned blk = 0; blk < data.mprime; ++blk) {
        std::vector<fval> u(m, 0);
        for (unsigned i = blk * p; i < (blk + 1) * p; ++i) u[i] = 1;
        rows.push_back(quotient_coords(f, u));
    }
    data.U1 = Subspace::from_vectors(f, m - 2, rows);

    if (p != 2 || data.mprime % 2 == 0) {
        std::vector<fval> w(m, 0);
        for (unsigned i = 0; i < m; ++i) w[i] = f->embed_int(static_cast<long long>(i) + 1);
        rows.push_back(quotient_coords(f, w));
        data.U = Subspace::from_vectors(f, m - 2, rows);
    }
    return data;
}

MatrixGroup s3_permutation_group() {
    const FieldPtr f = make_field(7, 1);
    Matrix swap12(f, 3, 3);
    swap12.set(0, 1, 1);
    swap12.set(1, 0, 1);
    swap12.set(2, 2, 1);
    Matrix cyc(f, 3, 3);
    cyc.set(0, 1, 1);
    cyc.set(1, 2, 1);
    cyc.set(2, 0, 1);
    return MatrixGroup::closure({swap12, cyc});
}

MatrixGroup diagonal_cyclic_group(unsigned q, unsigned m) {
    require(m >= 2 && (q - 1) % m == 0, "order must divide q - 1");
    const auto [p, r] = factor_prime_power(q);
    const FieldPtr f = make_field(p, r);
    Matrix g = Matrix::identity(f, 2);
    g.set(0, 0, f->pow(f->primitive(), (q - 1) / m));
    return MatrixGroup::closure({g});
}

MatrixGroup transvection_hyperplane_group(unsigned q) {
    const auto [p, r] = factor_prime_power(q);
    const FieldPtr f = make_field(p, r);
    std::vector<Matrix> elements;
    for (fval b : all_elements(f)) {
        Matrix g = Matrix::identity(f, 2);
        g.set(1, 0, b);
        elements.push_back(g);
    }
    return MatrixGroup::from_elements(elements);
}

std::vector<MatrixGroup> sanity_groups() {
    return {s3_permutation_group(), diagonal_cyclic_group(7, 3), transvection_hyperplane_group(3),
            MatrixGroup::trivial(make_field(3, 1), 2)};
}

} // namespace mil
