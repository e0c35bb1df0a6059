#include "mil/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mil {

Matrix Matrix::identity(const FieldPtr& field, unsigned n) {
    Matrix m(field, n, n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_values(const FieldPtr& field, unsigned rows_, unsigned cols_,
                           const std::vector<fval>& vals) {
    if (vals.size() != static_cast<std::size_t>(rows_) * cols_)
        throw std::invalid_argument("matrix literal has wrong length");
    Matrix m(field, rows_, cols_);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (!field->valid(vals[i])) throw std::invalid_argument("entry outside the field");
        m.a[i] = static_cast<std::uint16_t>(vals[i]);
    }
    return m;
}

Matrix Matrix::from_ints(const FieldPtr& field, unsigned rows_, unsigned cols_,
                         const std::vector<long long>& vals) {
    if (vals.size() != static_cast<std::size_t>(rows_) * cols_)
        throw std::invalid_argument("matrix literal has wrong length");
    Matrix m(field, rows_, cols_);
    for (std::size_t i = 0; i < vals.size(); ++i)
        m.a[i] = static_cast<std::uint16_t>(field->embed_int(vals[i]));
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols != o.rows || f != o.f) throw std::invalid_argument("shape mismatch in product");
    Matrix out(f, rows, o.cols);
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned k = 0; k < cols; ++k) {
            fval c = at(i, k);
            if (c == 0) continue;
            for (unsigned j = 0; j < o.cols; ++j) {
                fval t = f->mul(c, o.at(k, j));
                if (t != 0) out.set(i, j, f->add(out.at(i, j), t));
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols || f != o.f)
        throw std::invalid_argument("shape mismatch in sum");
    Matrix out(f, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.a[i] = static_cast<std::uint16_t>(f->add(a[i], o.a[i]));
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols || f != o.f)
        throw std::invalid_argument("shape mismatch in difference");
    Matrix out(f, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.a[i] = static_cast<std::uint16_t>(f->sub(a[i], o.a[i]));
    return out;
}

Matrix Matrix::scaled(fval c) const {
    Matrix out(f, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.a[i] = static_cast<std::uint16_t>(f->mul(a[i], c));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f, cols, rows);
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::entrywise_conj() const {
    Matrix out(f, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.a[i] = static_cast<std::uint16_t>(f->conj(a[i]));
    return out;
}

Matrix Matrix::pow(unsigned long long e) const {
    if (rows != cols) throw std::invalid_argument("power of a non-square matrix");
    Matrix acc = identity(f, rows), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Matrix::is_identity() const {
    if (rows != cols) return false;
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

bool Matrix::operator<(const Matrix& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
}

std::size_t Matrix::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(rows);
    mix(cols);
    for (auto v : a) mix(v);
    return h;
}

Matrix Matrix::rref(std::vector<unsigned>* pivots) const {
    Matrix m = *this;
    if (pivots) pivots->clear();
    unsigned lead = 0;
    for (unsigned col = 0; col < cols && lead < rows; ++col) {
        unsigned sel = lead;
        while (sel < rows && m.at(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != lead)
            for (unsigned j = 0; j < cols; ++j) {
                auto t = m.at(sel, j);
                m.set(sel, j, m.at(lead, j));
                m.set(lead, j, t);
            }
        fval piv = m.at(lead, col);
        if (piv != 1) {
            fval pinv = f->inv(piv);
            for (unsigned j = col; j < cols; ++j) m.set(lead, j, f->mul(m.at(lead, j), pinv));
        }
        for (unsigned i = 0; i < rows; ++i) {
            if (i == lead) continue;
            fval c = m.at(i, col);
            if (c == 0) continue;
            for (unsigned j = col; j < cols; ++j)
                m.set(i, j, f->sub(m.at(i, j), f->mul(c, m.at(lead, j))));
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return m;
}

unsigned Matrix::rank() const {
    std::vector<unsigned> piv;
    rref(&piv);
    return static_cast<unsigned>(piv.size());
}

Matrix Matrix::kernel() const {
    std::vector<unsigned> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_piv(cols, false);
    for (unsigned c : piv) is_piv[c] = true;
    std::vector<unsigned> free_cols;
    for (unsigned c = 0; c < cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix out(f, static_cast<unsigned>(free_cols.size()), cols);
    for (unsigned k = 0; k < free_cols.size(); ++k) {
        unsigned fc = free_cols[k];
        out.set(k, fc, 1);
        for (unsigned i = 0; i < piv.size(); ++i)
            out.set(k, piv[i], f->neg(r.at(i, fc)));
    }
    return out;
}

Matrix Matrix::inverse() const {
    if (rows != cols) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix aug(f, rows, 2 * cols);
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols + i, 1);
    }
    std::vector<unsigned> piv;
    Matrix r = aug.rref(&piv);
    if (piv.size() != rows || piv.back() >= cols)
        throw std::domain_error("matrix is singular");
    Matrix out(f, rows, cols);
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j) out.set(i, j, r.at(i, cols + j));
    return out;
}

std::vector<fval> Matrix::apply(const std::vector<fval>& v) const {
    if (v.size() != cols) throw std::invalid_argument("vector length mismatch");
    std::vector<fval> out(rows, 0);
    for (unsigned i = 0; i < rows; ++i) {
        fval acc = 0;
        for (unsigned j = 0; j < cols; ++j) acc = f->add(acc, f->mul(at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (unsigned i = 0; i < rows; ++i) {
        os << "[";
        for (unsigned j = 0; j < cols; ++j) {
            if (j) os << " ";
            os << f->elem_str(at(i, j));
        }
        os << "]";
        if (i + 1 < rows) os << "\n";
    }
    return os.str();
}

LinearSolution solve_linear(const Matrix& M, const Matrix& rhs) {
    if (M.rows != rhs.rows) throw std::invalid_argument("rhs row count mismatch");
    Matrix aug(M.f, M.rows, M.cols + rhs.cols);
    for (unsigned i = 0; i < M.rows; ++i) {
        for (unsigned j = 0; j < M.cols; ++j) aug.set(i, j, M.at(i, j));
        for (unsigned j = 0; j < rhs.cols; ++j) aug.set(i, M.cols + j, rhs.at(i, j));
    }
    std::vector<unsigned> piv;
    Matrix r = aug.rref(&piv);
    LinearSolution sol;
    sol.kernel = M.kernel();
    for (unsigned c : piv)
        if (c >= M.cols) return sol; // a pivot in the rhs block: inconsistent
    sol.consistent = true;
    sol.particular = Matrix(M.f, M.cols, rhs.cols);
    for (unsigned i = 0; i < piv.size(); ++i)
        for (unsigned j = 0; j < rhs.cols; ++j)
            sol.particular.set(piv[i], j, r.at(i, M.cols + j));
    return sol;
}

Subspace Subspace::from_rows(const Matrix& rows) {
    Subspace s;
    s.ambient_ = rows.cols;
    std::vector<unsigned> piv;
    Matrix r = rows.rref(&piv);
    Matrix basis(rows.f, static_cast<unsigned>(piv.size()), rows.cols);
    for (unsigned i = 0; i < piv.size(); ++i)
        for (unsigned j = 0; j < rows.cols; ++j) basis.set(i, j, r.at(i, j));
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::from_vectors(const FieldPtr& f, unsigned ambient,
                                const std::vector<std::vector<fval>>& vecs) {
    Matrix m(f, static_cast<unsigned>(vecs.size()), ambient);
    for (unsigned i = 0; i < vecs.size(); ++i) {
        if (vecs[i].size() != ambient) throw std::invalid_argument("vector length mismatch");
        for (unsigned j = 0; j < ambient; ++j) m.set(i, j, vecs[i][j]);
    }
    return from_rows(m);
}

Subspace Subspace::zero(const FieldPtr& f, unsigned ambient) {
    return from_rows(Matrix(f, 0, ambient));
}

Subspace Subspace::full(const FieldPtr& f, unsigned ambient) {
    return from_rows(Matrix::identity(f, ambient));
}

bool Subspace::contains(const std::vector<fval>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
    const FieldPtr& f = basis_.f;
    std::vector<fval> w = v;
    for (unsigned i = 0; i < basis_.rows; ++i) {
        unsigned pc = 0;
        while (pc < ambient_ && basis_.at(i, pc) == 0) ++pc;
        if (pc == ambient_) continue;
        fval c = w[pc];
        if (c == 0) continue;
        for (unsigned j = pc; j < ambient_; ++j) w[j] = f->sub(w[j], f->mul(c, basis_.at(i, j)));
    }
    for (fval x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (unsigned i = 0; i < other.basis_.rows; ++i) {
        std::vector<fval> v(ambient_);
        for (unsigned j = 0; j < ambient_; ++j) v[j] = other.basis_.at(i, j);
        if (!contains(v)) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
    Matrix st(basis_.f, basis_.rows + other.basis_.rows, ambient_);
    for (unsigned i = 0; i < basis_.rows; ++i)
        for (unsigned j = 0; j < ambient_; ++j) st.set(i, j, basis_.at(i, j));
    for (unsigned i = 0; i < other.basis_.rows; ++i)
        for (unsigned j = 0; j < ambient_; ++j) st.set(basis_.rows + i, j, other.basis_.at(i, j));
    return from_rows(st);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
    const FieldPtr& f = basis_.f;
    unsigned u = basis_.rows, w = other.basis_.rows;
    // combinations (a, b) with a*U = b*W form the kernel of [U; -W]^T
    Matrix stacked(f, u + w, ambient_);
    for (unsigned i = 0; i < u; ++i)
        for (unsigned j = 0; j < ambient_; ++j) stacked.set(i, j, basis_.at(i, j));
    for (unsigned i = 0; i < w; ++i)
        for (unsigned j = 0; j < ambient_; ++j)
            stacked.set(u + i, j, f->neg(other.basis_.at(i, j)));
    Matrix ker = stacked.transpose().kernel();
    std::vector<std::vector<fval>> vecs;
    for (unsigned k = 0; k < ker.rows; ++k) {
        std::vector<fval> v(ambient_, 0);
        for (unsigned i = 0; i < u; ++i) {
            fval c = ker.at(k, i);
            if (c == 0) continue;
            for (unsigned j = 0; j < ambient_; ++j)
                v[j] = f->add(v[j], f->mul(c, basis_.at(i, j)));
        }
        vecs.push_back(std::move(v));
    }
    return from_vectors(f, ambient_, vecs);
}

Subspace Subspace::image(const Matrix& g) const {
    if (g.cols != ambient_) throw std::invalid_argument("ambient mismatch");
    std::vector<std::vector<fval>> vecs;
    for (unsigned i = 0; i < basis_.rows; ++i) {
        std::vector<fval> v(ambient_);
        for (unsigned j = 0; j < ambient_; ++j) v[j] = basis_.at(i, j);
        vecs.push_back(g.apply(v));
    }
    return from_vectors(basis_.f, g.rows, vecs);
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    return basis_ < o.basis_;
}

std::size_t Subspace::hash() const {
    return basis_.hash() * 31 + ambient_;
}

Subspace fixed_space(const Matrix& g) {
    if (g.rows != g.cols) throw std::invalid_argument("fixed space of a non-square matrix");
    Matrix d = g - Matrix::identity(g.f, g.rows);
    return Subspace::from_rows(d.kernel());
}

} // namespace mil
