#ifndef MIL_LINALG_HPP
#define MIL_LINALG_HPP

#include "mil/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mil {

/// Dense matrix over one finite field.  Entries are raw field values; all
/// arithmetic is exact.
class Matrix {
public:
    FieldPtr f;
    unsigned rows = 0;
    unsigned cols = 0;
    std::vector<std::uint16_t> a; // row-major

    Matrix() = default;
    Matrix(FieldPtr field, unsigned rows_, unsigned cols_)
        : f(std::move(field)), rows(rows_), cols(cols_),
          a(static_cast<std::size_t>(rows_) * cols_, 0) {}

    static Matrix identity(const FieldPtr& field, unsigned n);
    static Matrix from_values(const FieldPtr& field, unsigned rows_, unsigned cols_,
                              const std::vector<fval>& vals);
    /// Entries given as integers, reduced through the prime-subfield embedding.
    static Matrix from_ints(const FieldPtr& field, unsigned rows_, unsigned cols_,
                            const std::vector<long long>& vals);

    fval at(unsigned i, unsigned j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    void set(unsigned i, unsigned j, fval v) { a[static_cast<std::size_t>(i) * cols + j] = static_cast<std::uint16_t>(v); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(fval c) const;
    Matrix transpose() const;
    Matrix entrywise_conj() const;
    Matrix conj_transpose() const { return entrywise_conj().transpose(); }
    Matrix pow(unsigned long long e) const;

    bool is_identity() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    /// Canonical order: by shape, then the row-major entry tuple.
    bool operator<(const Matrix& o) const;

    std::size_t hash() const;

    unsigned rank() const;
    /// Reduced row echelon form; records pivot columns when asked.
    Matrix rref(std::vector<unsigned>* pivots = nullptr) const;
    /// Basis of {x : Mx = 0}, one kernel vector per row.
    Matrix kernel() const;
    Matrix inverse() const;

    /// Multiplies a row-tuple v on the right: returns (M v^T)^T.
    std::vector<fval> apply(const std::vector<fval>& v) const;

    std::string str() const;
};

struct MatrixHash {
    std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

/// Result of an exact linear solve M x = rhs.
struct LinearSolution {
    bool consistent = false;
    Matrix particular; // cols(M) x cols(rhs), free variables set to zero
    Matrix kernel;     // basis of ker M, one vector per row
};

LinearSolution solve_linear(const Matrix& M, const Matrix& rhs);

/// Subspace of k^n in canonical form: basis rows in reduced row echelon
/// form, so equal subspaces compare equal componentwise.
class Subspace {
public:
    Subspace() = default;
    static Subspace from_vectors(const FieldPtr& f, unsigned ambient,
                                 const std::vector<std::vector<fval>>& vecs);
    static Subspace from_rows(const Matrix& rows);
    static Subspace zero(const FieldPtr& f, unsigned ambient);
    static Subspace full(const FieldPtr& f, unsigned ambient);

    unsigned dim() const { return basis_.rows; }
    unsigned ambient() const { return ambient_; }
    const Matrix& basis() const { return basis_; }
    const FieldPtr& field() const { return basis_.f; }

    bool contains(const std::vector<fval>& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// Image under an invertible matrix g (row vectors v -> (g v^T)^T).
    Subspace image(const Matrix& g) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;
    std::size_t hash() const;
    std::string str() const { return basis_.str(); }

private:
    unsigned ambient_ = 0;
    Matrix basis_;
};

/// Fixed space {v : g v = v} of a square matrix, i.e. ker(g - I).
Subspace fixed_space(const Matrix& g);

} // namespace mil

#endif
