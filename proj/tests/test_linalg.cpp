#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mil/linalg.hpp"

#include <random>
#include <set>

using namespace mil;

namespace {

Matrix random_matrix(const FieldPtr& f, unsigned rows, unsigned cols, std::mt19937& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<fval> dist(0, f->q - 1);
    for (auto& v : m.a) v = static_cast<std::uint16_t>(dist(rng));
    return m;
}

} // namespace

TEST_CASE("rank plus kernel dimension equals the column count") {
    std::mt19937 rng(171);
    for (auto [p, r] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{7u, 1u}}) {
        auto f = make_field(p, r);
        for (int trial = 0; trial < 40; ++trial) {
            unsigned rows = 1 + rng() % 6, cols = 1 + rng() % 6;
            Matrix m = random_matrix(f, rows, cols, rng);
            Matrix ker = m.kernel();
            CHECK(m.rank() + ker.rows == cols);
            // every kernel row really is annihilated
            for (unsigned k = 0; k < ker.rows; ++k) {
                std::vector<fval> v(cols);
                for (unsigned j = 0; j < cols; ++j) v[j] = ker.at(k, j);
                std::vector<fval> mv = m.apply(v);
                for (fval x : mv) CHECK(x == 0);
            }
        }
    }
}

TEST_CASE("rref is idempotent and preserves the row space") {
    std::mt19937 rng(29);
    auto f = make_field(3, 1);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(f, 2 + rng() % 4, 2 + rng() % 4, rng);
        Matrix r = m.rref();
        CHECK(r.rref() == r);
        CHECK(Subspace::from_rows(m) == Subspace::from_rows(r));
    }
}

TEST_CASE("inverse round-trips and rejects singular input") {
    std::mt19937 rng(7);
    for (auto [p, r] : {std::pair{2u, 2u}, std::pair{5u, 1u}}) {
        auto f = make_field(p, r);
        int found = 0;
        while (found < 15) {
            Matrix m = random_matrix(f, 3, 3, rng);
            if (m.rank() != 3) {
                CHECK_THROWS_AS(m.inverse(), std::domain_error);
                continue;
            }
            ++found;
            Matrix inv = m.inverse();
            CHECK((m * inv).is_identity());
            CHECK((inv * m).is_identity());
        }
    }
}

TEST_CASE("solve_linear reports a particular solution and the kernel") {
    std::mt19937 rng(11);
    auto f = make_field(2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned rows = 2 + rng() % 3, cols = 2 + rng() % 3;
        Matrix m = random_matrix(f, rows, cols, rng);
        Matrix x = random_matrix(f, cols, 1, rng);
        Matrix rhs = m * x;
        LinearSolution sol = solve_linear(m, rhs);
        REQUIRE(sol.consistent);
        CHECK(m * sol.particular == rhs);
        CHECK(sol.kernel.rows + m.rank() == cols);
    }
    // rig an inconsistent system
    Matrix m = Matrix::from_ints(f, 2, 2, {1, 0, 0, 0});
    Matrix rhs = Matrix::from_ints(f, 2, 1, {0, 1});
    CHECK_FALSE(solve_linear(m, rhs).consistent);
}

TEST_CASE("all six invertible 2x2 matrices over F_2 behave as GL_2") {
    auto f = make_field(2, 1);
    std::vector<Matrix> gl;
    for (fval a = 0; a < 2; ++a)
        for (fval b = 0; b < 2; ++b)
            for (fval c = 0; c < 2; ++c)
                for (fval d = 0; d < 2; ++d) {
                    Matrix m = Matrix::from_values(f, 2, 2, {a, b, c, d});
                    if (m.rank() == 2) gl.push_back(m);
                }
    CHECK(gl.size() == 6);
    std::set<Matrix> elems(gl.begin(), gl.end());
    for (const Matrix& x : gl)
        for (const Matrix& y : gl) CHECK(elems.count(x * y) == 1);
}

TEST_CASE("subspaces are canonical") {
    auto f = make_field(3, 1);
    // span{(1,1,0), (0,1,1)} given two different ways
    Subspace u = Subspace::from_vectors(f, 3, {{1, 1, 0}, {0, 1, 1}});
    Subspace w = Subspace::from_vectors(f, 3, {{1, 2, 1}, {0, 1, 1}, {1, 1, 0}});
    CHECK(u == w);
    CHECK(u.dim() == 2);
    CHECK(u.contains({1, 2, 1}));
    CHECK_FALSE(u.contains({1, 0, 0}));
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    std::mt19937 rng(101);
    auto f = make_field(2, 1);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned n = 4 + rng() % 2;
        Matrix mu = random_matrix(f, 1 + rng() % 3, n, rng);
        Matrix mw = random_matrix(f, 1 + rng() % 3, n, rng);
        Subspace u = Subspace::from_rows(mu), w = Subspace::from_rows(mw);
        Subspace s = u.sum(w), i = u.intersect(w);
        CHECK(s.dim() + i.dim() == u.dim() + w.dim());
        CHECK(u.contains(i));
        CHECK(w.contains(i));
        CHECK(s.contains(u));
        CHECK(s.contains(w));
    }
}

TEST_CASE("fixed spaces of simple matrices") {
    auto f = make_field(7, 1);
    Matrix diag = Matrix::from_ints(f, 3, 3, {1, 0, 0, 0, 3, 0, 0, 0, 1});
    Subspace fs = fixed_space(diag);
    CHECK(fs.dim() == 2);
    CHECK(fs.contains({1, 0, 0}));
    CHECK(fs.contains({0, 0, 1}));
    CHECK_FALSE(fs.contains({0, 1, 0}));

    auto f3 = make_field(3, 1);
    Matrix transvection = Matrix::from_ints(f3, 2, 2, {1, 0, 1, 1});
    Subspace ft = fixed_space(transvection);
    CHECK(ft.dim() == 1);
    CHECK(ft.contains({0, 1}));
}

TEST_CASE("conjugate transpose uses the field involution") {
    auto f = make_field(2, 2);
    // t = 2, conj(t) = t+1 = 3
    Matrix m = Matrix::from_values(f, 2, 2, {2, 1, 0, 3});
    Matrix ct = m.conj_transpose();
    CHECK(ct.at(0, 0) == 3);
    CHECK(ct.at(1, 0) == 1);
    CHECK(ct.at(0, 1) == 0);
    CHECK(ct.at(1, 1) == 2);
}

TEST_CASE("subspace image under a matrix") {
    auto f = make_field(3, 1);
    Matrix g = Matrix::from_ints(f, 2, 2, {0, 1, 1, 0}); // swap coordinates
    Subspace u = Subspace::from_vectors(f, 2, {{1, 0}});
    CHECK(u.image(g) == Subspace::from_vectors(f, 2, {{0, 1}}));
}
