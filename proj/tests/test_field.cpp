#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mil/field.hpp"

#include <set>
#include <vector>

using namespace mil;

namespace {

// Orders of every finite field with at most 81 elements.
std::vector<std::pair<unsigned, unsigned>> small_fields() {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p = 2; p <= 81; ++p) {
        bool prime = p >= 2;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        unsigned long long q = p;
        for (unsigned r = 1; q <= 81; ++r, q *= p) out.emplace_back(p, r);
    }
    return out;
}

// Table-free reference product: schoolbook polynomial multiplication
// followed by long division by the modulus.
fval slow_mul(const FieldPtr& f, fval a, fval b) {
    unsigned p = f->p, r = f->r;
    std::vector<unsigned> da = f->digits(a), db = f->digits(b);
    std::vector<unsigned> prod(2 * r, 0);
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::size_t k = prod.size(); k-- > r;) {
        unsigned lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < r; ++i) {
            unsigned sub = (lead * f->modulus[i]) % p;
            prod[k - r + i] = (prod[k - r + i] + p - sub) % p;
        }
    }
    fval v = 0;
    for (std::size_t i = r; i-- > 0;) v = v * p + prod[i];
    return v;
}

} // namespace

TEST_CASE("canonical modulus of GF(4) is t^2+t+1") {
    auto f = make_field(2, 2);
    CHECK(f->modulus == std::vector<unsigned>{1, 1, 1});

    // Oracle: enumerate all monic quadratics over F_2 and test for roots.
    // A quadratic is irreducible iff it has no root; exactly one survives.
    int found = 0;
    for (unsigned c0 = 0; c0 < 2; ++c0)
        for (unsigned c1 = 0; c1 < 2; ++c1) {
            bool has_root = false;
            for (unsigned x = 0; x < 2; ++x)
                if ((c0 + c1 * x + x * x) % 2 == 0) has_root = true;
            if (!has_root) {
                ++found;
                CHECK(c0 == 1);
                CHECK(c1 == 1);
            }
        }
    CHECK(found == 1);
}

TEST_CASE("GF(4) multiplication facts") {
    auto f = make_field(2, 2);
    // values: 0, 1, t = 2, t+1 = 3
    CHECK(f->mul(2, 2) == 3);  // t^2 = t+1
    CHECK(f->mul(2, 3) == 1);  // t(t+1) = t^2+t = 1
    CHECK(f->frobenius(2) == 3);
    CHECK(f->frobenius(3) == 2);
    CHECK(f->frobenius(1) == 1);
}

TEST_CASE("field axioms, exhaustively, on every order up to 81") {
    for (auto [p, r] : small_fields()) {
        auto f = make_field(p, r);
        const fval q = f->q;
        REQUIRE(q <= 81);
        for (fval a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->pow(a, q - 1) == 1);
            }
            for (fval b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->mul(a, b) == slow_mul(f, a, b));
            }
        }
        // associativity and distributivity on the full cube
        for (fval a = 0; a < q; ++a)
            for (fval b = 0; b < q; ++b)
                for (fval c = 0; c < q; ++c) {
                    if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c))) {
                        REQUIRE(false);
                    }
                    if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) {
                        REQUIRE(false);
                    }
                    if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) {
                        REQUIRE(false);
                    }
                }
    }
}

TEST_CASE("frobenius is a field automorphism of order r") {
    for (auto spec : {std::pair{2u, 4u}, std::pair{3u, 3u}, std::pair{5u, 2u}}) {
        auto f = make_field(spec.first, spec.second);
        for (fval a = 0; a < f->q; ++a) {
            CHECK(f->frobenius(a) == f->pow(a, f->p));
            for (fval b = 0; b < f->q; ++b) {
                CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
                CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
            }
            CHECK(f->frobenius_iter(a, f->r) == a);
        }
        // no smaller iterate is the identity
        for (unsigned k = 1; k < f->r; ++k) {
            bool moved = false;
            for (fval a = 0; a < f->q; ++a)
                if (f->frobenius_iter(a, k) != a) moved = true;
            CHECK(moved);
        }
    }
}

TEST_CASE("conjugation on GF(q^2): norm and trace land in the fixed field") {
    for (unsigned qsmall : {2u, 3u, 4u}) {
        unsigned p = qsmall == 4 ? 2 : qsmall;
        unsigned s = qsmall == 4 ? 2 : 1;
        auto big = make_field(p, 2 * s);
        REQUIRE(big->has_conj());
        std::set<fval> fixed;
        for (fval a = 0; a < big->q; ++a) {
            CHECK(big->conj(big->conj(a)) == a);
            CHECK(big->conj(a) == big->pow(a, qsmall));
            if (big->conj(a) == a) fixed.insert(a);
        }
        CHECK(fixed.size() == qsmall);
        for (fval a = 0; a < big->q; ++a) {
            fval norm = big->mul(a, big->conj(a));
            fval trace = big->add(a, big->conj(a));
            CHECK(fixed.count(norm) == 1);
            CHECK(fixed.count(trace) == 1);
        }
    }
}

TEST_CASE("subfield embeddings are ring homomorphisms onto the fixed field") {
    struct Case {
        unsigned p, rs, rb;
    };
    for (Case c : {Case{2, 2, 4}, Case{3, 1, 2}, Case{2, 1, 4}, Case{2, 3, 6}}) {
        auto sub = make_field(c.p, c.rs);
        auto sup = make_field(c.p, c.rb);
        auto emb = subfield_embedding(sub, sup);
        std::set<fval> image;
        for (fval a = 0; a < sub->q; ++a) {
            image.insert(emb(a));
            for (fval b = 0; b < sub->q; ++b) {
                CHECK(emb(sub->add(a, b)) == sup->add(emb(a), emb(b)));
                CHECK(emb(sub->mul(a, b)) == sup->mul(emb(a), emb(b)));
            }
        }
        CHECK(emb(1) == 1);
        CHECK(image.size() == sub->q);
        // the image is exactly the subfield fixed by x -> x^(p^rs)
        for (fval a = 0; a < sup->q; ++a) {
            bool is_fixed = sup->frobenius_iter(a, c.rs) == a;
            CHECK(is_fixed == (image.count(a) == 1));
        }
    }
}

TEST_CASE("element text form round-trips") {
    for (auto [p, r] : small_fields()) {
        auto f = make_field(p, r);
        for (fval a = 0; a < f->q; ++a) {
            CHECK(f->parse_elem(f->elem_str(a)) == a);
        }
    }
    auto f9 = make_field(3, 2);
    CHECK(f9->parse_elem("g") == f9->primitive());
    CHECK(f9->parse_elem("1") == 1);
    auto f7 = make_field(7, 1);
    CHECK(f7->parse_elem("-1") == 6);
}

TEST_CASE("primitive element generates the unit group") {
    for (auto spec : {std::pair{2u, 4u}, std::pair{3u, 2u}, std::pair{7u, 1u}}) {
        auto f = make_field(spec.first, spec.second);
        std::set<fval> seen;
        fval g = f->primitive(), cur = 1;
        for (std::uint32_t k = 0; k + 1 < f->q; ++k) {
            seen.insert(cur);
            cur = f->mul(cur, g);
        }
        CHECK(seen.size() == f->q - 1);
        CHECK(cur == 1);
    }
}

TEST_CASE("field registry returns shared instances") {
    auto a = make_field(2, 3);
    auto b = make_field(2, 3);
    CHECK(a.get() == b.get());
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 17), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
    auto f = make_field(3, 1);
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
    CHECK_THROWS_AS(f->conj(1), std::invalid_argument);
}

TEST_CASE("canonical moduli are deterministic and classical") {
    CHECK(make_field(2, 3)->modulus == std::vector<unsigned>{1, 1, 0, 1}); // t^3+t+1
    CHECK(make_field(3, 2)->modulus == std::vector<unsigned>{1, 0, 1});    // t^2+1
    CHECK(make_field(2, 4)->modulus == std::vector<unsigned>{1, 1, 0, 0, 1});
}
