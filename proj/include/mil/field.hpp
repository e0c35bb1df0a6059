#ifndef MIL_FIELD_HPP
#define MIL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mil {

/// Raw field element value: the base-p digit string of the residue
/// polynomial, constant coefficient first.  Always in [0, q).
using fval = std::uint32_t;

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Construct (or fetch from the process-wide registry) the field GF(p^r).
/// The modulus is the canonical one: the monic irreducible of degree r
/// whose non-leading coefficient string, read as a base-p number constant
/// digit first, is smallest.  Throws std::invalid_argument if p is not a
/// prime, r == 0, or p^r exceeds 2^16.
FieldPtr make_field(unsigned p, unsigned r);

/// Arithmetic tables and canonical data for one finite field GF(p^r).
/// Instances are immutable and shared; all element operations work on raw
/// values so matrices and polynomials can store plain integers.
class FieldSpec {
public:
    unsigned p = 0;               ///< characteristic
    unsigned r = 0;               ///< extension degree over the prime field
    std::uint32_t q = 0;          ///< p^r
    std::vector<unsigned> modulus; ///< r+1 coefficients, constant first, monic

    fval add(fval a, fval b) const {
        if (p == 2) return a ^ b;
        if (!add_.empty()) return add_[a * q + b];
        return add_slow(a, b);
    }
    fval neg(fval a) const { return p == 2 ? a : neg_[a]; }
    fval sub(fval a, fval b) const { return add(a, neg(b)); }
    fval mul(fval a, fval b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    fval inv(fval a) const;
    fval div(fval a, fval b) const { return mul(a, inv(b)); }
    fval pow(fval a, long long e) const;

    /// Frobenius a -> a^p.
    fval frobenius(fval a) const { return frob_[a]; }
    /// Iterated Frobenius a -> a^(p^k).
    fval frobenius_iter(fval a, unsigned k) const;
    /// Conjugation a -> a^(p^(r/2)) on a field of square order; the fixed
    /// subfield is GF(p^(r/2)).  Only defined when r is even.
    fval conj(fval a) const;
    bool has_conj() const { return r % 2 == 0; }

    /// Image of an integer under the prime-subfield embedding.
    fval embed_int(long long c) const {
        long long m = c % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<fval>(m);
    }

    /// Canonical generator of the unit group (smallest value that generates).
    fval primitive() const { return gen_; }
    /// Discrete log base primitive(), in [0, q-2].  Throws on 0.
    unsigned log_of(fval a) const;

    /// Base-p digits of a value, constant coefficient first, length r.
    std::vector<unsigned> digits(fval a) const;

    /// Text form: decimals on prime fields, "g^k" or "0" on extensions.
    std::string elem_str(fval a) const;
    /// Inverse of elem_str; also accepts "1" and "g" on extension fields.
    fval parse_elem(std::string_view s) const;

    /// True if the value addresses an element, i.e. a < q.
    bool valid(fval a) const { return a < q; }

private:
    friend FieldPtr make_field(unsigned p, unsigned r);
    FieldSpec() = default;
    void build(unsigned p, unsigned r);
    fval add_slow(fval a, fval b) const;
    fval mul_poly(fval a, fval b) const; // table-free, used during build

    std::vector<fval> exp_;   // exp_[k] = g^k for k in [0, 2(q-1))
    std::vector<unsigned> log_;
    std::vector<fval> neg_;
    std::vector<fval> frob_;
    std::vector<fval> add_;   // full table when q is small, else empty
    fval gen_ = 0;
    unsigned half_ = 0;       // r/2 when r even
};

/// Field element with its field attached; convenience wrapper over raw
/// values for code where operator syntax is clearer than spec calls.
struct FieldElement {
    FieldPtr f;
    fval v = 0;

    FieldElement() = default;
    FieldElement(FieldPtr field, fval value) : f(std::move(field)), v(value) {}

    FieldElement operator+(const FieldElement& o) const { return {f, f->add(v, o.v)}; }
    FieldElement operator-(const FieldElement& o) const { return {f, f->sub(v, o.v)}; }
    FieldElement operator*(const FieldElement& o) const { return {f, f->mul(v, o.v)}; }
    FieldElement operator/(const FieldElement& o) const { return {f, f->div(v, o.v)}; }
    FieldElement operator-() const { return {f, f->neg(v)}; }
    bool operator==(const FieldElement& o) const { return v == o.v && f == o.f; }
    bool is_zero() const { return v == 0; }
    std::string str() const { return f->elem_str(v); }
};

/// Explicit embedding GF(p^s) -> GF(p^(s*t)).  Maps the residue generator
/// of the small field to its smallest root in the big field; an embedding
/// is never applied implicitly.
struct SubfieldEmbedding {
    FieldPtr sub;
    FieldPtr sup;
    fval gen_image = 0;

    fval operator()(fval a) const;
};

/// Construct the canonical embedding.  Requires equal characteristic and
/// sub->r dividing sup->r; throws std::invalid_argument otherwise.
SubfieldEmbedding subfield_embedding(const FieldPtr& sub, const FieldPtr& sup);

} // namespace mil

#endif
