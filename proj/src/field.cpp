#include "mil/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace mil {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense coefficient vectors over F_p, constant coefficient first.
using Coeffs = std::vector<unsigned>;

Coeffs value_digits(std::uint64_t v, unsigned p, unsigned len) {
    Coeffs d(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        d[i] = static_cast<unsigned>(v % p);
        v /= p;
    }
    return d;
}

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m, both over F_p.
Coeffs poly_rem(Coeffs a, const Coeffs& m, unsigned p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t i = 0; i <= dm; ++i) {
                unsigned sub = (lead * m[i]) % p;
                unsigned& c = a[shift + i];
                c = (c + p - sub) % p;
            }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool poly_divides(const Coeffs& d, const Coeffs& a, unsigned p) {
    return poly_rem(a, d, p).empty();
}

std::vector<unsigned> prime_factors(std::uint32_t n) {
    std::vector<unsigned> fs;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

fval FieldSpec::mul_poly(fval a, fval b) const {
    if (a == 0 || b == 0) return 0;
    Coeffs da = value_digits(a, p, r), db = value_digits(b, p, r);
    Coeffs prod(2 * r, 0);
    for (unsigned i = 0; i < r; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < r; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    Coeffs rem = poly_rem(std::move(prod), modulus, p);
    fval v = 0;
    for (std::size_t i = rem.size(); i-- > 0;) v = v * p + rem[i];
    return v;
}

fval FieldSpec::add_slow(fval a, fval b) const {
    fval v = 0, scale = 1;
    for (unsigned i = 0; i < r; ++i) {
        v += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return v;
}

void FieldSpec::build(unsigned p_, unsigned r_) {
    p = p_;
    r = r_;
    std::uint64_t qq = 1;
    for (unsigned i = 0; i < r; ++i) {
        qq *= p;
        if (qq > 65536) throw std::invalid_argument("field order exceeds 2^16");
    }
    q = static_cast<std::uint32_t>(qq);
    half_ = r / 2;

    // Canonical modulus: smallest non-leading coefficient string, read as a
    // base-p number constant digit first, among monic irreducibles.
    modulus.clear();
    for (std::uint64_t c = 0; c < q; ++c) {
        Coeffs cand = value_digits(c, p, r);
        cand.push_back(1);
        bool irreducible = true;
        for (unsigned d = 1; irreducible && 2 * d <= r; ++d) {
            std::uint64_t nd = 1;
            for (unsigned i = 0; i < d; ++i) nd *= p;
            for (std::uint64_t dv = 0; dv < nd; ++dv) {
                Coeffs div = value_digits(dv, p, d);
                div.push_back(1);
                if (poly_divides(div, cand, p)) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) {
            modulus.assign(cand.begin(), cand.end());
            break;
        }
    }
    if (modulus.empty()) throw std::logic_error("no irreducible modulus found");

    neg_.resize(q);
    for (fval a = 0; a < q; ++a) {
        fval v = 0, scale = 1, x = a;
        for (unsigned i = 0; i < r; ++i) {
            v += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        neg_[a] = v;
    }

    if (p != 2 && q <= 1024) {
        add_.resize(static_cast<std::size_t>(q) * q);
        for (fval a = 0; a < q; ++a)
            for (fval b = 0; b < q; ++b) add_[a * q + b] = add_slow(a, b);
    }

    // Unit group generator: smallest value of full multiplicative order.
    auto pow_naive = [&](fval a, std::uint32_t e) {
        fval acc = 1;
        while (e) {
            if (e & 1) acc = mul_poly(acc, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return acc;
    };
    const std::uint32_t u = q - 1;
    std::vector<unsigned> fs = prime_factors(u);
    gen_ = 1;
    for (fval cand = 1; cand < q; ++cand) {
        bool ok = true;
        for (unsigned f : fs)
            if (pow_naive(cand, u / f) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = cand;
            break;
        }
    }

    exp_.resize(u == 0 ? 1 : 2 * u);
    log_.assign(q, 0);
    fval cur = 1;
    for (std::uint32_t k = 0; k < (u == 0 ? 1 : u); ++k) {
        exp_[k] = cur;
        log_[cur] = k;
        cur = mul_poly(cur, gen_);
    }
    for (std::uint32_t k = u; k < 2 * u; ++k) exp_[k] = exp_[k - u];

    frob_.resize(q);
    frob_[0] = 0;
    for (fval a = 1; a < q; ++a)
        frob_[a] = exp_[(static_cast<std::uint64_t>(log_[a]) * p) % u];
}

fval FieldSpec::inv(fval a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q - 1) - log_[a]];
}

fval FieldSpec::pow(fval a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("negative power of zero");
        return 0;
    }
    const long long u = q - 1;
    if (u == 0) return 1;
    long long k = (static_cast<long long>(log_[a]) * (e % u)) % u;
    if (k < 0) k += u;
    return exp_[k];
}

fval FieldSpec::frobenius_iter(fval a, unsigned k) const {
    for (unsigned i = 0; i < k % r; ++i) a = frob_[a];
    return a;
}

fval FieldSpec::conj(fval a) const {
    if (r % 2 != 0) throw std::invalid_argument("conj needs a field of square order");
    return frobenius_iter(a, half_);
}

unsigned FieldSpec::log_of(fval a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

std::vector<unsigned> FieldSpec::digits(fval a) const {
    return value_digits(a, p, r);
}

std::string FieldSpec::elem_str(fval a) const {
    if (r == 1) return std::to_string(a);
    if (a == 0) return "0";
    return "g^" + std::to_string(log_[a]);
}

fval FieldSpec::parse_elem(std::string_view s) const {
    if (s.empty()) throw std::invalid_argument("empty field element");
    if (s == "0") return 0;
    if (r == 1 || s[0] == '-' || (s[0] >= '0' && s[0] <= '9')) {
        if (r != 1 && s != "1")
            throw std::invalid_argument("decimal element on an extension field");
        bool negative = s[0] == '-';
        std::size_t i = negative ? 1 : 0;
        long long v = 0;
        if (i == s.size()) throw std::invalid_argument("bad field element");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad field element");
            v = v * 10 + (s[i] - '0');
            if (v > (1 << 24)) v %= p;
        }
        return embed_int(negative ? -v : v);
    }
    if (s[0] != 'g') throw std::invalid_argument("bad field element");
    if (s.size() == 1) return gen_;
    if (s[1] != '^') throw std::invalid_argument("bad field element");
    long long k = 0;
    for (std::size_t i = 2; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad field element");
        k = k * 10 + (s[i] - '0');
        if (k > (1 << 24)) k %= (q - 1);
    }
    return exp_[k % (q - 1)];
}

FieldPtr make_field(unsigned p, unsigned r) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (r == 0) throw std::invalid_argument("extension degree must be positive");

    static std::mutex reg_mutex;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto key = std::make_pair(p, r);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->build(p, r);
    FieldPtr ptr = spec;
    registry.emplace(key, ptr);
    return ptr;
}

fval SubfieldEmbedding::operator()(fval a) const {
    std::vector<unsigned> d = sub->digits(a);
    fval acc = 0, zpow = 1;
    for (unsigned i = 0; i < sub->r; ++i) {
        acc = sup->add(acc, sup->mul(sup->embed_int(d[i]), zpow));
        zpow = sup->mul(zpow, gen_image);
    }
    return acc;
}

SubfieldEmbedding subfield_embedding(const FieldPtr& sub, const FieldPtr& sup) {
    if (sub->p != sup->p) throw std::invalid_argument("embedding needs equal characteristic");
    if (sup->r % sub->r != 0) throw std::invalid_argument("subfield degree must divide");
    auto eval_modulus = [&](fval z) {
        fval acc = 0, zpow = 1;
        for (unsigned i = 0; i <= sub->r; ++i) {
            acc = sup->add(acc, sup->mul(sup->embed_int(sub->modulus[i]), zpow));
            zpow = sup->mul(zpow, z);
        }
        return acc;
    };
    for (fval z = 0; z < sup->q; ++z)
        if (eval_modulus(z) == 0) return SubfieldEmbedding{sub, sup, z};
    throw std::logic_error("modulus has no root in the extension");
}

} // namespace mil
