#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biproj/gf2_linalg.hpp"

namespace biproj {

namespace detail {

/// Product of two GF(2)[x] polynomials given as bit vectors.
inline uint64_t poly_mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline int poly_deg(uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

inline uint64_t poly_mod(uint64_t a, uint64_t m) {
    int dm = poly_deg(m);
    for (int d = poly_deg(a); d >= dm; d = poly_deg(a)) a ^= m << (d - dm);
    return a;
}

}  // namespace detail

/// Arithmetic in L = GF(2^l), polynomial-basis bit-packed elements.
///
/// Elements are plain uint32_t values in [0, 2^l); the Field object owns the
/// modulus and the log/antilog tables. All member operations are pure and the
/// object is immutable after construction, so it can be shared across threads.
class Field {
public:
    static constexpr int kMaxDegree = 20;  // log/exp tables are 2^l entries

    explicit Field(int l) : Field(l, smallest_irreducible(l)) {}

    Field(int l, uint64_t modulus) : l_(l), modulus_(modulus) {
        if (l < 1 || l > kMaxDegree) throw std::invalid_argument("Field: degree out of range");
        if (detail::poly_deg(modulus) != l || !is_irreducible(modulus, l))
            throw std::invalid_argument("Field: modulus is not an irreducible polynomial of degree l");
        order_ = uint64_t(1) << l;
        build_tables();
    }

    /// Parses the field-spec config format: lines "l=<int>" and optionally
    /// "modulus=<hex bits>".
    static Field from_config(std::string_view text) {
        int l = -1;
        uint64_t modulus = 0;
        bool have_mod = false;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos || line[a] == '#') continue;
            size_t eq = line.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("field config: missing '=' in line: " + line);
            std::string key = line.substr(a, eq - a);
            while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
            std::string val = line.substr(eq + 1);
            size_t b = val.find_first_not_of(" \t");
            size_t e = val.find_last_not_of(" \t\r");
            val = (b == std::string::npos) ? "" : val.substr(b, e - b + 1);
            if (key == "l")
                l = std::stoi(val);
            else if (key == "modulus") {
                modulus = std::stoull(val, nullptr, 16);
                have_mod = true;
            } else
                throw std::invalid_argument("field config: unknown key: " + key);
        }
        if (l < 0) throw std::invalid_argument("field config: missing l");
        return have_mod ? Field(l, modulus) : Field(l);
    }

    int degree() const { return l_; }
    uint64_t modulus() const { return modulus_; }
    uint64_t order() const { return order_; }          // 2^l
    uint64_t mult_order() const { return order_ - 1; }  // 2^l - 1
    uint32_t generator() const { return generator_; }

    bool contains(uint32_t a) const { return a < order_; }

    static uint32_t add(uint32_t a, uint32_t b) { return a ^ b; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    uint32_t sqr(uint32_t a) const { return sqr_[a]; }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
        return exp_[mult_order() - log_[a]];
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        uint64_t le = (uint64_t(log_[a]) * (e % mult_order())) % mult_order();
        return exp_[le];
    }

    /// a^(2^j), the j-th Frobenius power.
    uint32_t frob(uint32_t a, int j) const {
        j %= l_;
        if (j < 0) j += l_;
        uint32_t r = a;
        for (int i = 0; i < j; ++i) r = sqr_[r];
        return r;
    }

    /// Absolute trace, in {0,1}.
    int trace(uint32_t a) const {
        uint32_t s = 0, x = a;
        for (int i = 0; i < l_; ++i) {
            s ^= x;
            x = sqr_[x];
        }
        return static_cast<int>(s & 1u);  // s is 0 or 1 as a field element
    }

    /// Trace from L onto the subfield GF(2^delta); requires delta | l.
    uint32_t relative_trace(uint32_t a, int delta) const {
        if (delta <= 0 || l_ % delta != 0)
            throw std::invalid_argument("relative_trace: delta does not divide l");
        uint32_t s = 0, x = a;
        for (int j = 0; j < l_ / delta; ++j) {
            s ^= x;
            x = frob(x, delta);
        }
        return s;
    }

    /// All elements of the subfield GF(2^delta) inside L; requires delta | l.
    std::vector<uint32_t> subfield_elements(int delta) const {
        if (delta <= 0 || l_ % delta != 0)
            throw std::invalid_argument("subfield_elements: delta does not divide l");
        std::vector<uint32_t> out;
        for (uint32_t x = 0; x < order_; ++x)
            if (frob(x, delta) == x) out.push_back(x);
        return out;
    }

    static bool is_irreducible(uint64_t poly, int deg) {
        if (detail::poly_deg(poly) != deg) return false;
        if (deg == 1) return true;
        if (!(poly & 1)) return false;  // divisible by x
        for (uint64_t d = 2; detail::poly_deg(d) <= deg / 2; ++d)
            if (detail::poly_mod(poly, d) == 0) return false;
        return true;
    }

    /// The lexicographically (numerically) smallest irreducible of degree l.
    static uint64_t smallest_irreducible(int l) {
        for (uint64_t p = (uint64_t(1) << l) | 1; p < (uint64_t(1) << (l + 1)); p += 2)
            if (is_irreducible(p, l)) return p;
        throw std::logic_error("smallest_irreducible: none found");  // unreachable
    }

    bool operator==(const Field& o) const { return l_ == o.l_ && modulus_ == o.modulus_; }

private:
    // Multiplication without tables, used only during construction.
    uint32_t mul_slow(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(detail::poly_mod(detail::poly_mul(a, b), modulus_));
    }

    uint32_t pow_slow(uint32_t a, uint64_t e) const {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        uint64_t n = mult_order();
        std::vector<uint64_t> prime_factors;
        {
            uint64_t m = n;
            for (uint64_t p = 2; p * p <= m; ++p)
                if (m % p == 0) {
                    prime_factors.push_back(p);
                    while (m % p == 0) m /= p;
                }
            if (m > 1) prime_factors.push_back(m);
        }
        generator_ = 1;
        for (uint32_t g = 2; g < order_; ++g) {
            bool ok = true;
            for (uint64_t p : prime_factors)
                if (pow_slow(g, n / p) == 1) { ok = false; break; }
            if (ok) { generator_ = g; break; }
        }
        exp_.resize(2 * n);
        log_.assign(order_, 0);
        uint32_t x = 1;
        for (uint64_t i = 0; i < n; ++i) {
            exp_[i] = x;
            exp_[i + n] = x;
            log_[x] = i;
            x = mul_slow(x, generator_);
        }
        sqr_.resize(order_);
        for (uint32_t a = 0; a < order_; ++a) sqr_[a] = mul_slow(a, a);
    }

    int l_;
    uint64_t modulus_;
    uint64_t order_;
    uint32_t generator_ = 1;
    std::vector<uint32_t> exp_;
    std::vector<uint64_t> log_;
    std::vector<uint32_t> sqr_;
};

/// A field element bundled with its field, for the friendly operator API.
/// Hot loops work on raw uint32_t values instead.
struct FieldElement {
    uint32_t bits = 0;
    const Field* field = nullptr;

    FieldElement() = default;
    FieldElement(uint32_t v, const Field& f) : bits(v), field(&f) {
        if (!f.contains(v)) throw std::invalid_argument("FieldElement: value out of range");
    }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check(b);
        return {Field::add(a.bits, b.bits), *a.field};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check(b);
        return {a.field->mul(a.bits, b.bits), *a.field};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        a.check(b);
        return {a.field->div(a.bits, b.bits), *a.field};
    }
    FieldElement inv() const { return {field->inv(bits), *field}; }
    FieldElement pow(uint64_t e) const { return {field->pow(bits, e), *field}; }
    bool operator==(const FieldElement& o) const { return bits == o.bits && *field == *o.field; }

private:
    void check(const FieldElement& o) const {
        if (field == nullptr || o.field == nullptr || !(*field == *o.field))
            throw std::invalid_argument("FieldElement: field mismatch");
    }
};

/// Subfield parameters q = 2^k, delta = gcd(k,l), with the x -> x^q and
/// x -> x^(q^2) maps tabulated (they sit in the APN scan's inner loop).
struct Subfield {
    const Field* field = nullptr;
    int k = 0;
    int delta = 0;
    uint64_t q = 0;
    uint64_t subfield_order = 0;
    std::vector<uint32_t> powq;
    std::vector<uint32_t> powq2;

    Subfield() = default;
    Subfield(const Field& f, int kk) : field(&f), k(kk) {
        int l = f.degree();
        if (k <= 0 || k >= l) throw std::invalid_argument("Subfield: need 0 < k < l");
        delta = std::gcd(k, l);
        q = uint64_t(1) << k;
        subfield_order = uint64_t(1) << delta;
        powq.resize(f.order());
        powq2.resize(f.order());
        for (uint32_t x = 0; x < f.order(); ++x) {
            powq[x] = f.frob(x, k);
            powq2[x] = f.frob(x, 2 * k);
        }
    }

    int l() const { return field->degree(); }
    bool coprime() const { return delta == 1; }
    bool operator==(const Subfield& o) const { return *field == *o.field && k == o.k; }
};

struct GcdExponentFacts {
    uint64_t gcd_minus;  // gcd(2^k - 1, 2^l - 1)
    uint64_t gcd_plus;   // gcd(2^k + 1, 2^l - 1)
};

/// Closed forms for gcd(2^k -+ 1, 2^l - 1) (characteristic 2).
inline GcdExponentFacts gcd_exponent_facts(int k, int l) {
    if (k < 1 || l < 1 || k > 62 || l > 62) throw std::invalid_argument("gcd_exponent_facts: bad k,l");
    int d = std::gcd(k, l);
    GcdExponentFacts r{};
    r.gcd_minus = (uint64_t(1) << d) - 1;
    r.gcd_plus = ((l / d) % 2 == 1) ? 1 : (uint64_t(1) << d) + 1;
    return r;
}

/// Some x with x^q + x = a, where q = 2^k; nullopt iff the relative trace of a
/// onto GF(2^gcd(k,l)) is nonzero. Solved as a GF(2)-linear system.
inline std::optional<uint32_t> hilbert90_solve(const Field& f, uint32_t a, int k) {
    int l = f.degree();
    BitMatrix m(l, l);
    for (int j = 0; j < l; ++j) {
        uint32_t img = f.frob(uint32_t(1) << j, k) ^ (uint32_t(1) << j);
        for (int i = 0; i < l; ++i)
            if ((img >> i) & 1u) m.set(i, j, true);
    }
    auto x = m.solve(a);
    if (!x) return std::nullopt;
    return static_cast<uint32_t>(*x);
}

/// All x in L with a*x^q = b*x, q = 2^k. Requires (a,b) != (0,0).
inline std::vector<uint32_t> linearized_kernel(const Field& f, uint32_t a, uint32_t b, int k) {
    if (a == 0 && b == 0) throw std::invalid_argument("linearized_kernel: zero map");
    int l = f.degree();
    BitMatrix m(l, l);
    for (int j = 0; j < l; ++j) {
        uint32_t img = f.mul(a, f.frob(uint32_t(1) << j, k)) ^ f.mul(b, uint32_t(1) << j);
        for (int i = 0; i < l; ++i)
            if ((img >> i) & 1u) m.set(i, j, true);
    }
    auto basis = m.kernel_basis();
    std::vector<uint32_t> out;
    out.reserve(size_t(1) << basis.size());
    for (uint64_t mask = 0; mask < (uint64_t(1) << basis.size()); ++mask) {
        uint32_t v = 0;
        for (size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1u) v ^= static_cast<uint32_t>(basis[i]);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace biproj
