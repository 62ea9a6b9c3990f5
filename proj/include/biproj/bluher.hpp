#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "biproj/gf2l.hpp"
#include "biproj/projective.hpp"

namespace biproj {

/// Multiset over L, backed by a dense array of counts indexed by bit-encoding.
class Multiset {
public:
    explicit Multiset(const Field& f) : field_(&f), counts_(f.order(), 0) {}

    const Field& field() const { return *field_; }

    void add(uint32_t x, uint64_t mult = 1) { counts_[x] += mult; }
    uint64_t mult_of(uint32_t x) const { return counts_[x]; }

    uint64_t total() const {
        uint64_t t = 0;
        for (uint64_t c : counts_) t += c;
        return t;
    }

    std::vector<uint32_t> support() const {
        std::vector<uint32_t> s;
        for (uint32_t x = 0; x < counts_.size(); ++x)
            if (counts_[x]) s.push_back(x);
        return s;
    }

    bool operator==(const Multiset& o) const { return counts_ == o.counts_; }

private:
    const Field* field_;
    std::vector<uint64_t> counts_;
};

/// Direct division S/T = {{ s/t : s in S, t in T }} with multiplicity.
inline Multiset direct_division(const Multiset& S, const Multiset& T) {
    const Field& F = S.field();
    if (T.mult_of(0) != 0) throw std::invalid_argument("direct_division: 0 in divisor support");
    Multiset R(F);
    for (uint32_t s : S.support())
        for (uint32_t t : T.support()) R.add(F.div(s, t), S.mult_of(s) * T.mult_of(t));
    return R;
}

/// The Bluher partition of L by the number of P^1-zeroes of
/// P_b(x) = x^{q+1} + x + b (delta = 1, so counts lie in {0,1,2,3}).
struct BluherPartition {
    std::vector<uint32_t> I0, I1, I2, I3;

    const std::vector<uint32_t>& I(int j) const {
        switch (j) {
            case 0: return I0;
            case 1: return I1;
            case 2: return I2;
            case 3: return I3;
        }
        throw std::invalid_argument("BluherPartition: index out of range");
    }
};

inline BluherPartition bluher_partition(const Subfield& ctx) {
    if (!ctx.coprime()) throw std::invalid_argument("bluher_partition: requires gcd(k,l) = 1");
    const Field& F = *ctx.field;
    BluherPartition p;
    for (uint32_t b = 0; b < F.order(); ++b) {
        int zeroes = 0;
        for (uint32_t x = 0; x < F.order(); ++x)
            if ((F.mul(ctx.powq[x], x) ^ x ^ b) == 0) ++zeroes;
        // x^{q+1} coefficient is 1, so oo is never a zero.
        switch (zeroes) {
            case 0: p.I0.push_back(b); break;
            case 1: p.I1.push_back(b); break;
            case 2: p.I2.push_back(b); break;
            case 3: p.I3.push_back(b); break;
            default: throw std::logic_error("bluher_partition: impossible zero count");
        }
    }
    return p;
}

/// rho(x) = x^{q^2+1} / (x^q + x)^{q+1}, defined on L minus GF(2).
inline uint32_t rho(const Subfield& ctx, uint32_t x) {
    if (x == 0 || x == 1) throw std::invalid_argument("rho: undefined on GF(2)");
    const Field& F = *ctx.field;
    uint32_t xq = ctx.powq[x], xq2 = ctx.powq[xq];
    uint32_t num = F.mul(xq2, x);
    uint32_t s = xq ^ x;
    uint32_t den = F.mul(ctx.powq[s], s);
    return F.div(num, den);
}

/// {{ x^{q+1} + x : x in L }}.
inline Multiset image_multiset_qplus1(const Subfield& ctx) {
    if (!ctx.coprime()) throw std::invalid_argument("image_multiset_qplus1: requires gcd(k,l) = 1");
    const Field& F = *ctx.field;
    Multiset m(F);
    for (uint32_t x = 0; x < F.order(); ++x) m.add(F.mul(ctx.powq[x], x) ^ x);
    return m;
}

struct DifferenceSetParams {
    uint64_t v, k, lambda;
    bool operator==(const DifferenceSetParams&) const = default;
};

/// Checks whether D is a difference set in the multiplicative group L^x, i.e.
/// D/D = {1}^{[|D|]} u (L^x minus {1})^{[lambda]} for a uniform lambda.
inline std::optional<DifferenceSetParams> is_difference_set(const std::vector<uint32_t>& D,
                                                            const Field& F) {
    Multiset S(F);
    for (uint32_t d : D) {
        if (d == 0) throw std::invalid_argument("is_difference_set: D must avoid 0");
        S.add(d);
    }
    if (D.empty()) return std::nullopt;
    Multiset Q = direct_division(S, S);
    if (Q.mult_of(1) != D.size()) return std::nullopt;
    uint64_t lambda = 0;
    bool first = true;
    for (uint32_t x = 1; x < F.order(); ++x) {
        if (x == 1) continue;
        uint64_t m = Q.mult_of(x);
        if (first) {
            lambda = m;
            first = false;
        } else if (m != lambda) {
            return std::nullopt;
        }
    }
    return DifferenceSetParams{F.order() - 1, D.size(), lambda};
}

/// Report of the key multiset-intersection lemma: for each d in range,
/// d I_3 n (I_1 u I_2 u I_3) must be nonempty; also re-derives the exact
/// mult_J closed forms for J = (I_1 u I_3^{[3]}) / (I_1 u I_3^{[3]}).
struct IntersectionLemmaReport {
    int l = 0, k = 0;
    bool holds = true;                      // nonempty for every in-range d
    std::vector<uint32_t> counterexamples;  // in-range d with empty intersection
    bool mult_forms_ok = true;              // mult_J(d) matches the closed forms
    std::vector<uint32_t> checked_range;    // the d values examined
};

inline bool is_qplus1_power(const Subfield& ctx, uint32_t x) {
    const Field& F = *ctx.field;
    if (x == 0) throw std::invalid_argument("is_qplus1_power: x must be nonzero");
    uint64_t g = gcd_exponent_facts(ctx.k, ctx.l()).gcd_plus;
    return F.pow(x, F.mult_order() / g) == 1;
}

inline IntersectionLemmaReport multiset_intersection_lemma_check(const Subfield& ctx) {
    if (!ctx.coprime())
        throw std::invalid_argument("multiset_intersection_lemma_check: requires gcd(k,l) = 1");
    const Field& F = *ctx.field;
    int l = ctx.l();
    IntersectionLemmaReport rep;
    rep.l = l;
    rep.k = ctx.k;

    BluherPartition p = bluher_partition(ctx);
    std::vector<bool> in_union(F.order(), false);
    for (auto* s : {&p.I1, &p.I2, &p.I3})
        for (uint32_t b : *s) in_union[b] = true;

    bool odd = l % 2 == 1;
    for (uint32_t d = 1; d < F.order(); ++d) {
        if (!odd && is_qplus1_power(ctx, d)) continue;
        rep.checked_range.push_back(d);
        bool nonempty = false;
        for (uint32_t i : p.I3)
            if (in_union[F.mul(d, i)]) { nonempty = true; break; }
        if (!nonempty) {
            rep.holds = false;
            rep.counterexamples.push_back(d);
        }
    }

    // mult_J closed forms, checked for all d outside GF(2).
    Multiset S(F);
    for (uint32_t b : p.I1) S.add(b);
    for (uint32_t b : p.I3) S.add(b, 3);
    Multiset J = direct_division(S, S);
    for (uint32_t d = 2; d < F.order(); ++d) {
        uint64_t expect;
        if (odd)
            expect = (uint64_t(1) << l) - 4;
        else if (is_qplus1_power(ctx, d))
            expect = (uint64_t(1) << l) - 6;
        else
            expect = (uint64_t(1) << l) - 3;
        if (J.mult_of(d) != expect) rep.mult_forms_ok = false;
    }
    return rep;
}

}  // namespace biproj
