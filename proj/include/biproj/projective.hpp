#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biproj/gf2l.hpp"

namespace biproj {

/// A point of the projective line P^1(L) = L u {oo}.
struct ProjPoint {
    bool infinite = false;
    uint32_t x = 0;

    static ProjPoint infinity() { return {true, 0}; }
    static ProjPoint finite(uint32_t v) { return {false, v}; }
    bool operator==(const ProjPoint&) const = default;
};

inline std::vector<ProjPoint> projective_line(const Field& f) {
    std::vector<ProjPoint> pts;
    pts.reserve(f.order() + 1);
    for (uint32_t x = 0; x < f.order(); ++x) pts.push_back(ProjPoint::finite(x));
    pts.push_back(ProjPoint::infinity());
    return pts;
}

/// q-projective polynomial a x^{q+1} + b x^q y + c x y^q + d y^{q+1},
/// used both as a bivariate form and univariately as f(x) = f(x,1).
struct QProjectivePoly {
    uint32_t a = 0, b = 0, c = 0, d = 0;
    const Subfield* ctx = nullptr;

    QProjectivePoly() = default;
    QProjectivePoly(uint32_t aa, uint32_t bb, uint32_t cc, uint32_t dd, const Subfield& s)
        : a(aa), b(bb), c(cc), d(dd), ctx(&s) {}

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    bool operator==(const QProjectivePoly& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d && *ctx == *o.ctx;
    }
};

inline uint32_t eval_bivariate(const QProjectivePoly& f, uint32_t x, uint32_t y) {
    const Field& F = *f.ctx->field;
    uint32_t xq = f.ctx->powq[x], yq = f.ctx->powq[y];
    return F.mul(f.a, F.mul(xq, x)) ^ F.mul(f.b, F.mul(xq, y)) ^ F.mul(f.c, F.mul(x, yq)) ^
           F.mul(f.d, F.mul(yq, y));
}

inline uint32_t eval_univariate(const QProjectivePoly& f, uint32_t x) {
    return eval_bivariate(f, x, 1);
}

/// Value marker at a projective point: for finite x this is f(x,1); at oo it is
/// the x^{q+1} coefficient, which is 0 exactly when deg f(x,1) < q+1.
inline uint32_t eval_projective(const QProjectivePoly& f, ProjPoint p) {
    if (f.is_zero()) throw std::invalid_argument("eval_projective: zero polynomial");
    return p.infinite ? f.a : eval_univariate(f, p.x);
}

inline bool vanishes_at(const QProjectivePoly& f, ProjPoint p) { return eval_projective(f, p) == 0; }

/// Fractional linear map x -> (t x + u) / (v x + w), equivalently the right
/// GL(2,L) substitution (x,y) -> (t x + u y, v x + w y) on bivariate forms.
struct MobiusMap {
    uint32_t t = 1, u = 0, v = 0, w = 1;

    static MobiusMap identity() { return {}; }

    uint32_t det(const Field& f) const { return f.mul(t, w) ^ f.mul(u, v); }

    MobiusMap inverse(const Field& f) const {
        uint32_t dinv = f.inv(det(f));  // throws when singular
        return {f.mul(dinv, w), f.mul(dinv, u), f.mul(dinv, v), f.mul(dinv, t)};
    }

    /// Matrix product: (this o other) as substitutions.
    MobiusMap compose(const MobiusMap& o, const Field& f) const {
        return {f.mul(t, o.t) ^ f.mul(u, o.v), f.mul(t, o.u) ^ f.mul(u, o.w),
                f.mul(v, o.t) ^ f.mul(w, o.v), f.mul(v, o.u) ^ f.mul(w, o.w)};
    }

    ProjPoint apply(ProjPoint p, const Field& f) const {
        if (p.infinite) {
            if (v == 0) return ProjPoint::infinity();
            return ProjPoint::finite(f.div(t, v));
        }
        uint32_t num = f.mul(t, p.x) ^ u;
        uint32_t den = f.mul(v, p.x) ^ w;
        if (den == 0) return ProjPoint::infinity();
        return ProjPoint::finite(f.div(num, den));
    }

    bool operator==(const MobiusMap&) const = default;
};

/// f' = alpha * f(t x + u y, v x + w y), expanded into coefficients.
inline QProjectivePoly apply_action(const QProjectivePoly& f, uint32_t alpha, const MobiusMap& m) {
    const Field& F = *f.ctx->field;
    if (alpha == 0) throw std::invalid_argument("apply_action: alpha must be nonzero");
    if (m.det(F) == 0) throw std::invalid_argument("apply_action: singular map");
    const auto& pq = f.ctx->powq;
    uint32_t t = m.t, u = m.u, v = m.v, w = m.w;
    uint32_t tq = pq[t], uq = pq[u], vq = pq[v], wq = pq[w];
    uint32_t a2 = F.mul(f.a, F.mul(tq, t)) ^ F.mul(f.b, F.mul(tq, v)) ^ F.mul(f.c, F.mul(t, vq)) ^
                  F.mul(f.d, F.mul(vq, v));
    uint32_t b2 = F.mul(f.a, F.mul(tq, u)) ^ F.mul(f.b, F.mul(tq, w)) ^ F.mul(f.c, F.mul(u, vq)) ^
                  F.mul(f.d, F.mul(vq, w));
    uint32_t c2 = F.mul(f.a, F.mul(t, uq)) ^ F.mul(f.b, F.mul(uq, v)) ^ F.mul(f.c, F.mul(t, wq)) ^
                  F.mul(f.d, F.mul(v, wq));
    uint32_t d2 = F.mul(f.a, F.mul(u, uq)) ^ F.mul(f.b, F.mul(uq, w)) ^ F.mul(f.c, F.mul(u, wq)) ^
                  F.mul(f.d, F.mul(w, wq));
    return {F.mul(alpha, a2), F.mul(alpha, b2), F.mul(alpha, c2), F.mul(alpha, d2), *f.ctx};
}

inline std::vector<ProjPoint> zero_set(const QProjectivePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero_set: zero polynomial");
    std::vector<ProjPoint> zs;
    for (uint32_t x = 0; x < f.ctx->field->order(); ++x)
        if (eval_univariate(f, x) == 0) zs.push_back(ProjPoint::finite(x));
    if (f.a == 0) zs.push_back(ProjPoint::infinity());
    return zs;
}

enum class Stratum { D0, D1, Pi0, Pi1, Pi2, PiDeltaPlus1 };

inline const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::D0: return "D0";
        case Stratum::D1: return "D1";
        case Stratum::Pi0: return "Pi0";
        case Stratum::Pi1: return "Pi1";
        case Stratum::Pi2: return "Pi2";
        case Stratum::PiDeltaPlus1: return "Pi3";  // p^delta + 1; "Pi3" when delta = 1
    }
    return "?";
}

/// Membership in the orbit of (0,0,0,1)_q, i.e. f = alpha (v x + w y)^{q+1}.
/// When it holds, also reports (alpha, v, w).
inline bool d1_factorization(const QProjectivePoly& f, uint32_t* alpha = nullptr, uint32_t* v = nullptr,
                             uint32_t* w = nullptr) {
    if (f.is_zero()) return false;
    const Field& F = *f.ctx->field;
    const auto& pq = f.ctx->powq;
    if (f.a != 0) {
        uint32_t w0 = F.div(f.b, f.a);
        if (f.c != F.mul(f.a, pq[w0]) || f.d != F.mul(f.a, F.mul(w0, pq[w0]))) return false;
        if (alpha) *alpha = f.a;
        if (v) *v = 1;
        if (w) *w = w0;
        return true;
    }
    if (f.b != 0 || f.c != 0) return false;
    if (alpha) *alpha = f.d;
    if (v) *v = 0;
    if (w) *w = 1;
    return true;
}

inline Stratum zero_count_class(const QProjectivePoly& f) {
    if (f.is_zero()) return Stratum::D0;
    if (d1_factorization(f)) return Stratum::D1;
    size_t n = zero_set(f).size();
    if (n == 0) return Stratum::Pi0;
    if (n == 1) return Stratum::Pi1;
    if (n == 2) return Stratum::Pi2;
    if (n == f.ctx->subfield_order + 1) return Stratum::PiDeltaPlus1;
    throw std::logic_error("zero_count_class: impossible zero count " + std::to_string(n));
}

struct CanonWitness {
    uint32_t alpha = 1;
    MobiusMap map;
};

namespace detail {

/// Searches (L^x x PGL(2,L)) for a witness with apply_action(f, alpha, m) == target.
/// Matrices are enumerated with the first nonzero entry normalized to 1; the
/// scalar alpha is recovered from the coefficient ratio.
inline std::optional<CanonWitness> find_scaled_action(const QProjectivePoly& f,
                                                      const QProjectivePoly& target) {
    const Field& F = *f.ctx->field;
    uint32_t n = static_cast<uint32_t>(F.order());
    auto try_map = [&](uint32_t t, uint32_t u, uint32_t v, uint32_t w) -> std::optional<CanonWitness> {
        MobiusMap m{t, u, v, w};
        if (m.det(F) == 0) return std::nullopt;
        QProjectivePoly g = apply_action(f, 1, m);
        // target == alpha * g for some alpha?
        uint32_t lam = 0;
        std::array<std::pair<uint32_t, uint32_t>, 4> co{{{g.a, target.a}, {g.b, target.b}, {g.c, target.c}, {g.d, target.d}}};
        for (auto [gv, tv] : co) {
            if ((gv == 0) != (tv == 0)) return std::nullopt;
            if (gv != 0) {
                uint32_t r = F.div(tv, gv);
                if (lam == 0)
                    lam = r;
                else if (lam != r)
                    return std::nullopt;
            }
        }
        if (lam == 0) return std::nullopt;
        return CanonWitness{lam, m};
    };
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = 0; v < n; ++v)
            for (uint32_t w = 0; w < n; ++w)
                if (auto r = try_map(1, u, v, w)) return r;
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t w = 0; w < n; ++w)
            if (auto r = try_map(0, 1, v, w)) return r;
    for (uint32_t w = 0; w < n; ++w)
        if (auto r = try_map(0, 0, 1, w)) return r;
    return std::nullopt;
}

}  // namespace detail

/// Decides f ~_P f' and returns a witness (alpha, mu) with
/// apply_action(f, alpha, mu) == f'. Brute force over L^x x PGL(2,L).
inline std::optional<CanonWitness> projectively_equivalent(const QProjectivePoly& f,
                                                           const QProjectivePoly& g) {
    if (!(*f.ctx == *g.ctx)) throw std::invalid_argument("projectively_equivalent: context mismatch");
    if (f.is_zero() || g.is_zero()) {
        if (f.is_zero() && g.is_zero()) return CanonWitness{};
        return std::nullopt;
    }
    if (zero_count_class(f) != zero_count_class(g)) return std::nullopt;
    return detail::find_scaled_action(f, g);
}

/// Smallest element of L with absolute trace 1.
inline uint32_t smallest_trace_one(const Field& F) {
    for (uint32_t x = 1; x < F.order(); ++x)
        if (F.trace(x) == 1) return x;
    throw std::logic_error("smallest_trace_one: none found");
}

/// Pi0 representative: for even l the smallest (1,0,0,u) with u not a
/// (q+1)-power; for odd l the first Pi0 member in lexicographic coefficient
/// order (the orbit is unique either way, so any member represents).
inline QProjectivePoly pi0_representative(const Subfield& ctx) {
    if (!ctx.coprime()) throw std::invalid_argument("pi0_representative: requires gcd(k,l) = 1");
    const Field& F = *ctx.field;
    if (ctx.l() % 2 == 0) {
        uint64_t g = gcd_exponent_facts(ctx.k, ctx.l()).gcd_plus;  // = 3 for even l
        for (uint32_t u = 1; u < F.order(); ++u)
            if (F.pow(u, F.mult_order() / g) != 1) return {1, 0, 0, u, ctx};
        throw std::logic_error("pi0_representative: no non-(q+1)-power found");
    }
    for (uint32_t a = 0; a < F.order(); ++a)
        for (uint32_t b = 0; b < F.order(); ++b)
            for (uint32_t c = 0; c < F.order(); ++c)
                for (uint32_t d = 0; d < F.order(); ++d) {
                    QProjectivePoly f{a, b, c, d, ctx};
                    if (!f.is_zero() && zero_count_class(f) == Stratum::Pi0) return f;
                }
    throw std::logic_error("pi0_representative: Pi0 is empty");
}

/// The canonical representative of each stratum (delta = 1).
inline QProjectivePoly stratum_representative(const Subfield& ctx, Stratum s) {
    if (ctx.delta != 1) throw std::invalid_argument("stratum_representative: requires gcd(k,l) = 1");
    bool odd = ctx.l() % 2 == 1;
    switch (s) {
        case Stratum::D0: return {0, 0, 0, 0, ctx};
        case Stratum::D1: return {0, 0, 0, 1, ctx};
        case Stratum::Pi2: return {0, 0, 1, 0, ctx};
        case Stratum::PiDeltaPlus1: return {0, 1, 1, 0, ctx};
        case Stratum::Pi1:
            if (odd) return {1, 0, 0, 1, ctx};
            return {0, 1, 1, smallest_trace_one(*ctx.field), ctx};
        case Stratum::Pi0: return pi0_representative(ctx);
    }
    throw std::logic_error("stratum_representative: bad stratum");
}

/// Canonicalization: maps f constructively (translate / reciprocate / dilate /
/// scale, following the orbit-transitivity proofs) onto its stratum
/// representative; Pi0 falls back to the brute-force orbit search. Returns the
/// representative and a witness with apply_action(f, alpha, map) == rep.
inline std::pair<QProjectivePoly, CanonWitness> canonicalize(const QProjectivePoly& f) {
    const Subfield& ctx = *f.ctx;
    const Field& F = *ctx.field;
    if (ctx.delta != 1) throw std::invalid_argument("canonicalize: requires gcd(k,l) = 1");

    if (f.is_zero()) return {QProjectivePoly{0, 0, 0, 0, ctx}, CanonWitness{}};

    uint32_t alpha = 1;
    MobiusMap acc = MobiusMap::identity();
    QProjectivePoly cur = f;
    auto step = [&](uint32_t a2, const MobiusMap& m) {
        cur = apply_action(cur, a2, m);
        alpha = F.mul(alpha, a2);
        acc = acc.compose(m, F);
    };

    // D1: f = alpha0 (v x + w y)^{q+1}; choose M with (v,w) M = (0,1).
    {
        uint32_t a0, v, w;
        if (d1_factorization(cur, &a0, &v, &w)) {
            MobiusMap n = (v != 0) ? MobiusMap{0, 1, v, w} : MobiusMap{1, 0, v, w};
            step(F.inv(a0), n.inverse(F));
            if (!(cur == QProjectivePoly{0, 0, 0, 1, ctx}))
                throw std::logic_error("canonicalize: D1 reduction failed");
            return {cur, CanonWitness{alpha, acc}};
        }
    }

    Stratum s = zero_count_class(cur);
    QProjectivePoly rep = stratum_representative(ctx, s);
    if (cur == rep) return {rep, CanonWitness{alpha, acc}};

    if (s == Stratum::Pi0) {
        auto w = detail::find_scaled_action(cur, rep);
        if (!w) throw std::logic_error("canonicalize: Pi0 orbit search failed");
        step(w->alpha, w->map);
        return {rep, CanonWitness{alpha, acc}};
    }

    // Move the largest zero (preferring oo) to oo, so the x^{q+1} term drops.
    {
        auto zs = zero_set(cur);
        ProjPoint zlast = zs.back();  // finite zeroes in ascending order, oo last
        if (!zlast.infinite) step(1, MobiusMap{zlast.x, 1, 1, 0});
        if (cur.a != 0) throw std::logic_error("canonicalize: zero move failed");
    }

    if (s == Stratum::Pi2 || s == Stratum::PiDeltaPlus1) {
        // Translate the smallest remaining finite zero to 0.
        auto zs = zero_set(cur);
        step(1, MobiusMap{1, zs.front().x, 0, 1});
        // Now cur = (0,b,c,0).
        if (cur.d != 0) throw std::logic_error("canonicalize: translation failed");
        if (s == Stratum::Pi2) {
            if (cur.b != 0 && cur.c != 0) throw std::logic_error("canonicalize: Pi2 shape violated");
            if (cur.c == 0) step(1, MobiusMap{0, 1, 1, 0});  // reciprocal: x^q <-> x
            step(F.inv(cur.c), MobiusMap::identity());
        } else {
            // b,c != 0: dilate by gamma with gamma^{q-1} = c/b, then scale.
            uint64_t e_inv = [&] {
                // inverse of (q-1) mod (2^l - 1); exists since gcd = 2^delta - 1 = 1
                uint64_t m = F.mult_order(), t = (ctx.q - 1) % m, x = 1;
                while (true) {  // tiny exponents; brute inverse is fine
                    if ((t * x) % m == 1) return x;
                    ++x;
                }
            }();
            uint32_t gamma = F.pow(F.div(cur.c, cur.b), e_inv);
            step(1, MobiusMap{gamma, 0, 0, 1});
            if (cur.b != cur.c) throw std::logic_error("canonicalize: dilation failed");
            step(F.inv(cur.b), MobiusMap::identity());
        }
        if (!(cur == rep)) throw std::logic_error("canonicalize: Pi2/Pi3 reduction failed");
        return {cur, CanonWitness{alpha, acc}};
    }

    // Pi1: cur = (0,b,c,d) with no finite zeroes, b,c != 0.
    {
        if (cur.b == 0 || cur.c == 0) throw std::logic_error("canonicalize: Pi1 shape violated");
        uint64_t m = F.mult_order();
        uint64_t e_inv = 1;
        while (((ctx.q - 1) % m * e_inv) % m != 1) ++e_inv;
        uint32_t A = F.pow(F.div(cur.c, cur.b), e_inv);  // A^{q-1} = c/b
        step(1, MobiusMap{A, 0, 0, 1});
        if (cur.b != cur.c) throw std::logic_error("canonicalize: Pi1 dilation failed");
        step(F.inv(cur.b), MobiusMap::identity());
        // cur = (0,1,1,e) with trace(e) = 1.
        uint32_t e = cur.d;
        if (F.trace(e) != 1) throw std::logic_error("canonicalize: Pi1 trace violated");
        if (ctx.l() % 2 == 0) {
            uint32_t u0 = smallest_trace_one(F);
            uint32_t beta = *hilbert90_solve(F, e ^ u0, ctx.k);
            step(1, MobiusMap{1, beta, 0, 1});
        } else {
            // Translate e -> 1, then pull back through (1,0,0,1) ~ (0,1,1,1).
            uint32_t beta = *hilbert90_solve(F, e ^ 1u, ctx.k);
            step(1, MobiusMap{1, beta, 0, 1});
            step(1, MobiusMap{1, 1, 1, 0}.inverse(F));
        }
        if (!(cur == rep)) throw std::logic_error("canonicalize: Pi1 reduction failed");
        return {cur, CanonWitness{alpha, acc}};
    }
}

/// The representative set S from the classification: together with the scan
/// over all second components it covers every (q,q)-biprojective pair.
inline std::vector<QProjectivePoly> representative_set(const Subfield& ctx) {
    if (!ctx.coprime()) throw std::invalid_argument("representative_set: requires gcd(k,l) = 1");
    const Field& F = *ctx.field;
    std::vector<QProjectivePoly> s;
    s.push_back({0, 0, 0, 0, ctx});
    s.push_back({0, 0, 0, 1, ctx});
    s.push_back({0, 0, 1, 0, ctx});
    for (uint32_t a = 1; a < F.order(); ++a) s.push_back({1, 0, 0, a, ctx});
    if (ctx.l() % 2 == 1) {
        s.push_back({0, 1, 1, 0, ctx});
        s.push_back(pi0_representative(ctx));
    } else {
        s.push_back({0, 1, 1, smallest_trace_one(F), ctx});
    }
    return s;
}

/// True iff x -> f(x)/g(x) (with the usual oo conventions) is a bijection of
/// P^1(L). Throws if f and g vanish simultaneously somewhere.
inline bool is_fractional_permutation(const QProjectivePoly& f, const QProjectivePoly& g) {
    if (!(*f.ctx == *g.ctx)) throw std::invalid_argument("is_fractional_permutation: context mismatch");
    const Field& F = *f.ctx->field;
    uint32_t n = static_cast<uint32_t>(F.order());
    std::vector<bool> seen(n + 1, false);
    auto record = [&](uint32_t fv, uint32_t gv) {
        if (fv == 0 && gv == 0) throw std::invalid_argument("is_fractional_permutation: common zero");
        uint32_t code = (gv == 0) ? n : F.div(fv, gv);
        if (seen[code]) return false;
        seen[code] = true;
        return true;
    };
    for (uint32_t x = 0; x < n; ++x)
        if (!record(eval_univariate(f, x), eval_univariate(g, x))) return false;
    return record(f.a, g.a);
}

// ---------------------------------------------------------------------------
// Textual polynomial literals: (a,b,c,d)_q@l with hex coefficients.

inline std::string to_literal(const QProjectivePoly& f) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%x,%x,%x,%x)_%llu@%d", f.a, f.b, f.c, f.d,
                  static_cast<unsigned long long>(f.ctx->q), f.ctx->l());
    return buf;
}

namespace detail {

struct LiteralCursor {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("literal parse error at position " + std::to_string(pos) + ": " + what);
    }
    void expect(char c) {
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    uint64_t hex() {
        size_t start = pos;
        uint64_t v = 0;
        while (pos < s.size() && std::isxdigit(static_cast<unsigned char>(s[pos]))) {
            int d = s[pos] <= '9' ? s[pos] - '0' : (std::tolower(s[pos]) - 'a' + 10);
            v = v * 16 + static_cast<uint64_t>(d);
            ++pos;
        }
        if (pos == start) fail("expected hex number");
        return v;
    }
    uint64_t dec() {
        size_t start = pos;
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<uint64_t>(s[pos] - '0');
            ++pos;
        }
        if (pos == start) fail("expected decimal number");
        return v;
    }
    void done() {
        if (pos != s.size()) fail("trailing characters");
    }
};

struct RawPoly {
    uint64_t a, b, c, d, q;
    int l;
};

inline RawPoly parse_poly_body(LiteralCursor& cur) {
    RawPoly r{};
    cur.expect('(');
    r.a = cur.hex();
    cur.expect(',');
    r.b = cur.hex();
    cur.expect(',');
    r.c = cur.hex();
    cur.expect(',');
    r.d = cur.hex();
    cur.expect(')');
    cur.expect('_');
    r.q = cur.dec();
    cur.expect('@');
    r.l = static_cast<int>(cur.dec());
    return r;
}

inline QProjectivePoly raw_to_poly(const RawPoly& r, const Subfield& ctx, const LiteralCursor& cur) {
    if (r.q != ctx.q || r.l != ctx.l()) cur.fail("literal parameters (q,l) do not match the field");
    uint64_t n = ctx.field->order();
    if (r.a >= n || r.b >= n || r.c >= n || r.d >= n) cur.fail("coefficient out of field range");
    return {static_cast<uint32_t>(r.a), static_cast<uint32_t>(r.b), static_cast<uint32_t>(r.c),
            static_cast<uint32_t>(r.d), ctx};
}

}  // namespace detail

/// Parameters (q, l) of a polynomial or function literal, for constructing the
/// field before a full parse.
inline std::pair<uint64_t, int> literal_params(std::string_view s) {
    size_t at = s.rfind('@');
    size_t us = s.rfind('_');
    if (at == std::string_view::npos || us == std::string_view::npos || us > at)
        throw std::invalid_argument("literal parse error: missing _q@l suffix");
    detail::LiteralCursor cq{s, us + 1};
    uint64_t q = cq.dec();
    detail::LiteralCursor cl{s, at + 1};
    int l = static_cast<int>(cl.dec());
    return {q, l};
}

inline QProjectivePoly parse_poly_literal(std::string_view s, const Subfield& ctx) {
    detail::LiteralCursor cur{s};
    auto raw = detail::parse_poly_body(cur);
    cur.done();
    return detail::raw_to_poly(raw, ctx, cur);
}

}  // namespace biproj
