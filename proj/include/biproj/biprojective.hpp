#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biproj/gf2_linalg.hpp"
#include "biproj/gf2l.hpp"
#include "biproj/projective.hpp"

namespace biproj {

/// Element of GL(2,L), acting on column vectors (x,y).
using GLMatrix = MobiusMap;

inline QProjectivePoly poly_add(const QProjectivePoly& f, const QProjectivePoly& g) {
    return {f.a ^ g.a, f.b ^ g.b, f.c ^ g.c, f.d ^ g.d, *f.ctx};
}

inline QProjectivePoly poly_scale(uint32_t s, const QProjectivePoly& f) {
    const Field& F = *f.ctx->field;
    return {F.mul(s, f.a), F.mul(s, f.b), F.mul(s, f.c), F.mul(s, f.d), *f.ctx};
}

/// A (q,q)-biprojective function F = (f, g) : L x L -> L x L.
struct BiprojectiveFunction {
    QProjectivePoly f, g;

    BiprojectiveFunction() = default;
    BiprojectiveFunction(const QProjectivePoly& ff, const QProjectivePoly& gg) : f(ff), g(gg) {
        if (!(*f.ctx == *g.ctx))
            throw std::invalid_argument("BiprojectiveFunction: components over different contexts");
    }

    const Subfield& ctx() const { return *f.ctx; }

    std::pair<uint32_t, uint32_t> eval(uint32_t x, uint32_t y) const {
        return {eval_bivariate(f, x, y), eval_bivariate(g, x, y)};
    }

    bool operator==(const BiprojectiveFunction& o) const { return f == o.f && g == o.g; }
};

/// Coefficients of the linearized form Delta_u = cxq x^q + cx x + cyq y^q + cy y,
/// the derivative of one biprojective component in direction (u,1) (or (1,0) at oo).
struct DeltaCoeffs {
    uint32_t cxq = 0, cx = 0, cyq = 0, cy = 0;
};

inline DeltaCoeffs delta_coeffs(const QProjectivePoly& f, ProjPoint u) {
    const Field& F = *f.ctx->field;
    if (u.infinite) return {f.a, f.a, f.c, f.b};
    uint32_t uq = f.ctx->powq[u.x];
    return {F.mul(f.a, u.x) ^ f.b, F.mul(f.a, uq) ^ f.c, F.mul(f.c, u.x) ^ f.d,
            F.mul(f.b, uq) ^ f.d};
}

inline uint32_t eval_delta(const DeltaCoeffs& dc, const Subfield& ctx, uint32_t x, uint32_t y) {
    const Field& F = *ctx.field;
    return F.mul(dc.cxq, ctx.powq[x]) ^ F.mul(dc.cx, x) ^ F.mul(dc.cyq, ctx.powq[y]) ^
           F.mul(dc.cy, y);
}

/// Delta_u as an l x 2l GF(2) matrix: rows are output bits, the low l columns
/// are the x-input bits, the high l the y-input bits.
inline BitMatrix delta_matrix(const QProjectivePoly& f, ProjPoint u) {
    const Subfield& ctx = *f.ctx;
    int l = ctx.l();
    DeltaCoeffs dc = delta_coeffs(f, u);
    BitMatrix m(l, 2 * l);
    for (int j = 0; j < 2 * l; ++j) {
        uint32_t x = j < l ? uint32_t(1) << j : 0;
        uint32_t y = j < l ? 0 : uint32_t(1) << (j - l);
        uint32_t out = eval_delta(dc, ctx, x, y);
        for (int i = 0; i < l; ++i)
            if (out >> i & 1) m.set(i, j, true);
    }
    return m;
}

/// The pair (Delta_u^f, Delta_u^g), each as an l x 2l GF(2) matrix.
inline std::pair<BitMatrix, BitMatrix> delta_u(const BiprojectiveFunction& F, ProjPoint u) {
    return {delta_matrix(F.f, u), delta_matrix(F.g, u)};
}

/// APN criterion over the projective line: F is APN iff for every u in P^1(L)
/// the joint kernel of (Delta_u^f, Delta_u^g) has size exactly 2, i.e. the
/// stacked 2l x 2l matrix has rank exactly 2l - 1 (the kernel is never trivial:
/// it contains (u,1), resp. (1,0) at oo).
inline bool is_apn_projective(const BiprojectiveFunction& F) {
    const Subfield& ctx = F.ctx();
    const Field& Fl = *ctx.field;
    int l = ctx.l();
    uint32_t n = static_cast<uint32_t>(Fl.order());

    auto survives = [&](ProjPoint u) {
        DeltaCoeffs df = delta_coeffs(F.f, u);
        DeltaCoeffs dg = delta_coeffs(F.g, u);
        GaussianRank gr;
        int dependent = 0;
        for (int j = 0; j < 2 * l; ++j) {
            uint32_t e = uint32_t(1) << (j < l ? j : j - l);
            uint32_t eq = ctx.powq[e];
            uint32_t fo, go;
            if (j < l) {
                fo = Fl.mul(df.cxq, eq) ^ Fl.mul(df.cx, e);
                go = Fl.mul(dg.cxq, eq) ^ Fl.mul(dg.cx, e);
            } else {
                fo = Fl.mul(df.cyq, eq) ^ Fl.mul(df.cy, e);
                go = Fl.mul(dg.cyq, eq) ^ Fl.mul(dg.cy, e);
            }
            uint64_t col = uint64_t(fo) | (uint64_t(go) << l);
            if (!gr.add(col) && ++dependent > 1) return false;  // kernel dim >= 2
        }
        return dependent == 1;
    };

    if (!survives(ProjPoint::finite(0))) return false;
    if (!survives(ProjPoint::infinity())) return false;
    for (uint32_t u = 1; u < n; ++u)
        if (!survives(ProjPoint::finite(u))) return false;
    return true;
}

/// Independent APN oracle straight from the definition: every nonzero
/// derivative x -> F(x) + F(x+a) must be exactly 2-to-1 on L x L.
inline bool is_apn_naive(const BiprojectiveFunction& F) {
    const Subfield& ctx = F.ctx();
    int l = ctx.l();
    uint32_t n = static_cast<uint32_t>(ctx.field->order());
    size_t total = size_t(1) << (2 * l);

    std::vector<uint32_t> table(total);
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y) {
            auto [fv, gv] = F.eval(x, y);
            table[(size_t(y) << l) | x] = fv | (gv << l);
        }

    std::vector<uint32_t> stamp(total, 0);
    uint32_t epoch = 0;
    for (uint32_t a = 1; a < total; ++a) {
        ++epoch;
        // D(x) = D(x+a): walk one representative per pair; any value collision
        // across distinct pairs breaks 2-to-1-ness.
        for (uint32_t x = 0; x < total; ++x) {
            if ((x ^ a) < x) continue;
            uint32_t v = table[x] ^ table[x ^ a];
            if (stamp[v] == epoch) return false;
            stamp[v] = epoch;
        }
    }
    return true;
}

/// F' = L1 o F o L2: the right matrix substitutes inputs in both components,
/// the left matrix takes L-linear combinations of the outputs.
inline BiprojectiveFunction act(const BiprojectiveFunction& F, const GLMatrix& left,
                                const GLMatrix& right) {
    const Field& Fl = *F.ctx().field;
    if (left.det(Fl) == 0 || right.det(Fl) == 0)
        throw std::invalid_argument("act: singular matrix");
    QProjectivePoly f2 = apply_action(F.f, 1, right);
    QProjectivePoly g2 = apply_action(F.g, 1, right);
    return {poly_add(poly_scale(left.t, f2), poly_scale(left.u, g2)),
            poly_add(poly_scale(left.v, f2), poly_scale(left.w, g2))};
}

/// Multiset of zero-count strata over the pencil { r f + s g : (r:s) in P^1(L) },
/// stored as counts indexed by Stratum. Invariant under the GLEQ action.
using PencilSignature = std::array<int, 6>;

inline PencilSignature pencil_signature(const BiprojectiveFunction& F) {
    const Field& Fl = *F.ctx().field;
    PencilSignature sig{};
    auto bump = [&](const QProjectivePoly& h) { ++sig[static_cast<size_t>(zero_count_class(h))]; };
    for (uint32_t s = 0; s < Fl.order(); ++s) bump(poly_add(F.f, poly_scale(s, F.g)));
    bump(F.g);  // (r:s) = (0:1)
    return sig;
}

namespace detail {

/// Reduced-echelon canonical basis of span_L{f, g} inside L^4, as up to two
/// normalized coefficient rows. Equal spans give identical bases.
inline std::vector<std::array<uint32_t, 4>> span_echelon(const QProjectivePoly& f,
                                                         const QProjectivePoly& g) {
    const Field& F = *f.ctx->field;
    std::vector<std::array<uint32_t, 4>> rows{{f.a, f.b, f.c, f.d}, {g.a, g.b, g.c, g.d}};
    int rk = 0;
    for (int c = 0; c < 4 && rk < 2; ++c) {
        int piv = -1;
        for (int r = rk; r < 2; ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rk)]);
        uint32_t inv = F.inv(rows[static_cast<size_t>(rk)][static_cast<size_t>(c)]);
        for (auto& v : rows[static_cast<size_t>(rk)]) v = F.mul(inv, v);
        for (int r = 0; r < 2; ++r) {
            if (r == rk) continue;
            uint32_t m = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (m == 0) continue;
            for (int j = 0; j < 4; ++j)
                rows[static_cast<size_t>(r)][static_cast<size_t>(j)] ^=
                    F.mul(m, rows[static_cast<size_t>(rk)][static_cast<size_t>(j)]);
        }
        ++rk;
    }
    rows.resize(static_cast<size_t>(rk));
    return rows;
}

/// Solutions (t,u) of t*p + u*r = target (coefficientwise in L^4), returned as
/// an affine set base + s*dir, s in L (dir = (0,0) means a unique solution).
struct ComboSolutions {
    bool any = false;
    uint32_t t0 = 0, u0 = 0;
    uint32_t dt = 0, du = 0;
};

inline ComboSolutions solve_combo(const QProjectivePoly& p, const QProjectivePoly& r,
                                  const QProjectivePoly& target) {
    const Field& F = *p.ctx->field;
    std::array<uint32_t, 4> pv{p.a, p.b, p.c, p.d}, rv{r.a, r.b, r.c, r.d},
        tv{target.a, target.b, target.c, target.d};
    // Find two coordinates giving an invertible 2x2 system, if the rank is 2.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            uint32_t det = F.mul(pv[static_cast<size_t>(i)], rv[static_cast<size_t>(j)]) ^
                           F.mul(pv[static_cast<size_t>(j)], rv[static_cast<size_t>(i)]);
            if (det == 0) continue;
            uint32_t di = F.inv(det);
            uint32_t t = F.mul(di, F.mul(tv[static_cast<size_t>(i)], rv[static_cast<size_t>(j)]) ^
                                       F.mul(tv[static_cast<size_t>(j)], rv[static_cast<size_t>(i)]));
            uint32_t u = F.mul(di, F.mul(pv[static_cast<size_t>(i)], tv[static_cast<size_t>(j)]) ^
                                       F.mul(pv[static_cast<size_t>(j)], tv[static_cast<size_t>(i)]));
            QProjectivePoly chk = poly_add(poly_scale(t, p), poly_scale(u, r));
            if (chk == target) return {true, t, u, 0, 0};
            return {};
        }
    // Rank <= 1: p and r are proportional (or zero).
    if (!p.is_zero()) {
        // r = lam * p; need (t + lam*u) p = target, i.e. target = mu * p.
        uint32_t lam = 0, mu = 0;
        bool ok = true, tok = true;
        for (int i = 0; i < 4 && (ok || tok); ++i) {
            if (pv[static_cast<size_t>(i)] == 0) {
                if (rv[static_cast<size_t>(i)] != 0) ok = false;
                if (tv[static_cast<size_t>(i)] != 0) tok = false;
                continue;
            }
            uint32_t lr = F.div(rv[static_cast<size_t>(i)], pv[static_cast<size_t>(i)]);
            uint32_t mr = F.div(tv[static_cast<size_t>(i)], pv[static_cast<size_t>(i)]);
            if (lam == 0 && lr != 0) lam = lr; else if (lr != lam) ok = false;
            if (mu == 0 && mr != 0) mu = mr; else if (mr != mu) tok = false;
        }
        if (!ok || !tok) return {};
        return {true, mu, 0, lam, 1};  // t = mu + lam*s, u = s
    }
    if (!r.is_zero()) {
        uint32_t mu = 0;
        for (int i = 0; i < 4; ++i) {
            if (rv[static_cast<size_t>(i)] == 0) {
                if (tv[static_cast<size_t>(i)] != 0) return {};
                continue;
            }
            uint32_t mr = F.div(tv[static_cast<size_t>(i)], rv[static_cast<size_t>(i)]);
            if (mu == 0 && mr != 0) mu = mr; else if (mr != mu) return {};
        }
        return {true, 0, mu, 1, 0};  // t free
    }
    if (!target.is_zero()) return {};
    return {true, 0, 0, 0, 0};  // degenerate zero pencil; handled by the caller
}

}  // namespace detail

/// Decides GLEQ equivalence F' = L1 o F o L2 and returns witnesses. Searches
/// right matrices and matches the 2-dimensional pencil spans; L1 is recovered
/// as the change of basis. The pencil_signature pre-filter rejects most
/// non-equivalent pairs without any search.
inline std::optional<std::pair<GLMatrix, GLMatrix>> gleq_equivalent(const BiprojectiveFunction& F,
                                                                    const BiprojectiveFunction& G) {
    if (!(F.ctx() == G.ctx())) throw std::invalid_argument("gleq_equivalent: context mismatch");
    const Field& Fl = *F.ctx().field;
    uint32_t n = static_cast<uint32_t>(Fl.order());

    bool fzero = F.f.is_zero() && F.g.is_zero();
    bool gzero = G.f.is_zero() && G.g.is_zero();
    if (fzero || gzero) {
        if (fzero && gzero) return std::make_pair(GLMatrix::identity(), GLMatrix::identity());
        return std::nullopt;
    }
    if (pencil_signature(F) != pencil_signature(G)) return std::nullopt;

    auto target_span = detail::span_echelon(G.f, G.g);

    auto try_right = [&](const GLMatrix& L2) -> std::optional<std::pair<GLMatrix, GLMatrix>> {
        if (L2.det(Fl) == 0) return std::nullopt;
        QProjectivePoly f2 = apply_action(F.f, 1, L2);
        QProjectivePoly g2 = apply_action(F.g, 1, L2);
        if (detail::span_echelon(f2, g2) != target_span) return std::nullopt;
        auto sf = detail::solve_combo(f2, g2, G.f);
        auto sg = detail::solve_combo(f2, g2, G.g);
        if (!sf.any || !sg.any) return std::nullopt;
        uint32_t sf_steps = (sf.dt | sf.du) ? n : 1;
        uint32_t sg_steps = (sg.dt | sg.du) ? n : 1;
        for (uint32_t i = 0; i < sf_steps; ++i)
            for (uint32_t j = 0; j < sg_steps; ++j) {
                GLMatrix L1{sf.t0 ^ Fl.mul(i, sf.dt), sf.u0 ^ Fl.mul(i, sf.du),
                            sg.t0 ^ Fl.mul(j, sg.dt), sg.u0 ^ Fl.mul(j, sg.du)};
                if (L1.det(Fl) == 0) continue;
                if (act(F, L1, L2) == G) return std::make_pair(L1, L2);
            }
        return std::nullopt;
    };

    for (uint32_t t = 0; t < n; ++t)
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = 0; v < n; ++v)
                for (uint32_t w = 0; w < n; ++w)
                    if (auto r = try_right({t, u, v, w})) return r;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The quadratic extension L(xi), xi^2 = xi + nu, and the Gold constructions.

struct QuadraticExtension {
    const Field* field;
    uint32_t nu;

    explicit QuadraticExtension(const Field& f) : field(&f), nu(0) {
        for (uint32_t x = 1; x < f.order(); ++x)
            if (f.trace(x) == 1) { nu = x; break; }
        if (nu == 0 && f.trace(1) != 1) throw std::logic_error("QuadraticExtension: no trace-1 element");
        if (nu == 0) nu = 1;
    }
    QuadraticExtension(const Field& f, uint32_t nu_) : field(&f), nu(nu_) {
        if (f.trace(nu) != 1)
            throw std::invalid_argument("QuadraticExtension: x^2 + x + nu must be irreducible (trace(nu) = 1)");
    }

    /// Element h*xi + lo of L(xi).
    struct Elem {
        uint32_t hi, lo;
        bool operator==(const Elem&) const = default;
    };

    Elem add(Elem a, Elem b) const { return {a.hi ^ b.hi, a.lo ^ b.lo}; }

    Elem mul(Elem a, Elem b) const {
        const Field& F = *field;
        uint32_t hh = F.mul(a.hi, b.hi);
        return {hh ^ F.mul(a.hi, b.lo) ^ F.mul(a.lo, b.hi), F.mul(nu, hh) ^ F.mul(a.lo, b.lo)};
    }

    Elem sqr(Elem a) const {
        const Field& F = *field;
        uint32_t h2 = F.sqr(a.hi);
        return {h2, F.mul(nu, h2) ^ F.sqr(a.lo)};
    }

    Elem pow2k(Elem a, int k) const {
        for (int i = 0; i < k; ++i) a = sqr(a);
        return a;
    }

    Elem pow(Elem a, uint64_t e) const {
        Elem r{0, 1};
        while (e) {
            if (e & 1) r = mul(r, a);
            a = sqr(a);
            e >>= 1;
        }
        return r;
    }

    /// xi^{2^k} = A xi + B.
    Elem frob_of_xi(int k) const { return pow2k(Elem{1, 0}, k); }
};

enum class GoldExponent { q_plus_1, q_plus_r };

/// The Gold map X -> X^{q+1} or X -> X^{q+r} (r = 2^l) on L(xi), written in
/// coordinates X = x xi + y as a pair of (q,q)-biprojective components
/// (hi-part, lo-part). Expanded symbolically from xi^q = A xi + B and
/// xi^r = xi + 1 (the conjugate root of x^2 + x + nu).
inline BiprojectiveFunction gold(const Subfield& ctx, GoldExponent e,
                                 std::optional<uint32_t> nu_override = std::nullopt) {
    const Field& F = *ctx.field;
    QuadraticExtension ext = nu_override ? QuadraticExtension(F, *nu_override) : QuadraticExtension(F);
    auto xiq = ext.frob_of_xi(ctx.k);
    uint32_t A = xiq.hi, B = xiq.lo;
    // X^q = (A x^q) xi + (B x^q + y^q): a q-form pair (coeffs of x^q, y^q).
    std::array<uint32_t, 2> h1{A, 0}, l1{B, 1};
    // Second factor: X itself, or X^r = x(xi + 1) + y: a 1-form pair (coeffs of x, y).
    std::array<uint32_t, 2> h2, l2;
    if (e == GoldExponent::q_plus_1) {
        h2 = {1, 0};
        l2 = {0, 1};
    } else {
        h2 = {1, 0};
        l2 = {1, 1};
    }
    // (alpha x^q + beta y^q)(gamma x + delta y) in the basis
    // (x^{q+1}, x^q y, x y^q, y^{q+1}).
    auto prod = [&](std::array<uint32_t, 2> qf, std::array<uint32_t, 2> lf) {
        return std::array<uint32_t, 4>{F.mul(qf[0], lf[0]), F.mul(qf[0], lf[1]),
                                       F.mul(qf[1], lf[0]), F.mul(qf[1], lf[1])};
    };
    auto add4 = [](std::array<uint32_t, 4> x, std::array<uint32_t, 4> y) {
        return std::array<uint32_t, 4>{x[0] ^ y[0], x[1] ^ y[1], x[2] ^ y[2], x[3] ^ y[3]};
    };
    auto scale4 = [&](uint32_t s, std::array<uint32_t, 4> x) {
        return std::array<uint32_t, 4>{F.mul(s, x[0]), F.mul(s, x[1]), F.mul(s, x[2]), F.mul(s, x[3])};
    };
    // (h1 xi + l1)(h2 xi + l2) = (h1h2 + h1l2 + h2l1) xi + (nu h1h2 + l1l2).
    auto hh = prod(h1, h2);
    auto hi = add4(add4(hh, prod(h1, l2)), prod(l1, h2));
    auto lo = add4(scale4(ext.nu, hh), prod(l1, l2));
    return {QProjectivePoly{hi[0], hi[1], hi[2], hi[3], ctx},
            QProjectivePoly{lo[0], lo[1], lo[2], lo[3], ctx}};
}

/// The Kim kappa family over GF(64) = GF(8) x GF(8):
/// F = ((0,0,1,0)_2, (1,b1,0,d1)_2), APN exactly when d1/b1^3 is a cube-class
/// generator conjugate (d1/b1^3 in {w, w^2, w^4}). Defaults: b1 = 1, d1 = w.
inline BiprojectiveFunction kappa(const Subfield& ctx, std::optional<uint32_t> b1 = std::nullopt,
                                  std::optional<uint32_t> d1 = std::nullopt) {
    if (ctx.l() != 3 || ctx.k != 1)
        throw std::invalid_argument("kappa: defined for l = 3, k = 1 only");
    uint32_t b = b1.value_or(1);
    uint32_t d = d1.value_or(ctx.field->generator());
    return {QProjectivePoly{0, 0, 1, 0, ctx}, QProjectivePoly{1, b, 0, d, ctx}};
}

/// The (generalized) butterfly pair
/// ((x+ay)^{q+1} + (by)^{q+1}, (y+ax)^{q+1} + (bx)^{q+1}).
inline BiprojectiveFunction butterfly(const Subfield& ctx, uint32_t a, uint32_t b) {
    if (ctx.l() % 2 == 0) throw std::invalid_argument("butterfly: requires odd l");
    if (a == 0 || b == 0) throw std::invalid_argument("butterfly: requires a, b nonzero");
    const Field& F = *ctx.field;
    uint32_t aq = ctx.powq[a], e = F.mul(a, aq) ^ F.mul(b, ctx.powq[b]);
    return {QProjectivePoly{1, a, aq, e, ctx}, QProjectivePoly{e, aq, a, 1, ctx}};
}

/// Conjugation by the field Frobenius, sigma^j o F o sigma^{-j}: squares every
/// coefficient j times. An F_2-linear equivalence of L x L that preserves the
/// (q,q)-biprojective shape but lies outside GL(2,L) x GL(2,L).
inline BiprojectiveFunction frobenius_twist(const BiprojectiveFunction& F, int j) {
    const Field& Fl = *F.ctx().field;
    const Subfield& ctx = F.ctx();
    auto tw = [&](uint32_t v) { return Fl.frob(v, j); };
    return {QProjectivePoly{tw(F.f.a), tw(F.f.b), tw(F.f.c), tw(F.f.d), ctx},
            QProjectivePoly{tw(F.g.a), tw(F.g.b), tw(F.g.c), tw(F.g.d), ctx}};
}

/// Verifies F(cx, cy) = c^{q+1} F(x,y); exhaustive when 2^{3l} is small,
/// randomized otherwise.
inline bool subfield_property_check(const BiprojectiveFunction& F, uint64_t max_checks = 1u << 18) {
    const Subfield& ctx = F.ctx();
    const Field& Fl = *ctx.field;
    uint32_t n = static_cast<uint32_t>(Fl.order());
    auto check = [&](uint32_t c, uint32_t x, uint32_t y) {
        uint32_t s = Fl.mul(ctx.powq[c], c);
        auto [fv, gv] = F.eval(x, y);
        auto [fc, gc] = F.eval(Fl.mul(c, x), Fl.mul(c, y));
        return fc == Fl.mul(s, fv) && gc == Fl.mul(s, gv);
    };
    uint64_t total = uint64_t(n) * n * n;
    if (total <= max_checks) {
        for (uint32_t c = 0; c < n; ++c)
            for (uint32_t x = 0; x < n; ++x)
                for (uint32_t y = 0; y < n; ++y)
                    if (!check(c, x, y)) return false;
        return true;
    }
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto rnd = [&] {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        return state;
    };
    for (uint64_t i = 0; i < max_checks; ++i) {
        uint64_t r = rnd();
        if (!check(static_cast<uint32_t>(r % n), static_cast<uint32_t>((r >> 20) % n),
                   static_cast<uint32_t>((r >> 40) % n)))
            return false;
    }
    return true;
}

/// Same homogeneity check against an arbitrary map L x L -> L x L (test hook
/// for injecting deliberately non-homogeneous functions).
inline bool subfield_property_check(
    const Subfield& ctx, const std::function<std::pair<uint32_t, uint32_t>(uint32_t, uint32_t)>& F) {
    const Field& Fl = *ctx.field;
    uint32_t n = static_cast<uint32_t>(Fl.order());
    for (uint32_t c = 0; c < n; ++c)
        for (uint32_t x = 0; x < n; ++x)
            for (uint32_t y = 0; y < n; ++y) {
                uint32_t s = Fl.mul(ctx.powq[c], c);
                auto [fv, gv] = F(x, y);
                auto [fc, gc] = F(Fl.mul(c, x), Fl.mul(c, y));
                if (fc != Fl.mul(s, fv) || gc != Fl.mul(s, gv)) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// Function literals: ((a0,b0,c0,d0),(a1,b1,c1,d1))_q@l with hex coefficients.

inline std::string to_literal(const BiprojectiveFunction& F) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "((%x,%x,%x,%x),(%x,%x,%x,%x))_%llu@%d", F.f.a, F.f.b, F.f.c,
                  F.f.d, F.g.a, F.g.b, F.g.c, F.g.d,
                  static_cast<unsigned long long>(F.ctx().q), F.ctx().l());
    return buf;
}

inline BiprojectiveFunction parse_function_literal(std::string_view s, const Subfield& ctx) {
    detail::LiteralCursor cur{s};
    cur.expect('(');
    detail::RawPoly r0{};
    cur.expect('(');
    r0.a = cur.hex(); cur.expect(','); r0.b = cur.hex(); cur.expect(',');
    r0.c = cur.hex(); cur.expect(','); r0.d = cur.hex(); cur.expect(')');
    cur.expect(',');
    detail::RawPoly r1{};
    cur.expect('(');
    r1.a = cur.hex(); cur.expect(','); r1.b = cur.hex(); cur.expect(',');
    r1.c = cur.hex(); cur.expect(','); r1.d = cur.hex(); cur.expect(')');
    cur.expect(')');
    cur.expect('_');
    r0.q = r1.q = cur.dec();
    cur.expect('@');
    r0.l = r1.l = static_cast<int>(cur.dec());
    cur.done();
    return {detail::raw_to_poly(r0, ctx, cur), detail::raw_to_poly(r1, ctx, cur)};
}

}  // namespace biproj
