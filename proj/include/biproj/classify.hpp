#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "biproj/biprojective.hpp"
#include "biproj/gf2_linalg.hpp"
#include "biproj/gf2l.hpp"
#include "biproj/projective.hpp"

namespace biproj {

struct ClassifyOptions {
    int threads = 0;              // 0: BIPROJ_THREADS env var, else hardware concurrency
    std::string checkpoint_path;  // empty: no checkpointing
    bool full_space = false;      // scan all f in V instead of the representative set (l = 3 only)
    int max_l = 5;                // resource guard; raise explicitly for larger runs
    uint64_t max_shards = 0;      // stop after this many shards (0 = run to completion)
    uint64_t checkpoint_every = 8;  // shards between checkpoint writes
};

struct ClassEntry {
    std::string anchor;  // "G_{q+1}", "G_{q+r}", "kappa", or "unanchored"
    uint64_t member_count = 0;
    BiprojectiveFunction sample;
    // act(sample, L1, L2) == frobenius_twist(anchor fn, anchor_twist). The twist
    // accounts for Frobenius-conjugate family members (e.g. the three Kim
    // functions), which are GL(2l,2)-equivalent but not GL(2,L)xGL(2,L)-related.
    std::optional<std::pair<GLMatrix, GLMatrix>> witness;
    int anchor_twist = 0;
};

struct ClassificationReport {
    int l = 0, k = 0;
    bool coprime = true;
    bool complete = true;  // false when stopped early by max_shards
    bool resumed = false;
    uint64_t candidates_tested = 0;
    uint64_t apn_pairs_found = 0;
    std::vector<std::pair<uint32_t, uint32_t>> survivors;  // (f index, g code); sorted
    std::vector<ClassEntry> classes;
    bool theorem_agrees = false;
    std::string verdict;
    double seconds = 0;  // runtime stat; excluded from canonical serializations
};

namespace detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BIPROJ_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

inline QProjectivePoly poly_from_code(uint32_t code, const Subfield& ctx) {
    int l = ctx.l();
    uint32_t mask = (uint32_t(1) << l) - 1;
    return {code & mask, (code >> l) & mask, (code >> (2 * l)) & mask, (code >> (3 * l)) & mask,
            ctx};
}

inline uint32_t poly_to_code(const QProjectivePoly& f) {
    int l = f.ctx->l();
    return f.a | (f.b << l) | (f.c << (2 * l)) | (f.d << (3 * l));
}

/// Per-f precomputation for the APN scan: for every u (order 0, oo, 1..n-1)
/// the 2l f-side column words of the stacked Delta matrix.
struct FScanData {
    std::vector<std::vector<uint32_t>> cols;  // [u_index][j], j < 2l
};

inline FScanData build_f_scan_data(const QProjectivePoly& f) {
    const Subfield& ctx = *f.ctx;
    const Field& F = *ctx.field;
    int l = ctx.l();
    uint32_t n = static_cast<uint32_t>(F.order());
    FScanData fd;
    fd.cols.resize(n + 1);
    auto fill = [&](size_t ui, ProjPoint u) {
        DeltaCoeffs dc = delta_coeffs(f, u);
        auto& c = fd.cols[ui];
        c.resize(static_cast<size_t>(2 * l));
        for (int j = 0; j < l; ++j) {
            uint32_t e = uint32_t(1) << j, eq = ctx.powq[e];
            c[static_cast<size_t>(j)] = F.mul(dc.cxq, eq) ^ F.mul(dc.cx, e);
            c[static_cast<size_t>(l + j)] = F.mul(dc.cyq, eq) ^ F.mul(dc.cy, e);
        }
    };
    fill(0, ProjPoint::finite(0));
    fill(1, ProjPoint::infinity());
    for (uint32_t u = 1; u < n; ++u) fill(1 + u, ProjPoint::finite(u));
    return fd;
}

/// Fast joint-kernel APN test against a precomputed f side. Same criterion as
/// is_apn_projective: rank exactly 2l-1 at every u.
inline bool apn_scan_test(const Subfield& ctx, const FScanData& fd, uint32_t a1, uint32_t b1,
                          uint32_t c1, uint32_t d1) {
    const Field& F = *ctx.field;
    int l = ctx.l();
    uint32_t n = static_cast<uint32_t>(F.order());
    auto survives = [&](size_t ui, uint32_t A, uint32_t B, uint32_t C, uint32_t D) {
        const auto& fc = fd.cols[ui];
        GaussianRank gr;
        int dependent = 0;
        for (int j = 0; j < l; ++j) {
            uint32_t e = uint32_t(1) << j, eq = ctx.powq[e];
            uint64_t col = uint64_t(fc[static_cast<size_t>(j)]) |
                           (uint64_t(F.mul(A, eq) ^ F.mul(B, e)) << l);
            if (!gr.add(col) && ++dependent > 1) return false;
        }
        for (int j = 0; j < l; ++j) {
            uint32_t e = uint32_t(1) << j, eq = ctx.powq[e];
            uint64_t col = uint64_t(fc[static_cast<size_t>(l + j)]) |
                           (uint64_t(F.mul(C, eq) ^ F.mul(D, e)) << l);
            if (!gr.add(col) && ++dependent > 1) return false;
        }
        return dependent == 1;
    };
    if (!survives(0, b1, c1, d1, d1)) return false;  // u = 0
    if (!survives(1, a1, a1, c1, b1)) return false;  // u = oo
    for (uint32_t u = 1; u < n; ++u) {
        uint32_t uq = ctx.powq[u];
        if (!survives(1 + u, F.mul(a1, u) ^ b1, F.mul(a1, uq) ^ c1, F.mul(c1, u) ^ d1,
                      F.mul(b1, uq) ^ d1))
            return false;
    }
    return true;
}

// --------------------------- checkpoint file ---------------------------

struct CheckpointState {
    std::set<uint64_t> completed;
    std::vector<std::pair<uint32_t, uint32_t>> survivors;
};

inline void write_checkpoint(const std::string& path, int l, int k, bool full, bool gcd_mode,
                             uint64_t shard_size, uint64_t shards_total,
                             const CheckpointState& st) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["l"] = l;
    j["k"] = k;
    j["full"] = full;
    j["gcd_mode"] = gcd_mode;
    j["shard_size"] = shard_size;
    j["shards_total"] = shards_total;
    j["completed"] = st.completed;
    nlohmann::ordered_json surv = nlohmann::ordered_json::array();
    for (auto [fi, g] : st.survivors) surv.push_back({fi, g});
    j["survivors"] = std::move(surv);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << j.dump();
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename checkpoint into place: " + path);
}

inline std::optional<CheckpointState> read_checkpoint(const std::string& path, int l, int k,
                                                      bool full, bool gcd_mode,
                                                      uint64_t shard_size, uint64_t shards_total) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception&) {
        throw std::runtime_error("corrupt checkpoint file: " + path);
    }
    if (j.value("version", 0) != 1 || j.value("l", -1) != l || j.value("k", -1) != k ||
        j.value("full", false) != full || j.value("gcd_mode", false) != gcd_mode ||
        j.value("shard_size", uint64_t(0)) != shard_size ||
        j.value("shards_total", uint64_t(0)) != shards_total)
        throw std::runtime_error("checkpoint parameters do not match this run: " + path);
    CheckpointState st;
    for (const auto& c : j["completed"]) st.completed.insert(c.get<uint64_t>());
    for (const auto& s : j["survivors"])
        st.survivors.emplace_back(s[0].get<uint32_t>(), s[1].get<uint32_t>());
    return st;
}

/// Generic sharded parallel scan with checkpoint/resume. `run_shard` tests the
/// half-open range of work indices and appends (f_index, g_code) survivors.
template <class ShardFn>
inline void sharded_scan(uint64_t work_total, const ClassifyOptions& opt, int l, int k, bool full,
                         bool gcd_mode, ClassificationReport& rep, ShardFn&& run_shard) {
    constexpr uint64_t kShardSize = 65536;
    uint64_t shards_total = (work_total + kShardSize - 1) / kShardSize;

    CheckpointState st;
    if (!opt.checkpoint_path.empty()) {
        if (auto prev = read_checkpoint(opt.checkpoint_path, l, k, full, gcd_mode, kShardSize,
                                        shards_total)) {
            st = std::move(*prev);
            rep.resumed = true;
        }
    }

    std::vector<uint64_t> pending;
    for (uint64_t s = 0; s < shards_total; ++s)
        if (!st.completed.count(s)) pending.push_back(s);
    uint64_t budget = opt.max_shards ? std::min<uint64_t>(opt.max_shards, pending.size())
                                     : pending.size();

    std::atomic<uint64_t> next{0};
    std::mutex merge_mtx;
    uint64_t since_checkpoint = 0;
    std::atomic<uint64_t> tested{0};

    auto worker = [&] {
        std::vector<std::pair<uint32_t, uint32_t>> local;
        for (;;) {
            uint64_t i = next.fetch_add(1);
            if (i >= budget) break;
            uint64_t s = pending[i];
            uint64_t lo = s * kShardSize, hi = std::min(work_total, lo + kShardSize);
            local.clear();
            run_shard(lo, hi, local);
            tested += hi - lo;
            std::lock_guard<std::mutex> g(merge_mtx);
            st.survivors.insert(st.survivors.end(), local.begin(), local.end());
            st.completed.insert(s);
            if (!opt.checkpoint_path.empty() && ++since_checkpoint >= opt.checkpoint_every) {
                since_checkpoint = 0;
                write_checkpoint(opt.checkpoint_path, l, k, full, gcd_mode, kShardSize,
                                 shards_total, st);
            }
        }
    };

    int nthreads = resolve_threads(opt.threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    rep.complete = st.completed.size() == shards_total;
    if (!opt.checkpoint_path.empty())
        write_checkpoint(opt.checkpoint_path, l, k, full, gcd_mode, kShardSize, shards_total, st);

    std::sort(st.survivors.begin(), st.survivors.end());
    rep.survivors = std::move(st.survivors);
    rep.candidates_tested = tested.load();
}

}  // namespace detail

/// The named anchor families expected by the classification at (k,l).
inline std::vector<std::pair<std::string, BiprojectiveFunction>> anchor_families(
    const Subfield& ctx) {
    std::vector<std::pair<std::string, BiprojectiveFunction>> anchors;
    auto g1 = gold(ctx, GoldExponent::q_plus_1);
    if (is_apn_projective(g1)) anchors.emplace_back("G_{q+1}", g1);
    auto gr = gold(ctx, GoldExponent::q_plus_r);
    if (is_apn_projective(gr)) anchors.emplace_back("G_{q+r}", gr);
    if (ctx.l() == 3) {
        // The Kim-type family ((0,0,1,0), (1,b1,0,d1)); search the first APN member.
        const Field& F = *ctx.field;
        for (uint32_t b1 = 1; b1 < F.order(); ++b1) {
            bool found = false;
            for (uint32_t d1 = 1; d1 < F.order(); ++d1) {
                BiprojectiveFunction cand{QProjectivePoly{0, 0, 1, 0, ctx},
                                          QProjectivePoly{1, b1, 0, d1, ctx}};
                if (is_apn_projective(cand)) {
                    anchors.emplace_back("kappa", cand);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return anchors;
}

/// Class labels Theorem 1.1 predicts for (k,l).
inline std::set<std::string> expected_classes(int k, int l) {
    if (std::gcd(k, l) != 1) return {};
    std::set<std::string> s;
    if (l % 2 == 0) {
        s.insert("G_{q+1}");
        s.insert("G_{q+r}");
    } else {
        s.insert(k % 2 == 1 ? "G_{q+1}" : "G_{q+r}");
        if (l == 3) s.insert("kappa");
    }
    return s;
}

/// The exhaustive classification runner. Coprime (k,l): scan f over the
/// representative set (or all of V with --full), g over all of V, test APN,
/// bucket survivors by pencil signature, and match buckets to the anchors via
/// GLEQ. gcd(k,l) > 1: confirm emptiness by scanning the u = 0 joint kernel
/// over all (b0,c0,d0,b1,c1,d1) — it is independent of a0, a1, so this covers
/// the whole space.
inline ClassificationReport classify(const Subfield& ctx, const ClassifyOptions& opt = {}) {
    const Field& F = *ctx.field;
    int l = ctx.l(), k = ctx.k;
    uint32_t n = static_cast<uint32_t>(F.order());
    ClassificationReport rep;
    rep.l = l;
    rep.k = k;
    rep.coprime = ctx.coprime();

    if (l > opt.max_l)
        throw std::invalid_argument("classify: l exceeds the resource cap (raise max_l explicitly)");
    if (opt.full_space && l != 3)
        throw std::invalid_argument("classify: full-space scan is guarded to l = 3");

    if (!rep.coprime) {
        // gcd obstruction scan. l capped lower: the domain is 2^{6l}.
        if (l > 4)
            throw std::invalid_argument("classify: gcd > 1 emptiness scan is capped at l <= 4");
        uint64_t work = uint64_t(1) << (6 * l);
        detail::sharded_scan(
            work, opt, l, k, false, true, rep,
            [&](uint64_t lo, uint64_t hi, std::vector<std::pair<uint32_t, uint32_t>>& out) {
                GaussianRank gr;
                for (uint64_t code = lo; code < hi; ++code) {
                    uint32_t b0 = static_cast<uint32_t>(code) & (n - 1);
                    uint32_t c0 = static_cast<uint32_t>(code >> l) & (n - 1);
                    uint32_t d0 = static_cast<uint32_t>(code >> (2 * l)) & (n - 1);
                    uint32_t b1 = static_cast<uint32_t>(code >> (3 * l)) & (n - 1);
                    uint32_t c1 = static_cast<uint32_t>(code >> (4 * l)) & (n - 1);
                    uint32_t d1 = static_cast<uint32_t>(code >> (5 * l)) & (n - 1);
                    gr.reset();
                    int dependent = 0;
                    bool small_kernel = true;
                    for (int j = 0; j < 2 * l && small_kernel; ++j) {
                        uint32_t e = uint32_t(1) << (j < l ? j : j - l), eq = ctx.powq[e];
                        uint32_t fo, go;
                        if (j < l) {
                            fo = F.mul(b0, eq) ^ F.mul(c0, e);
                            go = F.mul(b1, eq) ^ F.mul(c1, e);
                        } else {
                            fo = F.mul(d0, eq) ^ F.mul(d0, e);
                            go = F.mul(d1, eq) ^ F.mul(d1, e);
                        }
                        if (!gr.add(uint64_t(fo) | (uint64_t(go) << l)) && ++dependent > 1)
                            small_kernel = false;
                    }
                    if (small_kernel && dependent == 1)
                        out.emplace_back(static_cast<uint32_t>(code >> (3 * l)),
                                         static_cast<uint32_t>(code & ((uint64_t(1) << (3 * l)) - 1)));
                }
            });
        // Any survivor would still need all (a0, a1) completions to be APN;
        // the gcd proposition predicts there are none at u = 0 already.
        rep.apn_pairs_found = 0;
        for (auto [hi_code, lo_code] : rep.survivors) {
            uint32_t b0 = lo_code & (n - 1), c0 = (lo_code >> l) & (n - 1),
                     d0 = (lo_code >> (2 * l)) & (n - 1);
            uint32_t b1 = hi_code & (n - 1), c1 = (hi_code >> l) & (n - 1),
                     d1 = (hi_code >> (2 * l)) & (n - 1);
            for (uint32_t a0 = 0; a0 < n; ++a0)
                for (uint32_t a1 = 0; a1 < n; ++a1) {
                    BiprojectiveFunction cand{QProjectivePoly{a0, b0, c0, d0, ctx},
                                              QProjectivePoly{a1, b1, c1, d1, ctx}};
                    if (is_apn_projective(cand)) ++rep.apn_pairs_found;
                }
        }
        rep.theorem_agrees = rep.complete && rep.apn_pairs_found == 0;
        rep.verdict = rep.theorem_agrees
                          ? "gcd(k,l) > 1: no APN function exists, as predicted"
                          : (rep.complete ? "gcd(k,l) > 1 but APN candidates found: DISCREPANCY"
                                          : "scan incomplete");
        return rep;
    }

    // Coprime scan over f-list x V.
    std::vector<QProjectivePoly> flist;
    if (opt.full_space) {
        for (uint32_t code = 0; code < (uint32_t(1) << (4 * l)); ++code)
            flist.push_back(detail::poly_from_code(code, ctx));
    } else {
        flist = representative_set(ctx);
    }

    std::vector<detail::FScanData> fdata(flist.size());
    for (size_t i = 0; i < flist.size(); ++i) fdata[i] = detail::build_f_scan_data(flist[i]);

    uint64_t gspace = uint64_t(1) << (4 * l);
    uint64_t work = flist.size() * gspace;
    detail::sharded_scan(
        work, opt, l, k, opt.full_space, false, rep,
        [&](uint64_t lo, uint64_t hi, std::vector<std::pair<uint32_t, uint32_t>>& out) {
            for (uint64_t idx = lo; idx < hi; ++idx) {
                uint32_t fi = static_cast<uint32_t>(idx / gspace);
                uint32_t g = static_cast<uint32_t>(idx % gspace);
                uint32_t a1 = g & (n - 1), b1 = (g >> l) & (n - 1), c1 = (g >> (2 * l)) & (n - 1),
                         d1 = (g >> (3 * l)) & (n - 1);
                if (detail::apn_scan_test(ctx, fdata[fi], a1, b1, c1, d1)) out.emplace_back(fi, g);
            }
        });

    rep.apn_pairs_found = rep.survivors.size();
    if (!rep.complete) {
        rep.verdict = "scan incomplete (stopped at shard budget); resume from checkpoint";
        return rep;
    }

    // Bucket survivors by pencil signature; GLEQ-match bucket samples to anchors.
    auto anchors = anchor_families(ctx);
    std::map<PencilSignature, std::vector<size_t>> buckets;
    for (size_t i = 0; i < rep.survivors.size(); ++i) {
        auto [fi, g] = rep.survivors[i];
        BiprojectiveFunction Fn{flist[fi], detail::poly_from_code(g, ctx)};
        buckets[pencil_signature(Fn)].push_back(i);
    }

    std::map<std::string, ClassEntry> by_anchor;
    bool all_anchored = true;
    auto match_one = [&](size_t mi, std::string& label,
                         std::optional<std::pair<GLMatrix, GLMatrix>>& wit, int& twist) {
        auto [fi, g] = rep.survivors[mi];
        BiprojectiveFunction Fn{flist[fi], detail::poly_from_code(g, ctx)};
        label = "unanchored";
        for (auto& [name, anchor] : anchors) {
            for (int j = 0; j < l && label == "unanchored"; ++j) {
                if (auto w = gleq_equivalent(Fn, frobenius_twist(anchor, j))) {
                    label = name;
                    wit = w;
                    twist = j;
                }
            }
            if (label != "unanchored") break;
        }
        return Fn;
    };
    auto credit = [&](const std::string& label, const BiprojectiveFunction& Fn,
                      const std::optional<std::pair<GLMatrix, GLMatrix>>& wit, int twist,
                      uint64_t count) {
        if (label == "unanchored") all_anchored = false;
        auto& entry = by_anchor[label];
        if (entry.member_count == 0) {
            entry.anchor = label;
            entry.sample = Fn;
            entry.witness = wit;
            entry.anchor_twist = twist;
        }
        entry.member_count += count;
    };
    for (auto& [sig, members] : buckets) {
        // Probe a few spread-out members, guarding against distinct classes
        // sharing a signature bucket; if the probes disagree, fall back to
        // matching every member individually.
        size_t probes = std::min<size_t>(members.size(), 5);
        std::vector<std::string> labels(probes);
        std::vector<std::optional<std::pair<GLMatrix, GLMatrix>>> wits(probes);
        std::vector<int> twists(probes, 0);
        std::vector<BiprojectiveFunction> fns;
        for (size_t p = 0; p < probes; ++p) {
            size_t mi = members[probes > 1 ? p * (members.size() - 1) / (probes - 1) : 0];
            fns.push_back(match_one(mi, labels[p], wits[p], twists[p]));
        }
        bool uniform = std::all_of(labels.begin(), labels.end(),
                                   [&](const std::string& s) { return s == labels[0]; });
        if (uniform) {
            credit(labels[0], fns[0], wits[0], twists[0], members.size());
        } else {
            for (size_t mi : members) {
                std::string label;
                std::optional<std::pair<GLMatrix, GLMatrix>> wit;
                int twist = 0;
                auto Fn = match_one(mi, label, wit, twist);
                credit(label, Fn, wit, twist, 1);
            }
        }
    }
    for (auto& [name, entry] : by_anchor) rep.classes.push_back(entry);

    std::set<std::string> found;
    for (auto& c : rep.classes) found.insert(c.anchor);
    auto expected = expected_classes(k, l);
    rep.theorem_agrees = all_anchored && found == expected &&
                         (expected.empty() ? rep.apn_pairs_found == 0 : rep.apn_pairs_found > 0);
    if (rep.theorem_agrees) {
        rep.verdict = "class set matches Theorem 1.1";
    } else {
        rep.verdict = "class set DISAGREES with Theorem 1.1: found {";
        for (auto& f : found) rep.verdict += " " + f;
        rep.verdict += " }, expected {";
        for (auto& e : expected) rep.verdict += " " + e;
        rep.verdict += " }";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Targeted sub-scans mirroring the case split of the classification proofs.

struct SubScanCase {
    std::string f_literal;
    uint64_t apn_partner_count = 0;
    bool as_expected = true;
};

struct SubScanReport {
    int l = 0, k = 0;
    std::vector<SubScanCase> cases;
    bool all_as_expected = true;
};

namespace detail {

inline uint64_t count_apn_partners(const QProjectivePoly& f,
                                   std::vector<uint32_t>* out_codes = nullptr) {
    const Subfield& ctx = *f.ctx;
    int l = ctx.l();
    uint32_t n = static_cast<uint32_t>(ctx.field->order());
    FScanData fd = build_f_scan_data(f);
    uint64_t count = 0;
    for (uint64_t g = 0; g < (uint64_t(1) << (4 * l)); ++g) {
        uint32_t a1 = static_cast<uint32_t>(g) & (n - 1), b1 = static_cast<uint32_t>(g >> l) & (n - 1),
                 c1 = static_cast<uint32_t>(g >> (2 * l)) & (n - 1),
                 d1 = static_cast<uint32_t>(g >> (3 * l)) & (n - 1);
        if (apn_scan_test(ctx, fd, a1, b1, c1, d1)) {
            ++count;
            if (out_codes) out_codes->push_back(static_cast<uint32_t>(g));
        }
    }
    return count;
}

}  // namespace detail

/// For every f in S = {(0,0,0,0),(0,0,0,1),(0,0,1,0)} u {(1,0,0,d0)}, count APN
/// partners g. Expected: zero everywhere for l > 3; at l = 3 the case
/// f = (0,0,1,0) carries the kappa family and is flagged as the known exception.
inline SubScanReport verify_s_cases(const Subfield& ctx) {
    if (!ctx.coprime()) throw std::invalid_argument("verify_s_cases: requires gcd(k,l) = 1");
    const Field& F = *ctx.field;
    SubScanReport rep;
    rep.l = ctx.l();
    rep.k = ctx.k;
    std::vector<QProjectivePoly> fs{{0, 0, 0, 0, ctx}, {0, 0, 0, 1, ctx}, {0, 0, 1, 0, ctx}};
    for (uint32_t d0 = 1; d0 < F.order(); ++d0) fs.push_back({1, 0, 0, d0, ctx});
    for (auto& f : fs) {
        SubScanCase c;
        c.f_literal = to_literal(f);
        c.apn_partner_count = detail::count_apn_partners(f);
        // The non-APN-ness of the S cases is an l > 3 statement; at l = 3 the
        // kappa family lives over f = (0,0,1,0) (and other S members pick up
        // partners from the same classes), so only the kappa presence is pinned.
        if (ctx.l() > 3)
            c.as_expected = c.apn_partner_count == 0;
        else
            c.as_expected = f == QProjectivePoly{0, 0, 1, 0, ctx} ? c.apn_partner_count > 0 : true;
        rep.all_as_expected = rep.all_as_expected && c.as_expected;
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

/// The parity-specific representatives: every APN survivor must be GLEQ to the
/// predicted Gold anchor(s); in the even case the fractional map f/g of each
/// survivor must also permute P^1(L).
inline SubScanReport verify_parity_cases(const Subfield& ctx) {
    if (!ctx.coprime()) throw std::invalid_argument("verify_parity_cases: requires gcd(k,l) = 1");
    SubScanReport rep;
    rep.l = ctx.l();
    rep.k = ctx.k;
    bool even = ctx.l() % 2 == 0;
    auto anchors = anchor_families(ctx);

    std::vector<QProjectivePoly> fs;
    if (even) {
        fs.push_back(stratum_representative(ctx, Stratum::Pi1));
    } else {
        fs.push_back({0, 1, 1, 0, ctx});
        fs.push_back(pi0_representative(ctx));
    }
    for (auto& f : fs) {
        SubScanCase c;
        c.f_literal = to_literal(f);
        std::vector<uint32_t> codes;
        c.apn_partner_count = detail::count_apn_partners(f, &codes);
        for (uint32_t g : codes) {
            BiprojectiveFunction Fn{f, detail::poly_from_code(g, ctx)};
            if (even && !is_fractional_permutation(Fn.f, Fn.g)) c.as_expected = false;
            bool anchored = false;
            for (auto& [name, anchor] : anchors) {
                for (int j = 0; j < ctx.l() && !anchored; ++j)
                    if (gleq_equivalent(Fn, frobenius_twist(anchor, j))) anchored = true;
                if (anchored) break;
            }
            if (!anchored) c.as_expected = false;
        }
        rep.all_as_expected = rep.all_as_expected && c.as_expected;
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

}  // namespace biproj
