#pragma once

// Module-level Buchberger over the ambient polynomial ring S.  Everything
// downstream (ideal GBs, normal forms, membership with coefficient lifts,
// syzygies, kernels over quotient rings) is driven by this one engine.
//
// A module element is a PolyVec: a vector of polynomials, one per free-module
// position.  Module terms (position, monomial) are ordered TOP-style with an
// optional block split: positions < split form the high block and dominate
// every term in positions >= split regardless of monomials.  Within a block,
// terms compare by the ring order on monomials, ties broken toward the
// smaller position.  GB elements whose leading term lies in the low block
// are entirely supported there, which gives the elimination property that
// makes syzygies and lifts fall out of one computation:
//
//   feed   g_i (+) e_{r+i}        for the tracked generators, and
//          h_j (+) 0              for untracked generators (e.g. I * e_k),
//   then reducing (v (+) 0) to (rem, w) certifies v = -sum w_i g_i modulo
//   the untracked span whenever rem = 0, and GB elements of the form (0, w)
//   generate the syzygies of the tracked generators relative to the
//   untracked span.
//
// S-pair criteria: the coprimality (product) criterion is only valid in rank
// one and is enabled just for ideal computations; the chain criterion is
// valid for modules (leading positions must match) and is always on.  Pair
// selection is by sugar degree with deterministic tie-breaking.

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "cmkit/polynomial.hpp"

namespace cmkit {

template <class K>
using PolyVec = std::vector<Poly<K>>;  // one Poly per free-module position

struct ModTerm {
    int pos = 0;
    Mono m;
};

// >0 iff a > b under the split-block TOP order.
inline int modterm_cmp(const PolyCtx& ctx, int split, const ModTerm& a, const ModTerm& b) {
    int ba = a.pos < split ? 0 : 1, bb = b.pos < split ? 0 : 1;
    if (ba != bb) return ba < bb ? 1 : -1;
    int c = mono_cmp(ctx, a.m, b.m);
    if (c != 0) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return 0;
}

template <class K>
bool vec_is_zero(const PolyVec<K>& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly<K>& p) { return p.is_zero(); });
}

template <class K>
PolyVec<K> vec_zero(int rank) { return PolyVec<K>(static_cast<size_t>(rank)); }

template <class K>
PolyVec<K> vec_sub(const PolyCtx& ctx, const PolyVec<K>& a, const PolyVec<K>& b) {
    PolyVec<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_sub(ctx, a[i], b[i]);
    return r;
}

template <class K>
PolyVec<K> vec_add(const PolyCtx& ctx, const PolyVec<K>& a, const PolyVec<K>& b) {
    PolyVec<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_add(ctx, a[i], b[i]);
    return r;
}

template <class K>
PolyVec<K> vec_mul_term(const PolyVec<K>& a, const Mono& m, const K& c) {
    PolyVec<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_mul_term(a[i], m, c);
    return r;
}

template <class K>
PolyVec<K> vec_scale(const PolyVec<K>& a, const K& c) {
    PolyVec<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_scale(a[i], c);
    return r;
}

// Leading module term; nullopt for the zero vector.
template <class K>
std::optional<std::pair<ModTerm, K>> vec_lead(const PolyCtx& ctx, int split, const PolyVec<K>& v) {
    std::optional<std::pair<ModTerm, K>> best;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        ModTerm t{static_cast<int>(i), lm(v[i])};
        if (!best || modterm_cmp(ctx, split, t, best->first) > 0)
            best = std::make_pair(std::move(t), lc(v[i]));
    }
    return best;
}

// Max weighted degree over all terms (sugar seed); 0 for zero vectors.
template <class K>
long vec_maxdeg(const PolyCtx& ctx, const PolyVec<K>& v) {
    long d = 0;
    for (const auto& p : v)
        for (const auto& t : p.terms) d = std::max(d, wdeg(ctx, t.m));
    return d;
}

template <class K>
struct GBElem {
    PolyVec<K> v;  // monic
    ModTerm lead;
    long sugar = 0;
};

// Full normal form of w against basis (each element monic, nonzero).
// Deterministic: the first applicable reducer in basis order wins.
template <class K>
PolyVec<K> vec_nf(const PolyCtx& ctx, int split, PolyVec<K> w, const std::vector<GBElem<K>>& basis) {
    // bucket reducer indices by lead position, preserving basis order
    std::vector<std::vector<int>> bypos(w.size());
    for (size_t i = 0; i < basis.size(); ++i)
        bypos[static_cast<size_t>(basis[i].lead.pos)].push_back(static_cast<int>(i));
    PolyVec<K> rem = vec_zero<K>(static_cast<int>(w.size()));
    while (true) {
        auto l = vec_lead(ctx, split, w);
        if (!l) break;
        const ModTerm t = l->first;
        const K c = l->second;
        bool reduced = false;
        for (int gi : bypos[static_cast<size_t>(t.pos)]) {
            const GBElem<K>& g = basis[static_cast<size_t>(gi)];
            if (!mono_divides(g.lead.m, t.m)) continue;
            Mono q = mono_div(t.m, g.lead.m);
            for (size_t i = 0; i < w.size(); ++i)
                if (!g.v[i].is_zero())
                    w[i] = poly_sub(ctx, w[i], poly_mul_term(g.v[i], q, c));
            reduced = true;
            break;
        }
        if (!reduced) {
            // peel the irreducible leading term into the remainder; per
            // position the peeled terms arrive in descending order
            rem[static_cast<size_t>(t.pos)].terms.push_back({t.m, c});
            auto& terms = w[static_cast<size_t>(t.pos)].terms;
            terms.erase(terms.begin());
        }
    }
    return rem;
}

struct BuchbergerOpts {
    bool product_criterion = false;  // rank-one (ideal) case only
};

template <class K>
std::vector<GBElem<K>> buchberger(const PolyCtx& ctx, int rank, int split,
                                  const std::vector<PolyVec<K>>& gens,
                                  const BuchbergerOpts& opts = {}) {
    using Elem = GBElem<K>;
    std::vector<Elem> basis;

    struct Pair {
        int i, j;
        Mono lcm;
        long sugar;
    };
    std::set<std::pair<int, int>> pending;

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = mono_cmp(ctx, a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    // min-heap on the total pair order: pops the unique minimum, so the
    // processing order matches a linear min scan exactly
    auto pair_greater = [&](const Pair& a, const Pair& b) { return pair_less(b, a); };
    std::priority_queue<Pair, std::vector<Pair>, decltype(pair_greater)> queue(pair_greater);

    auto push_elem = [&](PolyVec<K> v, long sugar) {
        auto l = vec_lead(ctx, split, v);
        CMKIT_CHECK(l.has_value(), "buchberger: pushing zero element");
        v = vec_scale(v, l->second.inv());
        int idx = static_cast<int>(basis.size());
        for (int i = 0; i < idx; ++i) {
            const Elem& b = basis[static_cast<size_t>(i)];
            if (b.lead.pos != l->first.pos) continue;
            Mono lcm = mono_lcm(b.lead.m, l->first.m);
            long sug = std::max(b.sugar + wdeg(ctx, mono_div(lcm, b.lead.m)),
                                sugar + wdeg(ctx, mono_div(lcm, l->first.m)));
            queue.push({i, idx, std::move(lcm), sug});
            pending.insert({i, idx});
        }
        basis.push_back({std::move(v), l->first, sugar});
    };

    for (const auto& g : gens) {
        if (vec_is_zero(g)) continue;
        push_elem(g, vec_maxdeg(ctx, g));
    }

    while (!queue.empty()) {
        Pair pr = queue.top();
        queue.pop();
        pending.erase({pr.i, pr.j});

        const Elem& f = basis[static_cast<size_t>(pr.i)];
        const Elem& g = basis[static_cast<size_t>(pr.j)];

        if (opts.product_criterion && rank == 1 && mono_coprime(f.lead.m, g.lead.m))
            continue;

        // chain criterion: some k with LT_k | lcm and both spanned pairs done
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const Elem& h = basis[static_cast<size_t>(k)];
            if (h.lead.pos != f.lead.pos) continue;
            if (!mono_divides(h.lead.m, pr.lcm)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        // both sides monic, so the S-pair coefficients are exactly 1
        const K one = lc(f.v[static_cast<size_t>(f.lead.pos)]);
        PolyVec<K> s = vec_sub(ctx, vec_mul_term(f.v, mono_div(pr.lcm, f.lead.m), one),
                               vec_mul_term(g.v, mono_div(pr.lcm, g.lead.m), one));
        PolyVec<K> h = vec_nf(ctx, split, std::move(s), basis);
        if (!vec_is_zero(h)) push_elem(std::move(h), pr.sugar);
    }

    return basis;
}

// Minimal + fully tail-reduced + monic + deterministically sorted basis.
template <class K>
std::vector<GBElem<K>> reduce_basis(const PolyCtx& ctx, int split, std::vector<GBElem<K>> basis) {
    // minimalize scanning ascending so a divisor is kept before any of its
    // multiples comes up (divisibility implies <= in any monomial order)
    std::stable_sort(basis.begin(), basis.end(), [&](const GBElem<K>& a, const GBElem<K>& b) {
        return modterm_cmp(ctx, split, a.lead, b.lead) < 0;
    });
    std::vector<GBElem<K>> kept;
    for (auto& e : basis) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.lead.pos == e.lead.pos && mono_divides(k.lead.m, e.lead.m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(e));
    }
    // tail-reduce each element; leads are pairwise non-divisible and an
    // element's own lead never divides its strictly smaller tail terms
    // (divisibility implies >= in any monomial order), so reducing the bare
    // tail against the full basis picks exactly the reducers a self-excluded
    // scan would
    for (size_t i = 0; i < kept.size(); ++i) {
        size_t lp = static_cast<size_t>(kept[i].lead.pos);
        PolyVec<K> tail = kept[i].v;
        const K lc0 = tail[lp].terms.front().c;
        tail[lp].terms.erase(tail[lp].terms.begin());
        PolyVec<K> r = vec_nf(ctx, split, std::move(tail), kept);
        r[lp].terms.insert(r[lp].terms.begin(), Term<K>{kept[i].lead.m, lc0});
        auto l = vec_lead(ctx, split, r);
        CMKIT_CHECK(l && modterm_cmp(ctx, split, l->first, kept[i].lead) == 0,
                    "reduce_basis: lead changed");
        kept[i].v = vec_scale(r, l->second.inv());
    }
    // deterministic output order: descending leads
    std::stable_sort(kept.begin(), kept.end(), [&](const GBElem<K>& a, const GBElem<K>& b) {
        return modterm_cmp(ctx, split, a.lead, b.lead) > 0;
    });
    return kept;
}

// ---------------------------------------------------------------------------
// Ideal-level wrappers (rank one).

template <class K>
std::vector<GBElem<K>> to_gb_elems(const PolyCtx& ctx, const std::vector<Poly<K>>& polys) {
    std::vector<GBElem<K>> out;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        Poly<K> m = poly_monic(p);
        out.push_back({PolyVec<K>{m}, ModTerm{0, lm(m)}, poly_wdeg(ctx, m)});
    }
    return out;
}

// Reduced GB of an ideal; deterministic output order (descending leads).
template <class K>
std::vector<Poly<K>> groebner_basis(const PolyCtx& ctx, const std::vector<Poly<K>>& gens) {
    std::vector<PolyVec<K>> g;
    for (const auto& p : gens)
        if (!p.is_zero()) g.push_back(PolyVec<K>{p});
    BuchbergerOpts opts;
    opts.product_criterion = true;
    auto basis = reduce_basis(ctx, 1, buchberger(ctx, 1, 1, g, opts));
    std::vector<Poly<K>> out;
    out.reserve(basis.size());
    for (auto& e : basis) out.push_back(std::move(e.v[0]));
    return out;
}

// Full normal form of f against an arbitrary list of nonzero polynomials.
template <class K>
Poly<K> normal_form(const PolyCtx& ctx, const Poly<K>& f, const std::vector<Poly<K>>& basis) {
    auto elems = to_gb_elems(ctx, basis);
    PolyVec<K> r = vec_nf(ctx, 1, PolyVec<K>{f}, elems);
    return r[0];
}

// ---------------------------------------------------------------------------
// ModEngine: one augmented GB giving normal forms, membership, coefficient
// lifts and syzygies for a list of tracked generators in S^r, modulo an
// untracked span (typically I * S^r when working over R = S/I).

template <class K>
class ModEngine {
  public:
    ModEngine(const PolyCtx& ctx, int rank, const std::vector<PolyVec<K>>& tracked,
              const std::vector<PolyVec<K>>& untracked, const K& one)
        : ctx_(ctx), r_(rank), m_(static_cast<int>(tracked.size())) {
        std::vector<PolyVec<K>> gens;
        gens.reserve(tracked.size() + untracked.size());
        for (int i = 0; i < m_; ++i) {
            PolyVec<K> v = vec_zero<K>(r_ + m_);
            for (int j = 0; j < r_; ++j) v[static_cast<size_t>(j)] = tracked[static_cast<size_t>(i)][static_cast<size_t>(j)];
            v[static_cast<size_t>(r_ + i)] = poly_const(ctx_, one);  // unit marker
            gens.push_back(std::move(v));
        }
        for (const auto& u : untracked) {
            PolyVec<K> v = vec_zero<K>(r_ + m_);
            for (int j = 0; j < r_; ++j) v[static_cast<size_t>(j)] = u[static_cast<size_t>(j)];
            if (!vec_is_zero(v)) gens.push_back(std::move(v));
        }
        gb_ = reduce_basis(ctx_, r_, buchberger(ctx_, r_ + m_, r_, gens));
    }

    // Reduce (v (+) 0); returns (normal form in S^r, tracked coefficients w)
    // with v = nf - sum w_i * tracked_i modulo the untracked span.
    std::pair<PolyVec<K>, PolyVec<K>> reduce(const PolyVec<K>& v) const {
        CMKIT_CHECK(static_cast<int>(v.size()) == r_, "ModEngine: rank mismatch");
        PolyVec<K> w = vec_zero<K>(r_ + m_);
        for (int j = 0; j < r_; ++j) w[static_cast<size_t>(j)] = v[static_cast<size_t>(j)];
        PolyVec<K> red = vec_nf(ctx_, r_, std::move(w), gb_);
        PolyVec<K> nf(red.begin(), red.begin() + r_);
        PolyVec<K> coeffs(red.begin() + r_, red.end());
        return {std::move(nf), std::move(coeffs)};
    }

    PolyVec<K> nf(const PolyVec<K>& v) const { return reduce(v).first; }

    bool member(const PolyVec<K>& v) const { return vec_is_zero(reduce(v).first); }

    // Coefficients c with v = sum c_i * tracked_i modulo the untracked span.
    std::optional<PolyVec<K>> lift(const PolyVec<K>& v) const {
        auto [nf, w] = reduce(v);
        if (!vec_is_zero(nf)) return std::nullopt;
        for (auto& p : w) p = poly_neg(p);
        return w;
    }

    // Generators of { c in S^m : sum c_i * tracked_i in untracked span }.
    std::vector<PolyVec<K>> syzygies() const {
        std::vector<PolyVec<K>> out;
        for (const auto& e : gb_) {
            if (e.lead.pos < r_) continue;  // leading term in high block
            // elimination order: lead in low block => entirely in low block
            PolyVec<K> c(e.v.begin() + r_, e.v.end());
            CMKIT_CHECK(vec_is_zero(PolyVec<K>(e.v.begin(), e.v.begin() + r_)),
                        "ModEngine: low-lead element with high-block support");
            out.push_back(std::move(c));
        }
        return out;
    }

    // Leading terms of the high-block GB (a GB of tracked+untracked span).
    std::vector<ModTerm> span_leads() const {
        std::vector<ModTerm> out;
        for (const auto& e : gb_)
            if (e.lead.pos < r_) out.push_back(e.lead);
        return out;
    }

    int rank() const { return r_; }
    int tracked_count() const { return m_; }

  private:
    PolyCtx ctx_;
    int r_, m_;
    std::vector<GBElem<K>> gb_;
};

}  // namespace cmkit
