#pragma once

// Homological invariants: grade/cograde, depth/codepth, regular sequences,
// systems of parameters, Koszul-homology depth, (maximal) Cohen-Macaulay and
// Gorenstein tests, canonical modules with their delta-certificate, duals,
// and the deterministic seeded element pools.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cmkit/homology.hpp"

namespace cmkit {

// Infinity marker for grade-like values.
using ExtDegree = std::optional<long>;  // nullopt = +infinity

// Validate a sequence of ring elements: homogeneous of positive degree and
// nonzero mod the ideal.  Returns the nf representatives.
template <class K>
std::vector<Poly<K>> validate_sequence(const Ring<K>& R, const std::vector<Poly<K>>& xs,
                                       const std::string& what = "sequence") {
    std::vector<Poly<K>> out;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly<K> f = r_nf(R, xs[i]);
        if (f.is_zero())
            throw input_error(what + ": element " + std::to_string(i + 1) + " is zero in the ring");
        auto d = homogeneous_degree(R.ctx, f);
        if (!d || *d < 1)
            throw input_error(what + ": element " + std::to_string(i + 1) +
                              " must be homogeneous of positive degree");
        out.push_back(std::move(f));
    }
    return out;
}

// grade(I, M) = inf { i : Ext^i(R/I, M) != 0 }.  Infinite iff M/IM = 0 (for
// proper graded I this means M = 0).  Scans i <= dim R and cross-checks.
template <class K>
ExtDegree grade_ideal(const std::vector<Poly<K>>& igens, const Module<K>& M) {
    const Ring<K>& R = *M.ring;
    Module<K> RI = cyclic_module(M.ring, igens);
    long d = R.dim;
    auto res = free_resolution(RI, d + 2);
    for (long i = 0; i <= d; ++i) {
        Module<K> e = ext_from_resolution(res, i, M);
        if (!is_zero_module(e)) return i;
    }
    // all vanish up to dim R: must be the degenerate case M/IM = 0
    Module<K> t0 = tor_from_resolution(res, 0, M);
    CMKIT_CHECK(is_zero_module(t0), "grade: Ext vanishing beyond dim with M/IM nonzero");
    return std::nullopt;
}

// cograde(I, M) = inf { i : Tor_i(R/I, M) != 0 }; infinite iff M/IM = 0.
template <class K>
ExtDegree cograde_ideal(const std::vector<Poly<K>>& igens, const Module<K>& M) {
    const Ring<K>& R = *M.ring;
    Module<K> RI = cyclic_module(M.ring, igens);
    long d = R.dim;
    auto res = free_resolution(RI, d + 2);
    for (long i = 0; i <= d; ++i) {
        Module<K> t = tor_from_resolution(res, i, M);
        if (!is_zero_module(t)) return i;
    }
    Module<K> t0 = tor_from_resolution(res, 0, M);
    CMKIT_CHECK(is_zero_module(t0), "cograde: Tor vanishing beyond dim with M/IM nonzero");
    return std::nullopt;
}

template <class K>
ExtDegree depth(const Module<K>& M) {
    return grade_ideal(maximal_ideal_gens(*M.ring), M);
}

template <class K>
ExtDegree codepth(const Module<K>& M) {
    return cograde_ideal(maximal_ideal_gens(*M.ring), M);
}

// M/(xs)M as a presented module.
template <class K>
Module<K> quotient_by_elements(const Module<K>& M, const std::vector<Poly<K>>& xs) {
    Mat<K> rel = M.rel;
    for (const auto& x : xs)
        for (long j = 0; j < M.ngens(); ++j) {
            PolyVec<K> col = vec_zero<K>(static_cast<int>(M.ngens()));
            col[static_cast<size_t>(j)] = x;
            rel.cols.push_back(std::move(col));
        }
    return make_module(M.ring, M.gen_degs, std::move(rel));
}

struct RegSeqResult {
    bool regular = false;  // weak_regular and M/(xs)M != 0
    bool weak = false;     // every x_t is a nonzerodivisor on M/(x_1..x_{t-1})M
};

template <class K>
RegSeqResult is_regular_sequence(const std::vector<Poly<K>>& xs_in, const Module<K>& M) {
    const Ring<K>& R = *M.ring;
    auto xs = validate_sequence(R, xs_in, "is_regular_sequence");
    Module<K> cur = M;
    RegSeqResult res;
    for (const auto& x : xs) {
        // kernel of multiplication by x on cur
        Mat<K> mul;
        mul.rows = cur.ngens();
        for (long j = 0; j < cur.ngens(); ++j) {
            PolyVec<K> col = vec_zero<K>(static_cast<int>(cur.ngens()));
            col[static_cast<size_t>(j)] = x;
            mul.cols.push_back(std::move(col));
        }
        ModuleMap<K> mx{cur, cur, std::move(mul)};
        auto [ker, incl] = kernel_module(mx);
        (void)incl;
        if (!is_zero_module(ker)) return res;  // both flags false
        cur = quotient_by_elements(cur, {x});
    }
    res.weak = true;
    res.regular = !is_zero_module(cur);
    return res;
}

// xs is a system of parameters for R: length = dim R and dim R/(xs) = 0.
template <class K>
bool is_sop(const std::vector<Poly<K>>& xs_in, const Ring<K>& R) {
    auto xs = validate_sequence(R, xs_in, "is_sop");
    if (static_cast<long>(xs.size()) != R.dim) return false;
    if (xs.empty()) return R.dim == 0;
    return krull_dimension_rel(R, xs) == 0;
}

// Koszul complex matrices for x_1..x_n: d_i : K_i -> K_{i-1} on basis
// e_S (|S| = i), d(e_S) = sum_t (-1)^{t-1} x_{j_t} e_{S \ j_t}.
template <class K>
std::vector<Mat<K>> koszul_differentials(const Ring<K>& R, const std::vector<Poly<K>>& xs,
                                         std::vector<std::vector<long>>* shifts_out) {
    int n = static_cast<int>(xs.size());
    // enumerate subsets by size
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<size_t>(n + 1));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        by_size[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);
    for (auto& v : by_size) std::sort(v.begin(), v.end());

    std::vector<long> xdeg;
    for (const auto& x : xs) xdeg.push_back(*homogeneous_degree(R.ctx, x));

    if (shifts_out) {
        shifts_out->clear();
        for (int i = 0; i <= n; ++i) {
            std::vector<long> sh;
            for (std::uint32_t mask : by_size[static_cast<size_t>(i)]) {
                long d = 0;
                for (int j = 0; j < n; ++j)
                    if (mask & (1u << j)) d += xdeg[static_cast<size_t>(j)];
                sh.push_back(d);
            }
            shifts_out->push_back(std::move(sh));
        }
    }

    std::vector<Mat<K>> diffs;  // diffs[i-1] = d_i
    for (int i = 1; i <= n; ++i) {
        const auto& src = by_size[static_cast<size_t>(i)];
        const auto& dst = by_size[static_cast<size_t>(i - 1)];
        auto dst_index = [&](std::uint32_t mask) {
            return static_cast<long>(std::lower_bound(dst.begin(), dst.end(), mask) - dst.begin());
        };
        Mat<K> d;
        d.rows = static_cast<long>(dst.size());
        for (std::uint32_t mask : src) {
            PolyVec<K> col = vec_zero<K>(static_cast<int>(dst.size()));
            int t = 0;
            for (int j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                ++t;
                Poly<K> entry = xs[static_cast<size_t>(j)];
                if (t % 2 == 0) entry = poly_neg(entry);
                col[static_cast<size_t>(dst_index(mask & ~(1u << j)))] = std::move(entry);
            }
            d.cols.push_back(std::move(col));
        }
        diffs.push_back(std::move(d));
    }
    return diffs;
}

// i-th Koszul homology H_i(xs; M).
template <class K>
Module<K> koszul_homology(long i, const std::vector<Poly<K>>& xs, const Module<K>& M) {
    const Ring<K>& R = *M.ring;
    long n = static_cast<long>(xs.size());
    CMKIT_CHECK(i >= 0 && i <= n, "koszul_homology: index out of range");
    std::vector<std::vector<long>> shifts;
    auto diffs = koszul_differentials(R, xs, &shifts);
    long gM = M.ngens();
    Module<K> B = tensor_free_with(shifts[static_cast<size_t>(i)], M);
    std::vector<PolyVec<K>> alpha_cols;
    if (i < n) {
        Mat<K> alpha = tensor_matrix(R, diffs[static_cast<size_t>(i)], gM);
        alpha_cols = std::move(alpha.cols);
    }
    if (i == 0) {
        Mat<K> rel = B.rel;
        for (auto& c : alpha_cols) rel.cols.push_back(std::move(c));
        return make_module(B.ring, B.gen_degs, std::move(rel), "koszul");
    }
    Module<K> C = tensor_free_with(shifts[static_cast<size_t>(i - 1)], M);
    Mat<K> beta_mat = tensor_matrix(R, diffs[static_cast<size_t>(i - 1)], gM);
    ModuleMap<K> beta{B, C, std::move(beta_mat)};
    return homology_at(B, alpha_cols, beta);
}

// depth from Koszul homology of a system of parameters:
// depth M = dim R - sup{ i : H_i(xs;M) != 0 }; infinite for the zero module.
// An algorithm independent of the Ext scan, used as a cross-check.
template <class K>
ExtDegree depth_via_koszul(const Module<K>& M, const std::vector<Poly<K>>& xs_in) {
    const Ring<K>& R = *M.ring;
    auto xs = validate_sequence(R, xs_in, "depth_via_koszul");
    if (!is_sop(xs, R)) throw input_error("depth_via_koszul: not a system of parameters");
    long n = static_cast<long>(xs.size());
    for (long i = n; i >= 0; --i) {
        Module<K> h = koszul_homology(i, xs, M);
        if (!is_zero_module(h)) return n - i;
    }
    return std::nullopt;  // all Koszul homology vanishes: zero module
}

// Single-SoP maximal-depth test: true iff Ext^i(R/(xs), M) = 0 for every
// i < dim R; one system of parameters suffices, and the result equals
// (depth M = dim R).
template <class K>
bool depth_via_sop(const Module<K>& M, const std::vector<Poly<K>>& xs_in) {
    const Ring<K>& R = *M.ring;
    auto xs = validate_sequence(R, xs_in, "depth_via_sop");
    if (!is_sop(xs, R)) throw input_error("depth_via_sop: not a system of parameters");
    long d = R.dim;
    if (d == 0) return true;
    Module<K> Q = cyclic_module(M.ring, xs);
    auto res = free_resolution(Q, d);
    for (long i = 0; i < d; ++i)
        if (!is_zero_module(ext_from_resolution(res, i, M))) return false;
    return true;
}

template <class K>
bool is_mcm(const Module<K>& M) {
    if (is_zero_module(M)) return true;  // convention: zero module is MCM
    auto d = depth(M);
    return d.has_value() && *d == M.ring->dim;
}

template <class K>
bool is_cm_ring(const Ring<K>& R) {
    // need a RingPtr; rebuild a cheap shared handle around a copy
    auto self = std::make_shared<Ring<K>>(R);
    auto dep = depth(ring_as_module<K>(self));
    return dep.has_value() && *dep == R.dim;
}

template <class K>
bool is_cm_ring(const RingPtr<K>& R) {
    auto dep = depth(ring_as_module(R));
    return dep.has_value() && *dep == R->dim;
}

// Gorenstein iff CM with Cohen-Macaulay type 1: dim_k Ext^d(k, R) = 1.
template <class K>
bool is_gorenstein(const RingPtr<K>& R) {
    if (!is_cm_ring(R)) return false;
    long d = R->dim;
    Module<K> k = residue_field_module(R);
    Module<K> e = ext_module(d, k, ring_as_module(R));
    auto len = finite_length_dim(e);
    CMKIT_CHECK(len.has_value(), "is_gorenstein: Ext^d(k,R) has infinite length");
    return *len == 1;
}

// Number of minimal generators: dim_k M/mM.
template <class K>
long minimal_generator_count(const Module<K>& M) {
    Module<K> q = quotient_by_elements(M, maximal_ideal_gens(*M.ring));
    auto len = finite_length_dim(q);
    CMKIT_CHECK(len.has_value(), "minimal_generator_count: M/mM infinite dimensional");
    return *len;
}

// omega_R = Ext^{n-d}_S(R, S) over the ambient polynomial ring, re-presented
// over R.  Requires R Cohen-Macaulay; certified afterwards by the delta test
// dim_k Ext^i_R(k, omega) = (i == d ? 1 : 0) for 0 <= i <= d.
template <class K>
Module<K> canonical_module(const RingPtr<K>& R) {
    if (!is_cm_ring(R))
        throw input_error("canonical_module: ring is not Cohen-Macaulay");
    long n = R->ctx.nvars, d = R->dim;
    RingPtr<K> S = ambient_ring(*R);
    Mat<K> rel;
    rel.rows = 1;
    for (const auto& f : R->ideal) rel.cols.push_back(PolyVec<K>{f});
    Module<K> RS = make_module(S, {0}, std::move(rel));
    auto res = free_resolution(RS, n - d + 1);
    Module<K> wS = ext_from_resolution(res, n - d, ring_as_module(S));
    // re-present over R: the module is annihilated by the ideal, so the same
    // presentation with entries reduced mod I presents it over R
    Module<K> w = prune_module(make_module(R, wS.gen_degs, wS.rel, "canonical_module"));
    // delta certificate
    Module<K> k = residue_field_module(R);
    auto kres = free_resolution(k, d + 1);
    for (long i = 0; i <= d; ++i) {
        Module<K> e = ext_from_resolution(kres, i, w);
        auto len = finite_length_dim(e);
        CMKIT_CHECK(len.has_value(), "canonical_module: Ext^i(k, omega) infinite");
        CMKIT_CHECK(*len == (i == d ? 1 : 0), "canonical_module: delta certificate failed");
    }
    return w;
}

// Hom(M, R) presented: Ext^0(M, R).
template <class K>
Module<K> dual_module(const Module<K>& M) {
    return ext_module(0, M, ring_as_module(M.ring));
}

// Is W isomorphic to R (as graded module up to shift)?  True iff W is cyclic
// on one of its generators with zero annihilator.
template <class K>
bool module_iso_to_ring(const Module<K>& W) {
    const Ring<K>& R = *W.ring;
    if (W.ngens() == 0) return false;
    for (long i = 0; i < W.ngens(); ++i) {
        // cyclic on generator i?
        Mat<K> rel = W.rel;
        PolyVec<K> ei = vec_zero<K>(static_cast<int>(W.ngens()));
        ei[static_cast<size_t>(i)] = poly_const(R.ctx, R.one);
        rel.cols.push_back(ei);
        Module<K> q = make_module(W.ring, W.gen_degs, std::move(rel));
        if (!is_zero_module(q)) continue;
        // annihilator of e_i zero?
        auto ann = preimage_columns(R, W.ngens(), {ei}, W.rel.cols);
        bool zero_ann = true;
        for (const auto& col : ann)
            if (!vec_is_zero(col)) {
                zero_ann = false;
                break;
            }
        if (zero_ann) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Deterministic seeded pools.

// Homogeneous degree-one-per-weight-class element pool: all variables, sums
// of two distinct same-weight variables, and kappa seeded pseudorandom
// same-weight combinations.
template <class K>
std::vector<Poly<K>> element_pool(const Ring<K>& R, std::uint64_t seed, int kappa) {
    std::vector<Poly<K>> pool;
    std::set<std::string> seen;
    auto push = [&](const Poly<K>& f) {
        Poly<K> g = r_nf(R, f);
        if (g.is_zero()) return;
        std::string key = poly_to_string(poly_monic(g), R.vars);
        if (seen.insert(key).second) pool.push_back(std::move(g));
    };
    for (int i = 0; i < R.ctx.nvars; ++i) push(poly_var(R.ctx, i, R.one));
    for (int i = 0; i < R.ctx.nvars; ++i)
        for (int j = i + 1; j < R.ctx.nvars; ++j)
            if (R.ctx.weights[static_cast<size_t>(i)] == R.ctx.weights[static_cast<size_t>(j)])
                push(poly_add(R.ctx, poly_var(R.ctx, i, R.one), poly_var(R.ctx, j, R.one)));

    // weight classes, ascending by weight then variable index
    std::vector<std::vector<int>> classes;
    {
        std::set<long> ws(R.ctx.weights.begin(), R.ctx.weights.end());
        for (long w : ws) {
            std::vector<int> cls;
            for (int i = 0; i < R.ctx.nvars; ++i)
                if (R.ctx.weights[static_cast<size_t>(i)] == w) cls.push_back(i);
            classes.push_back(std::move(cls));
        }
    }
    if (!classes.empty()) {
        std::mt19937_64 rng(seed);
        auto coeff = [&]() -> K {
            if constexpr (std::is_same_v<K, Fp>) {
                std::uint64_t r = rng() % (R.one.p - 1);
                return Fp(static_cast<long long>(r + 1), R.one.p);
            } else {
                static const long vals[6] = {1, 2, 3, -1, -2, -3};
                return scalar_from(vals[rng() % 6], R.one);
            }
        };
        for (int t = 0; t < kappa; ++t) {
            const auto& cls = classes[static_cast<size_t>(t) % classes.size()];
            Poly<K> f;
            for (int i : cls)
                f = poly_add(R.ctx, f, poly_scale(poly_var(R.ctx, i, R.one), coeff()));
            push(f);
        }
    }
    return pool;
}

// All systems of parameters drawn from the element pool (index-ascending
// d-combinations filtered by is_sop).  For d = 0 the single empty SoP.
template <class K>
std::vector<std::vector<Poly<K>>> sop_pool(const Ring<K>& R, std::uint64_t seed, int kappa) {
    std::vector<std::vector<Poly<K>>> out;
    long d = R.dim;
    if (d == 0) {
        out.push_back({});
        return out;
    }
    auto pool = element_pool(R, seed, kappa);
    // index-ascending combinations
    std::vector<int> comb;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            std::vector<Poly<K>> xs;
            for (int i : comb) xs.push_back(pool[static_cast<size_t>(i)]);
            if (is_sop(xs, R)) out.push_back(std::move(xs));
            return;
        }
        for (int i = start; i + need <= static_cast<int>(pool.size()); ++i) {
            comb.push_back(i);
            rec(i + 1, need - 1);
            comb.pop_back();
        }
    };
    rec(0, static_cast<int>(d));
    return out;
}

// Regular sequences on R itself, lengths 1..dim R, from the element pool.
template <class K>
std::vector<std::vector<Poly<K>>> rseq_pool(const RingPtr<K>& R, std::uint64_t seed, int kappa) {
    std::vector<std::vector<Poly<K>>> out;
    long d = R->dim;
    if (d == 0) return out;
    auto pool = element_pool(*R, seed, kappa);
    Module<K> Rm = ring_as_module(R);
    std::vector<int> comb;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            std::vector<Poly<K>> xs;
            for (int i : comb) xs.push_back(pool[static_cast<size_t>(i)]);
            if (is_regular_sequence(xs, Rm).regular) out.push_back(std::move(xs));
            return;
        }
        for (int i = start; i + need <= static_cast<int>(pool.size()); ++i) {
            comb.push_back(i);
            rec(i + 1, need - 1);
            comb.pop_back();
        }
    };
    for (long len = 1; len <= d; ++len) rec(0, static_cast<int>(len));
    return out;
}

}  // namespace cmkit
