#pragma once

// Derived functors from truncated free resolutions: Ext^i(M,N) via the
// Hom(F_., N) cochain complex, Tor_i(M,N) via F_. (x) N, homology by kernel
// presentation plus image lifting.  Also: certified prime ideals, ranks of
// presented modules at primes (fraction-free elimination over R/p), and Bass
// numbers.

#include <string>
#include <vector>

#include "cmkit/constructions.hpp"

namespace cmkit {

// Hom(F, N) for F free with generator degrees `shifts`: a presented module
// with r*gN generators indexed (a,b) -> a*gN + b of degree deg_N(b) -
// shifts(a), relations = r copies of N's relations, block a.
template <class K>
Module<K> hom_free_into(const std::vector<long>& shifts, const Module<K>& N) {
    long r = static_cast<long>(shifts.size());
    long gN = N.ngens();
    Module<K> H;
    H.ring = N.ring;
    for (long a = 0; a < r; ++a)
        for (long b = 0; b < gN; ++b)
            H.gen_degs.push_back(N.gen_degs[static_cast<size_t>(b)] - shifts[static_cast<size_t>(a)]);
    H.rel.rows = r * gN;
    for (long a = 0; a < r; ++a)
        for (long c = 0; c < N.nrels(); ++c) {
            PolyVec<K> col = vec_zero<K>(static_cast<int>(r * gN));
            for (long b = 0; b < gN; ++b)
                col[static_cast<size_t>(a * gN + b)] = N.rel.cols[static_cast<size_t>(c)][static_cast<size_t>(b)];
            H.rel.cols.push_back(std::move(col));
            H.rel_degs.push_back(N.rel_degs[static_cast<size_t>(c)] - shifts[static_cast<size_t>(a)]);
        }
    return H;
}

// Tensor F (x) N, F free with generator degrees `shifts`: generators (a,b)
// of degree shifts(a) + deg_N(b), relations = r copies of N's relations.
template <class K>
Module<K> tensor_free_with(const std::vector<long>& shifts, const Module<K>& N) {
    long r = static_cast<long>(shifts.size());
    long gN = N.ngens();
    Module<K> T;
    T.ring = N.ring;
    for (long a = 0; a < r; ++a)
        for (long b = 0; b < gN; ++b)
            T.gen_degs.push_back(shifts[static_cast<size_t>(a)] + N.gen_degs[static_cast<size_t>(b)]);
    T.rel.rows = r * gN;
    for (long a = 0; a < r; ++a)
        for (long c = 0; c < N.nrels(); ++c) {
            PolyVec<K> col = vec_zero<K>(static_cast<int>(r * gN));
            for (long b = 0; b < gN; ++b)
                col[static_cast<size_t>(a * gN + b)] = N.rel.cols[static_cast<size_t>(c)][static_cast<size_t>(b)];
            T.rel.cols.push_back(std::move(col));
            T.rel_degs.push_back(shifts[static_cast<size_t>(a)] + N.rel_degs[static_cast<size_t>(c)]);
        }
    return T;
}

// Matrix of Hom(d, N): Hom(F_prev, N) -> Hom(F_next, N) for d: F_next ->
// F_prev (d has rows = rank F_prev, cols = rank F_next).  Source generator
// (a,b) maps to sum_j d[a][j] * e_(j,b).
template <class K>
Mat<K> hom_dual_matrix(const Ring<K>&, const Mat<K>& d, long gN) {
    long r_prev = d.rows, r_next = d.ncols();
    Mat<K> out;
    out.rows = r_next * gN;
    for (long a = 0; a < r_prev; ++a)
        for (long b = 0; b < gN; ++b) {
            PolyVec<K> col = vec_zero<K>(static_cast<int>(r_next * gN));
            for (long j = 0; j < r_next; ++j) {
                const Poly<K>& entry = d.cols[static_cast<size_t>(j)][static_cast<size_t>(a)];
                if (!entry.is_zero()) col[static_cast<size_t>(j * gN + b)] = entry;
            }
            out.cols.push_back(std::move(col));
        }
    return out;
}

// Matrix of d (x) id_N: F_next (x) N -> F_prev (x) N.  Source generator
// (a,b), a over rank F_next, maps to sum_j d[j][a] * e_(j,b).
template <class K>
Mat<K> tensor_matrix(const Ring<K>&, const Mat<K>& d, long gN) {
    long r_prev = d.rows, r_next = d.ncols();
    Mat<K> out;
    out.rows = r_prev * gN;
    for (long a = 0; a < r_next; ++a)
        for (long b = 0; b < gN; ++b) {
            PolyVec<K> col = vec_zero<K>(static_cast<int>(r_prev * gN));
            for (long j = 0; j < r_prev; ++j) {
                const Poly<K>& entry = d.cols[static_cast<size_t>(a)][static_cast<size_t>(j)];
                if (!entry.is_zero()) col[static_cast<size_t>(j * gN + b)] = entry;
            }
            out.cols.push_back(std::move(col));
        }
    return out;
}

// Homology ker(beta)/im(alpha) at B, where alpha's columns land in B's
// generator coordinates and beta: B -> C.  Presents ker(beta) via the kernel
// construction, then divides by the lifted alpha columns.
template <class K>
Module<K> homology_at(const Module<K>& B, const std::vector<PolyVec<K>>& alpha_cols,
                      const ModuleMap<K>& beta) {
    auto [ker, incl] = kernel_module(beta);
    if (alpha_cols.empty() || ker.ngens() == 0) return prune_module(ker);
    const Ring<K>& R = *B.ring;
    // lift each alpha column through the inclusion: v = incl * c mod B.rel
    std::vector<PolyVec<K>> tracked = incl.cols;
    std::vector<PolyVec<K>> untracked = B.rel.cols;
    auto eng = ModEngine<K>(R.ctx, static_cast<int>(B.ngens()), tracked,
                            [&] {
                                auto u = untracked;
                                auto ic = ideal_columns(R, B.ngens());
                                u.insert(u.end(), ic.begin(), ic.end());
                                return u;
                            }(),
                            R.one);
    Mat<K> rel = ker.rel;
    for (const auto& v : alpha_cols) {
        auto c = eng.lift(v);
        CMKIT_CHECK(c.has_value(), "homology_at: alpha column not in ker(beta)");
        for (auto& p : *c) p = r_nf(R, p);
        if (!vec_is_zero(*c)) rel.cols.push_back(std::move(*c));
    }
    return prune_module(make_module(B.ring, ker.gen_degs, std::move(rel), "homology"));
}

// Ext^i(M, N) from a resolution of M of length >= i+1.
template <class K>
Module<K> ext_from_resolution(const ResTrunc<K>& res, long i, const Module<K>& N) {
    CMKIT_CHECK(i >= 0 && i + 1 <= res.length(), "ext_from_resolution: resolution too short");
    const Ring<K>& R = *N.ring;
    CMKIT_CHECK(same_ring(*res.module.ring, R), "ext: modules over different rings");
    long gN = N.ngens();
    Module<K> B = hom_free_into(res.shifts[static_cast<size_t>(i)], N);
    Module<K> C = hom_free_into(res.shifts[static_cast<size_t>(i + 1)], N);
    Mat<K> beta_mat = hom_dual_matrix(R, res.diffs[static_cast<size_t>(i)], gN);
    ModuleMap<K> beta{B, C, std::move(beta_mat)};
    std::vector<PolyVec<K>> alpha_cols;
    if (i > 0) {
        Mat<K> alpha = hom_dual_matrix(R, res.diffs[static_cast<size_t>(i - 1)], gN);
        alpha_cols = std::move(alpha.cols);
    }
    return homology_at(B, alpha_cols, beta);
}

template <class K>
Module<K> ext_module(long i, const Module<K>& M, const Module<K>& N) {
    auto res = free_resolution(M, i + 1);
    return ext_from_resolution(res, i, N);
}

// Tor_i(M, N) from a resolution of M of length >= i+1.
template <class K>
Module<K> tor_from_resolution(const ResTrunc<K>& res, long i, const Module<K>& N) {
    CMKIT_CHECK(i >= 0 && i + 1 <= res.length(), "tor_from_resolution: resolution too short");
    const Ring<K>& R = *N.ring;
    CMKIT_CHECK(same_ring(*res.module.ring, R), "tor: modules over different rings");
    long gN = N.ngens();
    Module<K> B = tensor_free_with(res.shifts[static_cast<size_t>(i)], N);
    std::vector<PolyVec<K>> alpha_cols;
    {
        Mat<K> alpha = tensor_matrix(R, res.diffs[static_cast<size_t>(i)], gN);
        alpha_cols = std::move(alpha.cols);
    }
    if (i == 0) {
        // coker(d_1 (x) 1): kernel step is the identity on B
        Mat<K> rel = B.rel;
        for (auto& c : alpha_cols)
            rel.cols.push_back(std::move(c));
        return prune_module(make_module(B.ring, B.gen_degs, std::move(rel), "tor"));
    }
    Module<K> C = tensor_free_with(res.shifts[static_cast<size_t>(i - 1)], N);
    Mat<K> beta_mat = tensor_matrix(R, res.diffs[static_cast<size_t>(i - 1)], gN);
    ModuleMap<K> beta{B, C, std::move(beta_mat)};
    return homology_at(B, alpha_cols, beta);
}

template <class K>
Module<K> tor_module(long i, const Module<K>& M, const Module<K>& N) {
    auto res = free_resolution(M, i + 1);
    return tor_from_resolution(res, i, N);
}

// ---------------------------------------------------------------------------
// Primes and Bass numbers.

template <class K>
struct PrimeIdeal {
    std::string name;
    std::vector<Poly<K>> gens;  // nf-reduced, homogeneous
    bool certified = true;      // user attestation of primality
    long height = 0;            // dim R - dim R/p
    std::vector<Poly<K>> gb;    // reduced GB of I + p over S
};

template <class K>
PrimeIdeal<K> make_prime(const Ring<K>& R, std::vector<Poly<K>> gens, bool certified,
                         std::string name) {
    PrimeIdeal<K> p;
    p.name = std::move(name);
    p.certified = certified;
    for (auto& g : gens) {
        Poly<K> f = r_nf(R, g);
        if (f.is_zero()) continue;
        auto d = homogeneous_degree(R.ctx, f);
        if (!d || *d < 1)
            throw input_error("prime '" + p.name + "': generators must be homogeneous of positive degree");
        p.gens.push_back(std::move(f));
    }
    std::vector<Poly<K>> all = R.gb;
    all.insert(all.end(), p.gens.begin(), p.gens.end());
    p.gb = groebner_basis(R.ctx, all);
    for (const auto& g : p.gb)
        if (mono_is_one(lm(g)))
            throw input_error("prime '" + p.name + "': generators give the unit ideal");
    long qdim = monomial_krull_dim(R.ctx.nvars, leading_monomials(p.gb));
    p.height = R.dim - qdim;
    return p;
}

template <class K>
PrimeIdeal<K> maximal_prime(const Ring<K>& R) {
    return make_prime(R, maximal_ideal_gens(R), true, "m");
}

// q subseteq p (as ideals of R).
template <class K>
bool prime_contained(const Ring<K>& R, const PrimeIdeal<K>& q, const PrimeIdeal<K>& p) {
    for (const auto& g : q.gens)
        if (!normal_form(R.ctx, g, p.gb).is_zero()) return false;
    return true;
}

template <class K>
bool is_maximal_prime(const Ring<K>& R, const PrimeIdeal<K>& p) {
    for (const auto& v : maximal_ideal_gens(R))
        if (!normal_form(R.ctx, v, p.gb).is_zero()) return false;
    return true;
}

template <class K>
Module<K> prime_quotient_module(RingPtr<K> ring, const PrimeIdeal<K>& p) {
    return cyclic_module(ring, p.gens);
}

// rank of N at p: dim over Frac(R/p) of N (x) k(p), for p annihilating N.
// Computed as ngens - rank(relations over R/p) by fraction-free elimination:
// pivot = lowest-degree nonzero entry, cross-multiplication rows, normal
// forms against GB(I + p), Bareiss-style exact division by the previous
// pivot when it divides the whole row.
template <class K>
long rank_at_prime(const Module<K>& N, const PrimeIdeal<K>& p) {
    const Ring<K>& R = *N.ring;
    if (!p.certified)
        throw input_error("rank_at_prime: prime '" + p.name + "' is not certified");
    if (N.ngens() == 0) return 0;

    // precondition: p annihilates N
    {
        auto eng = relations_engine(N);
        for (const auto& f : p.gens)
            for (long j = 0; j < N.ngens(); ++j) {
                PolyVec<K> v = vec_zero<K>(static_cast<int>(N.ngens()));
                v[static_cast<size_t>(j)] = f;
                if (!eng.member(v))
                    throw input_error("rank_at_prime: '" + p.name +
                                      "' does not annihilate the module (generator " +
                                      std::to_string(j + 1) + ", element " +
                                      poly_to_string(f, R.vars) + ")");
            }
    }

    auto nf_p = [&](const Poly<K>& f) { return normal_form(R.ctx, f, p.gb); };

    long g = N.ngens(), c = N.nrels();
    std::vector<std::vector<Poly<K>>> a(static_cast<size_t>(g),
                                        std::vector<Poly<K>>(static_cast<size_t>(c)));
    for (long j = 0; j < c; ++j)
        for (long i = 0; i < g; ++i)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                nf_p(N.rel.cols[static_cast<size_t>(j)][static_cast<size_t>(i)]);

    std::vector<bool> row_done(static_cast<size_t>(g), false), col_done(static_cast<size_t>(c), false);
    Poly<K> prev_pivot;
    long rank = 0;
    while (true) {
        long pr = -1, pc = -1;
        long best_deg = 0;
        for (long i = 0; i < g; ++i) {
            if (row_done[static_cast<size_t>(i)]) continue;
            for (long j = 0; j < c; ++j) {
                if (col_done[static_cast<size_t>(j)]) continue;
                const Poly<K>& e = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (e.is_zero()) continue;
                long d = wdeg(R.ctx, lm(e));
                if (pr < 0 || d < best_deg) {
                    pr = i;
                    pc = j;
                    best_deg = d;
                }
            }
        }
        if (pr < 0) break;
        ++rank;
        const Poly<K> pivot = a[static_cast<size_t>(pr)][static_cast<size_t>(pc)];
        for (long i = 0; i < g; ++i) {
            if (i == pr || row_done[static_cast<size_t>(i)]) continue;
            const Poly<K> f = a[static_cast<size_t>(i)][static_cast<size_t>(pc)];
            if (f.is_zero()) continue;
            // row_i := pivot*row_i - f*row_pr  (valid over the domain R/p)
            std::vector<Poly<K>> nr(static_cast<size_t>(c));
            for (long j = 0; j < c; ++j) {
                if (col_done[static_cast<size_t>(j)]) continue;
                Poly<K> t = poly_sub(
                    R.ctx, poly_mul(R.ctx, pivot, a[static_cast<size_t>(i)][static_cast<size_t>(j)]),
                    poly_mul(R.ctx, f, a[static_cast<size_t>(pr)][static_cast<size_t>(j)]));
                nr[static_cast<size_t>(j)] = nf_p(t);
            }
            // Bareiss division by the previous pivot when the whole row allows
            if (!prev_pivot.is_zero()) {
                std::vector<Poly<K>> divided(static_cast<size_t>(c));
                bool all = true;
                for (long j = 0; j < c && all; ++j) {
                    if (col_done[static_cast<size_t>(j)] || nr[static_cast<size_t>(j)].is_zero()) {
                        divided[static_cast<size_t>(j)] = nr[static_cast<size_t>(j)];
                        continue;
                    }
                    auto q = poly_div_exact(R.ctx, nr[static_cast<size_t>(j)], prev_pivot);
                    if (q) divided[static_cast<size_t>(j)] = std::move(*q);
                    else all = false;
                }
                if (all) nr = std::move(divided);
            }
            for (long j = 0; j < c; ++j)
                if (!col_done[static_cast<size_t>(j)])
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] = nr[static_cast<size_t>(j)];
        }
        row_done[static_cast<size_t>(pr)] = true;
        col_done[static_cast<size_t>(pc)] = true;
        prev_pivot = pivot;
    }
    return g - rank;
}

// Bass number mu_i(p, M) = rank at p of Ext^i(R/p, M).
template <class K>
long bass_number(long i, const PrimeIdeal<K>& p, const Module<K>& M) {
    Module<K> Rp = prime_quotient_module(M.ring, p);
    Module<K> e = ext_module(i, Rp, M);
    return rank_at_prime(e, p);
}

}  // namespace cmkit
