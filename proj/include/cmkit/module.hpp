#pragma once

// Finitely presented graded modules M = coker(rel) over a PresentedRing.
// Generators carry integer degrees (negative allowed); relation columns must
// be homogeneous for those degrees.  Entries are stored as normal-form
// representatives mod the ring's ideal.

#include <memory>
#include <string>
#include <vector>

#include "cmkit/ring.hpp"

namespace cmkit {

template <class K>
struct Mat {
    long rows = 0;
    std::vector<PolyVec<K>> cols;  // each of length rows

    long ncols() const { return static_cast<long>(cols.size()); }
};

template <class K>
Mat<K> mat_identity(const Ring<K>& R, long n) {
    Mat<K> m;
    m.rows = n;
    for (long j = 0; j < n; ++j) {
        PolyVec<K> col = vec_zero<K>(static_cast<int>(n));
        col[static_cast<size_t>(j)] = poly_const(R.ctx, R.one);
        m.cols.push_back(std::move(col));
    }
    return m;
}

template <class K>
PolyVec<K> mat_apply(const Ring<K>& R, const Mat<K>& A, const PolyVec<K>& v) {
    CMKIT_CHECK(static_cast<long>(v.size()) == A.ncols(), "mat_apply: shape mismatch");
    PolyVec<K> out = vec_zero<K>(static_cast<int>(A.rows));
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (long i = 0; i < A.rows; ++i) {
            const Poly<K>& a = A.cols[j][static_cast<size_t>(i)];
            if (a.is_zero()) continue;
            out[static_cast<size_t>(i)] =
                poly_add(R.ctx, out[static_cast<size_t>(i)], poly_mul(R.ctx, a, v[j]));
        }
    }
    for (auto& p : out) p = r_nf(R, p);
    return out;
}

template <class K>
Mat<K> mat_mul(const Ring<K>& R, const Mat<K>& A, const Mat<K>& B) {
    Mat<K> out;
    out.rows = A.rows;
    for (const auto& col : B.cols) out.cols.push_back(mat_apply(R, A, col));
    return out;
}

template <class K>
struct Module {
    RingPtr<K> ring;
    std::vector<long> gen_degs;
    Mat<K> rel;                  // rel.rows == gen_degs.size()
    std::vector<long> rel_degs;  // homogeneous degree of each relation column

    long ngens() const { return static_cast<long>(gen_degs.size()); }
    long nrels() const { return rel.ncols(); }
};

// Homogeneous degree of a vector against row degrees; nullopt if the vector
// is inhomogeneous; `any` result (true, no value constraint) for zero.
template <class K>
bool vec_homogeneous_degree(const PolyCtx& ctx, const PolyVec<K>& v,
                            const std::vector<long>& row_degs, long* deg_out) {
    bool seen = false;
    long deg = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        auto d = homogeneous_degree(ctx, v[i]);
        if (!d) return false;
        long total = *d + row_degs[i];
        if (!seen) {
            deg = total;
            seen = true;
        } else if (deg != total) {
            return false;
        }
    }
    if (deg_out) *deg_out = seen ? deg : 0;
    return true;
}

// Validating constructor.  Reduces entries mod the ring ideal, drops columns
// that become identically zero, and records column degrees.
template <class K>
Module<K> make_module(RingPtr<K> ring, std::vector<long> gen_degs, Mat<K> rel,
                      const std::string& what = "module") {
    Module<K> M;
    M.ring = std::move(ring);
    M.gen_degs = std::move(gen_degs);
    M.rel.rows = static_cast<long>(M.gen_degs.size());
    CMKIT_CHECK(rel.rows == M.rel.rows || rel.cols.empty(), "make_module: relation row count mismatch");
    long col_idx = 0;
    for (auto& col : rel.cols) {
        ++col_idx;
        CMKIT_CHECK(static_cast<long>(col.size()) == M.rel.rows, "make_module: ragged relation column");
        for (auto& p : col) p = r_nf(*M.ring, p);
        long deg = 0;
        if (!vec_homogeneous_degree(M.ring->ctx, col, M.gen_degs, &deg))
            throw input_error(what + ": relation column " + std::to_string(col_idx) +
                              " is not homogeneous for the generator degrees");
        if (vec_is_zero(col)) continue;
        M.rel.cols.push_back(std::move(col));
        M.rel_degs.push_back(deg);
    }
    return M;
}

template <class K>
Module<K> free_module(RingPtr<K> ring, std::vector<long> degs) {
    Mat<K> rel;
    rel.rows = static_cast<long>(degs.size());
    return make_module(std::move(ring), std::move(degs), std::move(rel));
}

template <class K>
Module<K> ring_as_module(RingPtr<K> ring) {
    return free_module(ring, {0});
}

// R/(gens): cyclic module cut out by homogeneous ring elements.
template <class K>
Module<K> cyclic_module(RingPtr<K> ring, const std::vector<Poly<K>>& gens) {
    Mat<K> rel;
    rel.rows = 1;
    for (const auto& f : gens) rel.cols.push_back(PolyVec<K>{f});
    return make_module(std::move(ring), {0}, std::move(rel));
}

// k = R/m as a module.
template <class K>
Module<K> residue_field_module(RingPtr<K> ring) {
    return cyclic_module(ring, maximal_ideal_gens(*ring));
}

template <class K>
Module<K> direct_sum(const Module<K>& A, const Module<K>& B) {
    CMKIT_CHECK(same_ring(*A.ring, *B.ring), "direct_sum: different rings");
    Module<K> M;
    M.ring = A.ring;
    M.gen_degs = A.gen_degs;
    M.gen_degs.insert(M.gen_degs.end(), B.gen_degs.begin(), B.gen_degs.end());
    M.rel.rows = M.ngens();
    for (const auto& col : A.rel.cols) {
        PolyVec<K> c = col;
        c.resize(static_cast<size_t>(M.ngens()));
        M.rel.cols.push_back(std::move(c));
    }
    for (const auto& col : B.rel.cols) {
        PolyVec<K> c = vec_zero<K>(static_cast<int>(M.ngens()));
        for (size_t i = 0; i < col.size(); ++i) c[A.gen_degs.size() + i] = col[i];
        M.rel.cols.push_back(std::move(c));
    }
    M.rel_degs = A.rel_degs;
    M.rel_degs.insert(M.rel_degs.end(), B.rel_degs.begin(), B.rel_degs.end());
    return M;
}

// I * S^rank as untracked columns: f * e_j for f in the ring's GB.
template <class K>
std::vector<PolyVec<K>> ideal_columns(const Ring<K>& R, long rank) {
    std::vector<PolyVec<K>> out;
    for (const auto& f : R.gb)
        for (long j = 0; j < rank; ++j) {
            PolyVec<K> v = vec_zero<K>(static_cast<int>(rank));
            v[static_cast<size_t>(j)] = f;
            out.push_back(std::move(v));
        }
    return out;
}

// Engine over R for the span of `cols` in R^rank: membership, normal forms,
// lifts and syzygies all relative to the ring ideal.
template <class K>
ModEngine<K> make_engine(const Ring<K>& R, long rank, const std::vector<PolyVec<K>>& cols) {
    return ModEngine<K>(R.ctx, static_cast<int>(rank), cols, ideal_columns(R, rank), R.one);
}

template <class K>
ModEngine<K> relations_engine(const Module<K>& M) {
    return make_engine(*M.ring, M.ngens(), M.rel.cols);
}

template <class K>
bool is_zero_module(const Module<K>& M) {
    if (M.ngens() == 0) return true;
    auto eng = relations_engine(M);
    for (long j = 0; j < M.ngens(); ++j) {
        PolyVec<K> e = vec_zero<K>(static_cast<int>(M.ngens()));
        e[static_cast<size_t>(j)] = poly_const(M.ring->ctx, M.ring->one);
        if (!eng.member(e)) return false;
    }
    return true;
}

// dim_k M if finite, else nullopt.  Works off the leading module terms of a
// GB of rel + I*R^g: finite iff each position's leading-term ideal is
// zero-dimensional; the count is the number of standard module monomials.
template <class K>
std::optional<long> finite_length_dim(const Module<K>& M) {
    if (M.ngens() == 0) return 0;
    auto eng = relations_engine(M);
    std::vector<std::vector<Mono>> per_pos(static_cast<size_t>(M.ngens()));
    for (const auto& t : eng.span_leads()) per_pos[static_cast<size_t>(t.pos)].push_back(t.m);
    long total = 0;
    for (const auto& monos : per_pos) {
        auto c = monomial_standard_count(M.ring->ctx.nvars, monos);
        if (!c) return std::nullopt;
        total += *c;
    }
    return total;
}

// Trim a presentation: whenever a relation column has a scalar (degree-zero)
// unit entry, the corresponding generator is expressed by the others and both
// the row and the column can be eliminated.  Iterates to a fixed point; the
// isomorphism class and grading are unchanged.
template <class K>
Module<K> prune_module(const Module<K>& M) {
    const Ring<K>& R = *M.ring;
    std::vector<long> degs = M.gen_degs;
    std::vector<PolyVec<K>> cols = M.rel.cols;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t c = 0; c < cols.size() && !changed; ++c) {
            for (size_t i = 0; i < degs.size() && !changed; ++i) {
                const Poly<K>& e = cols[c][i];
                if (e.terms.size() != 1 || !mono_is_one(e.terms[0].m)) continue;
                K uinv = e.terms[0].c.inv();
                for (size_t c2 = 0; c2 < cols.size(); ++c2) {
                    if (c2 == c) continue;
                    const Poly<K> f = cols[c2][i];
                    if (f.is_zero()) continue;
                    Poly<K> coef = poly_scale(f, uinv);
                    for (size_t r = 0; r < degs.size(); ++r)
                        cols[c2][r] = r_nf(
                            R, poly_sub(R.ctx, cols[c2][r], poly_mul(R.ctx, coef, cols[c][r])));
                }
                cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
                for (auto& col : cols) col.erase(col.begin() + static_cast<std::ptrdiff_t>(i));
                degs.erase(degs.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            }
        }
    }
    Mat<K> rel;
    rel.rows = static_cast<long>(degs.size());
    rel.cols = std::move(cols);
    return make_module(M.ring, std::move(degs), std::move(rel), "prune");
}

// Syzygy columns of `cols` in R^rank, relative to the ring ideal: generators
// of { c : sum c_i cols_i = 0 in R^rank }.  Entries come back nf-reduced;
// identically zero columns are dropped.
template <class K>
std::vector<PolyVec<K>> syzygy_columns(const Ring<K>& R, long rank,
                                       const std::vector<PolyVec<K>>& cols) {
    auto eng = make_engine(R, rank, cols);
    std::vector<PolyVec<K>> out;
    for (auto& c : eng.syzygies()) {
        for (auto& p : c) p = r_nf(R, p);
        if (!vec_is_zero(c)) out.push_back(std::move(c));
    }
    return out;
}

// Spec-level syzygy matrix: columns generate the syzygies of the columns of A.
template <class K>
Mat<K> syzygy_matrix(const Ring<K>& R, const Mat<K>& A) {
    Mat<K> out;
    out.rows = A.ncols();
    out.cols = syzygy_columns(R, A.rows, A.cols);
    return out;
}

// Canonical content key for cache lookups.
template <class K>
std::string module_key(const Module<K>& M) {
    std::ostringstream os;
    os << ring_key(*M.ring) << ";degs:";
    for (long d : M.gen_degs) os << d << ",";
    os << ";rel:";
    for (const auto& col : M.rel.cols) {
        for (const auto& p : col) {
            for (const auto& t : p.terms) {
                os << t.c.str() << "[";
                for (int e : t.m) os << e << ",";
                os << "]";
            }
            os << "/";
        }
        os << "|";
    }
    return os.str();
}

}  // namespace cmkit
