#pragma once

// Module constructions: kernels of presented-module maps, trivial extensions
// R (+) C, restriction of scalars along R -> R (+) C, and minimal primes of
// monomial ideals.

#include <string>
#include <vector>

#include "cmkit/resolution.hpp"

namespace cmkit {

// A homomorphism f: src -> dst, given on generators: cols[j] in R^{g_dst} is
// the image of src generator j.
template <class K>
struct ModuleMap {
    Module<K> src;
    Module<K> dst;
    Mat<K> mat;  // rows = dst.ngens(), ncols = src.ngens()
};

// Generators of the preimage { v in R^c : F v in span(target_cols) } where F
// has `c` columns living in R^rank.  Computed as syzygies of [F | target]
// projected to the F-block.
template <class K>
std::vector<PolyVec<K>> preimage_columns(const Ring<K>& R, long rank,
                                         const std::vector<PolyVec<K>>& f_cols,
                                         const std::vector<PolyVec<K>>& target_cols) {
    std::vector<PolyVec<K>> all = f_cols;
    all.insert(all.end(), target_cols.begin(), target_cols.end());
    auto syz = syzygy_columns(R, rank, all);
    std::vector<PolyVec<K>> out;
    for (const auto& s : syz) {
        PolyVec<K> v(s.begin(), s.begin() + static_cast<long>(f_cols.size()));
        for (auto& p : v) p = r_nf(R, p);
        if (!vec_is_zero(v)) out.push_back(std::move(v));
    }
    return out;
}

// Check that `map.mat` sends relations of src into relations of dst; index of
// the first offending relation column on failure.
template <class K>
std::optional<long> map_welldefined_violation(const ModuleMap<K>& map) {
    if (map.src.nrels() == 0) return std::nullopt;
    auto eng = make_engine(*map.dst.ring, map.dst.ngens(), map.dst.rel.cols);
    for (long j = 0; j < map.src.nrels(); ++j) {
        PolyVec<K> img = mat_apply(*map.dst.ring, map.mat, map.src.rel.cols[static_cast<size_t>(j)]);
        if (!eng.member(img)) return j;
    }
    return std::nullopt;
}

// Kernel of a map of presented modules.  Returns the kernel presentation and
// the inclusion matrix (kernel generators written in src generator
// coordinates).  Throws input_error naming the first relation the matrix
// fails to respect.
template <class K>
std::pair<Module<K>, Mat<K>> kernel_module(const ModuleMap<K>& map) {
    const Ring<K>& R = *map.src.ring;
    CMKIT_CHECK(same_ring(R, *map.dst.ring), "kernel_module: rings differ");
    CMKIT_CHECK(map.mat.rows == map.dst.ngens() && map.mat.ncols() == map.src.ngens(),
                "kernel_module: matrix shape mismatch");
    if (auto bad = map_welldefined_violation(map))
        throw input_error("kernel_module: matrix does not respect source relation " +
                          std::to_string(*bad + 1));

    // special case: dst the zero presentation (rank 0) -> kernel is src
    if (map.dst.ngens() == 0)
        return {map.src, mat_identity(R, map.src.ngens())};

    // kernel generators: preimage of dst relations under mat
    std::vector<PolyVec<K>> U =
        preimage_columns(R, map.dst.ngens(), map.mat.cols, map.dst.rel.cols);
    std::vector<long> u_degs;
    std::vector<PolyVec<K>> u_kept;
    for (auto& u : U) {
        long d = 0;
        bool ok = vec_homogeneous_degree(R.ctx, u, map.src.gen_degs, &d);
        CMKIT_CHECK(ok, "kernel_module: inhomogeneous kernel generator");
        u_kept.push_back(std::move(u));
        u_degs.push_back(d);
    }
    // relations among the kernel generators inside src
    std::vector<PolyVec<K>> W =
        preimage_columns(R, map.src.ngens(), u_kept, map.src.rel.cols);
    Mat<K> rel;
    rel.rows = static_cast<long>(u_kept.size());
    rel.cols = std::move(W);
    Module<K> ker = make_module(map.src.ring, std::move(u_degs), std::move(rel));
    Mat<K> incl;
    incl.rows = map.src.ngens();
    incl.cols = std::move(u_kept);
    return {std::move(ker), std::move(incl)};
}

// ---------------------------------------------------------------------------
// Trivial extension T = R (+) C for a presented R-module C: adjoin one
// variable per C-generator (square-zero), with the C-relations re-imposed as
// linear forms in the new variables.  New variable weights are the
// C-generator degrees shifted to be >= 1.

template <class K>
struct TrivExt {
    RingPtr<K> T;
    RingPtr<K> base;
    long t = 0;               // number of adjoined variables
    long shift = 0;           // degree shift applied to C's generators
    std::vector<long> cdegs;  // shifted degrees (= weights of the new vars)
};

template <class K>
TrivExt<K> trivial_extension(const Module<K>& C) {
    const Ring<K>& R = *C.ring;
    TrivExt<K> ext;
    ext.base = C.ring;
    ext.t = C.ngens();

    // shift C's generator degrees so every adjoined weight is >= 1
    ext.shift = 0;
    if (!C.gen_degs.empty()) {
        long mind = C.gen_degs[0];
        for (long d : C.gen_degs) mind = std::min(mind, d);
        ext.shift = 1 - mind;
        if (ext.shift < 0) ext.shift = 0;  // already positive: keep degrees
    }

    std::vector<std::string> vars = R.vars;
    std::vector<long> weights = R.ctx.weights;
    std::vector<std::string> evars;
    for (long j = 0; j < ext.t; ++j) {
        std::string name = "e" + std::to_string(j + 1);
        while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
        vars.push_back(name);
        evars.push_back(name);
        weights.push_back(C.gen_degs[static_cast<size_t>(j)] + ext.shift);
        ext.cdegs.push_back(C.gen_degs[static_cast<size_t>(j)] + ext.shift);
    }

    std::vector<std::string> rels;
    for (const auto& f : R.ideal) rels.push_back(poly_to_string(f, R.vars));
    for (long i = 0; i < ext.t; ++i)
        for (long j = i; j < ext.t; ++j)
            rels.push_back(evars[static_cast<size_t>(i)] + "*" + evars[static_cast<size_t>(j)]);
    for (long c = 0; c < C.nrels(); ++c) {
        std::string s;
        for (long i = 0; i < ext.t; ++i) {
            const Poly<K>& coef = C.rel.cols[static_cast<size_t>(c)][static_cast<size_t>(i)];
            if (coef.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + poly_to_string(coef, R.vars) + ")*" + evars[static_cast<size_t>(i)];
        }
        if (!s.empty()) rels.push_back(s);
    }

    ext.T = make_ring_finalized<K>(R.field, vars, weights, R.ctx.order, rels, R.one);
    return ext;
}

// Lift a polynomial over the base ring into the extension (append zero
// exponents for the adjoined variables).
template <class K>
Poly<K> lift_to_extension(const TrivExt<K>& ext, const Poly<K>& f) {
    Poly<K> out = f;
    for (auto& t : out.terms) t.m.resize(static_cast<size_t>(ext.T->ctx.nvars), 0);
    return out;
}

// Restriction of scalars along T = R (+) C -> R: same generators, original
// relations plus e_j * gen_i for every adjoined variable.
template <class K>
Module<K> z_restrict(const Module<K>& M, const TrivExt<K>& ext) {
    if (!same_ring(*M.ring, *ext.base))
        throw input_error("z_restrict: module does not live over the extension's base ring");
    Mat<K> rel;
    rel.rows = M.ngens();
    for (const auto& col : M.rel.cols) {
        PolyVec<K> c;
        for (const auto& p : col) c.push_back(lift_to_extension(ext, p));
        rel.cols.push_back(std::move(c));
    }
    int n0 = ext.base->ctx.nvars;
    for (long j = 0; j < ext.t; ++j) {
        Poly<K> ej = poly_var(ext.T->ctx, n0 + static_cast<int>(j), ext.T->one);
        for (long i = 0; i < M.ngens(); ++i) {
            PolyVec<K> c = vec_zero<K>(static_cast<int>(M.ngens()));
            c[static_cast<size_t>(i)] = ej;
            rel.cols.push_back(std::move(c));
        }
    }
    return make_module(ext.T, M.gen_degs, std::move(rel), "z_restrict");
}

// Minimal primes of a monomial ideal, as variable-index sets.  (0) has the
// single minimal prime (0); a unit generator means the empty spectrum.
inline std::vector<std::vector<int>> monomial_minimal_primes(int nvars,
                                                             const std::vector<Mono>& monos) {
    for (const auto& m : monos)
        if (mono_is_one(m)) throw input_error("monomial_minimal_primes: unit generator");
    std::vector<std::vector<int>> covers;
    std::vector<std::vector<int>> supports;
    for (const auto& m : monos) supports.push_back(mono_support(m));
    // enumerate minimal vertex covers of the support hypergraph
    CMKIT_CHECK(nvars <= 25, "monomial_minimal_primes: too many variables");
    std::vector<std::uint32_t> found;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool cover = true;
        for (const auto& s : supports) {
            bool hit = s.empty();
            for (int i : s)
                if (mask & (1u << i)) {
                    hit = true;
                    break;
                }
            if (!hit) {
                cover = false;
                break;
            }
        }
        if (!cover) continue;
        bool minimal = true;
        for (std::uint32_t prev : found)
            if ((prev & mask) == prev) {
                minimal = false;
                break;
            }
        if (minimal) found.push_back(mask);
    }
    for (std::uint32_t mask : found) {
        std::vector<int> vs;
        for (int i = 0; i < nvars; ++i)
            if (mask & (1u << i)) vs.push_back(i);
        covers.push_back(std::move(vs));
    }
    return covers;
}

}  // namespace cmkit
