#pragma once

// Truncated free resolutions ... -> F_2 -> F_1 -> F_0 -> M -> 0 by iterated
// syzygy computation.  diffs[k] presents d_{k+1}: F_{k+1} -> F_k as a matrix
// (rows = rank F_k), so diffs[0] is the relation matrix itself.  shifts[k]
// holds the generator degrees of F_k.  Over quotient rings resolutions are
// generally infinite; `len` bounds the truncation.

#include <vector>

#include "cmkit/module.hpp"

namespace cmkit {

template <class K>
struct ResTrunc {
    Module<K> module;            // F_0 = R^{g} surjects onto this
    std::vector<Mat<K>> diffs;   // diffs[k] : F_{k+1} -> F_k, k < len
    std::vector<std::vector<long>> shifts;  // shifts[k] = degrees of F_k, k <= len

    long rank(size_t k) const { return static_cast<long>(shifts[k].size()); }
    long length() const { return static_cast<long>(diffs.size()); }
};

namespace detail {

template <class K>
std::vector<long> column_degrees(const PolyCtx& ctx, const Mat<K>& A,
                                 const std::vector<long>& row_degs) {
    std::vector<long> out;
    for (const auto& col : A.cols) {
        long d = 0;
        bool ok = vec_homogeneous_degree(ctx, col, row_degs, &d);
        CMKIT_CHECK(ok && !vec_is_zero(col), "resolution: inhomogeneous or zero syzygy column");
        out.push_back(d);
    }
    return out;
}

}  // namespace detail

// Serialize one polynomial row to a single line ("/"-separated, each poly
// ";"-separated exponent terms).  Kept standalone so resolution blobs stay
// line-oriented.
template <class K>
std::string polys_to_blob_line(const std::vector<Poly<K>>& polys) {
    std::ostringstream os;
    for (const auto& p : polys) {
        for (const auto& t : p.terms) {
            os << t.c.str() << " ";
            for (int e : t.m) os << e << " ";
            os << ";";
        }
        os << "/";
    }
    os << "\n";
    return os.str();
}

template <class K>
std::optional<std::vector<Poly<K>>> blob_line_to_polys(const std::string& line, const PolyCtx& ctx,
                                                       const K& one) {
    std::vector<Poly<K>> out;
    std::istringstream ls(line);
    std::string pchunk;
    while (std::getline(ls, pchunk, '/')) {
        Poly<K> f;
        std::istringstream ps(pchunk);
        std::string tchunk;
        while (std::getline(ps, tchunk, ';')) {
            if (tchunk.find_first_not_of(" \t") == std::string::npos) continue;
            std::istringstream ts(tchunk);
            std::string cstr;
            if (!(ts >> cstr)) return std::nullopt;
            Term<K> t;
            try {
                t.c = scalar_from_str(cstr, one);
            } catch (const std::exception&) {  // cache blobs are untrusted bytes
                return std::nullopt;
            }
            t.m.resize(static_cast<size_t>(ctx.nvars));
            for (int i = 0; i < ctx.nvars; ++i)
                if (!(ts >> t.m[static_cast<size_t>(i)])) return std::nullopt;
            if (t.c.is_zero()) return std::nullopt;
            f.terms.push_back(std::move(t));
        }
        for (size_t i = 1; i < f.terms.size(); ++i)
            if (mono_cmp(ctx, f.terms[i - 1].m, f.terms[i].m) <= 0) return std::nullopt;
        out.push_back(std::move(f));
    }
    return out;
}

template <class K>
ResTrunc<K> free_resolution(const Module<K>& M, long len);

namespace detail {

template <class K>
std::optional<ResTrunc<K>> restrunc_from_blob(const std::string& blob, const Module<K>& M,
                                              long len) {
    ResTrunc<K> res;
    res.module = M;
    res.shifts.push_back(M.gen_degs);
    std::istringstream is(blob);
    std::string line;
    if (!std::getline(is, line)) return std::nullopt;
    long count = 0;
    try {
        count = std::stol(line);
    } catch (...) {
        return std::nullopt;
    }
    if (count != len) return std::nullopt;
    for (long k = 0; k < count; ++k) {
        if (!std::getline(is, line)) return std::nullopt;
        std::istringstream hs(line);
        long rows = 0, ncols = 0;
        if (!(hs >> rows >> ncols)) return std::nullopt;
        if (rows != static_cast<long>(res.shifts.back().size())) return std::nullopt;
        Mat<K> A;
        A.rows = rows;
        for (long j = 0; j < ncols; ++j) {
            if (!std::getline(is, line)) return std::nullopt;
            auto col = blob_line_to_polys(line, M.ring->ctx, M.ring->one);
            if (!col || static_cast<long>(col->size()) != rows) return std::nullopt;
            A.cols.push_back(std::move(*col));
        }
        std::vector<long> degs;
        for (const auto& col : A.cols) {
            long d = 0;
            if (!vec_homogeneous_degree(M.ring->ctx, col, res.shifts.back(), &d) ||
                vec_is_zero(col))
                return std::nullopt;
            degs.push_back(d);
        }
        res.diffs.push_back(std::move(A));
        res.shifts.push_back(std::move(degs));
    }
    // structural sanity: d_1 equals the relation matrix, and d_k d_{k+1} = 0
    if (!res.diffs.empty()) {
        if (res.diffs[0].ncols() != M.rel.ncols()) return std::nullopt;
        for (long j = 0; j < M.rel.ncols(); ++j)
            for (long i = 0; i < M.rel.rows; ++i)
                if (!(res.diffs[0].cols[static_cast<size_t>(j)][static_cast<size_t>(i)] ==
                      M.rel.cols[static_cast<size_t>(j)][static_cast<size_t>(i)]))
                    return std::nullopt;
        for (size_t k = 0; k + 1 < res.diffs.size(); ++k) {
            Mat<K> z = mat_mul(*M.ring, res.diffs[k], res.diffs[k + 1]);
            for (const auto& col : z.cols)
                if (!vec_is_zero(col)) return std::nullopt;
        }
    }
    return res;
}

}  // namespace detail

// Truncated free resolution of length `len` (len differentials).  Consults
// the cache hooks when installed; cached entries are shape- and
// composition-checked before being trusted.
template <class K>
ResTrunc<K> free_resolution(const Module<K>& M, long len) {
    CMKIT_CHECK(len >= 0, "free_resolution: negative length");
    const std::string key =
        "res1|len:" + std::to_string(len) + "|" + module_key(M);
    if (cache_hooks().get) {
        if (auto blob = cache_hooks().get(key)) {
            if (auto res = detail::restrunc_from_blob(*blob, M, len)) return std::move(*res);
        }
    }

    ResTrunc<K> res;
    res.module = M;
    res.shifts.push_back(M.gen_degs);
    Mat<K> cur = M.rel;
    std::vector<long> cur_degs = M.rel_degs;
    for (long k = 0; k < len; ++k) {
        res.diffs.push_back(cur);
        res.shifts.push_back(cur_degs);
        if (k + 1 == len) break;
        Mat<K> next;
        next.rows = cur.ncols();
        if (cur.ncols() == 0) {
            // resolution has terminated; all later modules are zero
            cur = std::move(next);
            cur_degs.clear();
            continue;
        }
        next.cols = syzygy_columns(*M.ring, cur.rows, cur.cols);
        cur_degs = detail::column_degrees(M.ring->ctx, next, res.shifts.back());
        cur = std::move(next);
    }

    if (cache_hooks().put && len > 0) {
        std::ostringstream os;
        os << res.diffs.size() << "\n";
        for (const auto& A : res.diffs) {
            os << A.rows << " " << A.ncols() << "\n";
            for (const auto& col : A.cols) os << polys_to_blob_line(col);
        }
        cache_hooks().put(key, os.str());
    }
    return res;
}

}  // namespace cmkit
