#pragma once

// Krull dimension and vector-space dimension from initial (leading-monomial)
// data.  dim S/L for a monomial ideal L equals the largest variable subset U
// such that no generator of L is supported entirely inside U; that value for
// L = in(I) is dim S/I.  Variable counts here are tiny, so plain subset
// enumeration is fine (guarded).

#include <optional>
#include <vector>

#include "cmkit/monomial.hpp"

namespace cmkit {

inline std::vector<int> mono_support(const Mono& m) {
    std::vector<int> s;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

// dim of S/L, L the monomial ideal generated by `monos`.  A generator equal
// to 1 makes the quotient zero; by convention its dimension is -1 here so
// callers can distinguish the zero ring.
inline long monomial_krull_dim(int nvars, const std::vector<Mono>& monos) {
    for (const auto& m : monos)
        if (mono_is_one(m)) return -1;
    CMKIT_CHECK(nvars <= 25, "monomial_krull_dim: too many variables for subset search");
    long best = -1;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const auto& m : monos) {
            bool inside = true;
            for (size_t i = 0; i < m.size() && inside; ++i)
                if (m[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {  // generator supported inside U -> U not independent
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, static_cast<long>(__builtin_popcount(mask)));
    }
    return best;
}

// Number of monomials outside the monomial ideal L, or nullopt if infinite.
// Finite iff L contains a power of every variable (or 1).
inline std::optional<long> monomial_standard_count(int nvars, const std::vector<Mono>& monos) {
    for (const auto& m : monos)
        if (mono_is_one(m)) return 0;
    std::vector<int> box(static_cast<size_t>(nvars), -1);
    for (const auto& m : monos) {
        auto s = mono_support(m);
        if (s.size() == 1) {
            int i = s[0];
            int e = m[static_cast<size_t>(i)];
            if (box[static_cast<size_t>(i)] < 0 || e < box[static_cast<size_t>(i)])
                box[static_cast<size_t>(i)] = e;
        }
    }
    for (int i = 0; i < nvars; ++i)
        if (box[static_cast<size_t>(i)] < 0) return std::nullopt;
    // enumerate the box and test divisibility by any generator
    long count = 0;
    Mono cur(static_cast<size_t>(nvars), 0);
    while (true) {
        bool in_ideal = false;
        for (const auto& m : monos)
            if (mono_divides(m, cur)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) ++count;
        int i = 0;
        for (; i < nvars; ++i) {
            if (++cur[static_cast<size_t>(i)] < box[static_cast<size_t>(i)]) break;
            cur[static_cast<size_t>(i)] = 0;
        }
        if (i == nvars) break;
    }
    return count;
}

}  // namespace cmkit
