#pragma once

// Test-only Groebner oracle: unoptimized Buchberger with the full pair set in
// FIFO order and plain lead-reduction.  No pair-selection strategy, no
// discard criteria, no sugar — deliberately different from the engine.

#include <deque>
#include <utility>
#include <vector>

#include "cmkit/polynomial.hpp"

namespace oracle {

using namespace cmkit;

template <class K>
Poly<K> naive_reduce(const PolyCtx& ctx, Poly<K> f, const std::vector<Poly<K>>& basis) {
    Poly<K> rem;
    rem.terms.clear();
    while (!f.is_zero()) {
        bool hit = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (mono_divides(g.terms[0].m, f.terms[0].m)) {
                Mono q = mono_div(f.terms[0].m, g.terms[0].m);
                K c = f.terms[0].c / g.terms[0].c;
                f = poly_sub(ctx, f, poly_mul_term(g, q, c));
                hit = true;
                break;
            }
        }
        if (!hit) {
            // peel the irreducible lead into the remainder
            rem.terms.push_back(f.terms[0]);
            f.terms.erase(f.terms.begin());
        }
    }
    return rem;
}

template <class K>
Poly<K> naive_spoly(const PolyCtx& ctx, const Poly<K>& f, const Poly<K>& g) {
    Mono l = mono_lcm(f.terms[0].m, g.terms[0].m);
    return poly_sub(ctx, poly_mul_term(f, mono_div(l, f.terms[0].m), g.terms[0].c),
                    poly_mul_term(g, mono_div(l, g.terms[0].m), f.terms[0].c));
}

template <class K>
std::vector<Poly<K>> naive_gb(const PolyCtx& ctx, std::vector<Poly<K>> gens) {
    std::vector<Poly<K>> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(std::move(g));
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Poly<K> s = naive_reduce(ctx, naive_spoly(ctx, basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        basis.push_back(std::move(s));
        size_t nw = basis.size() - 1;
        for (size_t t = 0; t < nw; ++t) pairs.emplace_back(t, nw);
    }
    return basis;
}

// Do two bases generate the same initial ideal?  Every lead of a must be
// divisible by some lead of b and conversely.
template <class K>
bool same_initial_ideal(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b) {
    auto covered = [](const std::vector<Poly<K>>& xs, const std::vector<Poly<K>>& ys) {
        for (const auto& f : xs) {
            if (f.is_zero()) continue;
            bool ok = false;
            for (const auto& g : ys) {
                if (g.is_zero()) continue;
                if (mono_divides(g.terms[0].m, f.terms[0].m)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

// Buchberger's criterion as a correctness certificate for a claimed basis:
// every S-polynomial reduces to zero against it.
template <class K>
bool all_spairs_vanish(const PolyCtx& ctx, const std::vector<Poly<K>>& basis) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!naive_reduce(ctx, naive_spoly(ctx, basis[i], basis[j]), basis).is_zero())
                return false;
    return true;
}

}  // namespace oracle
