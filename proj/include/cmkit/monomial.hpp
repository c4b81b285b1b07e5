#pragma once

// Monomials are bare exponent vectors; all order/degree logic is relative to
// a PolyCtx (variable count, positive integer weights, monomial order).
// Weights default to all-1; grevlex/grlex compare weighted degree first,
// which is a valid monomial order for any positive weights.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cmkit/common.hpp"

namespace cmkit {

using Mono = std::vector<std::int32_t>;

enum class OrderKind { grevlex, lex, grlex };

struct PolyCtx {
    int nvars = 0;
    std::vector<long> weights;  // size nvars, all >= 1
    OrderKind order = OrderKind::grevlex;

    friend bool operator==(const PolyCtx& a, const PolyCtx& b) {
        return a.nvars == b.nvars && a.weights == b.weights && a.order == b.order;
    }
};

inline Mono mono_one(int nvars) { return Mono(static_cast<size_t>(nvars), 0); }

inline bool mono_is_one(const Mono& m) {
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

inline long wdeg(const PolyCtx& ctx, const Mono& m) {
    long d = 0;
    for (int i = 0; i < ctx.nvars; ++i) d += ctx.weights[static_cast<size_t>(i)] * m[static_cast<size_t>(i)];
    return d;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& a, const Mono& b) {  // a / b, pre: b | a
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        CMKIT_CHECK(r[i] >= 0, "mono_div: not divisible");
    }
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Three-way compare under ctx.order: >0 iff a > b.
inline int mono_cmp(const PolyCtx& ctx, const Mono& a, const Mono& b) {
    auto lex_cmp = [&]() -> int {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    };
    switch (ctx.order) {
        case OrderKind::lex:
            return lex_cmp();
        case OrderKind::grlex: {
            long da = wdeg(ctx, a), db = wdeg(ctx, b);
            if (da != db) return da > db ? 1 : -1;
            return lex_cmp();
        }
        case OrderKind::grevlex: {
            long da = wdeg(ctx, a), db = wdeg(ctx, b);
            if (da != db) return da > db ? 1 : -1;
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

}  // namespace cmkit
