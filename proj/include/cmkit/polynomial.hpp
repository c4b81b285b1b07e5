#pragma once

// Sparse multivariate polynomials with field coefficients.  Invariant:
// terms are sorted strictly descending under the ambient PolyCtx order and
// no coefficient is zero.  All arithmetic is by free functions taking the
// ctx explicitly so Poly stays a dumb value type.

#include <optional>
#include <vector>

#include "cmkit/field.hpp"
#include "cmkit/monomial.hpp"

namespace cmkit {

template <class K>
struct Term {
    Mono m;
    K c;
};

template <class K>
struct Poly {
    std::vector<Term<K>> terms;  // descending, coefficients nonzero

    bool is_zero() const { return terms.empty(); }
};

template <class K>
bool operator==(const Poly<K>& a, const Poly<K>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].m != b.terms[i].m || a.terms[i].c != b.terms[i].c) return false;
    return true;
}
template <class K>
bool operator!=(const Poly<K>& a, const Poly<K>& b) { return !(a == b); }

// Sort/merge arbitrary term soup into a valid Poly.
template <class K>
Poly<K> poly_normalize(const PolyCtx& ctx, std::vector<Term<K>> ts) {
    std::sort(ts.begin(), ts.end(), [&](const Term<K>& x, const Term<K>& y) {
        return mono_cmp(ctx, x.m, y.m) > 0;
    });
    Poly<K> r;
    for (auto& t : ts) {
        if (!r.terms.empty() && r.terms.back().m == t.m) {
            r.terms.back().c = r.terms.back().c + t.c;
            if (r.terms.back().c.is_zero()) r.terms.pop_back();
        } else if (!t.c.is_zero()) {
            r.terms.push_back(std::move(t));
        }
    }
    return r;
}

template <class K>
Poly<K> poly_const(const PolyCtx& ctx, const K& c) {
    Poly<K> r;
    if (!c.is_zero()) r.terms.push_back({mono_one(ctx.nvars), c});
    return r;
}

template <class K>
Poly<K> poly_var(const PolyCtx& ctx, int i, const K& one) {
    Mono m = mono_one(ctx.nvars);
    m[static_cast<size_t>(i)] = 1;
    Poly<K> r;
    r.terms.push_back({std::move(m), one});
    return r;
}

template <class K>
const Term<K>& lt(const Poly<K>& p) {
    CMKIT_CHECK(!p.is_zero(), "lt of zero polynomial");
    return p.terms.front();
}
template <class K>
const Mono& lm(const Poly<K>& p) { return lt(p).m; }
template <class K>
const K& lc(const Poly<K>& p) { return lt(p).c; }

// Merge-add of two sorted term lists.
template <class K>
Poly<K> poly_add(const PolyCtx& ctx, const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = mono_cmp(ctx, a.terms[i].m, b.terms[j].m);
        if (c > 0) r.terms.push_back(a.terms[i++]);
        else if (c < 0) r.terms.push_back(b.terms[j++]);
        else {
            K s = a.terms[i].c + b.terms[j].c;
            if (!s.is_zero()) r.terms.push_back({a.terms[i].m, s});
            ++i; ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

template <class K>
Poly<K> poly_neg(const Poly<K>& a) {
    Poly<K> r = a;
    for (auto& t : r.terms) t.c = -t.c;
    return r;
}

template <class K>
Poly<K> poly_sub(const PolyCtx& ctx, const Poly<K>& a, const Poly<K>& b) {
    return poly_add(ctx, a, poly_neg(b));
}

template <class K>
Poly<K> poly_scale(const Poly<K>& a, const K& c) {
    Poly<K> r;
    if (c.is_zero()) return r;
    r.terms = a.terms;
    for (auto& t : r.terms) t.c = t.c * c;
    return r;
}

// Multiply by the single term c*x^m (order-preserving, no re-sort needed).
template <class K>
Poly<K> poly_mul_term(const Poly<K>& a, const Mono& m, const K& c) {
    Poly<K> r;
    if (c.is_zero()) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({mono_mul(t.m, m), t.c * c});
    return r;
}

template <class K>
Poly<K> poly_mul(const PolyCtx& ctx, const Poly<K>& a, const Poly<K>& b) {
    std::vector<Term<K>> acc;
    acc.reserve(a.terms.size() * b.terms.size());
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) acc.push_back({mono_mul(s.m, t.m), s.c * t.c});
    return poly_normalize(ctx, std::move(acc));
}

template <class K>
Poly<K> poly_monic(const Poly<K>& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, lc(a).inv());
}

template <class K>
long poly_wdeg(const PolyCtx& ctx, const Poly<K>& p) {  // pre: p != 0
    CMKIT_CHECK(!p.is_zero(), "degree of zero polynomial");
    long d = wdeg(ctx, p.terms.front().m);
    for (const auto& t : p.terms) d = std::max(d, wdeg(ctx, t.m));
    return d;
}

// Degree if homogeneous; nullopt for zero or inhomogeneous input.  Use
// poly_is_homogeneous when zero should count as homogeneous.
template <class K>
std::optional<long> homogeneous_degree(const PolyCtx& ctx, const Poly<K>& p) {
    if (p.is_zero()) return std::nullopt;
    long d = wdeg(ctx, p.terms.front().m);
    for (const auto& t : p.terms)
        if (wdeg(ctx, t.m) != d) return std::nullopt;
    return d;
}

template <class K>
bool poly_is_homogeneous(const PolyCtx& ctx, const Poly<K>& p) {
    return p.is_zero() || homogeneous_degree(ctx, p).has_value();
}

// Exact division attempt: returns q with a == q*b, or nullopt.
template <class K>
std::optional<Poly<K>> poly_div_exact(const PolyCtx& ctx, const Poly<K>& a, const Poly<K>& b) {
    CMKIT_CHECK(!b.is_zero(), "poly_div_exact by zero");
    Poly<K> rem = a, q;
    std::vector<Term<K>> qterms;
    while (!rem.is_zero()) {
        const Term<K>& l = lt(rem);
        if (!mono_divides(lm(b), l.m)) return std::nullopt;
        Mono m = mono_div(l.m, lm(b));
        K c = l.c / lc(b);
        qterms.push_back({m, c});
        rem = poly_sub(ctx, rem, poly_mul_term(b, m, c));
    }
    q.terms = std::move(qterms);  // built in strictly descending order
    return q;
}

}  // namespace cmkit
