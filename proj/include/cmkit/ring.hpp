#pragma once

// PresentedRing: a graded quotient R = S/I of a weighted polynomial ring
// over Fp or Q.  Immutable after construction; the reduced GB of I and the
// Krull dimension are computed once.  Ring elements are always carried as
// normal-form representatives in S.

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cmkit/dimension.hpp"
#include "cmkit/groebner.hpp"
#include "cmkit/parse.hpp"

namespace cmkit {

struct FieldDesc {
    bool rational = true;
    std::uint32_t p = 0;  // modulus when !rational

    std::string str() const { return rational ? "Q" : std::to_string(p); }
    friend bool operator==(const FieldDesc& a, const FieldDesc& b) {
        return a.rational == b.rational && a.p == b.p;
    }
};

inline std::string order_name(OrderKind o) {
    switch (o) {
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "graded-lex";
    }
    return "?";
}

// Optional process-global cache hooks (installed by the CLI layer; the
// kernel stays pure when unset).  Keys are canonical content strings; values
// opaque serialized blobs validated by the consumer.
struct CacheHooks {
    std::function<std::optional<std::string>(const std::string&)> get;
    std::function<void(const std::string&, const std::string&)> put;
};
inline CacheHooks& cache_hooks() {
    static CacheHooks h;
    return h;
}

template <class K>
struct Ring {
    FieldDesc field;
    PolyCtx ctx;
    std::vector<std::string> vars;
    K one;
    std::vector<Poly<K>> ideal;  // as given (normalized terms), homogeneous, degree >= 1
    std::vector<Poly<K>> gb;     // reduced GB of the ideal
    std::vector<GBElem<K>> gbe;  // gb in reducer form, built once at finalize
    long dim = 0;                // Krull dimension of R

    bool is_ambient() const { return ideal.empty(); }
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

// Canonical content key (exponent-vector form, no variable names) used for
// structural ring equality and cache keys.
template <class K>
std::string ring_key(const Ring<K>& R) {
    std::ostringstream os;
    os << "field:" << R.field.str() << ";n:" << R.ctx.nvars << ";w:";
    for (long w : R.ctx.weights) os << w << ",";
    os << ";ord:" << order_name(R.ctx.order) << ";ideal:";
    for (const auto& f : R.ideal) {
        for (const auto& t : f.terms) {
            os << t.c.str() << "[";
            for (int e : t.m) os << e << ",";
            os << "]";
        }
        os << "|";
    }
    return os.str();
}

template <class K>
bool same_ring(const Ring<K>& a, const Ring<K>& b) {
    return ring_key(a) == ring_key(b);
}

template <class K>
RingPtr<K> make_ring(FieldDesc field, std::vector<std::string> vars, std::vector<long> weights,
                     OrderKind order, const std::vector<std::string>& ideal_strs, const K& one) {
    auto R = std::make_shared<Ring<K>>();
    R->field = field;
    R->vars = std::move(vars);
    R->one = one;
    R->ctx.nvars = static_cast<int>(R->vars.size());
    if (weights.empty()) weights.assign(R->vars.size(), 1);
    if (weights.size() != R->vars.size())
        throw input_error("ring: weight list length must match variable count");
    for (long w : weights)
        if (w < 1) throw input_error("ring: weights must be positive integers");
    for (size_t i = 0; i < R->vars.size(); ++i)
        for (size_t j = i + 1; j < R->vars.size(); ++j)
            if (R->vars[i] == R->vars[j])
                throw input_error("ring: duplicate variable '" + R->vars[i] + "'");
    R->ctx.weights = std::move(weights);
    R->ctx.order = order;

    for (const auto& s : ideal_strs) {
        Poly<K> f = parse_poly(s, R->ctx, R->vars, one);
        if (f.is_zero()) continue;
        auto d = homogeneous_degree(R->ctx, f);
        if (!d) {
            // name the offending term pair for the error message
            long d0 = wdeg(R->ctx, f.terms.front().m);
            std::string bad;
            for (const auto& t : f.terms)
                if (wdeg(R->ctx, t.m) != d0) {
                    Poly<K> tp;
                    tp.terms.push_back(t);
                    bad = poly_to_string(tp, R->vars);
                    break;
                }
            throw input_error("ring: relation \"" + s +
                              "\" is not homogeneous for the declared weights (term " + bad +
                              " has a different degree)");
        }
        if (*d < 1) throw input_error("ring: relation \"" + s + "\" has a unit term");
        R->ideal.push_back(std::move(f));
    }
    return R;
}

// Finish construction: compute the reduced GB (cache-hook aware) and dim.
template <class K>
void ring_finalize(Ring<K>& R);

template <class K>
RingPtr<K> make_ring_finalized(FieldDesc field, std::vector<std::string> vars,
                               std::vector<long> weights, OrderKind order,
                               const std::vector<std::string>& ideal_strs, const K& one) {
    auto R = make_ring<K>(field, std::move(vars), std::move(weights), order, ideal_strs, one);
    ring_finalize(const_cast<Ring<K>&>(*R));
    return R;
}

template <class K>
std::vector<Mono> leading_monomials(const std::vector<Poly<K>>& polys) {
    std::vector<Mono> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(lm(f));
    return out;
}

// Compact exponent-form blob for polynomial lists (cache values).
template <class K>
std::string polys_to_blob(const std::vector<Poly<K>>& polys) {
    std::ostringstream os;
    for (const auto& f : polys) {
        for (const auto& t : f.terms) {
            os << t.c.str() << " ";
            for (int e : t.m) os << e << " ";
            os << ";";
        }
        os << "\n";
    }
    return os.str();
}

template <class K>
std::optional<std::vector<Poly<K>>> blob_to_polys(const std::string& blob, const PolyCtx& ctx,
                                                  const K& one) {
    std::vector<Poly<K>> out;
    std::istringstream lines(blob);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        Poly<K> f;
        std::istringstream ls(line);
        std::string chunk;
        while (std::getline(ls, chunk, ';')) {
            std::istringstream ts(chunk);
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
        // validate the descending-sorted invariant instead of trusting it
        for (size_t i = 1; i < f.terms.size(); ++i)
            if (mono_cmp(ctx, f.terms[i - 1].m, f.terms[i].m) <= 0) return std::nullopt;
        out.push_back(std::move(f));
    }
    return out;
}

template <class K>
void ring_finalize(Ring<K>& R) {
    const std::string key = "gb1|" + ring_key(R);
    bool from_cache = false;
    if (cache_hooks().get) {
        if (auto blob = cache_hooks().get(key)) {
            if (auto polys = blob_to_polys(*blob, R.ctx, R.one)) {
                // sanity: the cached basis must at least contain the ideal
                bool ok = true;
                for (const auto& f : R.ideal)
                    if (!normal_form(R.ctx, f, *polys).is_zero()) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    R.gb = std::move(*polys);
                    from_cache = true;
                }
            }
        }
    }
    if (!from_cache) {
        R.gb = groebner_basis(R.ctx, R.ideal);
        if (cache_hooks().put) cache_hooks().put(key, polys_to_blob(R.gb));
    }
    for (const auto& g : R.gb)
        if (!g.is_zero() && mono_is_one(lm(g)))
            throw input_error("ring: the relations generate the unit ideal");
    long d = monomial_krull_dim(R.ctx.nvars, leading_monomials(R.gb));
    CMKIT_CHECK(d >= 0, "ring_finalize: unit ideal slipped through");
    R.dim = d;
    R.gbe = to_gb_elems(R.ctx, R.gb);
}

// The ambient polynomial ring S of R (same variables/weights/order, no ideal).
template <class K>
RingPtr<K> ambient_ring(const Ring<K>& R) {
    auto S = std::make_shared<Ring<K>>();
    S->field = R.field;
    S->ctx = R.ctx;
    S->vars = R.vars;
    S->one = R.one;
    S->dim = R.ctx.nvars;
    return S;
}

template <class K>
Poly<K> r_nf(const Ring<K>& R, const Poly<K>& f) {
    if (R.gb.empty()) return f;
    if (!R.gbe.empty()) {
        PolyVec<K> r = vec_nf(R.ctx, 1, PolyVec<K>{f}, R.gbe);
        return r[0];
    }
    return normal_form(R.ctx, f, R.gb);
}

template <class K>
Poly<K> r_mul(const Ring<K>& R, const Poly<K>& a, const Poly<K>& b) {
    return r_nf(R, poly_mul(R.ctx, a, b));
}

template <class K>
bool r_is_zero(const Ring<K>& R, const Poly<K>& f) {
    return r_nf(R, f).is_zero();
}

// Krull dimension of R/(extra) = S/(I + extra).
template <class K>
long krull_dimension_rel(const Ring<K>& R, const std::vector<Poly<K>>& extra) {
    std::vector<Poly<K>> gens = R.gb;
    for (const auto& f : extra)
        if (!f.is_zero()) gens.push_back(f);
    auto gb = groebner_basis(R.ctx, gens);
    for (const auto& g : gb)
        if (mono_is_one(lm(g))) return -1;  // unit ideal: empty Spec
    return monomial_krull_dim(R.ctx.nvars, leading_monomials(gb));
}

// The variables as polynomials: generators of the graded maximal ideal m.
template <class K>
std::vector<Poly<K>> maximal_ideal_gens(const Ring<K>& R) {
    std::vector<Poly<K>> out;
    for (int i = 0; i < R.ctx.nvars; ++i) out.push_back(poly_var(R.ctx, i, R.one));
    return out;
}

}  // namespace cmkit
