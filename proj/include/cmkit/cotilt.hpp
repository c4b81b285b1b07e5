#pragma once

// Spec fragments (finite posets of named primes), Bass tables, associated
// primes, characteristic sequences with their three validity conditions,
// class membership via Bass-row vanishing, syzygy levels, the Gorenstein-flat
// Bass criterion, enumeration of sequences between bounds, and the
// MCM-classification driver.  All spectral statements are relative to the
// supplied fragment.

#include <string>
#include <vector>

#include "cmkit/constructions.hpp"
#include "cmkit/invariants.hpp"

namespace cmkit {

template <class K>
struct SpecFragment {
    RingPtr<K> ring;
    std::vector<PrimeIdeal<K>> primes;
    std::vector<std::vector<bool>> leq;  // leq[i][j]: p_i contained in p_j
    long m_index = -1;
};

template <class K>
bool fragment_has(const SpecFragment<K>& F, const std::string& name) {
    for (const auto& p : F.primes)
        if (p.name == name) return true;
    return false;
}

// Build and validate a fragment.  The maximal ideal is appended (named "m")
// when no listed prime equals it.  Checks: distinct ideals (antisymmetry),
// every prime below m, heights strictly increasing along strict containment.
template <class K>
SpecFragment<K> make_fragment(RingPtr<K> ring, std::vector<PrimeIdeal<K>> primes) {
    SpecFragment<K> F;
    F.ring = ring;
    F.primes = std::move(primes);
    {
        std::set<std::string> names;
        for (const auto& p : F.primes)
            if (!names.insert(p.name).second)
                throw input_error("fragment: duplicate prime name '" + p.name + "'");
    }
    for (size_t i = 0; i < F.primes.size(); ++i)
        if (is_maximal_prime(*ring, F.primes[i])) F.m_index = static_cast<long>(i);
    if (F.m_index < 0) {
        if (fragment_has(F, "m"))
            throw input_error("fragment: name 'm' is reserved for the maximal ideal");
        F.primes.push_back(maximal_prime(*ring));
        F.m_index = static_cast<long>(F.primes.size()) - 1;
    }
    size_t n = F.primes.size();
    F.leq.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            F.leq[i][j] = prime_contained(*ring, F.primes[i], F.primes[j]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (F.leq[i][j] && F.leq[j][i])
                throw input_error("fragment: primes '" + F.primes[i].name + "' and '" +
                                  F.primes[j].name + "' are the same ideal");
            if (F.leq[i][j] && !(F.primes[i].height < F.primes[j].height))
                throw input_error("fragment: height does not increase from '" +
                                  F.primes[i].name + "' to containing '" + F.primes[j].name +
                                  "'");
        }
    for (size_t i = 0; i < n; ++i)
        if (!F.leq[i][static_cast<size_t>(F.m_index)])
            throw input_error("fragment: prime '" + F.primes[i].name +
                              "' is not contained in the maximal ideal");
    return F;
}

// Verify user-declared containments (pairs of prime names, "q inside p").
template <class K>
void fragment_verify_declared(const SpecFragment<K>& F,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto index_of = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < F.primes.size(); ++i)
            if (F.primes[i].name == name) return i;
        throw input_error("fragment: unknown prime name '" + name + "' in containments");
    };
    for (const auto& [q, p] : pairs)
        if (!F.leq[index_of(q)][index_of(p)])
            throw input_error("fragment: declared containment '" + q + "' inside '" + p +
                              "' does not hold");
}

// Lift a fragment along a trivial extension: each prime gains all adjoined
// variables; names, certification, and heights carry over.
template <class K>
SpecFragment<K> lift_fragment(const SpecFragment<K>& F, const TrivExt<K>& ext) {
    if (!same_ring(*F.ring, *ext.base))
        throw input_error("lift_fragment: fragment is over a different ring");
    std::vector<PrimeIdeal<K>> lifted;
    for (const auto& p : F.primes) {
        std::vector<Poly<K>> gens;
        for (const auto& f : p.gens) gens.push_back(lift_to_extension(ext, f));
        for (int j = 0; j < ext.t; ++j)
            gens.push_back(poly_var(ext.T->ctx, ext.base->ctx.nvars + j, ext.T->one));
        PrimeIdeal<K> q = make_prime(*ext.T, gens, p.certified, p.name);
        CMKIT_CHECK(q.height == p.height, "lift_fragment: height changed under lifting");
        lifted.push_back(std::move(q));
    }
    return make_fragment(ext.T, std::move(lifted));
}

// ---------------------------------------------------------------------------
// Bass tables and associated primes.

template <class K>
struct BassTable {
    long max_i = 0;
    // entries[p][i] = mu_i(p, M) for prime index p, 0 <= i <= max_i
    std::vector<std::vector<long>> entries;
};

// One prime's Bass numbers mu_0..mu_max_i, off a single resolution of R/p.
template <class K>
std::vector<long> bass_row(const Module<K>& M, const PrimeIdeal<K>& p, long max_i) {
    Module<K> Rp = prime_quotient_module(M.ring, p);
    auto res = free_resolution(Rp, max_i + 1);
    std::vector<long> row;
    for (long i = 0; i <= max_i; ++i)
        row.push_back(rank_at_prime(ext_from_resolution(res, i, M), p));
    return row;
}

template <class K>
BassTable<K> bass_table(const Module<K>& M, const SpecFragment<K>& F, long max_i) {
    if (max_i < 0) throw input_error("bass_table: max_i must be >= 0");
    BassTable<K> T;
    T.max_i = max_i;
    for (const auto& p : F.primes) T.entries.push_back(bass_row(M, p, max_i));
    return T;
}

// Associated primes relative to the fragment: { p : mu_0(p, M) > 0 }.
template <class K>
std::vector<int> ass_primes(const Module<K>& M, const SpecFragment<K>& F) {
    std::vector<int> out;
    for (size_t j = 0; j < F.primes.size(); ++j)
        if (bass_row(M, F.primes[j], 0)[0] > 0) out.push_back(static_cast<int>(j));
    return out;
}

// ---------------------------------------------------------------------------
// Characteristic sequences.

struct CharSeq {
    long n = 0;
    std::vector<std::vector<int>> subsets;  // per slot: ascending prime indices
};

inline bool subset_contains(const std::vector<int>& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline bool subset_leq(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Generization-closed within the fragment: closed under passing to contained
// primes that the fragment lists.
template <class K>
bool is_generization_closed(const SpecFragment<K>& F, const std::vector<int>& s) {
    for (int j : s)
        for (size_t i = 0; i < F.primes.size(); ++i)
            if (F.leq[i][static_cast<size_t>(j)] && !subset_contains(s, static_cast<int>(i)))
                return false;
    return true;
}

// Support of Bass row i of the ring: { p : mu_i(p, R) > 0 }.
template <class K>
std::vector<std::vector<int>> ring_bass_supports(const SpecFragment<K>& F, long n) {
    std::vector<std::vector<int>> sup(static_cast<size_t>(n));
    if (n == 0) return sup;
    Module<K> Rm = ring_as_module(F.ring);
    BassTable<K> T = bass_table(Rm, F, n - 1);
    for (long i = 0; i < n; ++i)
        for (size_t j = 0; j < F.primes.size(); ++j)
            if (T.entries[j][static_cast<size_t>(i)] > 0)
                sup[static_cast<size_t>(i)].push_back(static_cast<int>(j));
    return sup;
}

// Validity report; empty `violations` means valid.
template <class K>
std::vector<std::string> charseq_violations(const SpecFragment<K>& F, const CharSeq& seq) {
    std::vector<std::string> v;
    if (seq.n != static_cast<long>(seq.subsets.size())) {
        v.push_back("length mismatch: n = " + std::to_string(seq.n) + " but " +
                    std::to_string(seq.subsets.size()) + " subsets given");
        return v;
    }
    for (long i = 0; i < seq.n; ++i) {
        const auto& s = seq.subsets[static_cast<size_t>(i)];
        for (int j : s)
            if (j < 0 || j >= static_cast<int>(F.primes.size())) {
                v.push_back("slot " + std::to_string(i) + ": prime index out of range");
                return v;
            }
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            v.push_back("slot " + std::to_string(i) + ": indices not strictly ascending");
        if (!is_generization_closed(F, s))
            v.push_back("slot " + std::to_string(i) + ": not generization-closed in the fragment");
    }
    for (long i = 0; i + 1 < seq.n; ++i)
        if (!subset_leq(seq.subsets[static_cast<size_t>(i)], seq.subsets[static_cast<size_t>(i + 1)]))
            v.push_back("slots " + std::to_string(i) + " to " + std::to_string(i + 1) +
                        ": not nested increasing");
    auto sup = ring_bass_supports(F, seq.n);
    for (long i = 0; i < seq.n; ++i)
        for (int j : sup[static_cast<size_t>(i)])
            if (!subset_contains(seq.subsets[static_cast<size_t>(i)], j))
                v.push_back("slot " + std::to_string(i) + ": missing '" +
                            F.primes[static_cast<size_t>(j)].name +
                            "' carrying a nonzero ring Bass number");
    return v;
}

template <class K>
bool charseq_valid(const SpecFragment<K>& F, const CharSeq& seq) {
    return charseq_violations(F, seq).empty();
}

// Membership in the class of a characteristic sequence: every Bass row i of M
// vanishes outside X_i.  On failure the witness names (i, prime, mu).
struct MembershipWitness {
    long i = 0;
    std::string prime;
    long mu = 0;
};

template <class K>
bool class_membership(const Module<K>& M, const SpecFragment<K>& F, const CharSeq& seq,
                      std::optional<MembershipWitness>* witness = nullptr) {
    for (size_t j = 0; j < F.primes.size(); ++j) {
        // which slots exclude this prime?
        long need = -1;
        for (long i = 0; i < seq.n; ++i)
            if (!subset_contains(seq.subsets[static_cast<size_t>(i)], static_cast<int>(j)))
                need = std::max(need, i);
        if (need < 0) continue;
        auto row = bass_row(M, F.primes[j], need);
        for (long i = 0; i < seq.n; ++i) {
            if (i > need) break;
            if (subset_contains(seq.subsets[static_cast<size_t>(i)], static_cast<int>(j)))
                continue;
            if (row[static_cast<size_t>(i)] != 0) {
                if (witness)
                    *witness = MembershipWitness{i, F.primes[j].name, row[static_cast<size_t>(i)]};
                return false;
            }
        }
    }
    if (witness) *witness = std::nullopt;
    return true;
}

// D_i = { M : depth M >= i }.
template <class K>
bool depth_class_membership(const Module<K>& M, long i) {
    auto d = depth(M);
    return !d.has_value() || *d >= i;
}

// Least i <= d with the i-th syzygy maximal Cohen-Macaulay.  Requires a
// Cohen-Macaulay ring (where syzygies reach MCM by step d).
template <class K>
long lcm_level(const Module<K>& M) {
    const RingPtr<K>& R = M.ring;
    if (!is_cm_ring(R)) throw input_error("lcm_level: ring is not Cohen-Macaulay");
    long d = R->dim;
    if (is_zero_module(M)) return 0;
    auto res = free_resolution(M, d + 1);
    for (long i = 0; i <= d; ++i) {
        // the i-th syzygy is presented by (shifts[i], diffs[i])
        Module<K> omega = make_module(R, res.shifts[static_cast<size_t>(i)],
                                      res.diffs[static_cast<size_t>(i)]);
        if (is_mcm(omega)) return i;
    }
    CMKIT_CHECK(false, "lcm_level: no MCM syzygy up to dim over a CM ring");
    return -1;
}

// Gorenstein-flat Bass criterion over the fragment: mu_i(p, M) = 0 for all
// i < ht p.  Precondition: the ring is Gorenstein.
template <class K>
bool gflat_test(const Module<K>& M, const SpecFragment<K>& F,
                std::optional<MembershipWitness>* witness = nullptr) {
    if (!is_gorenstein(F.ring)) throw input_error("gflat_test: ring is not Gorenstein");
    for (const auto& p : F.primes) {
        if (p.height <= 0) continue;
        auto row = bass_row(M, p, p.height - 1);
        for (long i = 0; i < p.height; ++i)
            if (row[static_cast<size_t>(i)] != 0) {
                if (witness) *witness = MembershipWitness{i, p.name, row[static_cast<size_t>(i)]};
                return false;
            }
    }
    if (witness) *witness = std::nullopt;
    return true;
}

// Independent cross-check route: Ext^i(M, R) = 0 for 1 <= i <= dim R.
template <class K>
bool gproj_ext_route(const Module<K>& M, long* first_nonzero = nullptr) {
    const RingPtr<K>& R = M.ring;
    long d = R->dim;
    if (d == 0) return true;
    auto res = free_resolution(M, d + 1);
    Module<K> Rm = ring_as_module(R);
    for (long i = 1; i <= d; ++i) {
        Module<K> e = ext_from_resolution(res, i, Rm);
        if (!is_zero_module(e)) {
            if (first_nonzero) *first_nonzero = i;
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration.

// All valid sequences S with lower_i <= S_i <= upper_i, ordered
// lexicographically by the per-slot index lists.  Throws cap_exceeded with an
// estimate when the output would exceed `cap`.
template <class K>
std::vector<CharSeq> enumerate_charseqs(const SpecFragment<K>& F, long n, const CharSeq& lower,
                                        const CharSeq& upper,
                                        unsigned long long cap = 1000000ull) {
    if (lower.n != n || upper.n != n)
        throw input_error("enumerate_charseqs: bounds must have length n");
    {
        auto lv = charseq_violations(F, lower);
        if (!lv.empty()) throw input_error("enumerate_charseqs: lower bound invalid: " + lv[0]);
        auto uv = charseq_violations(F, upper);
        if (!uv.empty()) throw input_error("enumerate_charseqs: upper bound invalid: " + uv[0]);
    }
    for (long i = 0; i < n; ++i)
        if (!subset_leq(lower.subsets[static_cast<size_t>(i)], upper.subsets[static_cast<size_t>(i)]))
            throw input_error("enumerate_charseqs: lower bound not below upper bound at slot " +
                              std::to_string(i));

    size_t np = F.primes.size();
    CMKIT_CHECK(np <= 30, "enumerate_charseqs: fragment too large");
    auto to_mask = [&](const std::vector<int>& s) {
        std::uint32_t m = 0;
        for (int j : s) m |= (1u << j);
        return m;
    };
    auto to_set = [&](std::uint32_t m) {
        std::vector<int> s;
        for (size_t j = 0; j < np; ++j)
            if (m & (1u << j)) s.push_back(static_cast<int>(j));
        return s;
    };

    // per-slot candidates: generization-closed sets between the bounds
    std::vector<std::vector<std::uint32_t>> cand(static_cast<size_t>(n));
    unsigned long long estimate = n == 0 ? 1 : 0;
    for (long i = 0; i < n; ++i) {
        std::uint32_t lo = to_mask(lower.subsets[static_cast<size_t>(i)]);
        std::uint32_t hi = to_mask(upper.subsets[static_cast<size_t>(i)]);
        std::uint32_t free_mask = hi & ~lo;
        int nfree = __builtin_popcount(free_mask);
        if (nfree > 20) throw cap_exceeded(1ull << nfree);
        std::vector<int> free_bits;
        for (size_t j = 0; j < np; ++j)
            if (free_mask & (1u << j)) free_bits.push_back(static_cast<int>(j));
        std::vector<std::uint32_t> cs;
        for (std::uint32_t pick = 0; pick < (1u << nfree); ++pick) {
            std::uint32_t m = lo;
            for (int b = 0; b < nfree; ++b)
                if (pick & (1u << b)) m |= (1u << free_bits[static_cast<size_t>(b)]);
            if (is_generization_closed(F, to_set(m))) cs.push_back(m);
        }
        if (estimate == 0)
            estimate = cs.size();
        else if (estimate > (1ull << 62) / std::max<size_t>(cs.size(), 1))
            estimate = 1ull << 62;  // saturate
        else
            estimate *= cs.size();
        cand[static_cast<size_t>(i)] = std::move(cs);
    }

    // sort candidates lexicographically by index list
    for (auto& cs : cand)
        std::sort(cs.begin(), cs.end(), [&](std::uint32_t a, std::uint32_t b) {
            return to_set(a) < to_set(b);
        });

    std::vector<CharSeq> out;
    std::vector<std::uint32_t> chosen;
    std::function<void(long)> walk = [&](long slot) {
        if (slot == n) {
            if (out.size() >= cap) throw cap_exceeded(estimate);
            CharSeq s;
            s.n = n;
            for (auto m : chosen) s.subsets.push_back(to_set(m));
            out.push_back(std::move(s));
            return;
        }
        for (std::uint32_t m : cand[static_cast<size_t>(slot)]) {
            if (slot > 0 && (chosen.back() & ~m) != 0) continue;  // nesting pruning
            chosen.push_back(m);
            walk(slot + 1);
            chosen.pop_back();
        }
    };
    walk(0);
    return out;
}

// Height filter H_(i) within the fragment.
template <class K>
std::vector<int> height_filter(const SpecFragment<K>& F, long i) {
    std::vector<int> s;
    for (size_t j = 0; j < F.primes.size(); ++j)
        if (F.primes[j].height <= i) s.push_back(static_cast<int>(j));
    return s;
}

// Punctured spectrum within the fragment: all primes except the maximal ideal.
template <class K>
std::vector<int> punctured_spectrum(const SpecFragment<K>& F) {
    std::vector<int> s;
    for (size_t j = 0; j < F.primes.size(); ++j)
        if (static_cast<long>(j) != F.m_index) s.push_back(static_cast<int>(j));
    return s;
}

template <class K>
struct ClassifyReport {
    long n = 0;
    CharSeq lower, upper;
    std::vector<CharSeq> seqs;
    // membership[s][m]: sample module m belongs to the class of sequence s
    std::vector<std::vector<bool>> membership;
};

// All d-cotilting classes containing the maximal Cohen-Macaulay modules,
// relative to the fragment: sequences between the height-filter lower bound
// and the punctured-spectrum upper bound.
template <class K>
ClassifyReport<K> classify_mcm_cotilting(const SpecFragment<K>& F,
                                         const std::vector<Module<K>>& samples = {},
                                         unsigned long long cap = 1000000ull) {
    if (!is_cm_ring(F.ring))
        throw input_error("classify_mcm_cotilting: ring is not Cohen-Macaulay");
    ClassifyReport<K> rep;
    long d = F.ring->dim;
    rep.n = d;
    rep.lower.n = rep.upper.n = d;
    for (long i = 0; i < d; ++i) {
        rep.lower.subsets.push_back(height_filter(F, i));
        rep.upper.subsets.push_back(punctured_spectrum(F));
    }
    if (d == 0) {
        rep.seqs.push_back(CharSeq{0, {}});  // the single class of all modules
    } else {
        rep.seqs = enumerate_charseqs(F, d, rep.lower, rep.upper, cap);
    }
    for (const auto& s : rep.seqs) {
        std::vector<bool> row;
        for (const auto& M : samples) row.push_back(class_membership(M, F, s));
        rep.membership.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Three-way MCM agreement.

struct HolmReport {
    bool mcm = false;      // depth M = dim R
    bool tor1 = false;     // Tor_1(R/(xs), M) = 0 for every pool R-sequence xs
    bool gflat_z = false;  // zero-extension of M is Gorenstein-flat over R x omega
};

template <class K>
HolmReport holm_triple(const Module<K>& M, const SpecFragment<K>& F, std::uint64_t seed = 1,
                       int kappa = 8) {
    const RingPtr<K>& R = M.ring;
    if (!is_cm_ring(R)) throw input_error("holm_triple: ring is not Cohen-Macaulay");
    HolmReport rep;
    rep.mcm = is_mcm(M);
    rep.tor1 = true;
    for (const auto& xs : rseq_pool(R, seed, kappa)) {
        // Tor_1(R/(xs), M) = H_1(xs; M) since xs is a regular sequence
        if (!is_zero_module(koszul_homology(1, xs, M))) {
            rep.tor1 = false;
            break;
        }
    }
    Module<K> w = canonical_module(R);
    TrivExt<K> ext = trivial_extension(w);
    CMKIT_CHECK(is_gorenstein(ext.T), "holm_triple: trivial extension not Gorenstein");
    Module<K> zM = z_restrict(M, ext);
    SpecFragment<K> FT = lift_fragment(F, ext);
    rep.gflat_z = gflat_test(zM, FT);
    return rep;
}

}  // namespace cmkit
