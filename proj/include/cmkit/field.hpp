#pragma once

// Coefficient fields: Fp (prime field, word-sized p) and Rat (arbitrary
// precision rationals on top of GMP).  Everything upstream is templated on
// the field type K; the only contract K must satisfy is the one these two
// classes share: value semantics, K() is zero, +,-,*,/ and inv(), is_zero(),
// operator==, str().
//
// Fp carries its modulus in each element so polynomials stay plain value
// types.  A default-constructed Fp is a modulus-less zero that acts as the
// neutral element against any modulus (needed so K() works generically).

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cmkit/common.hpp"

namespace cmkit {

struct Fp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;  // 0 only for the generic zero

    Fp() = default;
    Fp(long long x, std::uint32_t mod) : p(mod) {
        CMKIT_CHECK(mod >= 2, "Fp modulus must be >= 2");
        long long r = x % static_cast<long long>(mod);
        if (r < 0) r += mod;
        v = static_cast<std::uint32_t>(r);
        if (v == 0) p = mod;  // keep modulus; harmless either way
    }

    bool is_zero() const { return v == 0; }

    static std::uint32_t common_mod(const Fp& a, const Fp& b) {
        if (a.p == 0) return b.p;
        if (b.p == 0) return a.p;
        CMKIT_CHECK(a.p == b.p, "mixed Fp moduli");
        return a.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint32_t m = common_mod(a, b);
        if (m == 0) return Fp{};
        std::uint64_t s = static_cast<std::uint64_t>(a.v) + b.v;
        if (s >= m) s -= m;
        Fp r; r.v = static_cast<std::uint32_t>(s); r.p = m; return r;
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint32_t m = common_mod(a, b);
        if (m == 0) return Fp{};
        std::uint64_t s = static_cast<std::uint64_t>(a.v) + m - b.v;
        if (s >= m) s -= m;
        Fp r; r.v = static_cast<std::uint32_t>(s); r.p = m; return r;
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint32_t m = common_mod(a, b);
        if (m == 0) return Fp{};
        std::uint64_t s = static_cast<std::uint64_t>(a.v) * b.v % m;
        Fp r; r.v = static_cast<std::uint32_t>(s); r.p = m; return r;
    }
    Fp operator-() const {
        if (is_zero()) return *this;
        Fp r; r.p = p; r.v = p - v; return r;
    }
    Fp inv() const {
        CMKIT_CHECK(!is_zero() && p != 0, "Fp: inverse of zero");
        // extended Euclid on (v, p)
        long long t = 0, nt = 1, r = p, nr = v;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        CMKIT_CHECK(r == 1, "Fp: modulus not prime?");
        if (t < 0) t += p;
        Fp out; out.p = p; out.v = static_cast<std::uint32_t>(t); return out;
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v == 0 && b.v == 0) return true;
        return a.v == b.v && a.p == b.p;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v); }
};

struct Rat {
    mpq_class q;  // invariant: canonical form

    Rat() : q(0) {}
    Rat(long long x) : q(static_cast<long>(x)) {}
    Rat(const mpz_class& num, const mpz_class& den) : q(num, den) {
        CMKIT_CHECK(den != 0, "Rat: zero denominator");
        q.canonicalize();
    }
    explicit Rat(const mpq_class& v) : q(v) { q.canonicalize(); }

    bool is_zero() const { return q == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; r.q = a.q + b.q; return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; r.q = a.q - b.q; return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; r.q = a.q * b.q; return r; }
    Rat operator-() const { Rat r; r.q = -q; return r; }
    Rat inv() const {
        CMKIT_CHECK(!is_zero(), "Rat: inverse of zero");
        Rat r; r.q = 1 / q; return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q == b.q; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    std::string str() const { return q.get_str(); }
};

// Construct an element of the same field as `sample` from an integer literal.
inline Fp scalar_from(long long x, const Fp& sample) {
    CMKIT_CHECK(sample.p != 0, "Fp: cannot infer modulus from bare zero");
    return Fp(x, sample.p);
}
inline Rat scalar_from(long long x, const Rat&) { return Rat(x); }

// Big-integer constructor (for parsed literals of arbitrary size).
inline Fp scalar_from_mpz(const mpz_class& x, const Fp& sample) {
    CMKIT_CHECK(sample.p != 0, "Fp: cannot infer modulus from bare zero");
    mpz_class m = mpz_class(x) % sample.p;
    if (m < 0) m += sample.p;
    return Fp(m.get_si(), sample.p);
}
inline Rat scalar_from_mpz(const mpz_class& x, const Rat&) { Rat r; r.q = x; return r; }

// Inverse of str(): exact round-trip for cache blobs.
inline Fp scalar_from_str(const std::string& s, const Fp& sample) {
    CMKIT_CHECK(sample.p != 0, "Fp: cannot infer modulus");
    mpz_class z(s);
    mpz_class m = z % sample.p;
    if (m < 0) m += sample.p;
    return Fp(m.get_si(), sample.p);
}
inline Rat scalar_from_str(const std::string& s, const Rat&) {
    Rat r;
    r.q = mpq_class(s);
    CMKIT_CHECK(r.q.get_den() != 0, "Rat: zero denominator");
    r.q.canonicalize();
    return r;
}

inline bool probable_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace cmkit
