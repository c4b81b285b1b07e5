#pragma once

// Polynomial string syntax: integer literals, named variables, + - * ^ and
// parentheses, e.g. "y^2 - x*z" or "3*(x+y)^2".  Errors carry the offending
// position.  The printer emits the canonical descending-term form that the
// parser round-trips.

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmkit/polynomial.hpp"

namespace cmkit {

namespace detail {

template <class K>
class PolyParser {
  public:
    PolyParser(const std::string& src, const PolyCtx& ctx,
               const std::vector<std::string>& vars, const K& one)
        : src_(src), ctx_(ctx), one_(one) {
        for (size_t i = 0; i < vars.size(); ++i) var_idx_[vars[i]] = static_cast<int>(i);
    }

    Poly<K> run() {
        Poly<K> p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("parse error at position " + std::to_string(pos_ + 1) + " in \"" +
                          src_ + "\": " + what);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Poly<K> expr() {
        Poly<K> acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else (void)eat('+');
        Poly<K> t = product();
        acc = neg ? poly_neg(t) : t;
        while (true) {
            if (eat('+')) acc = poly_add(ctx_, acc, product());
            else if (eat('-')) acc = poly_sub(ctx_, acc, product());
            else break;
        }
        return acc;
    }

    Poly<K> product() {
        Poly<K> acc = power();
        while (eat('*')) acc = poly_mul(ctx_, acc, power());
        return acc;
    }

    Poly<K> power() {
        Poly<K> base = atom();
        if (eat('^')) {
            long e = integer_literal();
            if (e < 0) fail("negative exponent");
            Poly<K> r = poly_const(ctx_, one_);
            for (long i = 0; i < e; ++i) r = poly_mul(ctx_, r, base);
            return r;
        }
        return base;
    }

    Poly<K> atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly<K> inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            mpz_class z(src_.substr(start, pos_ - start));
            K coef = scalar_from_mpz(z, one_);
            if (eat('/')) {  // rational literal a/b
                skip_ws();
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    fail("expected a denominator");
                size_t dstart = pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                mpz_class d(src_.substr(dstart, pos_ - dstart));
                K den = scalar_from_mpz(d, one_);
                if (den.is_zero()) fail("zero denominator");
                coef = coef / den;
            }
            return poly_const(ctx_, coef);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            auto it = var_idx_.find(name);
            if (it == var_idx_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return poly_var(ctx_, it->second, one_);
        }
        fail("expected a coefficient, variable or '('");
    }

    long integer_literal() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected an integer");
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    const std::string& src_;
    const PolyCtx& ctx_;
    K one_;
    std::map<std::string, int> var_idx_;
    size_t pos_ = 0;
};

}  // namespace detail

template <class K>
Poly<K> parse_poly(const std::string& src, const PolyCtx& ctx,
                   const std::vector<std::string>& vars, const K& one) {
    return detail::PolyParser<K>(src, ctx, vars, one).run();
}

template <class K>
std::string poly_to_string(const Poly<K>& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms) {
        std::string c = t.c.str();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string m;
        for (size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (!m.empty()) m += "*";
            m += vars[i];
            if (t.m[i] > 1) m += "^" + std::to_string(t.m[i]);
        }
        if (m.empty()) {
            out += c;
        } else {
            if (c != "1") out += c + "*";
            out += m;
        }
    }
    return out;
}

}  // namespace cmkit
