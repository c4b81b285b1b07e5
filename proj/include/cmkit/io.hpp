#pragma once

// JSON file formats and (de)serialization.
//
//   ring:      {"field": "Q" | "<p>" | <p>, "vars": [...], "order": "grevlex"
//               | "lex" | "graded-lex", "weights": [w1,...]?, "relations": [...]}
//   module:    {"ring": <path or inline ring>, "generator_degrees": [...],
//               "relations": [[entry,...], ...]}   (one inner list per relation,
//               one entry per generator; entries are polynomial strings)
//   fragment:  {"ring": <path or inline>, "primes": [{"name": ..., "generators":
//               [...], "prime_certified": true?}, ...], "containments": [[q,p],...]?}
//   sequence:  {"fragment": <path or inline>, "subsets": [[prime names...], ...]}
//
// String references are resolved relative to the referencing file's directory.

#include <filesystem>
#include <fstream>
#include <utility>

#include "json.hpp"

#include "cmkit/cotilt.hpp"

namespace cmkit {

using ojson = nlohmann::ordered_json;

inline ojson load_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw input_error("cannot open file: " + p.string());
    try {
        return ojson::parse(in);
    } catch (const std::exception& e) {
        throw input_error("JSON parse error in " + p.string() + ": " + e.what());
    }
}

// Follow a string reference (path relative to `base`) or accept an inline
// object; returns the object plus the base directory for nested references.
inline std::pair<ojson, std::filesystem::path> resolve_ref(const ojson& j,
                                                           const std::filesystem::path& base) {
    if (j.is_string()) {
        std::filesystem::path p = base / std::filesystem::path(j.get<std::string>());
        return {load_json_file(p), p.parent_path()};
    }
    if (j.is_object()) return {j, base};
    throw input_error("expected a file path or an inline object");
}

inline FieldDesc parse_field(const ojson& j) {
    long long p = -1;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Q" || s == "q") return FieldDesc{true, 0};
        try {
            size_t pos = 0;
            p = std::stoll(s, &pos);
            if (pos != s.size()) p = -1;
        } catch (...) {
            p = -1;
        }
    } else if (j.is_number_integer() || j.is_number_unsigned()) {
        p = j.get<long long>();
    }
    if (p < 2 || p >= (1ll << 31) || !probable_prime(static_cast<std::uint64_t>(p)))
        throw input_error("field must be \"Q\" or a prime p with 2 <= p < 2^31");
    return FieldDesc{false, static_cast<std::uint32_t>(p)};
}

inline OrderKind parse_order(const std::string& s) {
    if (s == "grevlex") return OrderKind::grevlex;
    if (s == "lex") return OrderKind::lex;
    if (s == "graded-lex" || s == "grlex") return OrderKind::grlex;
    throw input_error("unknown monomial order '" + s + "' (grevlex, lex, graded-lex)");
}

enum class JsonKind { ring, module, fragment, sequence };

inline JsonKind json_kind(const ojson& j) {
    if (!j.is_object()) throw input_error("input must be a JSON object");
    if (j.contains("subsets")) return JsonKind::sequence;
    if (j.contains("primes")) return JsonKind::fragment;
    if (j.contains("generator_degrees")) return JsonKind::module;
    if (j.contains("vars")) return JsonKind::ring;
    throw input_error(
        "cannot classify input: expected one of vars/generator_degrees/primes/subsets");
}

// Locate the ring object reachable from any input kind (for field dispatch).
inline ojson peek_ring_json(const ojson& j, const std::filesystem::path& base) {
    switch (json_kind(j)) {
        case JsonKind::ring:
            return j;
        case JsonKind::module:
        case JsonKind::fragment: {
            auto [rj, rb] = resolve_ref(j.at("ring"), base);
            (void)rb;
            if (json_kind(rj) != JsonKind::ring)
                throw input_error("\"ring\" entry does not resolve to a ring");
            return rj;
        }
        case JsonKind::sequence: {
            auto [fj, fb] = resolve_ref(j.at("fragment"), base);
            return peek_ring_json(fj, fb);
        }
    }
    throw input_error("unreachable");
}

template <class K>
RingPtr<K> ring_from_json(const ojson& j, const K& one) {
    if (json_kind(j) != JsonKind::ring) throw input_error("expected a ring object");
    FieldDesc field = parse_field(j.at("field"));
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) {
        if (!v.is_string()) throw input_error("vars must be strings");
        vars.push_back(v.get<std::string>());
    }
    std::vector<long> weights;
    if (j.contains("weights"))
        for (const auto& w : j.at("weights")) weights.push_back(w.get<long>());
    OrderKind order = parse_order(j.value("order", std::string("grevlex")));
    std::vector<std::string> rels;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) {
            if (r.is_string())
                rels.push_back(r.get<std::string>());
            else
                throw input_error("ring relations must be polynomial strings");
        }
    return make_ring_finalized<K>(field, vars, weights, order, rels, one);
}

inline std::string json_poly_entry(const ojson& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer() || e.is_number_unsigned())
        return std::to_string(e.get<long long>());
    throw input_error("matrix entries must be polynomial strings");
}

template <class K>
Module<K> module_from_json(const ojson& j, const std::filesystem::path& base, const K& one) {
    if (json_kind(j) != JsonKind::module)
        throw input_error("expected a module object (generator_degrees, relations)");
    auto [rj, rb] = resolve_ref(j.at("ring"), base);
    (void)rb;
    RingPtr<K> R = ring_from_json<K>(rj, one);
    std::vector<long> gen_degs;
    for (const auto& d : j.at("generator_degrees")) gen_degs.push_back(d.get<long>());
    Mat<K> rel;
    rel.rows = static_cast<long>(gen_degs.size());
    if (j.contains("relations"))
        for (const auto& row : j.at("relations")) {
            if (!row.is_array() || row.size() != gen_degs.size())
                throw input_error("each relation must list one entry per generator");
            PolyVec<K> col;
            for (const auto& e : row)
                col.push_back(parse_poly(json_poly_entry(e), R->ctx, R->vars, one));
            rel.cols.push_back(std::move(col));
        }
    return make_module(R, std::move(gen_degs), std::move(rel));
}

template <class K>
SpecFragment<K> fragment_from_json(const ojson& j, const std::filesystem::path& base,
                                   const K& one) {
    if (json_kind(j) != JsonKind::fragment) throw input_error("expected a fragment object");
    auto [rj, rb] = resolve_ref(j.at("ring"), base);
    (void)rb;
    RingPtr<K> R = ring_from_json<K>(rj, one);
    std::vector<PrimeIdeal<K>> primes;
    long counter = 0;
    for (const auto& pj : j.at("primes")) {
        std::string name = pj.value("name", "p" + std::to_string(counter));
        ++counter;
        std::vector<Poly<K>> gens;
        if (pj.contains("generators"))
            for (const auto& g : pj.at("generators"))
                gens.push_back(parse_poly(json_poly_entry(g), R->ctx, R->vars, one));
        bool certified = pj.value("prime_certified", true);
        primes.push_back(make_prime(*R, std::move(gens), certified, name));
    }
    SpecFragment<K> F = make_fragment(R, std::move(primes));
    if (j.contains("containments")) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& c : j.at("containments")) {
            if (!c.is_array() || c.size() != 2)
                throw input_error("containments must be [contained, containing] name pairs");
            pairs.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
        fragment_verify_declared(F, pairs);
    }
    return F;
}

template <class K>
int fragment_prime_index(const SpecFragment<K>& F, const std::string& name) {
    for (size_t i = 0; i < F.primes.size(); ++i)
        if (F.primes[i].name == name) return static_cast<int>(i);
    throw input_error("unknown prime name '" + name + "' in sequence");
}

template <class K>
std::pair<SpecFragment<K>, CharSeq> charseq_from_json(const ojson& j,
                                                      const std::filesystem::path& base,
                                                      const K& one) {
    if (json_kind(j) != JsonKind::sequence)
        throw input_error("expected a characteristic-sequence object (fragment, subsets)");
    auto [fj, fb] = resolve_ref(j.at("fragment"), base);
    SpecFragment<K> F = fragment_from_json<K>(fj, fb, one);
    CharSeq seq;
    for (const auto& sub : j.at("subsets")) {
        if (!sub.is_array()) throw input_error("subsets must be arrays of prime names");
        std::vector<int> s;
        for (const auto& nm : sub) s.push_back(fragment_prime_index(F, nm.get<std::string>()));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        seq.subsets.push_back(std::move(s));
    }
    seq.n = static_cast<long>(seq.subsets.size());
    return {std::move(F), std::move(seq)};
}

// ---------------------------------------------------------------------------
// Serialization.

inline ojson field_to_json(const FieldDesc& f) {
    return f.rational ? ojson("Q") : ojson(std::to_string(f.p));
}

template <class K>
ojson ring_to_json(const Ring<K>& R) {
    ojson j;
    j["field"] = field_to_json(R.field);
    j["vars"] = R.vars;
    j["order"] = order_name(R.ctx.order);
    bool unit_weights = true;
    for (long w : R.ctx.weights)
        if (w != 1) unit_weights = false;
    if (!unit_weights) j["weights"] = R.ctx.weights;
    ojson rels = ojson::array();
    for (const auto& f : R.ideal) rels.push_back(poly_to_string(f, R.vars));
    j["relations"] = rels;
    return j;
}

template <class K>
ojson module_to_json(const Module<K>& M) {
    ojson j;
    j["ring"] = ring_to_json(*M.ring);
    j["generator_degrees"] = M.gen_degs;
    ojson rels = ojson::array();
    for (const auto& col : M.rel.cols) {
        ojson row = ojson::array();
        for (const auto& p : col) row.push_back(poly_to_string(p, M.ring->vars));
        rels.push_back(std::move(row));
    }
    j["relations"] = rels;
    return j;
}

template <class K>
ojson charseq_to_json(const SpecFragment<K>& F, const CharSeq& seq) {
    ojson subsets = ojson::array();
    for (const auto& s : seq.subsets) {
        ojson names = ojson::array();
        for (int i : s) names.push_back(F.primes[static_cast<size_t>(i)].name);
        subsets.push_back(std::move(names));
    }
    ojson j;
    j["subsets"] = std::move(subsets);
    return j;
}

inline ojson extdeg_to_json(const ExtDegree& d) {
    return d.has_value() ? ojson(*d) : ojson("infinity");
}

inline void write_output(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
}

}  // namespace cmkit
