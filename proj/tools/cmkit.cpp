// cmkit: invariants of finitely presented graded modules over quotients of
// polynomial rings, plus cotilting-class machinery over Spec fragments.
//
// Exit codes: 0 computed; 1 property false (boolean commands under --strict);
// 2 input error; 3 enumeration cap exceeded.  Internal invariant violations
// exit 4.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cmkit/cache.hpp"
#include "cmkit/cotilt.hpp"
#include "cmkit/invariants.hpp"
#include "cmkit/io.hpp"
#include "cmkit/version.hpp"

namespace {

using namespace cmkit;

struct Opts {
    std::string cmd;
    std::string file;      // primary positional (ring / module / sequence file)
    std::string fragment;  // --fragment
    std::string seq_file;  // --charseq
    std::vector<std::string> ideal;  // -I
    std::vector<std::string> elems;  // -x
    long max_i = 0;
    long dim_n = -1;
    std::string lower_file, upper_file;
    std::string module_file;
    bool use_canonical = false;
    bool json = false, strict = false, verbose = false;
    std::uint64_t seed = 0;
    unsigned long long cap = 1000000ull;
    std::string out;
};

// Collected result: human text or a JSON document, written to --out or stdout.
struct Emitter {
    const Opts& opt;
    ojson j;
    std::ostringstream human;
    bool raw_json = false;  // canonical/dual/triv-ext emit a bare file-format document

    explicit Emitter(const Opts& o) : opt(o) { j["command"] = o.cmd; }

    void finish() {
        std::string text =
            (opt.json || raw_json) ? j.dump(2) + "\n" : human.str();
        if (!opt.out.empty())
            write_output(opt.out, text);
        else
            std::cout << text;
    }
};

std::string extdeg_str(const ExtDegree& d) {
    return d.has_value() ? std::to_string(*d) : std::string("infinity");
}

// Split "x, y+z" style option values into polynomial strings.
std::vector<std::string> split_elems(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& chunk : raw) {
        size_t start = 0;
        while (start <= chunk.size()) {
            size_t comma = chunk.find(',', start);
            std::string piece = chunk.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            size_t a = piece.find_first_not_of(" \t");
            size_t b = piece.find_last_not_of(" \t");
            if (a != std::string::npos) out.push_back(piece.substr(a, b - a + 1));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (out.empty()) throw input_error("no elements given (use -x/-I)");
    return out;
}

template <class K>
std::vector<Poly<K>> parse_elems(const std::vector<std::string>& raw, const Ring<K>& R,
                                 const K& one) {
    std::vector<Poly<K>> out;
    for (const auto& s : split_elems(raw)) out.push_back(parse_poly(s, R.ctx, R.vars, one));
    return out;
}

template <class K>
struct Loaded {
    RingPtr<K> ring;
    std::optional<Module<K>> mod;
};

template <class K>
Loaded<K> load_ring_or_module(const std::string& path, const K& one) {
    if (path.empty()) throw input_error("missing input file");
    ojson j = load_json_file(path);
    auto base = std::filesystem::path(path).parent_path();
    Loaded<K> L;
    switch (json_kind(j)) {
        case JsonKind::ring:
            L.ring = ring_from_json<K>(j, one);
            break;
        case JsonKind::module:
            L.mod = module_from_json<K>(j, base, one);
            L.ring = L.mod->ring;
            break;
        default:
            throw input_error(path + ": expected a ring or module file");
    }
    return L;
}

template <class K>
Module<K> as_module(const Loaded<K>& L) {
    return L.mod ? *L.mod : ring_as_module(L.ring);
}

template <class K>
SpecFragment<K> load_fragment(const std::string& path, const RingPtr<K>* expect_ring,
                              const K& one) {
    if (path.empty()) throw input_error("missing --fragment file");
    ojson j = load_json_file(path);
    if (json_kind(j) != JsonKind::fragment)
        throw input_error(path + ": expected a fragment file");
    auto F = fragment_from_json<K>(j, std::filesystem::path(path).parent_path(), one);
    if (expect_ring && ring_key(**expect_ring) != ring_key(*F.ring))
        throw input_error("module and fragment are over different rings");
    if (!is_cm_ring(F.ring))
        std::fprintf(stderr,
                     "warning: ring is not Cohen-Macaulay; fragment prime heights use the "
                     "formula ht p = dim R - dim R/p, which assumes a Cohen-Macaulay ring\n");
    return F;
}

ojson witness_json(const std::optional<MembershipWitness>& w) {
    ojson arr = ojson::array();
    if (w) {
        ojson o;
        o["i"] = w->i;
        o["prime"] = w->prime;
        o["mu"] = w->mu;
        arr.push_back(std::move(o));
    }
    return arr;
}

// Prime-name lookup shared by the human renderers.
struct SpecFragmentNames {
    std::vector<std::string> names;
};

std::string subset_names(const SpecFragmentNames& f, const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += f.names[static_cast<size_t>(s[i])];
    }
    out += "}";
    return out;
}

template <class K>
SpecFragmentNames frag_names(const SpecFragment<K>& F) {
    SpecFragmentNames n;
    for (const auto& p : F.primes) n.names.push_back(p.name);
    return n;
}

template <class K>
ojson seq_names_json(const SpecFragment<K>& F, const CharSeq& seq) {
    return charseq_to_json(F, seq);
}

// Bool command epilogue: record value, honor --strict.
int finish_bool(Emitter& em, bool value, const char* label) {
    em.j["value"] = value;
    em.human << label << ": " << (value ? "true" : "false") << "\n";
    em.finish();
    return (!value && em.opt.strict) ? 1 : 0;
}

template <class K>
int run_typed(const Opts& opt, const K& one) {
    Emitter em(opt);
    const std::string& c = opt.cmd;

    if (c == "dim") {
        auto L = load_ring_or_module<K>(opt.file, one);
        em.j["value"] = L.ring->dim;
        em.human << "dim = " << L.ring->dim << "\n";
        em.finish();
        return 0;
    }
    if (c == "depth" || c == "codepth") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> M = as_module(L);
        ExtDegree v = (c == "depth") ? depth(M) : codepth(M);
        em.j["value"] = extdeg_to_json(v);
        em.human << c << " = " << extdeg_str(v) << "\n";
        em.finish();
        return 0;
    }
    if (c == "grade" || c == "cograde") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> M = as_module(L);
        auto igens = parse_elems(opt.ideal, *L.ring, one);
        ExtDegree v = (c == "grade") ? grade_ideal(igens, M) : cograde_ideal(igens, M);
        em.j["value"] = extdeg_to_json(v);
        em.human << c << " = " << extdeg_str(v) << "\n";
        em.finish();
        return 0;
    }
    if (c == "is-regular-seq") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> M = as_module(L);
        auto xs = parse_elems(opt.elems, *L.ring, one);
        RegSeqResult r = is_regular_sequence(xs, M);
        em.j["value"] = r.regular;
        em.j["weak"] = r.weak;
        em.human << "is-regular-seq: " << (r.regular ? "true" : "false")
                 << " (weak: " << (r.weak ? "true" : "false") << ")\n";
        em.finish();
        return (!r.regular && opt.strict) ? 1 : 0;
    }
    if (c == "is-sop") {
        auto L = load_ring_or_module<K>(opt.file, one);
        auto xs = parse_elems(opt.elems, *L.ring, one);
        return finish_bool(em, is_sop(xs, *L.ring), "is-sop");
    }
    if (c == "is-mcm") {
        auto L = load_ring_or_module<K>(opt.file, one);
        return finish_bool(em, is_mcm(as_module(L)), "is-mcm");
    }
    if (c == "is-cm") {
        auto L = load_ring_or_module<K>(opt.file, one);
        return finish_bool(em, is_cm_ring(L.ring), "is-cm");
    }
    if (c == "is-gorenstein") {
        auto L = load_ring_or_module<K>(opt.file, one);
        return finish_bool(em, is_gorenstein(L.ring), "is-gorenstein");
    }
    if (c == "canonical" || c == "dual") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> W = (c == "canonical") ? canonical_module(L.ring) : dual_module(as_module(L));
        em.j = module_to_json(W);
        em.raw_json = true;
        em.finish();
        return 0;
    }
    if (c == "lcm-level") {
        auto L = load_ring_or_module<K>(opt.file, one);
        long v = lcm_level(as_module(L));
        em.j["value"] = v;
        em.human << "lcm-level = " << v << "\n";
        em.finish();
        return 0;
    }
    if (c == "triv-ext") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> C = [&]() -> Module<K> {
            if (opt.use_canonical) return canonical_module(L.ring);
            if (!opt.module_file.empty()) {
                auto LM = load_ring_or_module<K>(opt.module_file, one);
                if (!LM.mod) throw input_error("--module must name a module file");
                if (ring_key(*LM.ring) != ring_key(*L.ring))
                    throw input_error("--module is over a different ring");
                return *LM.mod;
            }
            throw input_error("triv-ext needs --canonical or --module FILE");
        }();
        TrivExt<K> ext = trivial_extension(C);
        em.j = ring_to_json(*ext.T);
        em.raw_json = true;
        em.finish();
        return 0;
    }
    if (c == "bass") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> M = as_module(L);
        auto F = load_fragment<K>(opt.fragment, &L.ring, one);
        BassTable<K> T = bass_table(M, F, opt.max_i);
        em.j["relative_to_fragment"] = opt.fragment;
        em.j["max_i"] = T.max_i;
        ojson table;
        for (size_t r = 0; r < F.primes.size(); ++r) table[F.primes[r].name] = T.entries[r];
        em.j["value"] = std::move(table);
        size_t w = 5;
        for (const auto& p : F.primes) w = std::max(w, p.name.size());
        em.human << "bass numbers (relative to fragment " << opt.fragment << ")\n";
        em.human << std::string(w, ' ');
        for (long i = 0; i <= T.max_i; ++i) em.human << "  i=" << i;
        em.human << "\n";
        for (size_t r = 0; r < F.primes.size(); ++r) {
            em.human << F.primes[r].name << std::string(w - F.primes[r].name.size(), ' ');
            for (long i = 0; i <= T.max_i; ++i) {
                std::string cell = std::to_string(T.entries[r][static_cast<size_t>(i)]);
                std::string head = "i=" + std::to_string(i);
                size_t pad = cell.size() < head.size() ? head.size() - cell.size() : 0;
                em.human << "  " << std::string(pad, ' ') << cell;
            }
            em.human << "\n";
        }
        em.finish();
        return 0;
    }
    if (c == "ass") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> M = as_module(L);
        auto F = load_fragment<K>(opt.fragment, &L.ring, one);
        auto idx = ass_primes(M, F);
        ojson names = ojson::array();
        for (int i : idx) names.push_back(F.primes[static_cast<size_t>(i)].name);
        em.j["relative_to_fragment"] = opt.fragment;
        em.j["value"] = names;
        em.human << "associated primes (relative to fragment " << opt.fragment << "): "
                 << subset_names(frag_names(F), idx) << "\n";
        em.finish();
        return 0;
    }
    if (c == "member") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> M = as_module(L);
        if (opt.seq_file.empty()) throw input_error("member needs --charseq FILE");
        ojson sj = load_json_file(opt.seq_file);
        auto [F, seq] =
            charseq_from_json<K>(sj, std::filesystem::path(opt.seq_file).parent_path(), one);
        if (ring_key(*L.ring) != ring_key(*F.ring))
            throw input_error("module and sequence are over different rings");
        auto viol = charseq_violations(F, seq);
        if (!viol.empty()) throw input_error("invalid characteristic sequence: " + viol[0]);
        std::optional<MembershipWitness> w;
        bool v = class_membership(M, F, seq, &w);
        em.j["relative_to_fragment"] = opt.seq_file;
        em.j["value"] = v;
        em.j["witnesses"] = witness_json(w);
        em.human << "member: " << (v ? "true" : "false");
        if (w)
            em.human << "  (mu_" << w->i << "(" << w->prime << ", M) = " << w->mu << " != 0)";
        em.human << "\n";
        em.finish();
        return (!v && opt.strict) ? 1 : 0;
    }
    if (c == "gflat") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> M = as_module(L);
        auto F = load_fragment<K>(opt.fragment, &L.ring, one);
        std::optional<MembershipWitness> w;
        bool v = gflat_test(M, F, &w);
        em.j["relative_to_fragment"] = opt.fragment;
        em.j["value"] = v;
        em.j["witnesses"] = witness_json(w);
        em.human << "gflat: " << (v ? "true" : "false");
        if (w)
            em.human << "  (mu_" << w->i << "(" << w->prime << ", M) = " << w->mu
                     << " != 0 with i < ht p)";
        em.human << "\n";
        em.finish();
        return (!v && opt.strict) ? 1 : 0;
    }
    if (c == "holm-check") {
        auto L = load_ring_or_module<K>(opt.file, one);
        Module<K> M = as_module(L);
        auto F = load_fragment<K>(opt.fragment, &L.ring, one);
        HolmReport r = holm_triple(M, F, opt.seed, 8);
        bool agree = (r.mcm == r.tor1) && (r.tor1 == r.gflat_z);
        em.j["relative_to_fragment"] = opt.fragment;
        ojson v;
        v["mcm"] = r.mcm;
        v["tor1_vanishing"] = r.tor1;
        v["gflat_zero_extension"] = r.gflat_z;
        v["agree"] = agree;
        em.j["value"] = std::move(v);
        em.human << "mcm:                  " << (r.mcm ? "true" : "false") << "\n"
                 << "tor1-vanishing:       " << (r.tor1 ? "true" : "false") << "\n"
                 << "gflat zero-extension: " << (r.gflat_z ? "true" : "false") << "\n"
                 << "agree:                " << (agree ? "true" : "false") << "\n";
        em.finish();
        return (!agree && opt.strict) ? 1 : 0;
    }
    if (c == "charseq validate") {
        if (opt.file.empty()) throw input_error("charseq validate needs a sequence file");
        ojson sj = load_json_file(opt.file);
        auto [F, seq] =
            charseq_from_json<K>(sj, std::filesystem::path(opt.file).parent_path(), one);
        auto viol = charseq_violations(F, seq);
        bool v = viol.empty();
        em.j["value"] = v;
        ojson vs = ojson::array();
        for (const auto& s : viol) vs.push_back(s);
        em.j["violations"] = std::move(vs);
        em.human << "valid: " << (v ? "true" : "false") << "\n";
        for (const auto& s : viol) em.human << "  - " << s << "\n";
        em.finish();
        return (!v && opt.strict) ? 1 : 0;
    }
    if (c == "charseq enumerate" || c == "charseq classify") {
        auto F = load_fragment<K>(opt.fragment, nullptr, one);
        auto names = frag_names(F);
        if (c == "charseq classify") {
            auto rep = classify_mcm_cotilting(F, {}, opt.cap);
            em.j["relative_to_fragment"] = opt.fragment;
            em.j["n"] = rep.n;
            em.j["lower"] = seq_names_json(F, rep.lower);
            em.j["upper"] = seq_names_json(F, rep.upper);
            em.j["count"] = rep.seqs.size();
            ojson arr = ojson::array();
            for (const auto& s : rep.seqs) arr.push_back(seq_names_json(F, s));
            em.j["value"] = std::move(arr);
            em.human << rep.seqs.size() << " " << rep.n
                     << "-cotilting class(es) containing the maximal Cohen-Macaulay modules "
                        "(relative to fragment "
                     << opt.fragment << ")\n";
            for (size_t s = 0; s < rep.seqs.size(); ++s) {
                em.human << "  " << (s + 1) << ":";
                for (const auto& sub : rep.seqs[s].subsets)
                    em.human << " " << subset_names(names, sub);
                em.human << "\n";
            }
            em.finish();
            return 0;
        }
        long n = opt.dim_n >= 0 ? opt.dim_n : F.ring->dim;
        CharSeq lower, upper;
        lower.n = upper.n = n;
        for (long i = 0; i < n; ++i) {
            lower.subsets.push_back(height_filter(F, i));
            upper.subsets.push_back(punctured_spectrum(F));
        }
        auto load_bound = [&](const std::string& path, CharSeq& dst) {
            if (path.empty()) return;
            ojson sj = load_json_file(path);
            auto [BF, bseq] =
                charseq_from_json<K>(sj, std::filesystem::path(path).parent_path(), one);
            if (ring_key(*BF.ring) != ring_key(*F.ring))
                throw input_error(path + ": bound sequence is over a different ring");
            std::vector<std::string> a, b;
            for (const auto& p : BF.primes) a.push_back(p.name);
            for (const auto& p : F.primes) b.push_back(p.name);
            if (a != b)
                throw input_error(path + ": bound sequence uses a different fragment");
            dst = bseq;
        };
        load_bound(opt.lower_file, lower);
        load_bound(opt.upper_file, upper);
        auto seqs = enumerate_charseqs(F, n, lower, upper, opt.cap);
        em.j["relative_to_fragment"] = opt.fragment;
        em.j["n"] = n;
        em.j["count"] = seqs.size();
        ojson arr = ojson::array();
        for (const auto& s : seqs) arr.push_back(seq_names_json(F, s));
        em.j["value"] = std::move(arr);
        em.human << seqs.size() << " characteristic sequence(s), n = " << n
                 << " (relative to fragment " << opt.fragment << ")\n";
        for (size_t s = 0; s < seqs.size(); ++s) {
            em.human << "  " << (s + 1) << ":";
            for (const auto& sub : seqs[s].subsets) em.human << " " << subset_names(names, sub);
            em.human << "\n";
        }
        em.finish();
        return 0;
    }
    throw input_error("unknown command: " + c);
}

}  // namespace

int main(int argc, char** argv) {
    Opts opt;
    CLI::App app{"invariants of graded modules over quotient rings"};
    app.set_version_flag("--version", CMKIT_VERSION);
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "machine output (stable keys)");
    app.add_flag("--strict", opt.strict, "exit 1 when a boolean answer is false");
    app.add_flag("--verbose", opt.verbose, "cache counters and progress notes on stderr");
    app.add_option("--seed", opt.seed, "PRNG seed for element pools (default 0)");
    app.add_option("--cap", opt.cap, "enumeration cap (default 1000000)");
    app.add_option("--out", opt.out, "write output to a file instead of stdout");

    auto add_cmd = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                       const std::string& full) {
        CLI::App* c = parent->add_subcommand(name, desc);
        c->fallthrough();
        c->callback([&opt, full]() {
            if (opt.cmd.empty()) opt.cmd = full;
        });
        return c;
    };
    auto with_file = [&](CLI::App* c, const char* what) {
        c->add_option("file", opt.file, what)->required();
        return c;
    };

    with_file(add_cmd(&app, "dim", "Krull dimension of the ring", "dim"),
              "ring or module file");
    with_file(add_cmd(&app, "depth", "depth of the module (R itself for a ring file)", "depth"),
              "ring or module file");
    with_file(add_cmd(&app, "codepth", "codepth of the module", "codepth"),
              "ring or module file");
    {
        auto* c = with_file(add_cmd(&app, "grade", "grade of an ideal on the module", "grade"),
                            "ring or module file");
        c->add_option("-I", opt.ideal, "ideal generators (comma separated, repeatable)")
            ->required();
    }
    {
        auto* c = with_file(
            add_cmd(&app, "cograde", "cograde of an ideal on the module", "cograde"),
            "ring or module file");
        c->add_option("-I", opt.ideal, "ideal generators (comma separated, repeatable)")
            ->required();
    }
    {
        auto* c = with_file(add_cmd(&app, "is-regular-seq",
                                    "is the sequence regular on the module", "is-regular-seq"),
                            "ring or module file");
        c->add_option("-x", opt.elems, "elements (comma separated, repeatable)")->required();
    }
    {
        auto* c = with_file(
            add_cmd(&app, "is-sop", "is the sequence a system of parameters", "is-sop"),
            "ring or module file");
        c->add_option("-x", opt.elems, "elements (comma separated, repeatable)")->required();
    }
    with_file(add_cmd(&app, "is-mcm", "is the module maximal Cohen-Macaulay", "is-mcm"),
              "ring or module file");
    with_file(add_cmd(&app, "is-cm", "is the ring Cohen-Macaulay", "is-cm"),
              "ring or module file");
    with_file(add_cmd(&app, "is-gorenstein", "is the ring Gorenstein", "is-gorenstein"),
              "ring or module file");
    with_file(add_cmd(&app, "canonical", "canonical module (module JSON)", "canonical"),
              "ring file");
    with_file(add_cmd(&app, "dual", "Hom(M, R) (module JSON)", "dual"),
              "ring or module file");
    {
        auto* c = with_file(
            add_cmd(&app, "bass", "Bass number table over a fragment", "bass"),
            "ring or module file");
        c->add_option("--fragment", opt.fragment, "fragment file")->required();
        c->add_option("--max-i", opt.max_i, "largest homological degree (default 0)");
    }
    {
        auto* c = with_file(
            add_cmd(&app, "ass", "associated primes within a fragment", "ass"),
            "ring or module file");
        c->add_option("--fragment", opt.fragment, "fragment file")->required();
    }
    {
        auto* cs = add_cmd(&app, "charseq", "characteristic-sequence commands", "");
        cs->require_subcommand(1);
        with_file(add_cmd(cs, "validate", "check a sequence file", "charseq validate"),
                  "sequence file");
        {
            auto* c = add_cmd(cs, "enumerate", "list sequences between bounds",
                              "charseq enumerate");
            c->add_option("--fragment", opt.fragment, "fragment file")->required();
            c->add_option("--dim", opt.dim_n, "sequence length n (default: ring dimension)");
            c->add_option("--lower", opt.lower_file, "lower bound sequence file");
            c->add_option("--upper", opt.upper_file, "upper bound sequence file");
        }
        {
            auto* c = add_cmd(cs, "classify",
                              "d-cotilting classes containing the MCM modules",
                              "charseq classify");
            c->add_option("--fragment", opt.fragment, "fragment file")->required();
        }
    }
    {
        auto* c = with_file(
            add_cmd(&app, "member", "module membership in a sequence's class", "member"),
            "ring or module file");
        c->add_option("--charseq", opt.seq_file, "sequence file")->required();
    }
    {
        auto* c = with_file(
            add_cmd(&app, "gflat", "Gorenstein-flat Bass criterion over a fragment", "gflat"),
            "ring or module file");
        c->add_option("--fragment", opt.fragment, "fragment file")->required();
    }
    with_file(add_cmd(&app, "lcm-level", "least i with the i-th syzygy MCM", "lcm-level"),
              "ring or module file");
    {
        auto* c = with_file(
            add_cmd(&app, "triv-ext", "trivial extension ring (ring JSON)", "triv-ext"),
            "ring file");
        c->add_flag("--canonical", opt.use_canonical, "extend by the canonical module");
        c->add_option("--module", opt.module_file, "extend by this module file");
    }
    {
        auto* c = with_file(
            add_cmd(&app, "holm-check", "three-way MCM agreement over a fragment",
                    "holm-check"),
            "ring or module file");
        c->add_option("--fragment", opt.fragment, "fragment file")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        install_file_cache();  // CMKIT_CACHE, if set

        // dispatch on the coefficient field of whichever file anchors the command
        std::string anchor = !opt.file.empty() ? opt.file
                             : !opt.fragment.empty() ? opt.fragment
                                                     : opt.seq_file;
        if (anchor.empty()) throw input_error("no input file");
        ojson aj = load_json_file(anchor);
        ojson rj = peek_ring_json(aj, std::filesystem::path(anchor).parent_path());
        FieldDesc f = parse_field(rj.at("field"));

        int rc = f.rational ? run_typed<Rat>(opt, Rat(1))
                            : run_typed<Fp>(opt, Fp(1, f.p));
        if (opt.verbose)
            std::fprintf(stderr, "cache: %lu hits, %lu misses, %lu puts\n", cache_stats().hits,
                         cache_stats().misses, cache_stats().puts);
        return rc;
    } catch (const cap_exceeded& e) {
        std::fprintf(stderr, "cap exceeded: %s\n", e.what());
        return 3;
    } catch (const input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const std::logic_error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    }
}
