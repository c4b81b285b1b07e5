// Acceptance gate.  Eleven end-to-end checks over the full corpus: eight base
// rings plus four trivial extensions by the canonical module, over F_101 and
// Q.  Prints one [PASS] line per criterion with its runtime against the
// agreed bound; the first violation prints [FAIL] file:line and exits 1.
//
// usage: acceptance <path-to-cmkit-binary>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmkit/cotilt.hpp"
#include "cmkit/io.hpp"
#include "support/corpus.hpp"
#include "support/oracle_degreewise.hpp"

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                       \
    do {                                                                         \
        if (!(cond)) {                                                           \
            std::printf("[FAIL] %s:%d %s\n", __FILE__, __LINE__,                 \
                        std::string(msg).c_str());                               \
            std::exit(1);                                                        \
        }                                                                        \
    } while (0)

using namespace cmkit;
namespace fs = std::filesystem;

namespace {

using clock_t_ = std::chrono::steady_clock;

double elapsed(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

// One corpus ring with everything the criteria keep asking for.
template <class K>
struct RingCase {
    std::string name;
    RingPtr<K> R;
    bool cm = false;
    bool gorenstein = false;
    bool is_ext = false;               // trivial extension (smaller pools)
    SpecFragment<K> frag;
    std::optional<Module<K>> omega;    // cached canonical module, CM rings only
};

template <class K>
struct Bench {
    corpus::Corpus<K> c;
    std::vector<RingCase<K>> cases;    // 8 base rings then 4 trivial extensions
};

template <class K>
Bench<K> build_bench() {
    Bench<K> b{corpus::build_corpus(corpus::one_of<K>(), corpus::field_of<K>()), {}};
    for (const auto& e : b.c.base) {
        RingCase<K> rc;
        rc.name = e.name;
        rc.R = e.R;
        rc.cm = e.cm;
        rc.gorenstein = e.gorenstein;
        rc.frag = corpus::standard_fragment(b.c, e.R);
        if (e.cm) rc.omega = canonical_module(e.R);
        b.cases.push_back(std::move(rc));
    }
    // trivial extensions R x omega: Gorenstein of the same dimension
    std::vector<std::pair<std::string, RingPtr<K>>> tes = {
        {"T(k[x])", b.c.kx}, {"T(k[x]/(x^2))", b.c.kx2},
        {"T(k[x,y]/(xy))", b.c.rxy}, {"T(semigroup)", b.c.sg}};
    for (auto& [nm, base] : tes) {
        auto ext = trivial_extension(canonical_module(base));
        RingCase<K> rc;
        rc.name = nm;
        rc.R = ext.T;
        rc.cm = true;
        rc.gorenstein = true;
        rc.is_ext = true;
        rc.frag = lift_fragment(corpus::standard_fragment(b.c, base), ext);
        rc.omega = canonical_module(ext.T);
        b.cases.push_back(std::move(rc));
    }
    return b;
}

// The module corpus over one ring: R, k, R/(first variable), canonical module.
template <class K>
std::vector<std::pair<std::string, Module<K>>> corpus_modules(const RingCase<K>& rc) {
    std::vector<std::pair<std::string, Module<K>>> out;
    out.emplace_back("R", ring_as_module(rc.R));
    out.emplace_back("k", residue_field_module(rc.R));
    if (rc.R->ctx.nvars > 0) out.emplace_back("R/(v)", corpus::var_quotient(rc.R, 0));
    if (rc.omega) out.emplace_back("omega", *rc.omega);
    return out;
}

template <class K>
long finite_depth(const Module<K>& M, const std::string& what) {
    auto d = depth(M);
    REQUIRE(d.has_value(), what + ": depth is infinite (zero module?)");
    return *d;
}

// --------------------------------------------------------------------------
// 1.  Ext^i(k, M) lengths match the degreewise linear-algebra oracle.

template <class K>
void criterion1(const Bench<K>& b) {
    for (const auto& rc : b.cases) {
        long imax = rc.R->dim + 1;
        oracle::ExtOracle<K> orc(rc.R, imax);
        auto k = residue_field_module(rc.R);
        auto res_k = free_resolution(k, imax + 1);
        for (const auto& [mn, M] : corpus_modules(rc)) {
            for (long i = 0; i <= imax; ++i) {
                auto e = ext_from_resolution(res_k, i, M);
                auto len = finite_length_dim(e);
                std::string at = rc.name + " Ext^" + std::to_string(i) + "(k, " + mn + ")";
                REQUIRE(len.has_value(), at + ": expected finite length");
                long want = orc.dim_ext(i, M);
                REQUIRE(*len == want, at + ": kernel says " + std::to_string(*len) +
                                          ", oracle says " + std::to_string(want));
            }
        }
    }
}

// --------------------------------------------------------------------------
// 2.  grade + cograde <= n for ideals minimally generated by n elements
//     (variable subsets stay minimal: every corpus ideal lives in m^2), with
//     grade finite iff cograde finite; and depth + codepth <= dim R.

template <class K>
void criterion2(const Bench<K>& b) {
    for (const auto& rc : b.cases) {
        int n = rc.R->ctx.nvars;
        auto mods = corpus_modules(rc);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Poly<K>> igens;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) igens.push_back(poly_var(rc.R->ctx, v, rc.R->one));
            long ngen = __builtin_popcount(mask);
            for (const auto& [mn, M] : mods) {
                auto g = grade_ideal(igens, M);
                auto cg = cograde_ideal(igens, M);
                std::string at = rc.name + " mask=" + std::to_string(mask) + " M=" + mn;
                REQUIRE(g.has_value() == cg.has_value(),
                        at + ": grade and cograde must be finite together");
                if (g) REQUIRE(*g + *cg <= ngen, at + ": grade " + std::to_string(*g) +
                                                     " + cograde " + std::to_string(*cg) +
                                                     " exceeds " + std::to_string(ngen));
            }
        }
        for (const auto& [mn, M] : mods) {
            auto dp = depth(M);
            auto cd = codepth(M);
            std::string at = rc.name + " M=" + mn;
            REQUIRE(dp.has_value() && cd.has_value(), at + ": depth/codepth infinite");
            REQUIRE(*dp + *cd <= rc.R->dim, at + ": depth + codepth exceeds dim");
        }
    }
}

// --------------------------------------------------------------------------
// 3.  depth_via_sop (a single SoP is enough) agrees with depth == dim R for
//     every corpus module and every SoP in the seeded pool.

template <class K>
void criterion3(const Bench<K>& b) {
    for (const auto& rc : b.cases) {
        auto pool = sop_pool(*rc.R, 3, rc.is_ext ? 2 : 4);
        REQUIRE(!pool.empty(), rc.name + ": SoP pool came back empty");
        for (const auto& [mn, M] : corpus_modules(rc)) {
            auto dp = depth(M);
            REQUIRE(dp.has_value(), rc.name + "/" + mn + ": depth infinite");
            bool maximal = (*dp == rc.R->dim);
            for (const auto& xs : pool)
                REQUIRE(depth_via_sop(M, xs) == maximal,
                        rc.name + "/" + mn + ": single-SoP depth test disagrees with depth");
        }
    }
}

// --------------------------------------------------------------------------
// 4.  Cohen-Macaulay / Gorenstein ground truth.

template <class K>
void criterion4(const Bench<K>& b) {
    for (const auto& rc : b.cases) {
        REQUIRE(is_cm_ring(rc.R) == rc.cm, rc.name + ": is_cm_ring disagrees with ground truth");
        REQUIRE(is_gorenstein(rc.R) == rc.gorenstein,
                rc.name + ": is_gorenstein disagrees with ground truth");
    }
}

// --------------------------------------------------------------------------
// 5.  canonical_module satisfies dim_k Ext^i(k, w) = delta_{i,d} on every CM
//     corpus ring; w iso to R (mutual cyclic generation) exactly when
//     Gorenstein.

template <class K>
void criterion5(const Bench<K>& b) {
    for (const auto& rc : b.cases) {
        if (!rc.cm) continue;
        long d = rc.R->dim;
        Module<K> w = canonical_module(rc.R);
        REQUIRE(is_mcm(w), rc.name + ": canonical module is not MCM");
        auto k = residue_field_module(rc.R);
        auto res_k = free_resolution(k, d + 2);
        for (long i = 0; i <= d + 1; ++i) {
            auto len = finite_length_dim(ext_from_resolution(res_k, i, w));
            std::string at = rc.name + " Ext^" + std::to_string(i) + "(k, w)";
            REQUIRE(len.has_value(), at + ": expected finite length");
            REQUIRE(*len == (i == d ? 1 : 0), at + ": delta condition fails");
        }
        REQUIRE(module_iso_to_ring(w) == rc.gorenstein,
                rc.name + ": w iso R must hold exactly on Gorenstein rings");
    }
}

// --------------------------------------------------------------------------
// 6.  MCM Bass vanishing below the height, and ass(MCM) inside the minimal
//     primes, over every corpus fragment.

template <class K>
long criterion6(const Bench<K>& b) {
    long exercised = 0;
    for (const auto& rc : b.cases) {
        for (const auto& [mn, M] : corpus_modules(rc)) {
            if (!is_mcm(M) || is_zero_module(M)) continue;
            ++exercised;
            for (const auto& p : rc.frag.primes) {
                if (p.height <= 0) continue;
                auto row = bass_row(M, p, p.height - 1);
                for (long i = 0; i < p.height; ++i)
                    REQUIRE(row[static_cast<size_t>(i)] == 0,
                            rc.name + "/" + mn + ": mu_" + std::to_string(i) + "(" + p.name +
                                ") nonzero below height " + std::to_string(p.height));
            }
            for (int j : ass_primes(M, rc.frag))
                REQUIRE(rc.frag.primes[static_cast<size_t>(j)].height == 0,
                        rc.name + "/" + mn + ": associated prime " +
                            rc.frag.primes[static_cast<size_t>(j)].name + " is not minimal");
        }
    }
    return exercised;
}

// --------------------------------------------------------------------------
// 7.  Gorenstein-flat: Bass-vanishing route == Ext^{1..d}(M, R) = 0 route.

template <class K>
long criterion7(const Bench<K>& b, bool* saw_nonmember) {
    long count = 0;
    for (const auto& rc : b.cases) {
        if (!rc.gorenstein) continue;
        for (const auto& [mn, M] : corpus_modules(rc)) {
            bool via_bass = gflat_test(M, rc.frag);
            bool via_ext = gproj_ext_route(M);
            REQUIRE(via_bass == via_ext,
                    rc.name + "/" + mn + ": the two Gorenstein-flat routes disagree");
            if (!via_bass) *saw_nonmember = true;
            ++count;
        }
    }
    return count;
}

// --------------------------------------------------------------------------
// 8.  Three-way agreement: is_mcm == pool-Tor_1-vanishing == Gorenstein-flat
//     of the zero-extension over R x omega, on k[x,y]/(xy) and the semigroup
//     ring (all single-variable quotients included).

template <class K>
void criterion8(const Bench<K>& b) {
    for (const RingPtr<K>& R : {b.c.rxy, b.c.sg}) {
        const RingCase<K>* rc = nullptr;
        for (const auto& cand : b.cases)
            if (cand.R == R) rc = &cand;
        REQUIRE(rc != nullptr, "criterion 8: corpus ring not found");
        auto mods = corpus_modules(*rc);
        for (int v = 1; v < R->ctx.nvars; ++v)
            mods.emplace_back("R/(v" + std::to_string(v) + ")", corpus::var_quotient(R, v));
        for (const auto& [mn, M] : mods) {
            HolmReport rep = holm_triple(M, rc->frag, 1, 6);
            std::string at = rc->name + "/" + mn;
            REQUIRE(rep.mcm == rep.tor1,
                    at + ": MCM and pool-Tor_1-vanishing disagree");
            REQUIRE(rep.tor1 == rep.gflat_z,
                    at + ": pool-Tor_1 and zero-extension Gorenstein-flat disagree");
        }
    }
}

// --------------------------------------------------------------------------
// 9.  Classification counts, cross-checked by a brute-force subset filter.

template <class K>
void criterion9(const Bench<K>& b) {
    // (a) k[x,y]/(xy), n = 1: exactly one sequence between the bounds
    {
        const auto& F = corpus::standard_fragment(b.c, b.c.rxy);
        auto rep = classify_mcm_cotilting(F);
        REQUIRE(rep.seqs.size() == 1, "rxy n=1: expected exactly one sequence");
        std::vector<int> want = height_filter(F, 0);
        REQUIRE(rep.seqs[0].subsets.size() == 1 && rep.seqs[0].subsets[0] == want,
                "rxy n=1: the unique sequence must be the height filter");
    }
    // (b) k[x,y] with the five-prime fragment, n = 2: exactly eight
    const auto& F = corpus::standard_fragment(b.c, b.c.kxy);
    size_t np = F.primes.size();
    REQUIRE(np == 5, "kxy fragment: expected five primes");
    auto rep = classify_mcm_cotilting(F);
    REQUIRE(rep.seqs.size() == 8, "kxy n=2: expected exactly eight sequences, got " +
                                      std::to_string(rep.seqs.size()));

    // brute force over all 2^5 x 2^5 subset pairs, conditions restated from
    // scratch: bounds from the heights, nesting, generization closure from
    // the containment matrix, and the ring's Bass support per level
    auto T = bass_table(ring_as_module(F.ring), F, 1);
    unsigned full = (1u << np) - 1;
    unsigned punct = full & ~(1u << F.m_index);
    unsigned low0 = 0, low1 = 0, sup0 = 0, sup1 = 0;
    for (size_t j = 0; j < np; ++j) {
        if (F.primes[j].height <= 0) low0 |= 1u << j;
        if (F.primes[j].height <= 1) low1 |= 1u << j;
        if (T.entries[j][0] > 0) sup0 |= 1u << j;
        if (T.entries[j][1] > 0) sup1 |= 1u << j;
    }
    low1 &= punct;  // bounds stay inside the punctured spectrum
    auto closed = [&](unsigned s) {
        for (size_t j = 0; j < np; ++j) {
            if (!(s & (1u << j))) continue;
            for (size_t i = 0; i < np; ++i)
                if (F.leq[i][j] && !(s & (1u << i))) return false;
        }
        return true;
    };
    std::vector<std::pair<unsigned, unsigned>> brute;
    for (unsigned s0 = 0; s0 <= full; ++s0)
        for (unsigned s1 = 0; s1 <= full; ++s1) {
            if ((s0 & low0) != low0 || (s0 & ~punct) != 0) continue;
            if ((s1 & low1) != low1 || (s1 & ~punct) != 0) continue;
            if ((s0 & ~s1) != 0) continue;                       // nested
            if (!closed(s0) || !closed(s1)) continue;
            if ((s0 & sup0) != sup0 || (s1 & sup1) != sup1) continue;
            brute.emplace_back(s0, s1);
        }
    REQUIRE(brute.size() == 8, "kxy n=2 brute force: expected eight pairs, got " +
                                   std::to_string(brute.size()));
    std::vector<std::pair<unsigned, unsigned>> lib;
    for (const auto& s : rep.seqs) {
        REQUIRE(s.subsets.size() == 2, "kxy n=2: sequence with wrong slot count");
        unsigned a = 0, bm = 0;
        for (int j : s.subsets[0]) a |= 1u << j;
        for (int j : s.subsets[1]) bm |= 1u << j;
        lib.emplace_back(a, bm);
    }
    std::sort(brute.begin(), brute.end());
    std::sort(lib.begin(), lib.end());
    REQUIRE(brute == lib, "kxy n=2: enumerated sequences differ from the brute-force list");
}

// --------------------------------------------------------------------------
// 10. lcm_level(M) = max(0, d - depth M), and the depth lemma bound
//     depth(syzygy) >= min(depth M + 1, d), for non-free corpus modules over
//     the CM corpus rings (lcm_level is only defined there).

template <class K>
void criterion10(const Bench<K>& b) {
    for (const auto& rc : b.cases) {
        if (!rc.cm) continue;
        long d = rc.R->dim;
        for (const auto& [mn, M] : corpus_modules(rc)) {
            if (is_zero_module(M) || module_iso_to_ring(M)) continue;  // free: level 0 anyway
            long dp = finite_depth(M, rc.name + "/" + mn);
            REQUIRE(lcm_level(M) == std::max(0l, d - dp),
                    rc.name + "/" + mn + ": lcm_level differs from d - depth");
            auto res = free_resolution(M, 2);
            Module<K> O1 = make_module(rc.R, res.shifts[1], res.diffs[1]);
            if (is_zero_module(O1)) continue;
            long d1 = finite_depth(O1, rc.name + "/" + mn + " syzygy");
            REQUIRE(d1 >= std::min(dp + 1, d),
                    rc.name + "/" + mn + ": first syzygy violates the depth lemma bound");
        }
    }
}

// --------------------------------------------------------------------------
// 11. CLI determinism: every golden command (both fields, JSON output) twice,
//     byte for byte; cold and warm cache runs byte-identical to uncached.

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run_cmd(const std::string& cmd) {
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(p != nullptr, "popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    RunResult r;
    r.out = std::move(out);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

void write_file(const fs::path& p, const std::string& body) {
    std::ofstream os(p);
    REQUIRE(os.good(), "cannot stage " + p.string());
    os << body;
}

void criterion11(const std::string& cli) {
    fs::path dir = fs::temp_directory_path() / "cmkit_acceptance_stage";
    std::error_code ec;
    fs::remove_all(dir, ec);
    fs::create_directories(dir);
    unsetenv("CMKIT_CACHE");

    write_file(dir / "ring_rxy.json",
               R"js({"field": "Q", "vars": ["x", "y"], "relations": ["x*y"]})js");
    write_file(dir / "ring_rxy_fp.json",
               R"js({"field": 101, "vars": ["x", "y"], "relations": ["x*y"]})js");
    write_file(dir / "ring_kxy.json", R"js({"field": "Q", "vars": ["x", "y"]})js");
    write_file(dir / "ring_sg.json",
               R"js({"field": "Q", "vars": ["x", "y", "z"], "weights": [3, 4, 5],
 "relations": ["y^2 - x*z", "z^2 - x^2*y", "x^3 - y*z"]})js");
    write_file(dir / "mod_k.json",
               R"js({"ring": "ring_rxy.json", "generator_degrees": [0],
 "relations": [["x"], ["y"]]})js");
    write_file(dir / "mod_rx.json",
               R"js({"ring": "ring_rxy.json", "generator_degrees": [0], "relations": [["x"]]})js");
    write_file(dir / "frag_rxy.json",
               R"js({"ring": "ring_rxy.json", "primes": [
 {"name": "(x)", "generators": ["x"]}, {"name": "(y)", "generators": ["y"]}]})js");
    write_file(dir / "frag_kxy.json",
               R"js({"ring": "ring_kxy.json", "primes": [
 {"name": "(0)"}, {"name": "(x)", "generators": ["x"]}, {"name": "(y)", "generators": ["y"]},
 {"name": "(x+y)", "generators": ["x + y"]}]})js");
    write_file(dir / "seq_rxy.json",
               R"js({"fragment": "frag_rxy.json", "subsets": [["(x)", "(y)"]]})js");

    auto at = [&](const char* f) { return (dir / f).string(); };
    std::vector<std::string> golden = {
        cli + " dim " + at("ring_rxy.json") + " --json",
        cli + " dim " + at("ring_rxy_fp.json") + " --json",
        cli + " dim " + at("ring_sg.json") + " --json",
        cli + " depth " + at("mod_k.json") + " --json",
        cli + " codepth " + at("mod_k.json") + " --json",
        cli + " grade " + at("ring_rxy.json") + " -I x --json",
        cli + " cograde " + at("ring_rxy.json") + " -I x --json",
        cli + " is-regular-seq " + at("ring_rxy.json") + " -x 'x + y' --json",
        cli + " is-sop " + at("ring_sg.json") + " -x x --json",
        cli + " is-mcm " + at("mod_rx.json") + " --json",
        cli + " is-cm " + at("ring_sg.json") + " --json",
        cli + " is-gorenstein " + at("ring_sg.json") + " --json",
        cli + " canonical " + at("ring_sg.json") + " --json",
        cli + " dual " + at("mod_rx.json") + " --json",
        cli + " bass " + at("mod_k.json") + " --fragment " + at("frag_rxy.json") +
            " --max-i 1 --json",
        cli + " ass " + at("mod_rx.json") + " --fragment " + at("frag_rxy.json") + " --json",
        cli + " charseq validate " + at("seq_rxy.json") + " --json",
        cli + " charseq enumerate --fragment " + at("frag_rxy.json") + " --json",
        cli + " charseq enumerate --fragment " + at("frag_kxy.json") + " --dim 2 --json",
        cli + " charseq classify --fragment " + at("frag_kxy.json") + " --json",
        cli + " member " + at("mod_rx.json") + " --charseq " + at("seq_rxy.json") + " --json",
        cli + " gflat " + at("mod_k.json") + " --fragment " + at("frag_rxy.json") + " --json",
        cli + " lcm-level " + at("mod_k.json") + " --json",
        cli + " triv-ext " + at("ring_sg.json") + " --canonical --json",
        cli + " holm-check " + at("mod_rx.json") + " --fragment " + at("frag_rxy.json") +
            " --seed 2 --json",
    };
    std::string canonical_cmd = cli + " canonical " + at("ring_sg.json") + " --json";
    std::string canonical_out;
    for (const auto& cmd : golden) {
        RunResult r1 = run_cmd(cmd);
        RunResult r2 = run_cmd(cmd);
        REQUIRE(r1.code == 0, "golden command failed (exit " + std::to_string(r1.code) +
                                  "): " + cmd);
        REQUIRE(r2.code == 0, "golden command failed on rerun: " + cmd);
        REQUIRE(!r1.out.empty(), "golden command printed nothing: " + cmd);
        REQUIRE(r1.out == r2.out, "two runs differ byte for byte: " + cmd);
        bool parses = true;
        try {
            ojson parsed = ojson::parse(r1.out);
            (void)parsed;
        } catch (...) {
            parses = false;
        }
        REQUIRE(parses, "golden output is not valid JSON: " + cmd);
        if (cmd == canonical_cmd) canonical_out = r1.out;
    }

    // --out writes the same bytes the command prints
    {
        std::string outfile = at("dim_out.json");
        RunResult plain = run_cmd(cli + " dim " + at("ring_rxy.json") + " --json");
        RunResult redir =
            run_cmd(cli + " dim " + at("ring_rxy.json") + " --json --out " + outfile);
        REQUIRE(redir.code == 0, "--out run failed");
        std::ifstream is(outfile);
        std::string body((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
        REQUIRE(body == plain.out, "--out file differs from stdout bytes");
    }

    // cache determinism: cold fill, then warm read, bytes identical to uncached
    {
        fs::path cdir = dir / "cache";
        setenv("CMKIT_CACHE", cdir.c_str(), 1);
        RunResult cold = run_cmd(canonical_cmd);
        REQUIRE(cold.code == 0, "cold cache run failed");
        bool has_blob = false;
        for (const auto& e : fs::directory_iterator(cdir))
            if (e.is_regular_file()) has_blob = true;
        REQUIRE(has_blob, "cold run left the cache directory empty");
        RunResult warm = run_cmd(canonical_cmd);
        REQUIRE(warm.code == 0, "warm cache run failed");
        unsetenv("CMKIT_CACHE");
        REQUIRE(cold.out == canonical_out, "cold cache output differs from uncached bytes");
        REQUIRE(warm.out == canonical_out, "warm cache output differs from uncached bytes");
    }

    // exit-code pins
    REQUIRE(run_cmd(cli + " is-mcm " + at("mod_k.json") + " --strict --json").code == 1,
            "--strict on a false answer must exit 1");
    REQUIRE(run_cmd(cli + " dim " + at("no_such_file.json")).code == 2,
            "missing input must exit 2");
    REQUIRE(run_cmd(cli + " charseq classify --fragment " + at("frag_kxy.json") +
                    " --cap 3 --json")
                    .code == 3,
            "exceeding --cap must exit 3");

    fs::remove_all(dir, ec);
}

}  // namespace

int main(int argc, char** argv) {
    REQUIRE(argc >= 2, "usage: acceptance <path-to-cmkit-binary>");
    std::string cli = fs::absolute(argv[1]).string();
    REQUIRE(fs::exists(cli), "cmkit binary not found at " + cli);

    std::printf("building the corpus (two fields, trivial extensions)...\n");
    std::fflush(stdout);
    Bench<Fp> bp = build_bench<Fp>();
    Bench<Rat> bq = build_bench<Rat>();

    auto timed = [](int no, const char* what, double bound, auto&& body) {
        auto t0 = clock_t_::now();
        body();
        double s = elapsed(t0);
        REQUIRE(s < bound, "criterion " + std::to_string(no) + " blew its " +
                               std::to_string(static_cast<long>(bound)) + "s budget");
        std::printf("[PASS] criterion %2d: %s (%.1fs < %.0fs)\n", no, what, s, bound);
        std::fflush(stdout);
    };

    timed(1, "Ext(k, -) lengths match the degreewise oracle", 60, [&] {
        criterion1(bp);
        criterion1(bq);
    });
    timed(2, "grade/cograde and depth/codepth inequalities", 30, [&] {
        criterion2(bp);
        criterion2(bq);
    });
    timed(3, "single-SoP depth criterion over the seeded pools", 60, [&] {
        criterion3(bp);
        criterion3(bq);
    });
    timed(4, "Cohen-Macaulay / Gorenstein ground truth", 30, [&] {
        criterion4(bp);
        criterion4(bq);
    });
    timed(5, "canonical module delta condition; w iso R exactly when Gorenstein", 60, [&] {
        criterion5(bp);
        criterion5(bq);
    });
    timed(6, "MCM Bass vanishing below height; ass(MCM) minimal", 120, [&] {
        long n = criterion6(bp) + criterion6(bq);
        REQUIRE(n >= 10, "criterion 6 exercised too few MCM modules");
    });
    timed(7, "Gorenstein-flat two-route agreement (>= 20 modules)", 120, [&] {
        bool saw_nonmember = false;
        long n = criterion7(bp, &saw_nonmember) + criterion7(bq, &saw_nonmember);
        REQUIRE(n >= 20, "criterion 7 exercised fewer than 20 modules");
        REQUIRE(saw_nonmember, "criterion 7 never saw a non-member");
    });
    timed(8, "three-way MCM agreement on k[x,y]/(xy) and the semigroup ring", 300, [&] {
        criterion8(bp);
        criterion8(bq);
    });
    timed(9, "classification counts (1 and 8) against brute force", 10, [&] {
        criterion9(bp);
        criterion9(bq);
    });
    timed(10, "lcm_level identity and the depth-lemma syzygy bound", 60, [&] {
        criterion10(bp);
        criterion10(bq);
    });
    timed(11, "CLI determinism: byte-identical JSON, cache on and off", 30,
          [&] { criterion11(cli); });

    std::printf("all 11 acceptance criteria passed\n");
    return 0;
}
