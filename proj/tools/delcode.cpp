// delcode: seeded, reproducible experiments on a deletion-correcting
// concatenated code. Subcommands: construct, encode, transmit, decode,
// verify, audit-lcs, bench, params.
//
// Exit codes: 0 success, 1 usage/config error, 2 decode found no candidate,
// 3 decode ambiguous (several survivors), 4 verification failure.
//
// Every artifact embeds the config and seed that produced it as '#' header
// lines; re-running with the same inputs is byte-identical. Caps can be
// overridden by env vars DELCODE_SIZE_CAP (construction), DELCODE_BRUTE_CAP
// (decode admission), DELCODE_SPAN_CAP (span profile product).

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "delcode/channel.hpp"
#include "delcode/concat.hpp"
#include "delcode/config_io.hpp"
#include "delcode/decoder.hpp"
#include "delcode/exact.hpp"
#include "delcode/inner_codes.hpp"
#include "delcode/lcs.hpp"
#include "delcode/outer_codes.hpp"
#include "delcode/rng.hpp"
#include "delcode/span_profile.hpp"
#include "delcode/word.hpp"

using namespace delcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoCandidate = 2;
constexpr int kExitAmbiguous = 3;
constexpr int kExitVerifyFail = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::int64_t env_i64(const char* name, std::int64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        size_t pos = 0;
        std::int64_t x = std::stoll(v, &pos);
        if (pos != std::string(v).size() || x <= 0)
            throw std::invalid_argument("");
        return x;
    } catch (...) {
        throw std::runtime_error(std::string(name) + " is not a positive integer: " + v);
    }
}

ConcatCodeSpec load_spec(const std::string& configPath) {
    return build_concat_from_config(KvConfig::parse(slurp(configPath)));
}

/// config echo for artifact headers
std::vector<std::string> cfg_header(const KvConfig& cfg) {
    std::vector<std::string> h;
    for (const auto& [k, v] : cfg.items()) h.push_back("cfg " + k + " " + v);
    return h;
}

/// one word per file; '#' headers kept aside, alphabet from the
/// "alphabet N" header unless kFlag forces it
Word read_word_auto(const std::string& path, int kFlag) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    int k = kFlag;
    std::string line, content;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string key;
            if (hs >> key && key == "alphabet" && kFlag == 0) {
                if (!(hs >> k)) throw std::runtime_error(path + ": bad alphabet header");
            }
            continue;
        }
        if (!content.empty())
            throw std::runtime_error(path + ": expected a single word");
        content = line;
    }
    if (content.empty()) throw std::runtime_error(path + ": no word found");
    if (k == 0)
        throw std::runtime_error(path + ": no 'alphabet' header; pass --k");
    return Word::parse(content, k);
}

void write_single_word(const std::string& path, const Word& w,
                       std::vector<std::string> header) {
    header.push_back("alphabet " + std::to_string((int)w.k));
    header.push_back("length " + std::to_string(w.size()));
    std::ostringstream os;
    write_words(os, {w}, header);
    atomic_write(path, os.str());
}

Polynomial parse_message(const std::string& text, const ConcatCodeSpec& spec) {
    Polynomial f = Polynomial::parse(text, spec.field());
    if (f.degree() >= (int)spec.ell)
        throw std::runtime_error("message degree " + std::to_string(f.degree()) +
                                 " not below ell = " + std::to_string(spec.ell));
    return f;
}

Polynomial random_message(Rng& rng, const ConcatCodeSpec& spec) {
    std::vector<std::uint32_t> coeffs(spec.ell);
    for (auto& c : coeffs) c = (std::uint32_t)rng.below(spec.q);
    return Polynomial::from(coeffs);
}

std::string fmt_ld(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6Lg", v);
    return buf;
}

// ------------------------------------------------------------- construct --

struct BuildFlags {
    std::string configPath;
    std::uint64_t k = 2, q = 17;
    std::string gamma = "2/5";
    std::string map = "dirty";
    std::uint64_t K = 4, n = 12;
    std::string outerGamma = "5/6";
    std::uint64_t outerSeed = 1, attempts = 200000;
    std::string c = "1/4";
    std::int64_t t = 4, L = 625;
    std::string layout = "2500:500,500:100,100:20,20:4";
    std::string mapGamma = "1/2";
};

void add_build_flags(CLI::App* sub, BuildFlags& bf) {
    sub->add_option("--config", bf.configPath,
                    "existing code config file; overrides the flags below");
    sub->add_option("--k", bf.k, "channel alphabet size");
    sub->add_option("--gamma", bf.gamma, "analysis parameter gamma (rational)");
    sub->add_option("--q", bf.q, "outer field size (prime)");
    sub->add_option("--map", bf.map, "inner symbol map: dirty | clean");
    sub->add_option("--K", bf.K, "pair-code alphabet");
    sub->add_option("--n", bf.n, "pair-code word length");
    sub->add_option("--outer-gamma", bf.outerGamma, "pair-code LCS bound (rational)");
    sub->add_option("--outer-seed", bf.outerSeed, "pair-code builder seed");
    sub->add_option("--attempts", bf.attempts, "pair-code builder attempt cap");
    sub->add_option("--c", bf.c, "dirty map: dirt fraction (rational)");
    sub->add_option("--t", bf.t, "dirty map: alternation budget");
    sub->add_option("--L", bf.L, "dirty map: base length");
    sub->add_option("--layout", bf.layout, "dirty map: b1:b2 pairs, comma separated");
    sub->add_option("--map-gamma", bf.mapGamma, "clean map: gamma for derived sizes");
}

ConcatCodeSpec build_from_flags(const BuildFlags& bf) {
    if (!bf.configPath.empty()) return load_spec(bf.configPath);
    InnerConfig inner;
    inner.map = bf.map;
    inner.K = (int)bf.K;
    inner.n = (int)bf.n;
    inner.gamma = Rat::parse(bf.outerGamma);
    inner.seed = bf.outerSeed;
    inner.attempts = bf.attempts;
    if (bf.map == "dirty") {
        inner.c = Rat::parse(bf.c);
        inner.t = bf.t;
        inner.L = bf.L;
        if (!bf.layout.empty()) inner.layout = layout_parse(bf.layout);
    } else {
        inner.mapGamma = Rat::parse(bf.mapGamma);
    }
    return build_concat((int)bf.k, Rat::parse(bf.gamma), (std::uint32_t)bf.q, inner);
}

int cmd_construct(const BuildFlags& bf, const std::string& outDir) {
    ConcatCodeSpec spec = build_from_flags(bf);
    KvConfig cfg = concat_config(spec);
    std::filesystem::create_directories(outDir);

    atomic_write(outDir + "/code.cfg", cfg.str());

    std::vector<std::string> header = {
        "inner codeword table: rows are pairs (i,alpha), index (i-1)*q+(alpha-1)",
        "alphabet " + std::to_string(spec.k)};
    for (const auto& line : cfg_header(cfg)) header.push_back(line);
    std::ostringstream tbl;
    write_words(tbl, spec.table, header);
    atomic_write(outDir + "/table.txt", tbl.str());

    KvConfig meta;
    meta.set_u64("pair-count", spec.pairCode.words.size());
    meta.set_rat("pair-gamma-achieved", spec.pairCode.gammaAchieved);
    meta.set_u64("block-length", spec.m);
    meta.set_u64("codeword-length", spec.N);
    meta.set_u64("message-symbols", spec.ell);
    double rate = (double)spec.ell * std::log2((double)spec.q) /
                  ((double)spec.N * std::log2((double)spec.k));
    char rbuf[64];
    std::snprintf(rbuf, sizeof rbuf, "%.6g", rate);
    meta.set("rate-message", rbuf);
    meta.set("lcs-bound-ratio", fmt_ld(spec.lcs_bound_ratio()));
    {
        // exact form of the audit bound (2/(k-1)+2*theta+eta)N - (2/(k^2-k))N sqrt(k)
        std::int64_t k = spec.k;
        Rat A = (Rat(2, k - 1) + spec.theta * Rat(2) + spec.eta) * Rat((std::int64_t)spec.N);
        Rat B = Rat(2, k * k - k) * Rat((std::int64_t)spec.N);
        meta.set("lcs-bound-symbols", A.str() + " - " + B.str() + "*sqrt(" +
                                          std::to_string(k) + ")");
    }
    std::ostringstream ms;
    for (const auto& line : cfg_header(cfg)) ms << "# " << line << "\n";
    ms << meta.str();
    atomic_write(outDir + "/metadata.txt", ms.str());

    std::cout << "wrote " << outDir << "/code.cfg, table.txt, metadata.txt ("
              << spec.pairCode.words.size() << " inner words, N = " << spec.N
              << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------- params --

int cmd_params(const BuildFlags& bf, const std::string& deltaText) {
    ConcatCodeSpec spec = build_from_flags(bf);
    KvConfig cfg = concat_config(spec);
    DecodeConfig dc = make_decode_config(spec, Rat::parse(deltaText));
    std::cout << cfg.str();
    KvConfig drv;
    drv.set_rat("delta", dc.delta);
    drv.set_u64("window-len", dc.windowLen);
    drv.set_u64("stride", dc.stride);
    drv.set_rat("list-threshold", dc.listThreshold);
    std::int64_t minA =
        dc.listThreshold.num() > 0
            ? (dc.listThreshold.num() + dc.listThreshold.den() - 1) / dc.listThreshold.den()
            : 0;
    drv.set_u64("min-agreement", (std::uint64_t)minA);
    drv.set("sudan-covers-threshold", dc.sudanCoversThreshold ? "yes" : "no");
    drv.set_u64("brute-force-cap", dc.bruteForceCap);
    drv.set_rat("pair-gamma-achieved", spec.pairCode.gammaAchieved);
    std::cout << drv.str();
    return kExitOk;
}

// ---------------------------------------------------------------- encode --

int cmd_encode(const std::string& configPath, const std::string& message,
               std::uint64_t messageSeed, bool seedGiven,
               const std::string& outPath) {
    ConcatCodeSpec spec = load_spec(configPath);
    Polynomial f;
    std::vector<std::string> header;
    if (!message.empty() && seedGiven)
        throw std::runtime_error("--message and --message-seed are exclusive");
    if (!message.empty()) {
        f = parse_message(message, spec);
    } else if (seedGiven) {
        Rng rng(messageSeed);
        f = random_message(rng, spec);
        header.push_back("message-seed " + std::to_string(messageSeed));
    } else {
        throw std::runtime_error("need --message or --message-seed");
    }
    header.push_back("message " + f.str());
    for (const auto& line : cfg_header(concat_config(spec))) header.push_back(line);
    Word c = concat_encode(f, spec);
    write_single_word(outPath, c, header);
    std::cout << "message " << f.str() << "\nwrote " << outPath << " ("
              << c.size() << " symbols)\n";
    return kExitOk;
}

// -------------------------------------------------------------- transmit --

int cmd_transmit(const std::string& inPath, const std::string& outPath,
                 const std::string& strategy, std::int64_t budget,
                 const std::string& fraction, std::uint64_t seed,
                 std::int64_t burstStart, const std::string& configPath,
                 const std::string& decoysPath, const std::string& patternOut,
                 int kFlag) {
    Word c = read_word_auto(inPath, kFlag);
    std::uint64_t len = c.size();

    std::uint64_t b = 0;
    bool budgetGiven = budget >= 0 || !fraction.empty();
    if (budget >= 0 && !fraction.empty())
        throw std::runtime_error("--budget and --fraction are exclusive");
    if (budget >= 0) b = (std::uint64_t)budget;
    if (!fraction.empty()) {
        Rat fr = Rat::parse(fraction);
        if (fr < Rat(0) || Rat(1) < fr) throw std::runtime_error("fraction outside [0,1]");
        b = (std::uint64_t)(fr.num() * (std::int64_t)len / fr.den());
    }
    if (b > len) throw std::runtime_error("budget exceeds word length");

    DeletionPattern pat;
    if (strategy == "random") {
        if (!budgetGiven) throw std::runtime_error("random needs --budget or --fraction");
        pat = random_pattern(len, b, seed);
    } else if (strategy == "burst") {
        if (!budgetGiven) throw std::runtime_error("burst needs --budget or --fraction");
        std::uint64_t start;
        if (burstStart >= 0) {
            start = (std::uint64_t)burstStart;
        } else {
            Rng rng(seed);
            start = rng.below(len - b + 1);
        }
        pat = burst_pattern(len, b, start);
    } else if (strategy == "dirt-strip") {
        if (budgetGiven)
            throw std::runtime_error("dirt-strip budget is structural; drop --budget/--fraction");
        if (configPath.empty()) throw std::runtime_error("dirt-strip needs --config");
        ConcatCodeSpec spec = load_spec(configPath);
        if (!spec.dirtyParams) throw std::runtime_error("config has no dirty inner map");
        pat = dirt_strip_pattern(c, *spec.dirtyParams);
    } else if (strategy == "greedy-lcs") {
        if (!budgetGiven) throw std::runtime_error("greedy-lcs needs --budget or --fraction");
        if (decoysPath.empty()) throw std::runtime_error("greedy-lcs needs --decoys");
        std::vector<Word> decoys = read_word_file(decoysPath, c.k);
        pat = greedy_lcs_pattern(c, decoys, b);
    } else {
        throw std::runtime_error("unknown strategy " + strategy +
                                 " (random | burst | dirt-strip | greedy-lcs)");
    }

    Word s = apply_pattern(c, pat);
    if (s.size() != len - pat.budget())
        throw std::logic_error("pattern arithmetic broke");
    if (!rle_is_subsequence(runs_of(s), runs_of(c)))
        throw std::logic_error("received word is not a subsequence of the input");

    std::vector<std::string> header = {"strategy " + strategy,
                                       "seed " + std::to_string(seed),
                                       "deleted " + std::to_string(pat.budget())};
    write_single_word(outPath, s, header);
    if (!patternOut.empty()) {
        std::ostringstream ps;
        for (const auto& h : header) ps << "# " << h << "\n";
        ps << pattern_str(pat);
        atomic_write(patternOut, ps.str());
    }
    std::cout << "deleted " << pat.budget() << " of " << len << " symbols ("
              << strategy << "), wrote " << outPath << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- decode --

std::string decode_report_text(const DecodeReport& rep, const DecodeConfig& dc,
                               const KvConfig& cfg, std::uint64_t lenS) {
    std::ostringstream os;
    for (const auto& line : cfg_header(cfg)) os << "# " << line << "\n";
    os << "# delta " << dc.delta.str() << "\n";
    os << "# window-len " << dc.windowLen << "\n";
    os << "# stride " << dc.stride << "\n";
    os << "# received-length " << lenS << "\n";
    KvConfig r;
    switch (rep.status) {
        case DecodeStatus::Success: r.set("status", "success"); break;
        case DecodeStatus::NoCandidate: r.set("status", "no-candidate"); break;
        case DecodeStatus::MultipleSurvivors: r.set("status", "multiple-survivors"); break;
    }
    if (rep.status == DecodeStatus::NoCandidate) {
        if (rep.windowCount == 0)
            r.set("reason", "received word shorter than one window");
        else if (rep.listSize == 0)
            r.set("reason", "no candidate reached the agreement threshold");
        else
            r.set("reason", "no candidate encoding contains the received word");
    } else if (rep.status == DecodeStatus::MultipleSurvivors) {
        r.set("reason", "several candidate encodings contain the received word");
    }
    r.set_u64("windows", rep.windowCount);
    r.set_u64("ambiguous-windows", rep.ambiguousWindows);
    r.set_u64("decoded-windows", rep.decodedWindows);
    r.set_u64("points", rep.pointCount);
    r.set("admission", rep.admissionRan ? "ran" : "skipped");
    r.set_u64("list-size", rep.listSize);
    r.set_u64("survivors", rep.survivorCount);
    if (rep.status == DecodeStatus::Success) {
        r.set("message", rep.message.str());
        r.set("soundness", rep.soundness ? "pass" : "fail");
    }
    os << r.str();
    for (const Polynomial& p : rep.survivors)
        if (rep.status == DecodeStatus::MultipleSurvivors)
            os << "survivor " << p.str() << "\n";
    return os.str();
}

int cmd_decode(const std::string& configPath, const std::string& inPath,
               const std::string& deltaText, const std::string& outPath,
               int kFlag) {
    ConcatCodeSpec spec = load_spec(configPath);
    Word s = read_word_auto(inPath, kFlag == 0 ? spec.k : kFlag);
    DecodeConfig dc = make_decode_config(spec, Rat::parse(deltaText));
    dc.bruteForceCap = (std::uint64_t)env_i64("DELCODE_BRUTE_CAP",
                                              (std::int64_t)dc.bruteForceCap);
    DecodeReport rep = decode(s, spec, dc);
    std::string text = decode_report_text(rep, dc, concat_config(spec), s.size());
    if (!outPath.empty()) atomic_write(outPath, text);
    std::cout << text;
    switch (rep.status) {
        case DecodeStatus::Success:
            return rep.soundness ? kExitOk : kExitVerifyFail;
        case DecodeStatus::NoCandidate: return kExitNoCandidate;
        case DecodeStatus::MultipleSurvivors: return kExitAmbiguous;
    }
    return kExitUsage;
}

// ---------------------------------------------------------------- verify --

struct VerifyFlags {
    std::string lemma;
    std::uint64_t k = 2;
    std::int64_t A = 2, B = 8;
    std::string c = "1/3";
    std::int64_t a = 3, b1 = 24, b2 = 9;
    std::int64_t len = 48;
    bool table = false;
};

int cmd_verify(const VerifyFlags& vf) {
    const std::int64_t spanCap = env_i64("DELCODE_SPAN_CAP", 10000);
    int k = (int)vf.k;
    check_alphabet(k);

    Word w1, w2;
    // bound(ell) = slope * ell - offset; checked side and addend per lemma
    Rat slope, offset;
    bool inFirst = false; // compare minSpanInFirst + addend instead of minTotalSpan
    std::int64_t addend = 0;

    if (vf.lemma == "basicspan") {
        if (k * vf.A > vf.B)
            throw std::runtime_error("basicspan needs k*A <= B");
        w1 = amplitude_word_prefix(vf.A, k, vf.len);
        w2 = amplitude_word_prefix(vf.B, k, vf.len);
        slope = Rat(k + 1) - Rat(k * vf.A, vf.B);
        offset = Rat(2 * (vf.A + vf.B));
    } else if (vf.lemma == "inftyw1" || vf.lemma == "inftyw1k") {
        if (vf.lemma == "inftyw1" && k != 2)
            throw std::runtime_error("inftyw1 is the k=2 case; use inftyw1k");
        Rat c = Rat::parse(vf.c);
        DirtyInnerParams p;
        p.k = k;
        p.K = 1;
        p.c = c;
        w1 = dirty_run_prefix(1, vf.a, p, vf.len);
        w2.k = (std::uint8_t)k;
        for (int j = 1; j <= k; ++j) {
            Word seg = dirty_run(j, vf.b1, vf.b2, p);
            w2.syms.insert(w2.syms.end(), seg.syms.begin(), seg.syms.end());
        }
        slope = Rat(k + 1) + c * Rat(k - 1);
        offset = Rat(k * k * vf.a * vf.b1, vf.b2);
        inFirst = true;
        addend = k * vf.b1;
    } else {
        throw std::runtime_error("unknown lemma " + vf.lemma +
                                 " (basicspan | inftyw1 | inftyw1k)");
    }

    SpanProfile prof = span_profile(w1, w2, (std::uint64_t)spanCap);
    bool pass = true;
    bool haveMin = false;
    Rat minSlack;
    std::size_t minEll = 0;
    for (std::size_t ell = 1; ell <= prof.lcs; ++ell) {
        std::uint64_t measured =
            inFirst ? prof.minSpanInFirst[ell] : prof.minTotalSpan[ell];
        Rat lhs = Rat((std::int64_t)measured + addend);
        Rat bound = slope * Rat((std::int64_t)ell) - offset;
        Rat slack = lhs - bound;
        if (!haveMin || slack < minSlack) {
            minSlack = slack;
            minEll = ell;
            haveMin = true;
        }
        if (slack < Rat(0)) pass = false;
        if (vf.table)
            std::cout << "ell " << ell << " measured " << lhs.str() << " bound "
                      << bound.str() << " slack " << slack.str() << "\n";
    }

    KvConfig r;
    r.set("lemma", vf.lemma);
    r.set_u64("k", vf.k);
    if (vf.lemma == "basicspan") {
        r.set_u64("A", (std::uint64_t)vf.A);
        r.set_u64("B", (std::uint64_t)vf.B);
    } else {
        r.set("c", vf.c);
        r.set_u64("a", (std::uint64_t)vf.a);
        r.set_u64("b1", (std::uint64_t)vf.b1);
        r.set_u64("b2", (std::uint64_t)vf.b2);
    }
    r.set_u64("len-w1", w1.size());
    r.set_u64("len-w2", w2.size());
    r.set_u64("lcs", prof.lcs);
    if (haveMin) {
        r.set("min-slack", minSlack.str());
        r.set_u64("min-slack-ell", minEll);
    }
    r.set("result", pass ? "pass" : "fail");
    std::cout << r.str();
    return pass ? kExitOk : kExitVerifyFail;
}

// ------------------------------------------------------------- audit-lcs --

int cmd_audit_lcs(const std::string& configPath, std::uint64_t pairs,
                  std::uint64_t seed, const std::string& outPath) {
    ConcatCodeSpec spec = load_spec(configPath);
    if (pairs == 0) throw std::runtime_error("--pairs must be positive");
    Rng rng(seed);
    std::vector<std::pair<Polynomial, Polynomial>> sample;
    sample.reserve(pairs);
    while (sample.size() < pairs) {
        Polynomial f = random_message(rng, spec);
        Polynomial g = random_message(rng, spec);
        if (f == g) continue;
        sample.emplace_back(f, g);
    }
    ConcatAudit audit = audit_concat_lcs(spec, sample);
    KvConfig r;
    r.set_u64("pairs", audit.pairCount);
    r.set_u64("seed", seed);
    r.set_u64("max-lcs", audit.maxLcs);
    r.set("max-ratio", audit.maxRatio.str());
    r.set("bound-ratio", fmt_ld(audit.boundRatio));
    r.set("max-pair", sample[audit.maxPairIndex].first.str() + " | " +
                          sample[audit.maxPairIndex].second.str());
    r.set("result", audit.withinBound ? "pass" : "fail");
    std::ostringstream os;
    for (const auto& line : cfg_header(concat_config(spec))) os << "# " << line << "\n";
    os << r.str();
    if (!outPath.empty()) atomic_write(outPath, os.str());
    std::cout << os.str();
    return audit.withinBound ? kExitOk : kExitVerifyFail;
}

// ----------------------------------------------------------------- bench --

int cmd_bench(const std::string& configPath, std::uint64_t trials,
              std::uint64_t seed, const std::string& strategy,
              const std::string& fraction, const std::string& deltaText) {
    using clock = std::chrono::steady_clock;
    ConcatCodeSpec spec = load_spec(configPath);
    DecodeConfig dc = make_decode_config(spec, Rat::parse(deltaText));
    dc.bruteForceCap = (std::uint64_t)env_i64("DELCODE_BRUTE_CAP",
                                              (std::int64_t)dc.bruteForceCap);
    Rat fr = fraction.empty() ? Rat(0) : Rat::parse(fraction);
    Rng rng(seed);
    std::uint64_t ok = 0;
    double totalMs = 0, maxMs = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Polynomial f = random_message(rng, spec);
        Word c = concat_encode(f, spec);
        std::uint64_t budget = (std::uint64_t)(fr.num() * (std::int64_t)c.size() / fr.den());
        std::uint64_t patSeed = rng.next();
        DeletionPattern pat;
        if (strategy == "random")
            pat = random_pattern(c.size(), budget, patSeed);
        else if (strategy == "burst")
            pat = burst_pattern(c.size(), budget,
                                Rng(patSeed).below(c.size() - budget + 1));
        else if (strategy == "dirt-strip") {
            if (!spec.dirtyParams) throw std::runtime_error("config has no dirty inner map");
            pat = dirt_strip_pattern(c, *spec.dirtyParams);
        } else
            throw std::runtime_error("bench strategy must be random | burst | dirt-strip");
        Word s = apply_pattern(c, pat);

        auto t0 = clock::now();
        DecodeReport rep = decode(s, spec, dc);
        double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        totalMs += ms;
        if (ms > maxMs) maxMs = ms;
        bool good = rep.status == DecodeStatus::Success && rep.message == f &&
                    rep.soundness;
        if (good) ++ok;
        std::cout << "trial " << trial << " status "
                  << (rep.status == DecodeStatus::Success ? "success"
                      : rep.status == DecodeStatus::NoCandidate ? "no-candidate"
                                                                : "multiple-survivors")
                  << (good ? "" : " WRONG") << " deleted " << pat.budget()
                  << " points " << rep.pointCount << " list " << rep.listSize
                  << " ms " << (std::uint64_t)ms << "\n";
    }
    std::cout << "recovered " << ok << "/" << trials << " mean-ms "
              << (std::uint64_t)(trials ? totalMs / (double)trials : 0) << " max-ms "
              << (std::uint64_t)maxMs << "\n";
    return ok == trials ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deletion-correcting concatenated code laboratory"};
    app.require_subcommand(1);

    // construct
    BuildFlags cbf;
    std::string constructOut;
    CLI::App* sc = app.add_subcommand("construct", "build a code and write its artifacts");
    add_build_flags(sc, cbf);
    sc->add_option("--out", constructOut, "output directory")->required();

    // params
    BuildFlags pbf;
    std::string paramsDelta = "2/5";
    CLI::App* sp = app.add_subcommand("params", "print resolved and derived parameters");
    add_build_flags(sp, pbf);
    sp->add_option("--delta", paramsDelta, "decoder deletion-fraction parameter (rational)");

    // encode
    std::string encCfg, encMsg, encOut;
    std::uint64_t encSeed = 0;
    CLI::App* se = app.add_subcommand("encode", "encode a message polynomial");
    se->add_option("--config", encCfg, "code config file")->required();
    se->add_option("--message", encMsg, "coefficients, low degree first, space separated");
    CLI::Option* encSeedOpt =
        se->add_option("--message-seed", encSeed, "draw the message from this seed");
    se->add_option("--out", encOut, "codeword file to write")->required();

    // transmit
    std::string trIn, trOut, trStrategy = "random", trFraction, trCfg, trDecoys, trPatOut;
    std::int64_t trBudget = -1, trBurstStart = -1;
    std::uint64_t trSeed = 0;
    int trK = 0;
    CLI::App* st = app.add_subcommand("transmit", "delete symbols under a named strategy");
    st->add_option("--in", trIn, "input word file")->required();
    st->add_option("--out", trOut, "received word file to write")->required();
    st->add_option("--strategy", trStrategy, "random | burst | dirt-strip | greedy-lcs");
    st->add_option("--budget", trBudget, "number of deletions");
    st->add_option("--fraction", trFraction, "deletions as a fraction of length (rational)");
    st->add_option("--seed", trSeed, "randomness seed");
    st->add_option("--burst-start", trBurstStart, "burst start (default: from seed)");
    st->add_option("--config", trCfg, "code config (required for dirt-strip)");
    st->add_option("--decoys", trDecoys, "decoy word file (required for greedy-lcs)");
    st->add_option("--pattern-out", trPatOut, "also write the deletion pattern");
    st->add_option("--k", trK, "alphabet override when the input has no header");

    // decode
    std::string deCfg, deIn, deDelta = "2/5", deOut;
    int deK = 0;
    CLI::App* sd = app.add_subcommand("decode", "recover the message from a received word");
    sd->add_option("--config", deCfg, "code config file")->required();
    sd->add_option("--in", deIn, "received word file")->required();
    sd->add_option("--delta", deDelta, "deletion-fraction parameter (rational)");
    sd->add_option("--out", deOut, "report file to write");
    sd->add_option("--k", deK, "alphabet override when the input has no header");

    // verify
    VerifyFlags vf;
    CLI::App* sv = app.add_subcommand("verify", "check a span inequality exhaustively");
    sv->add_option("--lemma", vf.lemma, "basicspan | inftyw1 | inftyw1k")->required();
    sv->add_option("--k", vf.k, "alphabet size");
    sv->add_option("--A", vf.A, "basicspan: small amplitude");
    sv->add_option("--B", vf.B, "basicspan: large amplitude");
    sv->add_option("--c", vf.c, "dirty lemmas: dirt fraction (rational)");
    sv->add_option("--a", vf.a, "dirty lemmas: w1 amplitude");
    sv->add_option("--b1", vf.b1, "dirty lemmas: segment length");
    sv->add_option("--b2", vf.b2, "dirty lemmas: segment amplitude");
    sv->add_option("--len", vf.len, "truncation length of w1");
    sv->add_flag("--report-table", vf.table, "print the per-ell slack table");

    // audit-lcs
    std::string auCfg, auOut;
    std::uint64_t auPairs = 100, auSeed = 7;
    CLI::App* sa = app.add_subcommand("audit-lcs", "sample pairwise codeword LCS against the bound");
    sa->add_option("--config", auCfg, "code config file")->required();
    sa->add_option("--pairs", auPairs, "number of sampled message pairs");
    sa->add_option("--seed", auSeed, "sampling seed");
    sa->add_option("--out", auOut, "report file to write");

    // bench
    std::string beCfg, beStrategy = "random", beFraction = "1/5", beDelta = "2/5";
    std::uint64_t beTrials = 10, beSeed = 1;
    CLI::App* sb = app.add_subcommand("bench", "timed encode/transmit/decode loop");
    sb->add_option("--config", beCfg, "code config file")->required();
    sb->add_option("--trials", beTrials, "number of trials");
    sb->add_option("--seed", beSeed, "master seed");
    sb->add_option("--strategy", beStrategy, "random | burst | dirt-strip");
    sb->add_option("--fraction", beFraction, "deletion fraction (rational)");
    sb->add_option("--delta", beDelta, "decoder delta (rational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sc->parsed()) return cmd_construct(cbf, constructOut);
        if (sp->parsed()) return cmd_params(pbf, paramsDelta);
        if (se->parsed())
            return cmd_encode(encCfg, encMsg, encSeed, encSeedOpt->count() > 0, encOut);
        if (st->parsed())
            return cmd_transmit(trIn, trOut, trStrategy, trBudget, trFraction, trSeed,
                                trBurstStart, trCfg, trDecoys, trPatOut, trK);
        if (sd->parsed()) return cmd_decode(deCfg, deIn, deDelta, deOut, deK);
        if (sv->parsed()) return cmd_verify(vf);
        if (sa->parsed()) return cmd_audit_lcs(auCfg, auPairs, auSeed, auOut);
        if (sb->parsed())
            return cmd_bench(beCfg, beTrials, beSeed, beStrategy, beFraction, beDelta);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
