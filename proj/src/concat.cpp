#include "delcode/concat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "delcode/exact.hpp"
#include "delcode/lcs.hpp"

namespace delcode {

std::string layout_str(const std::vector<DirtyLayer>& layout) {
    std::ostringstream os;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (i) os << ',';
        os << layout[i].b1 << ':' << layout[i].b2;
    }
    return os.str();
}

std::vector<DirtyLayer> layout_parse(const std::string& text) {
    std::vector<DirtyLayer> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("layout entry needs b1:b2, got " +
                                        item);
        out.push_back(DirtyLayer{std::stoll(item.substr(0, colon)),
                                 std::stoll(item.substr(colon + 1))});
    }
    if (out.empty()) throw std::invalid_argument("empty layout string");
    return out;
}

long double ConcatCodeSpec::lcs_bound_ratio() const {
    long double root = std::sqrt((long double)k);
    return 2.0L / (k + root) + 2.0L * theta.num() / theta.den() +
           (long double)eta.num() / eta.den();
}

ConcatCodeSpec build_concat(int k, const Rat& gamma, std::uint32_t q,
                            const InnerConfig& inner) {
    check_alphabet(k);
    if (!(Rat(0) < gamma) || Rat(1) < gamma)
        throw std::invalid_argument("gamma must be in (0, 1]");
    ConcatCodeSpec spec;
    spec.k = k;
    spec.q = q;
    spec.gamma = gamma;
    spec.eta = gamma / Rat(2);
    spec.theta = gamma / Rat(4);
    spec.inner = inner;
    PrimeField F(q); // primality check
    spec.ell = (std::uint32_t)(gamma * Rat((std::int64_t)q) / Rat(2)).ceil();

    std::uint64_t pairs = (std::uint64_t)q * q;
    if (pairs > (1u << 16))
        throw SizeCapError("pair table of " + std::to_string(pairs) +
                               " entries exceeds the materialization cap",
                           std::to_string(pairs));

    std::int64_t blockLen = 0;
    if (inner.map == "dirty") {
        spec.dirtyParams = dirty_params_explicit(inner.K, k, inner.c, inner.t,
                                                 inner.L, inner.layout);
        blockLen = spec.dirtyParams->T;
    } else if (inner.map == "clean") {
        spec.cleanParams = clean_params(inner.K, k, inner.mapGamma);
        blockLen = spec.cleanParams->T;
    } else {
        throw std::invalid_argument("inner map must be dirty or clean, got " +
                                    inner.map);
    }

    OuterBuildResult built =
        build_random_outer(inner.K, inner.n, pairs, inner.gamma, inner.seed,
                           inner.attempts);
    if (!built.reachedTarget)
        throw std::runtime_error(
            "pair code builder got " +
            std::to_string(built.code.words.size()) + " of " +
            std::to_string(pairs) + " words after " +
            std::to_string(built.attempts) + " attempts");
    spec.pairCode = std::move(built.code);

    spec.m = (std::uint64_t)inner.n * (std::uint64_t)blockLen;
    spec.N = (std::uint64_t)q * spec.m;

    spec.table.reserve(pairs);
    spec.tableRuns.reserve(pairs);
    spec.tableCounts.reserve(pairs);
    for (std::uint64_t idx = 0; idx < pairs; ++idx) {
        const Word& u = spec.pairCode.words[idx];
        std::vector<int> syms(u.syms.begin(), u.syms.end());
        Word enc = spec.dirtyParams ? dirty_encode(syms, *spec.dirtyParams)
                                    : clean_encode(syms, *spec.cleanParams);
        if (enc.size() != spec.m)
            throw std::logic_error("inner block length mismatch");
        spec.tableRuns.push_back(runs_of(enc));
        std::vector<std::uint32_t> counts(k + 1, 0);
        for (std::uint8_t s : enc.syms) ++counts[s];
        spec.tableCounts.push_back(std::move(counts));
        spec.table.push_back(std::move(enc));
    }
    return spec;
}

const Word& inner_index_encode(std::uint32_t i, std::uint32_t alpha,
                               const ConcatCodeSpec& spec) {
    if (i < 1 || i > spec.q || alpha < 1 || alpha > spec.q)
        throw std::invalid_argument("pair (" + std::to_string(i) + "," +
                                    std::to_string(alpha) +
                                    ") outside [q] x [q]");
    return spec.table[(std::uint64_t)(i - 1) * spec.q + (alpha - 1)];
}

Word concat_encode(const Polynomial& f, const ConcatCodeSpec& spec) {
    if (f.degree() >= (int)spec.ell)
        throw std::invalid_argument("message degree " +
                                    std::to_string(f.degree()) +
                                    " not below " + std::to_string(spec.ell));
    PrimeField F = spec.field();
    Word out;
    out.k = (std::uint8_t)spec.k;
    out.syms.reserve(spec.N);
    for (std::uint32_t i = 1; i <= spec.q; ++i) {
        std::uint32_t beta = f.eval(i - 1, F);
        const Word& block = inner_index_encode(i, beta + 1, spec);
        out.syms.insert(out.syms.end(), block.syms.begin(), block.syms.end());
    }
    return out;
}

bool codeword_contains(const Polynomial& f, const std::vector<Run>& sRuns,
                       std::uint64_t sLen, const ConcatCodeSpec& spec) {
    if (f.degree() >= (int)spec.ell)
        throw std::invalid_argument("message degree " +
                                    std::to_string(f.degree()) +
                                    " not below " + std::to_string(spec.ell));
    if (sLen > spec.N) return false;
    if (sLen == 0) return true;
    PrimeField F = spec.field();
    std::uint64_t supLeft = spec.N;   // codeword symbols not yet consumed
    std::uint64_t subLeft = sLen;     // received symbols not yet matched
    std::size_t si = 0;
    std::uint32_t need = sRuns[0].len;
    for (std::uint32_t i = 1; i <= spec.q; ++i) {
        std::uint32_t beta = f.eval(i - 1, F);
        std::uint64_t idx = (std::uint64_t)(i - 1) * spec.q + beta;
        for (const Run& r : spec.tableRuns[idx]) {
            supLeft -= r.len;
            if (r.sym != sRuns[si].sym) continue;
            std::uint32_t take = r.len < need ? r.len : need;
            need -= take;
            subLeft -= take;
            // a partially used codeword run is still dropped once the
            // current received run is filled: the next received run has a
            // different symbol, so the leftover cannot serve it
            if (need == 0) {
                if (++si == sRuns.size()) return true;
                need = sRuns[si].len;
            }
        }
        if (subLeft > supLeft) return false;
    }
    return false;
}

ConcatAudit audit_concat_lcs(
    const ConcatCodeSpec& spec,
    const std::vector<std::pair<Polynomial, Polynomial>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("no pairs to audit");
    ConcatAudit a;
    a.pairCount = pairs.size();
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto& [f, g] = pairs[idx];
        if (f == g)
            throw std::invalid_argument("audit pair " + std::to_string(idx) +
                                        " is not distinct");
        Word cf = concat_encode(f, spec);
        Word cg = concat_encode(g, spec);
        std::uint64_t lcs = lcs_length_bitparallel(cf, cg);
        if (lcs > a.maxLcs) {
            a.maxLcs = lcs;
            a.maxPairIndex = idx;
        }
    }
    a.maxRatio = Rat((std::int64_t)a.maxLcs, (std::int64_t)spec.N);
    a.boundRatio = spec.lcs_bound_ratio();
    // maxLcs <= (2/(k-1) + 2 theta + eta) N - (2/(k^2-k)) N sqrt(k), exactly
    std::int64_t k = spec.k;
    Rat A = (Rat(2, k - 1) + spec.theta * Rat(2) + spec.eta) *
            Rat((std::int64_t)spec.N);
    Rat B = Rat(-2, k * k - k) * Rat((std::int64_t)spec.N);
    a.withinBound =
        sign_plus_sqrt(A - Rat((std::int64_t)a.maxLcs), B, k) >= 0;
    return a;
}

KvConfig concat_config(const ConcatCodeSpec& spec) {
    KvConfig cfg;
    cfg.set_u64("k", (std::uint64_t)spec.k);
    cfg.set_rat("gamma", spec.gamma);
    cfg.set_u64("q", spec.q);
    cfg.set("inner.map", spec.inner.map);
    cfg.set_u64("inner.K", (std::uint64_t)spec.inner.K);
    cfg.set_u64("inner.n", (std::uint64_t)spec.inner.n);
    cfg.set_rat("inner.gamma", spec.inner.gamma);
    cfg.set_u64("inner.seed", spec.inner.seed);
    cfg.set_u64("inner.attempts", spec.inner.attempts);
    if (spec.dirtyParams) {
        cfg.set_rat("inner.c", spec.inner.c);
        cfg.set_u64("inner.t", (std::uint64_t)spec.inner.t);
        cfg.set_u64("inner.L", (std::uint64_t)spec.inner.L);
        cfg.set("inner.layout", layout_str(spec.dirtyParams->layout));
    } else {
        cfg.set_rat("inner.mapGamma", spec.inner.mapGamma);
    }
    cfg.set_u64("ell", spec.ell);
    cfg.set_u64("m", spec.m);
    cfg.set_u64("N", spec.N);
    return cfg;
}

ConcatCodeSpec build_concat_from_config(const KvConfig& cfg) {
    InnerConfig inner;
    inner.map = cfg.get("inner.map");
    inner.K = (int)cfg.get_u64("inner.K");
    inner.n = (int)cfg.get_u64("inner.n");
    inner.gamma = cfg.get_rat("inner.gamma");
    inner.seed = cfg.get_u64("inner.seed");
    inner.attempts = cfg.get_u64("inner.attempts");
    if (inner.map == "dirty") {
        inner.c = cfg.get_rat("inner.c");
        inner.t = (std::int64_t)cfg.get_u64("inner.t");
        inner.L = (std::int64_t)cfg.get_u64("inner.L");
        if (cfg.has("inner.layout"))
            inner.layout = layout_parse(cfg.get("inner.layout"));
    } else if (cfg.has("inner.mapGamma")) {
        inner.mapGamma = cfg.get_rat("inner.mapGamma");
    }
    ConcatCodeSpec spec =
        build_concat((int)cfg.get_u64("k"), cfg.get_rat("gamma"),
                     (std::uint32_t)cfg.get_u64("q"), inner);
    for (const char* key : {"ell", "m", "N"}) {
        if (!cfg.has(key)) continue;
        std::uint64_t want = cfg.get_u64(key);
        std::uint64_t got = std::string(key) == "ell" ? spec.ell
                            : std::string(key) == "m" ? spec.m
                                                      : spec.N;
        if (want != got)
            throw std::invalid_argument(
                "config key " + std::string(key) + " = " +
                std::to_string(want) + " disagrees with rebuilt value " +
                std::to_string(got));
    }
    return spec;
}

} // namespace delcode
