#include "delcode/decoder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "delcode/exact.hpp"

namespace delcode {

namespace {

/// 2/(k + sqrt k) = 2/(k-1) - (2/(k^2-k)) sqrt(k); the rational and sqrt
/// coefficients of the threshold expressions
struct SqrtExpr {
    Rat a;
    Rat b;
};

SqrtExpr base_ratio(int k) {
    return {Rat(2, k - 1), Rat(-2, (std::int64_t)k * k - k)};
}

} // namespace

DecodeConfig make_decode_config(const ConcatCodeSpec& spec, const Rat& delta) {
    if (!(Rat(0) < delta) || Rat(1) < delta)
        throw std::invalid_argument("delta must be in (0, 1]");
    DecodeConfig cfg;
    cfg.delta = delta;
    SqrtExpr base = base_ratio(spec.k);
    Rat mm((std::int64_t)spec.m);
    cfg.windowLen = (std::uint64_t)ceil_plus_sqrt(
        (base.a + delta / Rat(4)) * mm, base.b * mm, spec.k);
    if (cfg.windowLen > spec.m)
        throw std::logic_error("window longer than a block");
    std::int64_t st = (delta * mm / Rat(4)).floor();
    cfg.stride = st < 1 ? 1 : (std::uint64_t)st;
    cfg.listThreshold = delta * Rat((std::int64_t)spec.q) / Rat(2);
    // delta q/2 > sqrt(8 ell q / delta)  <=>  delta^3 q > 32 ell
    cfg.sudanCoversThreshold =
        Rat(32) * Rat((std::int64_t)spec.ell) <
        delta * delta * delta * Rat((std::int64_t)spec.q);
    return cfg;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> inner_window_decode(
    const Word& sigma, const ConcatCodeSpec& spec, std::uint64_t* ambiguous) {
    if (sigma.size() > spec.m)
        throw std::invalid_argument("window longer than the block length");
    std::vector<std::uint32_t> counts(spec.k + 1, 0);
    for (std::uint8_t s : sigma.syms) ++counts[s];
    std::vector<Run> sruns = runs_of(sigma);

    std::size_t found = 0;
    std::size_t foundIdx = 0;
    for (std::size_t idx = 0; idx < spec.table.size(); ++idx) {
        const std::vector<std::uint32_t>& tc = spec.tableCounts[idx];
        bool possible = true;
        for (int sym = 1; sym <= spec.k; ++sym)
            if (counts[sym] > tc[sym]) {
                possible = false;
                break;
            }
        if (!possible) continue;
        if (rle_is_subsequence(sruns, spec.tableRuns[idx])) {
            if (++found >= 2) break;
            foundIdx = idx;
        }
    }
    if (found == 1)
        return std::make_pair((std::uint32_t)(foundIdx / spec.q) + 1,
                              (std::uint32_t)(foundIdx % spec.q) + 1);
    if (found >= 2 && ambiguous) ++*ambiguous;
    return std::nullopt;
}

DecodeReport decode(const Word& s, const ConcatCodeSpec& spec,
                    const DecodeConfig& cfg) {
    if (s.k != spec.k)
        throw std::invalid_argument("received word alphabet mismatch");
    DecodeReport rep;
    if (s.size() < cfg.windowLen) return rep; // NoCandidate

    // windowed inner decodings
    std::set<Point> points;
    for (std::uint64_t off = 0; off + cfg.windowLen <= s.size();
         off += cfg.stride) {
        ++rep.windowCount;
        Word sigma = s.slice(off, cfg.windowLen);
        auto hit = inner_window_decode(sigma, spec, &rep.ambiguousWindows);
        if (hit) {
            ++rep.decodedWindows;
            points.insert(Point{hit->first - 1, hit->second - 1});
        }
    }
    rep.pointCount = points.size();
    if (points.empty()) return rep; // NoCandidate

    // list recovery
    PointSet T(points.begin(), points.end());
    PrimeField F = spec.field();
    std::vector<Polynomial> list = sudan_list_decode(T, spec.ell, F);

    // when sqrt(2 ell |T|) exceeds the admission count delta q / 2, the
    // interpolation list can miss admissible polynomials; brute force closes
    // the gap at desk scale. With listThreshold = num/den the trigger is
    // 2 ell |T| den^2 > num^2, compared in integers.
    __int128 lhs = (__int128)2 * spec.ell * T.size() *
                   cfg.listThreshold.den() * cfg.listThreshold.den();
    __int128 rhs = (__int128)cfg.listThreshold.num() * cfg.listThreshold.num();
    if (lhs > rhs) {
        std::uint64_t total = 1;
        bool inCap = true;
        for (std::uint32_t i = 0; i < spec.ell; ++i) {
            total *= spec.q;
            if (total > cfg.bruteForceCap) {
                inCap = false;
                break;
            }
        }
        if (inCap) {
            rep.admissionRan = true;
            std::int64_t minA = cfg.listThreshold.ceil();
            std::vector<Polynomial> admitted = list_by_min_agreement(
                T, spec.ell, (std::uint64_t)(minA < 0 ? 0 : minA), F,
                cfg.bruteForceCap);
            std::set<std::vector<std::uint32_t>> seen;
            for (const Polynomial& p : list) seen.insert(p.coeffs);
            for (Polynomial& p : admitted)
                if (seen.insert(p.coeffs).second) list.push_back(std::move(p));
            std::sort(list.begin(), list.end(),
                      [](const Polynomial& a, const Polynomial& b) {
                          return a.coeffs < b.coeffs;
                      });
        }
    }
    rep.listSize = list.size();

    // pruning: test containment against the virtual concatenation so a
    // wrong candidate dies on its first over-consuming block
    std::vector<Run> sruns = runs_of(s);
    for (const Polynomial& p : list) {
        if (codeword_contains(p, sruns, s.syms.size(), spec))
            rep.survivors.push_back(p);
    }
    rep.survivorCount = rep.survivors.size();
    if (rep.survivorCount == 1) {
        rep.status = DecodeStatus::Success;
        rep.message = rep.survivors.front();
        rep.soundness = true; // pruning condition is the soundness condition
    } else if (rep.survivorCount > 1) {
        rep.status = DecodeStatus::MultipleSurvivors;
    }
    return rep;
}

CensusReport good_block_census(const Word& c, const Word& s,
                               const ConcatCodeSpec& spec,
                               const DecodeConfig& cfg) {
    if (c.size() != spec.N)
        throw std::invalid_argument("codeword length differs from N");
    CensusReport rep;
    rep.contribution.assign(spec.q, 0);
    std::size_t ci = 0;
    for (std::size_t si = 0; si < s.size(); ++si) {
        while (ci < c.size() && c.syms[ci] != s.syms[si]) ++ci;
        if (ci == c.size())
            throw std::invalid_argument("word is not a subsequence of the codeword");
        ++rep.contribution[ci / spec.m];
        ++ci;
    }
    SqrtExpr base = base_ratio(spec.k);
    Rat mm((std::int64_t)spec.m);
    Rat A = (base.a + cfg.delta / Rat(2)) * mm;
    Rat B = base.b * mm;
    for (std::uint64_t contrib : rep.contribution) {
        // contrib >= A + B sqrt(k)
        if (sign_plus_sqrt(Rat((std::int64_t)contrib) - A, -B, spec.k) >= 0)
            ++rep.goodCount;
    }
    return rep;
}

bool census_length_premise(std::uint64_t lenS, const ConcatCodeSpec& spec,
                           const DecodeConfig& cfg) {
    SqrtExpr base = base_ratio(spec.k);
    Rat NN((std::int64_t)spec.N);
    Rat A = (base.a + cfg.delta) * NN;
    Rat B = base.b * NN;
    return sign_plus_sqrt(Rat((std::int64_t)lenS) - A, -B, spec.k) >= 0;
}

bool census_good_quota(std::uint64_t goodCount, const ConcatCodeSpec&,
                       const DecodeConfig& cfg) {
    // goodCount >= delta q / 2
    return !(Rat((std::int64_t)goodCount) < cfg.listThreshold);
}

} // namespace delcode
