#pragma once

// shared oracles for the test binaries: subset-enumeration span profile,
// random word generation, and the span-lemma sweeps

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "delcode/inner_codes.hpp"
#include "delcode/rational.hpp"
#include "delcode/rng.hpp"
#include "delcode/span_profile.hpp"
#include "delcode/word.hpp"

namespace testutil {

inline delcode::Word random_word(delcode::Rng& rng, int k, std::size_t len) {
    delcode::Word w;
    w.k = (std::uint8_t)k;
    for (std::size_t i = 0; i < len; ++i)
        w.push((std::uint8_t)(1 + rng.below((std::uint64_t)k)));
    return w;
}

/// random subsequence of w keeping each symbol with probability keepNum/keepDen
inline delcode::Word random_subsequence(delcode::Rng& rng, const delcode::Word& w,
                                        std::uint64_t keepNum, std::uint64_t keepDen) {
    delcode::Word s;
    s.k = w.k;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (rng.below(keepDen) < keepNum) s.push(w.syms[i]);
    return s;
}

/// subset-enumeration oracle for span_profile; words of length <= 20
inline delcode::SpanProfile span_oracle(const delcode::Word& w1,
                                        const delcode::Word& w2) {
    auto enumerate = [](const delcode::Word& w) {
        std::map<std::string, std::uint64_t> minSpan;
        std::size_t n = w.size();
        for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
            std::string x;
            std::size_t lo = n, hi = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) {
                    x.push_back((char)('0' + w.syms[i]));
                    if (lo == n) lo = i;
                    hi = i;
                }
            std::uint64_t span = hi - lo + 1;
            auto it = minSpan.find(x);
            if (it == minSpan.end() || span < it->second) minSpan[x] = span;
        }
        return minSpan;
    };
    auto s1 = enumerate(w1), s2 = enumerate(w2);

    delcode::SpanProfile p;
    for (const auto& [x, sp] : s1)
        if (s2.count(x) && x.size() > p.lcs) p.lcs = x.size();
    const std::uint64_t inf = ~0ull;
    p.minTotalSpan.assign(p.lcs + 1, inf);
    p.minSpanInFirst.assign(p.lcs + 1, inf);
    p.minTotalSpan[0] = p.minSpanInFirst[0] = 0;
    for (const auto& [x, sp1] : s1) {
        auto it = s2.find(x);
        if (it == s2.end()) continue;
        std::size_t l = x.size();
        if (sp1 + it->second < p.minTotalSpan[l]) p.minTotalSpan[l] = sp1 + it->second;
        if (sp1 < p.minSpanInFirst[l]) p.minSpanInFirst[l] = sp1;
    }
    for (std::size_t l = p.lcs; l > 1; --l) {
        if (p.minTotalSpan[l] < p.minTotalSpan[l - 1]) p.minTotalSpan[l - 1] = p.minTotalSpan[l];
        if (p.minSpanInFirst[l] < p.minSpanInFirst[l - 1]) p.minSpanInFirst[l - 1] = p.minSpanInFirst[l];
    }
    return p;
}

/// min over ell >= 1 of minTotalSpan[ell] - ((k+1-kA/B) ell - 2(A+B)),
/// on len-symbol truncations of the amplitude words at A and B
inline delcode::Rat basicspan_min_slack(int k, std::int64_t A, std::int64_t B,
                                        std::int64_t len) {
    using delcode::Rat;
    delcode::Word w1 = delcode::amplitude_word_prefix(A, k, len);
    delcode::Word w2 = delcode::amplitude_word_prefix(B, k, len);
    delcode::SpanProfile prof = delcode::span_profile(w1, w2, 1ull << 40);
    Rat slope = Rat(k + 1) - Rat(k * A, B);
    Rat offset = Rat(2 * (A + B));
    Rat best;
    bool have = false;
    for (std::size_t ell = 1; ell <= prof.lcs; ++ell) {
        Rat slack = Rat((std::int64_t)prof.minTotalSpan[ell]) -
                    (slope * Rat((std::int64_t)ell) - offset);
        if (!have || slack < best) {
            best = slack;
            have = true;
        }
    }
    return best;
}

/// min over ell >= 1 of minSpanInFirst[ell] + k b1 - ((k+1+(k-1)c) ell - k^2 a b1/b2),
/// with w1 a len-symbol truncation of the infinite dirty run at amplitude a
/// and w2 the k-segment word at (b1, b2)
inline delcode::Rat dirtyspan_min_slack(int k, const delcode::Rat& c, std::int64_t a,
                                        std::int64_t b1, std::int64_t b2,
                                        std::int64_t len) {
    using delcode::Rat;
    delcode::DirtyInnerParams p;
    p.k = k;
    p.K = 1;
    p.c = c;
    delcode::Word w1 = delcode::dirty_run_prefix(1, a, p, len);
    delcode::Word w2;
    w2.k = (std::uint8_t)k;
    for (int j = 1; j <= k; ++j) {
        delcode::Word seg = delcode::dirty_run(j, b1, b2, p);
        w2.syms.insert(w2.syms.end(), seg.syms.begin(), seg.syms.end());
    }
    delcode::SpanProfile prof = delcode::span_profile(w1, w2, 1ull << 40);
    Rat slope = Rat(k + 1) + c * Rat(k - 1);
    Rat offset = Rat(k * k * a * b1, b2);
    Rat best;
    bool have = false;
    for (std::size_t ell = 1; ell <= prof.lcs; ++ell) {
        Rat slack = Rat((std::int64_t)prof.minSpanInFirst[ell] + k * b1) -
                    (slope * Rat((std::int64_t)ell) - offset);
        if (!have || slack < best) {
            best = slack;
            have = true;
        }
    }
    return best;
}

} // namespace testutil
