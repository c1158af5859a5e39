#include "delcode/span_profile.hpp"

#include <algorithm>
#include <stdexcept>

#include "delcode/lcs.hpp"

namespace delcode {

SpanProfile span_profile(const Word& w1, const Word& w2,
                         std::uint64_t capProduct) {
    const std::size_t n = w1.size(), m = w2.size();
    if ((std::uint64_t)n * m > capProduct)
        throw std::invalid_argument(
            "span_profile: |w1|*|w2| = " + std::to_string((std::uint64_t)n * m) +
            " exceeds cap " + std::to_string(capProduct));

    SpanProfile out;
    out.lcs = lcs_length_dp(w1, w2);
    const std::size_t L = out.lcs;
    const std::uint64_t kNone = UINT64_MAX;
    // tightest span seen for an exact subsequence length
    std::vector<std::uint64_t> exactTotal(L + 1, kNone), exactFirst(L + 1, kNone);
    exactTotal[0] = exactFirst[0] = 0;

    // minTotalSpan: every start pair (i, j), DP over window ends (a, b).
    // A window pair [i, a) x [j, b) whose LCS is v admits a common
    // subsequence of length v with total span <= (a - i) + (b - j); the
    // minimizing window is flush with its matching, so scanning all windows
    // is exact.
    std::vector<std::uint16_t> prev(m + 1), cur(m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t cols = m - j;
            std::fill(prev.begin(), prev.begin() + cols + 1, 0);
            for (std::size_t a = i + 1; a <= n; ++a) {
                const std::uint8_t s = w1.syms[a - 1];
                cur[0] = 0;
                std::uint16_t rowBest = 0;
                for (std::size_t bb = 1; bb <= cols; ++bb) {
                    std::uint16_t v = std::max(prev[bb], cur[bb - 1]);
                    if (s == w2.syms[j + bb - 1]) {
                        const std::uint16_t d = (std::uint16_t)(prev[bb - 1] + 1);
                        if (d > v) v = d;
                    }
                    cur[bb] = v;
                    if (v > rowBest) {
                        rowBest = v;
                        const std::uint64_t span = (a - i) + bb;
                        if (span < exactTotal[v]) exactTotal[v] = span;
                    }
                }
                std::swap(prev, cur);
            }
        }
    }

    // minSpanInFirst: windows of w1 against the whole w2
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(prev.begin(), prev.begin() + m + 1, 0);
        for (std::size_t a = i + 1; a <= n; ++a) {
            const std::uint8_t s = w1.syms[a - 1];
            cur[0] = 0;
            for (std::size_t b = 1; b <= m; ++b) {
                std::uint16_t v = std::max(prev[b], cur[b - 1]);
                if (s == w2.syms[b - 1]) {
                    const std::uint16_t d = (std::uint16_t)(prev[b - 1] + 1);
                    if (d > v) v = d;
                }
                cur[b] = v;
            }
            const std::uint16_t full = cur[m];
            if (full > 0 && (std::uint64_t)(a - i) < exactFirst[full])
                exactFirst[full] = a - i;
            std::swap(prev, cur);
        }
    }

    // a length->span entry covers every smaller length
    out.minTotalSpan.assign(L + 1, kNone);
    out.minSpanInFirst.assign(L + 1, kNone);
    std::uint64_t runTotal = kNone, runFirst = kNone;
    for (std::size_t ell = L + 1; ell-- > 0;) {
        runTotal = std::min(runTotal, exactTotal[ell]);
        runFirst = std::min(runFirst, exactFirst[ell]);
        out.minTotalSpan[ell] = runTotal;
        out.minSpanInFirst[ell] = runFirst;
    }
    out.minTotalSpan[0] = 0;
    out.minSpanInFirst[0] = 0;
    return out;
}

} // namespace delcode
