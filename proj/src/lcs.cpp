#include "delcode/lcs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace delcode {

std::size_t lcs_length_dp(const Word& w1, const Word& w2) {
    const std::size_t n = w1.size(), m = w2.size();
    if (n == 0 || m == 0) return 0;
    std::vector<std::uint32_t> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::uint8_t a = w1.syms[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            std::uint32_t v = std::max(prev[j], cur[j - 1]);
            if (a == w2.syms[j - 1]) v = std::max(v, prev[j - 1] + 1);
            cur[j] = v;
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::size_t lcs_length_bitparallel(const Word& w1, const Word& w2) {
    const std::size_t n = w1.size(), m = w2.size();
    if (n == 0 || m == 0) return 0;
    const std::size_t words = (n + 63) / 64;
    // per-symbol position masks over w1
    std::vector<std::uint64_t> masks((std::size_t)(kMaxAlphabet + 1) * words, 0);
    for (std::size_t i = 0; i < n; ++i)
        masks[(std::size_t)w1.syms[i] * words + i / 64] |= 1ull << (i % 64);

    std::vector<std::uint64_t> V(words, ~0ull);
    for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t* M = &masks[(std::size_t)w2.syms[j] * words];
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t v = V[w];
            const std::uint64_t u = v & M[w];
            const std::uint64_t s1 = v + u;
            std::uint64_t c1 = s1 < v ? 1u : 0u;
            const std::uint64_t s2 = s1 + carry;
            if (s2 < s1) c1 = 1;
            V[w] = s2 | (v & ~M[w]);
            carry = c1;
        }
    }
    std::size_t zeros = 0;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t valid = ~0ull;
        if (w == words - 1 && n % 64 != 0) valid = (1ull << (n % 64)) - 1;
        zeros += (std::size_t)__builtin_popcountll(~V[w] & valid);
    }
    return zeros;
}

namespace {

// one forward DP row: lengths[j] = LCS(w1[lo1..hi1), w2[lo2..lo2+j))
void lcs_row(const Word& w1, std::size_t lo1, std::size_t hi1,
             const Word& w2, std::size_t lo2, std::size_t hi2,
             bool reversed, std::vector<std::uint32_t>& row) {
    const std::size_t m = hi2 - lo2;
    row.assign(m + 1, 0);
    std::vector<std::uint32_t> prev(m + 1, 0);
    for (std::size_t i = 0; i < hi1 - lo1; ++i) {
        std::swap(prev, row);
        const std::uint8_t a =
            reversed ? w1.syms[hi1 - 1 - i] : w1.syms[lo1 + i];
        row[0] = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::uint8_t b =
                reversed ? w2.syms[hi2 - j] : w2.syms[lo2 + j - 1];
            std::uint32_t v = std::max(prev[j], row[j - 1]);
            if (a == b) v = std::max(v, prev[j - 1] + 1);
            row[j] = v;
        }
    }
}

void hirschberg(const Word& w1, std::size_t lo1, std::size_t hi1,
                const Word& w2, std::size_t lo2, std::size_t hi2,
                Matching& out) {
    const std::size_t n = hi1 - lo1, m = hi2 - lo2;
    if (n == 0 || m == 0) return;
    if (n == 1) {
        for (std::size_t j = lo2; j < hi2; ++j)
            if (w2.syms[j] == w1.syms[lo1]) {
                out.emplace_back((std::uint32_t)lo1, (std::uint32_t)j);
                return;
            }
        return;
    }
    const std::size_t mid = lo1 + n / 2;
    std::vector<std::uint32_t> left, right;
    lcs_row(w1, lo1, mid, w2, lo2, hi2, false, left);
    lcs_row(w1, mid, hi1, w2, lo2, hi2, true, right);
    std::size_t best = 0;
    std::uint32_t bestVal = 0;
    for (std::size_t j = 0; j <= m; ++j) {
        const std::uint32_t v = left[j] + right[m - j];
        if (v > bestVal) { bestVal = v; best = j; }
    }
    hirschberg(w1, lo1, mid, w2, lo2, lo2 + best, out);
    hirschberg(w1, mid, hi1, w2, lo2 + best, hi2, out);
}

} // namespace

Matching lcs_witness(const Word& w1, const Word& w2) {
    Matching m;
    hirschberg(w1, 0, w1.size(), w2, 0, w2.size(), m);
    return m;
}

Span span_of(const Matching& m) {
    if (m.empty())
        throw std::invalid_argument("span_of: empty matching has no span");
    std::uint32_t lo1 = m.front().first, hi1 = m.front().first;
    std::uint32_t lo2 = m.front().second, hi2 = m.front().second;
    for (const auto& [i, j] : m) {
        lo1 = std::min(lo1, i); hi1 = std::max(hi1, i);
        lo2 = std::min(lo2, j); hi2 = std::max(hi2, j);
    }
    return {hi1 - lo1 + 1ull, hi2 - lo2 + 1ull};
}

CodeLcsReport lcs_of_code(const std::vector<Word>& words) {
    CodeLcsReport rep;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (words[i] == words[j])
                throw std::invalid_argument(
                    "lcs_of_code: duplicate codewords at " + std::to_string(i) +
                    "," + std::to_string(j));
            const std::size_t v = lcs_length_bitparallel(words[i], words[j]);
            if (v > rep.maxLcs) {
                rep.maxLcs = v;
                rep.argFirst = i;
                rep.argSecond = j;
            }
        }
    return rep;
}

} // namespace delcode
