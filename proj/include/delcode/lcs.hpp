#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "delcode/word.hpp"

namespace delcode {

/// common-subsequence witness: index pairs (i, j) into (w1, w2),
/// strictly increasing on both sides, w1[i] == w2[j]
using Matching = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// classic quadratic DP, length only
std::size_t lcs_length_dp(const Word& w1, const Word& w2);

/// bit-parallel length kernel (64 columns per machine word); must agree
/// with lcs_length_dp everywhere — property-tested
std::size_t lcs_length_bitparallel(const Word& w1, const Word& w2);

/// length + witness via Hirschberg linear-space divide and conquer
Matching lcs_witness(const Word& w1, const Word& w2);

struct Span {
    std::uint64_t inFirst = 0;  // window length covered in w1
    std::uint64_t inSecond = 0; // window length covered in w2
    std::uint64_t total() const { return inFirst + inSecond; }
};

/// span of a matching: (max - min + 1) on each side; empty matching has no
/// span and throws
Span span_of(const Matching& m);

struct CodeLcsReport {
    std::size_t maxLcs = 0;
    std::size_t argFirst = 0; // lexicographically smallest maximizing pair
    std::size_t argSecond = 0;
};

/// pairwise LCS maximum over a list of words; throws on duplicate words
CodeLcsReport lcs_of_code(const std::vector<Word>& words);

} // namespace delcode
