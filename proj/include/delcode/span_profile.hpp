#pragma once

#include <cstdint>
#include <vector>

#include "delcode/word.hpp"

namespace delcode {

/// Exhaustive minimal-span tables for common subsequences of (w1, w2).
/// Index ell runs 0..lcs; entry ell holds the minimum over all common
/// subsequences of length >= ell of
///   minTotalSpan:   span-in-w1 + span-in-w2
///   minSpanInFirst: span-in-w1 alone (w2 side unconstrained)
/// ell = 0 entries are 0 by convention.
struct SpanProfile {
    std::size_t lcs = 0;
    std::vector<std::uint64_t> minTotalSpan;
    std::vector<std::uint64_t> minSpanInFirst;
};

/// Exact computation by enumerating every start-index pair and running one
/// incremental LCS table per pair: O((|w1|*|w2|)^2) work. The guard caps
/// |w1|*|w2| (default 10^4); pass a larger cap deliberately for the bigger
/// lemma sweeps.
SpanProfile span_profile(const Word& w1, const Word& w2,
                         std::uint64_t capProduct = 10000);

} // namespace delcode
