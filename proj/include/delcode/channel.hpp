#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "delcode/inner_codes.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// sorted distinct 0-based positions to delete from a word of length len
struct DeletionPattern {
    std::uint64_t len = 0;
    std::vector<std::uint64_t> indices;

    std::uint64_t budget() const { return indices.size(); }
};

/// throws invalid_argument on unsorted/duplicate/out-of-range indices
void validate_pattern(const DeletionPattern& p);

/// removes the pattern positions; result length len - budget
Word apply_pattern(const Word& w, const DeletionPattern& p);

/// uniform random budget-subset of [0, len), seed-deterministic
DeletionPattern random_pattern(std::uint64_t len, std::uint64_t budget,
                               std::uint64_t seed);

/// contiguous deletions [start, start + budget)
DeletionPattern burst_pattern(std::uint64_t len, std::uint64_t budget,
                              std::uint64_t start);

/// deletes exactly the dirt positions of a word that is structurally a
/// concatenation of dirty codewords; the residue is the clean skeleton
DeletionPattern dirt_strip_pattern(const Word& w, const DirtyInnerParams& p);

/// steers the received word toward a decoy: picks the decoy maximizing
/// LCS(c, decoy), keeps a maximum common subsequence (truncated, or padded
/// with the smallest unused positions, to len - budget symbols), deletes the
/// rest. capProduct guards the witness DP cost.
DeletionPattern greedy_lcs_pattern(const Word& c,
                                   const std::vector<Word>& decoys,
                                   std::uint64_t budget,
                                   std::uint64_t capProduct = 1000000000ull);

/// text format: "len budget" line, then one index per line
std::string pattern_str(const DeletionPattern& p);
DeletionPattern pattern_parse(std::istream& in);
void write_pattern_file(const std::string& path, const DeletionPattern& p,
                        const std::vector<std::string>& header);
DeletionPattern read_pattern_file(const std::string& path);

} // namespace delcode
