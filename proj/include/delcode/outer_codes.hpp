#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "delcode/rational.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// code over [K] with every pairwise LCS < gamma * n
struct OuterCode {
    int K = 2;
    int n = 1;
    Rat gamma;
    std::uint64_t seed = 0;
    std::vector<Word> words;

    /// max pairwise LCS / n, exact
    Rat gammaAchieved;
};

struct OuterBuildResult {
    OuterCode code;
    bool reachedTarget = false;
    std::uint64_t attempts = 0;
};

double binary_entropy(double x);

/// sufficient condition 2 r log2 K + 2 h(gamma) - gamma log2 K < 0
bool rate_feasible(int K, double rate, double gamma);

/// seeded greedy builder: draw uniform words, keep those with LCS < gamma*n
/// against all kept words (bit-parallel kernel, plain-DP audit at the end).
/// Duplicate draws are discarded. Returns a partial code with
/// reachedTarget=false when maxAttempts runs out; the caller decides.
OuterBuildResult build_random_outer(int K, int n, std::size_t targetSize,
                                    const Rat& gamma, std::uint64_t seed,
                                    std::uint64_t maxAttempts = 200000);

/// text format: header "K n gamma seed", then codewords one per line
void write_outer(std::ostream& out, const OuterCode& code);
OuterCode read_outer(std::istream& in);

} // namespace delcode
