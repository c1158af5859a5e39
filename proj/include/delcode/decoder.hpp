#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "delcode/concat.hpp"
#include "delcode/rational.hpp"
#include "delcode/rs.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// window schedule and list-recovery thresholds; windowLen and the exact
/// good-block threshold involve sqrt(k) and are handled with exact
/// comparisons, never floating point
struct DecodeConfig {
    Rat delta;                 // in (0, 1]
    std::uint64_t windowLen = 0; // ceil((2/(k+sqrt k) + delta/4) m)
    std::uint64_t stride = 0;    // max(1, floor(delta m / 4))
    Rat listThreshold;           // delta q / 2
    bool sudanCoversThreshold = false; // delta^3 q > 32 ell, reported only
    std::uint64_t bruteForceCap = 1000000; // q^ell cap for the admission path
};

DecodeConfig make_decode_config(const ConcatCodeSpec& spec, const Rat& delta);

/// scans all q^2 pairs for those whose inner codeword contains sigma as a
/// subsequence; a unique match is returned, zero or several give nullopt
/// (several also bumps *ambiguous when given)
std::optional<std::pair<std::uint32_t, std::uint32_t>> inner_window_decode(
    const Word& sigma, const ConcatCodeSpec& spec,
    std::uint64_t* ambiguous = nullptr);

enum class DecodeStatus { Success, NoCandidate, MultipleSurvivors };

struct DecodeReport {
    DecodeStatus status = DecodeStatus::NoCandidate;
    Polynomial message; // meaningful on Success
    std::uint64_t windowCount = 0;
    std::uint64_t ambiguousWindows = 0;
    std::uint64_t decodedWindows = 0;
    std::uint64_t pointCount = 0;   // |T| after set collapse
    std::uint64_t listSize = 0;     // admitted candidates before pruning
    bool admissionRan = false;      // brute-force path triggered
    std::uint64_t survivorCount = 0;
    std::vector<Polynomial> survivors;
    bool soundness = false; // Success: encoding of message contains s
};

/// four steps: windowed inner decoding into a point set, list recovery
/// (interpolation list plus, at desk scale, brute-force admission at
/// agreement >= delta q / 2), then pruning to the messages whose encoding
/// contains s. Exactly one survivor is a decode; zero or several are
/// reported, never guessed.
DecodeReport decode(const Word& s, const ConcatCodeSpec& spec,
                    const DecodeConfig& cfg);

struct CensusReport {
    std::vector<std::uint64_t> contribution; // per block, sums to len s
    std::uint64_t goodCount = 0;
};

/// greedy leftmost embedding of s into c, counting how many symbols each
/// length-m block contributes; a block is good when its contribution is at
/// least (2/(k+sqrt k) + delta/2) m (exact comparison). Throws when s is not
/// a subsequence of c.
CensusReport good_block_census(const Word& c, const Word& s,
                               const ConcatCodeSpec& spec,
                               const DecodeConfig& cfg);

/// len s >= (2/(k+sqrt k) + delta) N, exactly
bool census_length_premise(std::uint64_t lenS, const ConcatCodeSpec& spec,
                           const DecodeConfig& cfg);

/// goodCount >= delta q / 2, exactly
bool census_good_quota(std::uint64_t goodCount, const ConcatCodeSpec& spec,
                       const DecodeConfig& cfg);

} // namespace delcode
