#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delcode/config_io.hpp"
#include "delcode/field.hpp"
#include "delcode/inner_codes.hpp"
#include "delcode/outer_codes.hpp"
#include "delcode/rational.hpp"
#include "delcode/rs.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// construction knobs for the position-indexed inner code: a random code
/// over [K] of length n (pairwise LCS < gamma * n) composed with the dirty
/// (default) or clean symbol map
struct InnerConfig {
    std::string map = "dirty"; // "dirty" or "clean"
    int K = 4;                 // alphabet of the per-pair word = symbol maps
    int n = 12;                // symbols per per-pair word
    Rat gamma{5, 6};           // pairwise LCS bound for the random code
    std::uint64_t seed = 1;
    std::uint64_t attempts = 200000;

    // dirty map knobs (explicit desk-scale parameters)
    Rat c{1, 4};
    std::int64_t t = 4;
    std::int64_t L = 625;
    std::vector<DirtyLayer> layout; // empty = formula defaults

    // clean map knob: gamma fed to the derived-parameter formulas
    Rat mapGamma{1, 2};
};

/// concatenated code: degree-<ell polynomials over F_q, outer symbol i
/// encoded as the inner codeword of the pair (position i, value), blocks of
/// length m, total length N = q * m
struct ConcatCodeSpec {
    int k = 2;          // channel alphabet
    std::uint32_t q = 0;
    std::uint32_t ell = 0; // ceil(gamma * q / 2)
    Rat gamma;
    Rat eta;   // recorded analysis parameter, gamma / 2
    Rat theta; // recorded analysis parameter, gamma / 4
    InnerConfig inner;

    std::uint64_t m = 0;
    std::uint64_t N = 0;

    OuterCode pairCode; // >= q^2 words over [inner.K], one per (i, alpha)
    std::optional<DirtyInnerParams> dirtyParams;
    std::optional<CleanInnerParams> cleanParams;

    /// inner codeword per pair, index (i-1)*q + (alpha-1) for 1-based pairs
    std::vector<Word> table;
    /// run-length view and per-symbol counts of each table word (decoder
    /// working set, derived deterministically from table)
    std::vector<std::vector<Run>> tableRuns;
    std::vector<std::vector<std::uint32_t>> tableCounts;

    PrimeField field() const { return PrimeField(q); }

    /// upper estimate 2/(k+sqrt(k)) + 2*theta + eta on LCS(C)/N carried as
    /// metadata; the audit measures reality
    long double lcs_bound_ratio() const;
};

/// builds the spec: ell = ceil(gamma*q/2), random pair code with q^2 words,
/// materialized inner table. Throws runtime_error when the pair-code builder
/// cannot reach q^2 words, SizeCapError on inner-map size violations.
ConcatCodeSpec build_concat(int k, const Rat& gamma, std::uint32_t q,
                            const InnerConfig& inner);

/// inner codeword of the 1-based pair (i, alpha), i, alpha in [q]
const Word& inner_index_encode(std::uint32_t i, std::uint32_t alpha,
                               const ConcatCodeSpec& spec);

/// codeword of f: blocks i = 1..q, block i the inner codeword of
/// (i, f(i-1) + 1); requires deg f < ell
Word concat_encode(const Polynomial& f, const ConcatCodeSpec& spec);

/// is s (given as its run-length encoding plus total length) a subsequence
/// of the codeword of f? Matches against the per-block run lists without
/// materializing the codeword and aborts as soon as the remaining codeword
/// material is shorter than the remaining received material.
bool codeword_contains(const Polynomial& f, const std::vector<Run>& sRuns,
                       std::uint64_t sLen, const ConcatCodeSpec& spec);

struct ConcatAudit {
    std::uint64_t pairCount = 0;
    std::uint64_t maxLcs = 0;
    std::size_t maxPairIndex = 0;
    Rat maxRatio;          // maxLcs / N, exact
    long double boundRatio = 0; // metadata bound
    bool withinBound = false;   // maxLcs <= bound * N, exact comparison
};

/// measures pairwise LCS of the encodings of the given distinct message
/// pairs; quadratic bit-parallel kernel, cost O(N^2 / 64) per pair
ConcatAudit audit_concat_lcs(const ConcatCodeSpec& spec,
                             const std::vector<std::pair<Polynomial, Polynomial>>& pairs);

/// construction inputs plus derived sizes (derived keys are checked on read)
KvConfig concat_config(const ConcatCodeSpec& spec);
ConcatCodeSpec build_concat_from_config(const KvConfig& cfg);

std::string layout_str(const std::vector<DirtyLayer>& layout);
std::vector<DirtyLayer> layout_parse(const std::string& text);

} // namespace delcode
