#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "delcode/rational.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// thrown when derived code sizes blow past the configured cap; carries the
/// size the construction would have needed
struct SizeCapError : std::runtime_error {
    SizeCapError(const std::string& msg, std::string required)
        : std::runtime_error(msg), requiredT(std::move(required)) {}
    std::string requiredT;
};

constexpr std::int64_t kDefaultSizeCap = 1ll << 26;

// ---------------------------------------------------------------- clean ---

/// encoder for source alphabet [K]: symbol l maps to the amplitude word at
/// amplitude R^(l-1)
struct CleanInnerParams {
    int k = 2;
    int K = 2;
    Rat gamma;
    std::int64_t R = 0;
    std::int64_t L = 0;
    std::int64_t T = 0; // k * L
};

/// derives R = ceil(2k/gamma), L = 16 R^(K-1) ceil(1/gamma), T = kL;
/// throws SizeCapError when T > cap
CleanInnerParams clean_params(int K, int k, const Rat& gamma,
                              std::int64_t cap = kDefaultSizeCap);

/// (1^A 2^A ... k^A)^(L/A), length kL; requires A | L
Word amplitude_word(std::int64_t A, std::int64_t L, int k);

/// truncation of the infinite amplitude word (1^A ... k^A)^inf
Word amplitude_word_prefix(std::int64_t A, int k, std::int64_t len);

Word clean_encode_symbol(int l, const CleanInnerParams& p);
Word clean_encode(const std::vector<int>& word, const CleanInnerParams& p);

// ---------------------------------------------------------------- dirty ---

/// per-source-symbol segment/amplitude pair: symbol i's codeword repeats the
/// k segments j_(b1,b2), j = 1..k
struct DirtyLayer {
    std::int64_t b1 = 0; // segment length
    std::int64_t b2 = 0; // amplitude inside the segment
};

struct DirtyInnerParams {
    int k = 2;
    int K = 2;
    Rat c;                // dirt fraction parameter, 0 < c <= (sqrt(k)-1)/(k-1)
    std::int64_t t = 0;   // R = (1+c) t exactly
    std::int64_t R = 0;
    std::int64_t L = 0;   // default R^(2K+1)
    std::int64_t scale = 0; // amplitude multiplier making dirt runs integral
    std::int64_t T = 0;   // k * L * scale
    std::vector<DirtyLayer> layout; // size K, default b1 = scale R^(K+1+i), b2 = scale R^(K-i)

    bool defaultLayout = true;
};

/// parameter search: smallest integer R > 56/gamma expressible as (1+c)t
/// with integer t and c in [c_max(k) - gamma/4, c_max(k)); then
/// L = R^(2K+1), scale = den(c). Throws SizeCapError when T > cap.
DirtyInnerParams dirty_params(int K, int k, const Rat& gamma,
                              std::int64_t cap = kDefaultSizeCap);

/// desk-scale constructor: explicit (R, t, c, L) and optionally an explicit
/// layout; when layout is empty the default formula is used and validated.
/// Every structural invariant is still enforced.
DirtyInnerParams dirty_params_explicit(int K, int k, const Rat& c,
                                       std::int64_t t, std::int64_t L,
                                       std::vector<DirtyLayer> layout = {},
                                       std::int64_t cap = kDefaultSizeCap);

void validate_dirty(const DirtyInnerParams& p);

/// dirty run j_(M,a): repeat (j^a then each other symbol^(c*a) in increasing
/// order skipping j) to length M; requires c*a integral and unit | M
Word dirty_run(int j, std::int64_t M, std::int64_t a, const DirtyInnerParams& p);

/// truncation of the infinite dirty run j_(inf,a)
Word dirty_run_prefix(int j, std::int64_t a, const DirtyInnerParams& p,
                      std::int64_t len);

/// g_i, total length T
Word dirty_codeword(int i, const DirtyInnerParams& p);

/// first len symbols of g_i without materializing the rest
Word dirty_codeword_prefix(int i, const DirtyInnerParams& p, std::int64_t len);

Word dirty_encode(const std::vector<int>& word, const DirtyInnerParams& p);

/// positions (0-based) of dirt symbols inside g_i
std::vector<std::uint8_t> dirty_dirt_mask(int i, const DirtyInnerParams& p);

/// dirt positions of a word that is structurally a concatenation of dirty
/// codewords; throws on structure mismatch
std::vector<std::uint64_t> dirt_positions(const Word& w, const DirtyInnerParams& p);

/// fraction of dirt symbols, (k-1)c / (1 + (k-1)c)
Rat dirt_fraction(const DirtyInnerParams& p);

} // namespace delcode
