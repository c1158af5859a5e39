#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace delcode {

/// mt19937_64 with hand-rolled integer draws. std::uniform_int_distribution
/// is not bit-stable across standard library versions; every artifact here
/// must be byte-identical for a given seed, so draws go through this wrapper
/// only.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// uniform in [0, n), n >= 1, via rejection sampling
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t residue = (0 - n) % n; // (2^64 - n) mod n
        for (;;) {
            std::uint64_t x = eng_();
            if (x >= residue) return (x - residue) % n;
        }
    }

    /// uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + (std::int64_t)below((std::uint64_t)(hi - lo + 1));
    }

    /// sorted sample of `count` distinct values from [0, n) (Floyd)
    std::vector<std::uint64_t> sample_sorted(std::uint64_t n, std::uint64_t count);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

inline std::vector<std::uint64_t> Rng::sample_sorted(std::uint64_t n, std::uint64_t count) {
    // Floyd's sampling keeps draw count equal to `count`; for the dense
    // patterns used by deletion channels a bitmap extraction stays cheap.
    std::vector<bool> taken(n, false);
    for (std::uint64_t j = n - count; j < n; ++j) {
        std::uint64_t t = below(j + 1);
        if (taken[t]) taken[j] = true; else taken[t] = true;
    }
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < n; ++i)
        if (taken[i]) out.push_back(i);
    return out;
}

} // namespace delcode
