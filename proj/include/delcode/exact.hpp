#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "delcode/rational.hpp"

namespace delcode {

/// Exact sign of a + b*sqrt(k) for rationals a, b and integer k >= 0.
/// Thresholds of the form (2/(k+sqrt(k)) + delta)*m must be compared to
/// integer counts without floating error, including k a perfect square.
inline int sign_plus_sqrt(const Rat& a, const Rat& b, std::int64_t k) {
    if (k < 0) throw std::domain_error("sign_plus_sqrt: negative radicand");
    auto sgn = [](__int128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); };
    std::int64_t s = (std::int64_t)std::llround(std::sqrt((double)k));
    while (s * s > k) --s;
    while ((s + 1) * (s + 1) <= k) ++s;
    if (s * s == k) { // sqrt(k) rational
        Rat v = a + b * Rat(s);
        return sgn(v.num());
    }
    int sa = sgn(a.num()), sb = sgn(b.num());
    if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? 0 : 1;
    if (sa <= 0 && sb <= 0) return (sa == 0 && sb == 0) ? 0 : -1;
    // mixed signs: compare a^2 vs b^2*k; equality impossible (sqrt(k) irrational)
    __int128 lhs = (__int128)a.num() * a.num() * ((__int128)b.den() * b.den());
    __int128 rhs = (__int128)b.num() * b.num() * k * ((__int128)a.den() * a.den());
    if (sa > 0) return lhs > rhs ? 1 : -1;  // a > 0, b < 0
    return rhs > lhs ? 1 : -1;              // a < 0, b > 0
}

/// value(a,b,k) <= t ?
inline bool le_int(const Rat& a, const Rat& b, std::int64_t k, std::int64_t t) {
    return sign_plus_sqrt(a - Rat(t), b, k) <= 0;
}

/// ceil(a + b*sqrt(k)) computed exactly
inline std::int64_t ceil_plus_sqrt(const Rat& a, const Rat& b, std::int64_t k) {
    long double est = (long double)a.num() / a.den() +
                      (long double)b.num() / b.den() * std::sqrt((long double)k);
    std::int64_t c = (std::int64_t)std::floor(est) - 2;
    for (int i = 0; i < 6; ++i, ++c)
        if (le_int(a, b, k, c)) return c;
    throw std::logic_error("ceil_plus_sqrt: estimate too far off");
}

inline std::int64_t floor_plus_sqrt(const Rat& a, const Rat& b, std::int64_t k) {
    std::int64_t c = ceil_plus_sqrt(a, b, k);
    // integer value iff a + b*sqrt(k) == c
    if (sign_plus_sqrt(a - Rat(c), b, k) == 0) return c;
    return c - 1;
}

} // namespace delcode
