#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace delcode {

/// Exact rational on int64 with __int128 intermediates. Values in this
/// project stay tiny (code parameters, thresholds), so overflow means a
/// misuse and throws rather than wrapping.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    static Rat from_i128(__int128 n, __int128 d);

    Rat operator+(const Rat& o) const {
        return from_i128((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                         (__int128)den_ * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return from_i128((__int128)num_ * o.den_ - (__int128)o.num_ * den_,
                         (__int128)den_ * o.den_);
    }
    Rat operator*(const Rat& o) const {
        return from_i128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        return from_i128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    // cross-multiplication never overflows __int128 for int64 operands
    int cmp(const Rat& o) const {
        __int128 l = (__int128)num_ * o.den_;
        __int128 r = (__int128)o.num_ * den_;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    bool operator<(const Rat& o) const { return cmp(o) < 0; }
    bool operator<=(const Rat& o) const { return cmp(o) <= 0; }
    bool operator>(const Rat& o) const { return cmp(o) > 0; }
    bool operator>=(const Rat& o) const { return cmp(o) >= 0; }
    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    bool is_integer() const { return den_ == 1; }

    /// floor(num/den) as an integer
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return (double)num_ / (double)den_; }

    /// "p" or "p/q"
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// parses "p" or "p/q"
    static Rat parse(const std::string& s);

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rat Rat::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    const __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
        throw std::overflow_error("Rat: value out of int64 range");
    Rat r;
    r.num_ = (std::int64_t)n;
    r.den_ = (std::int64_t)d;
    if (r.num_ == 0) r.den_ = 1;
    return r;
}

inline Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        std::int64_t n = std::stoll(s.substr(0, slash));
        std::int64_t d = std::stoll(s.substr(slash + 1));
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("Rat: out of range '" + s + "'");
    }
}

} // namespace delcode
