#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace delcode {

/// prime field F_q; elements are uint32_t in [0, q)
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q) : q_(q) {
        if (!is_prime(q))
            throw std::invalid_argument("PrimeField: " + std::to_string(q) +
                                        " is not prime");
    }

    std::uint32_t q() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = (std::uint64_t)a + b;
        return (std::uint32_t)(s >= q_ ? s - q_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + q_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return (std::uint32_t)((std::uint64_t)a * b % q_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % q_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, q_ - 2);
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t q_;
};

/// coefficients low-to-high, trailing zeros trimmed; empty vector is the
/// zero polynomial
struct Polynomial {
    std::vector<std::uint32_t> coeffs;

    static Polynomial from(std::vector<std::uint32_t> c) {
        Polynomial p{std::move(c)};
        p.trim();
        return p;
    }
    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return (int)coeffs.size() - 1; } // -1 for zero

    std::uint32_t eval(std::uint32_t x, const PrimeField& F) const {
        std::uint32_t r = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            r = F.add(F.mul(r, x), coeffs[i]);
        return r;
    }

    bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }
    bool operator<(const Polynomial& o) const { return coeffs < o.coeffs; }

    /// space-separated decimal, low-to-high ("0" for the zero polynomial)
    std::string str() const;
    static Polynomial parse(const std::string& text, const PrimeField& F);
};

} // namespace delcode
