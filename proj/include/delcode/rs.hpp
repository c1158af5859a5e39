#pragma once

#include <cstdint>
#include <vector>

#include "delcode/field.hpp"
#include "delcode/rational.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// interpolation point (x, y) in F_q x F_q
struct Point {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
};

/// duplicate pairs forbidden (set semantics, checked by validate_points)
using PointSet = std::vector<Point>;

/// throws invalid_argument on out-of-field coordinates or duplicate pairs
void validate_points(const PointSet& T, const PrimeField& F);

/// number of points (x, y) in T with p(x) = y
std::uint64_t agreement(const Polynomial& p, const PointSet& T,
                        const PrimeField& F);

/// evaluations of f at 0, 1, ..., q-1 as a word over alphabet [q], with
/// field element v stored as the 1-based symbol v+1; requires deg f < q and
/// q small enough to render (<= kMaxAlphabet)
Word rs_encode(const Polynomial& f, const PrimeField& F);

/// all degree-<ell polynomials with agreement strictly above sqrt(2*ell*|T|),
/// via (1, ell-1)-weighted bivariate interpolation and recursive root
/// extraction; exact integer filter agreement^2 > 2*ell*|T|.
/// Output sorted by coefficient vector. Throws logic_error if the list-size
/// bound ell*L^2 <= 2*|T| fails (internal defect).
std::vector<Polynomial> sudan_list_decode(const PointSet& T,
                                          std::uint32_t ell,
                                          const PrimeField& F);

/// enumerates all q^ell degree-<ell polynomials, keeps those with
/// agreement >= minAgreement; throws runtime_error when q^ell > cap
std::vector<Polynomial> list_by_min_agreement(const PointSet& T,
                                              std::uint32_t ell,
                                              std::uint64_t minAgreement,
                                              const PrimeField& F,
                                              std::uint64_t cap = 1000000);

/// brute-force oracle: agreement strictly above a rational threshold
std::vector<Polynomial> brute_force_list_decode(const PointSet& T,
                                                std::uint32_t ell,
                                                const Rat& threshold,
                                                const PrimeField& F,
                                                std::uint64_t cap = 1000000);

/// brute-force oracle: agreement strictly above sqrt(thresholdSquared),
/// compared exactly in integers
std::vector<Polynomial> brute_force_list_decode_sqrt(
    const PointSet& T, std::uint32_t ell, std::uint64_t thresholdSquared,
    const PrimeField& F, std::uint64_t cap = 1000000);

} // namespace delcode
