#include "delcode/rs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace delcode {

void validate_points(const PointSet& T, const PrimeField& F) {
    for (const Point& p : T)
        if (p.x >= F.q() || p.y >= F.q())
            throw std::invalid_argument("point (" + std::to_string(p.x) +
                                        "," + std::to_string(p.y) +
                                        ") outside F_" + std::to_string(F.q()));
    PointSet sorted = T;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate point in point set");
}

std::uint64_t agreement(const Polynomial& p, const PointSet& T,
                        const PrimeField& F) {
    std::uint64_t a = 0;
    for (const Point& pt : T)
        if (p.eval(pt.x, F) == pt.y) ++a;
    return a;
}

Word rs_encode(const Polynomial& f, const PrimeField& F) {
    std::uint32_t q = F.q();
    if (q > kMaxAlphabet)
        throw std::invalid_argument("rs_encode: field size " +
                                    std::to_string(q) +
                                    " exceeds renderable alphabet");
    if (f.degree() >= (int)q)
        throw std::invalid_argument("rs_encode: polynomial degree " +
                                    std::to_string(f.degree()) +
                                    " not below field size");
    Word w;
    w.k = (std::uint8_t)q;
    w.syms.reserve(q);
    // field element v becomes word symbol v + 1 (symbols are 1-based)
    for (std::uint32_t x = 0; x < q; ++x)
        w.syms.push_back((std::uint8_t)(f.eval(x, F) + 1));
    return w;
}

namespace {

/// bivariate polynomial as Y-slices: slices[b] = X-polynomial (low-to-high,
/// trailing zeros allowed) multiplying Y^b
using Bivar = std::vector<std::vector<std::uint32_t>>;

bool slice_is_zero(const std::vector<std::uint32_t>& c) {
    return std::all_of(c.begin(), c.end(),
                       [](std::uint32_t v) { return v == 0; });
}

bool bivar_is_zero(const Bivar& Q) {
    return std::all_of(Q.begin(), Q.end(), slice_is_zero);
}

/// divide out the largest power of X dividing every slice
void strip_x_power(Bivar& Q) {
    std::size_t v = SIZE_MAX;
    for (const auto& c : Q) {
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (c[a] != 0) {
                v = std::min(v, a);
                break;
            }
        }
    }
    if (v == SIZE_MAX || v == 0) return;
    for (auto& c : Q) {
        if (c.size() > v)
            c.erase(c.begin(), c.begin() + (std::ptrdiff_t)v);
        else
            c.clear();
    }
}

/// substitute Y <- X*Y + r:  newQ[j] = X^j * sum_{b>=j} C(b,j) r^(b-j) Q[b]
Bivar shift_substitute(const Bivar& Q, std::uint32_t r, const PrimeField& F) {
    std::size_t B = Q.size();
    std::vector<std::vector<std::uint32_t>> binom(B);
    for (std::size_t b = 0; b < B; ++b) {
        binom[b].assign(b + 1, 1);
        for (std::size_t j = 1; j < b; ++j)
            binom[b][j] = F.add(binom[b - 1][j - 1], binom[b - 1][j]);
    }
    Bivar out(B);
    for (std::size_t j = 0; j < B; ++j) {
        std::vector<std::uint32_t> acc;
        for (std::size_t b = j; b < B; ++b) {
            std::uint32_t coef =
                F.mul(binom[b][j], F.pow(r, (std::uint64_t)(b - j)));
            if (coef == 0) continue;
            if (acc.size() < Q[b].size()) acc.resize(Q[b].size(), 0);
            for (std::size_t a = 0; a < Q[b].size(); ++a)
                acc[a] = F.add(acc[a], F.mul(coef, Q[b][a]));
        }
        // multiply by X^j
        acc.insert(acc.begin(), j, 0);
        out[j] = std::move(acc);
    }
    return out;
}

void rr_roots(Bivar Q, std::uint32_t level, std::uint32_t ell,
              std::vector<std::uint32_t>& prefix,
              std::set<std::vector<std::uint32_t>>& out,
              const PrimeField& F) {
    if (level == ell) {
        std::vector<std::uint32_t> c = prefix;
        while (!c.empty() && c.back() == 0) c.pop_back();
        out.insert(std::move(c));
        return;
    }
    std::vector<std::uint32_t> candidates;
    if (bivar_is_zero(Q)) {
        // every continuation is consistent (unreachable for a nonzero
        // interpolant, kept for completeness)
        for (std::uint32_t r = 0; r < F.q(); ++r) candidates.push_back(r);
    } else {
        strip_x_power(Q);
        for (std::uint32_t r = 0; r < F.q(); ++r) {
            std::uint32_t v = 0, xp = 1;
            for (std::size_t b = 0; b < Q.size(); ++b) {
                std::uint32_t c0 = Q[b].empty() ? 0 : Q[b][0];
                v = F.add(v, F.mul(c0, xp));
                xp = F.mul(xp, r);
            }
            if (v == 0) candidates.push_back(r);
        }
    }
    for (std::uint32_t r : candidates) {
        prefix[level] = r;
        rr_roots(shift_substitute(Q, r, F), level + 1, ell, prefix, out, F);
    }
    prefix[level] = 0;
}

std::uint64_t monomial_count(std::uint64_t D, std::uint64_t w) {
    std::uint64_t c = 0;
    for (std::uint64_t b = 0; w * b <= D; ++b) c += D - w * b + 1;
    return c;
}

/// one nonzero vector from the nullspace of the n x M matrix (M > n)
std::vector<std::uint32_t> nullspace_vector(
    std::vector<std::vector<std::uint32_t>> A, std::size_t M,
    const PrimeField& F) {
    std::size_t n = A.size();
    std::vector<std::size_t> pivotCol;
    std::vector<bool> isPivot(M, false);
    std::size_t r = 0;
    for (std::size_t col = 0; col < M && r < n; ++col) {
        std::size_t sel = n;
        for (std::size_t i = r; i < n; ++i)
            if (A[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == n) continue;
        std::swap(A[r], A[sel]);
        std::uint32_t iv = F.inv(A[r][col]);
        for (std::size_t j = col; j < M; ++j) A[r][j] = F.mul(A[r][j], iv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || A[i][col] == 0) continue;
            std::uint32_t f = A[i][col];
            for (std::size_t j = col; j < M; ++j)
                A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
        }
        pivotCol.push_back(col);
        isPivot[col] = true;
        ++r;
    }
    std::size_t freeCol = M;
    for (std::size_t col = 0; col < M; ++col)
        if (!isPivot[col]) {
            freeCol = col;
            break;
        }
    if (freeCol == M)
        throw std::logic_error("interpolation matrix has full column rank");
    std::vector<std::uint32_t> x(M, 0);
    x[freeCol] = 1;
    for (std::size_t i = 0; i < pivotCol.size(); ++i)
        x[pivotCol[i]] = F.neg(A[i][freeCol]);
    return x;
}

} // namespace

std::vector<Polynomial> sudan_list_decode(const PointSet& T,
                                          std::uint32_t ell,
                                          const PrimeField& F) {
    if (ell == 0) throw std::invalid_argument("sudan_list_decode: ell = 0");
    if (T.empty()) throw std::invalid_argument("sudan_list_decode: empty T");
    validate_points(T, F);

    std::uint64_t n = T.size();
    std::uint64_t w = ell > 1 ? ell - 1 : 1;
    std::uint64_t D = 0;
    while (monomial_count(D, w) <= n) ++D;
    // minimality gives monomial_count(D-1, w) <= n, hence D^2 < 2*w*n and
    // every p with agreement^2 > 2*ell*n has agreement > D

    std::vector<std::pair<std::uint64_t, std::uint64_t>> monomials; // (a, b)
    for (std::uint64_t b = 0; w * b <= D; ++b)
        for (std::uint64_t a = 0; a + w * b <= D; ++a)
            monomials.emplace_back(a, b);
    std::size_t M = monomials.size();

    std::vector<std::vector<std::uint32_t>> A(
        T.size(), std::vector<std::uint32_t>(M));
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = 0; j < M; ++j)
            A[i][j] = F.mul(F.pow(T[i].x, monomials[j].first),
                            F.pow(T[i].y, monomials[j].second));
    std::vector<std::uint32_t> qvec = nullspace_vector(std::move(A), M, F);

    Bivar Q(D / w + 1);
    for (std::size_t j = 0; j < M; ++j) {
        auto [a, b] = monomials[j];
        if (Q[b].size() <= a) Q[b].resize(a + 1, 0);
        Q[b][a] = qvec[j];
    }
    if (bivar_is_zero(Q))
        throw std::logic_error("interpolation produced the zero polynomial");

    std::set<std::vector<std::uint32_t>> roots;
    std::vector<std::uint32_t> prefix(ell, 0);
    rr_roots(Q, 0, ell, prefix, roots, F);

    std::uint64_t threshSq = 2 * (std::uint64_t)ell * n;
    std::vector<Polynomial> out;
    for (const auto& c : roots) {
        Polynomial p{c};
        std::uint64_t a = agreement(p, T, F);
        if (a * a > threshSq) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  return a.coeffs < b.coeffs;
              });
    std::uint64_t L = out.size();
    if (ell * L * L > 2 * n)
        throw std::logic_error("output list exceeds size bound");
    return out;
}

std::vector<Polynomial> list_by_min_agreement(const PointSet& T,
                                              std::uint32_t ell,
                                              std::uint64_t minAgreement,
                                              const PrimeField& F,
                                              std::uint64_t cap) {
    if (ell == 0)
        throw std::invalid_argument("list_by_min_agreement: ell = 0");
    validate_points(T, F);
    std::uint32_t q = F.q();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < ell; ++i) {
        total *= q;
        if (total > cap)
            throw std::runtime_error("enumeration q^ell exceeds cap " +
                                     std::to_string(cap));
    }

    // hit[x][y] = 1 iff (x, y) in T; only x values that occur matter
    std::vector<std::vector<std::uint8_t>> hit(
        q, std::vector<std::uint8_t>(q, 0));
    for (const Point& pt : T) hit[pt.x][pt.y] = 1;
    std::vector<std::uint32_t> xs;
    for (std::uint32_t x = 0; x < q; ++x)
        if (std::any_of(hit[x].begin(), hit[x].end(),
                        [](std::uint8_t v) { return v != 0; }))
            xs.push_back(x);

    // enumerate with base[x] = sum_{d>=1} c_d x^d maintained incrementally;
    // an odometer digit change is +1 mod q, adding x^d to every base[x]
    std::vector<std::vector<std::uint32_t>> powTab(ell > 0 ? ell - 1 : 0);
    for (std::uint32_t d = 1; d < ell; ++d) {
        powTab[d - 1].resize(xs.size());
        for (std::size_t xi = 0; xi < xs.size(); ++xi)
            powTab[d - 1][xi] = F.pow(xs[xi], d);
    }
    std::vector<std::uint32_t> c(ell - 1, 0); // c[d-1] multiplies X^d
    std::vector<std::uint32_t> base(xs.size(), 0);

    std::vector<Polynomial> out;
    for (;;) {
        for (std::uint32_t c0 = 0; c0 < q; ++c0) {
            std::uint64_t agree = 0;
            for (std::size_t xi = 0; xi < xs.size(); ++xi) {
                std::uint32_t y = base[xi] + c0;
                if (y >= q) y -= q;
                agree += hit[xs[xi]][y];
            }
            if (agree >= minAgreement) {
                std::vector<std::uint32_t> coeffs;
                coeffs.reserve(ell);
                coeffs.push_back(c0);
                coeffs.insert(coeffs.end(), c.begin(), c.end());
                out.push_back(Polynomial::from(std::move(coeffs)));
            }
        }
        std::size_t pos = 0;
        while (pos < c.size()) {
            bool wrapped = (++c[pos] == q);
            if (wrapped) c[pos] = 0;
            for (std::size_t xi = 0; xi < xs.size(); ++xi) {
                base[xi] += powTab[pos][xi];
                if (base[xi] >= q) base[xi] -= q;
            }
            if (!wrapped) break;
            ++pos;
        }
        if (pos == c.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  return a.coeffs < b.coeffs;
              });
    return out;
}

std::vector<Polynomial> brute_force_list_decode(const PointSet& T,
                                                std::uint32_t ell,
                                                const Rat& threshold,
                                                const PrimeField& F,
                                                std::uint64_t cap) {
    // integer agreement > threshold  <=>  agreement >= floor(threshold) + 1
    std::int64_t fl = threshold.floor();
    std::uint64_t minA = fl < 0 ? 0 : (std::uint64_t)fl + 1;
    return list_by_min_agreement(T, ell, minA, F, cap);
}

std::vector<Polynomial> brute_force_list_decode_sqrt(
    const PointSet& T, std::uint32_t ell, std::uint64_t thresholdSquared,
    const PrimeField& F, std::uint64_t cap) {
    // smallest a with a^2 > thresholdSquared
    std::uint64_t a = 0;
    while (a * a <= thresholdSquared) ++a;
    return list_by_min_agreement(T, ell, a, F, cap);
}

} // namespace delcode
