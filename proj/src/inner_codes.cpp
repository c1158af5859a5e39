#include "delcode/inner_codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "delcode/exact.hpp"

namespace delcode {

namespace {

// R^e with saturation flag
__int128 ipow(std::int64_t R, int e) {
    __int128 v = 1;
    for (int i = 0; i < e; ++i) {
        v *= R;
        if (v > (__int128)4 * INT64_MAX) return -1;
    }
    return v;
}

std::string approx_str(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3Le", v);
    return buf;
}

void check_source_symbol(int l, int K) {
    if (l < 1 || l > K)
        throw std::invalid_argument("source symbol " + std::to_string(l) +
                                    " outside [1, " + std::to_string(K) + "]");
}

} // namespace

// ---------------------------------------------------------------- clean ---

CleanInnerParams clean_params(int K, int k, const Rat& gamma,
                              std::int64_t cap) {
    check_alphabet(k);
    if (K < 2) throw std::invalid_argument("clean_params: K must be >= 2");
    if (gamma <= Rat(0) || gamma > Rat(1))
        throw std::invalid_argument("clean_params: gamma must be in (0, 1]");
    CleanInnerParams p;
    p.k = k;
    p.K = K;
    p.gamma = gamma;
    p.R = (Rat(2 * k) / gamma).ceil();
    const __int128 rk = ipow(p.R, K - 1);
    const std::int64_t invCeil = (Rat(1) / gamma).ceil();
    const __int128 L = rk < 0 ? (__int128)-1 : rk * 16 * invCeil;
    const __int128 T = L < 0 ? (__int128)-1 : L * k;
    if (T < 0 || T > cap) {
        long double approx = T < 0 ? std::pow((long double)p.R, K - 1) * 16 *
                                         invCeil * k
                                   : (long double)(std::int64_t)T;
        throw SizeCapError("clean_params: T exceeds size cap " +
                               std::to_string(cap),
                           approx_str(approx));
    }
    p.L = (std::int64_t)L;
    p.T = (std::int64_t)T;
    // T <= 32 (2k/gamma)^K
    const Rat base = Rat(2 * k) / gamma;
    Rat bound = Rat(32);
    bool boundOverflow = false;
    for (int i = 0; i < K; ++i) {
        try { bound = bound * base; } catch (const std::overflow_error&) {
            boundOverflow = true;
            break;
        }
    }
    if (!boundOverflow && Rat(p.T) > bound)
        throw std::logic_error("clean_params: T bound violated");
    return p;
}

Word amplitude_word(std::int64_t A, std::int64_t L, int k) {
    check_alphabet(k);
    if (A < 1 || L < 1 || L % A != 0)
        throw std::invalid_argument("amplitude_word: need A >= 1 and A | L");
    Word w;
    w.k = (std::uint8_t)k;
    w.syms.reserve((std::size_t)k * L);
    for (std::int64_t rep = 0; rep < L / A; ++rep)
        for (int s = 1; s <= k; ++s)
            w.syms.insert(w.syms.end(), (std::size_t)A, (std::uint8_t)s);
    return w;
}

Word amplitude_word_prefix(std::int64_t A, int k, std::int64_t len) {
    check_alphabet(k);
    if (A < 1 || len < 0)
        throw std::invalid_argument("amplitude_word_prefix: bad arguments");
    Word w;
    w.k = (std::uint8_t)k;
    w.syms.reserve((std::size_t)len);
    while ((std::int64_t)w.syms.size() < len)
        for (int s = 1; s <= k && (std::int64_t)w.syms.size() < len; ++s) {
            const std::int64_t take =
                std::min<std::int64_t>(A, len - (std::int64_t)w.syms.size());
            w.syms.insert(w.syms.end(), (std::size_t)take, (std::uint8_t)s);
        }
    return w;
}

Word clean_encode_symbol(int l, const CleanInnerParams& p) {
    check_source_symbol(l, p.K);
    std::int64_t A = 1;
    for (int i = 1; i < l; ++i) A *= p.R;
    return amplitude_word(A, p.L, p.k);
}

Word clean_encode(const std::vector<int>& word, const CleanInnerParams& p) {
    Word out;
    out.k = (std::uint8_t)p.k;
    out.syms.reserve(word.size() * (std::size_t)p.T);
    for (int l : word) {
        Word blk = clean_encode_symbol(l, p);
        out.syms.insert(out.syms.end(), blk.syms.begin(), blk.syms.end());
    }
    return out;
}

// ---------------------------------------------------------------- dirty ---

namespace {

Rat c_interval_check(int k, const Rat& c) {
    // 0 < c <= c_max(k) = (sqrt(k)-1)/(k-1); exact via squaring
    if (c <= Rat(0)) throw std::invalid_argument("dirty c must be positive");
    const Rat lhs = c * Rat(k - 1) + Rat(1); // must be <= sqrt(k)
    if (lhs * lhs > Rat(k))
        throw std::invalid_argument("dirty c exceeds (sqrt(k)-1)/(k-1)");
    return c;
}

} // namespace

void validate_dirty(const DirtyInnerParams& p) {
    check_alphabet(p.k);
    if (p.K < 1) throw std::invalid_argument("dirty params: K must be >= 1");
    c_interval_check(p.k, p.c);
    if (p.t < 1 || Rat(p.R) != (Rat(1) + p.c) * Rat(p.t))
        throw std::invalid_argument("dirty params: R != (1+c) t");
    if (p.L < 1 || p.scale < 1)
        throw std::invalid_argument("dirty params: L and scale must be >= 1");
    if ((std::int64_t)p.layout.size() != p.K)
        throw std::invalid_argument("dirty params: layout size != K");
    if (p.T != p.k * p.L * p.scale)
        throw std::invalid_argument("dirty params: T != k L scale");
    std::set<std::int64_t> b1s, b2s;
    const std::int64_t Ls = p.L * p.scale;
    for (const DirtyLayer& lay : p.layout) {
        if (lay.b1 < 1 || lay.b2 < 1)
            throw std::invalid_argument("dirty layout: nonpositive entry");
        // dirt run length c*b2 must be a nonnegative integer
        if (!(p.c * Rat(lay.b2)).is_integer())
            throw std::invalid_argument("dirty layout: c*b2 not integral");
        const Rat unit = Rat(lay.b2) * (Rat(1) + p.c * Rat(p.k - 1));
        if (!unit.is_integer() || lay.b1 % unit.num() != 0)
            throw std::invalid_argument("dirty layout: unit does not divide b1");
        if (lay.b1 > Ls)
            throw SizeCapError("dirty layout: segment longer than L*scale",
                               std::to_string(lay.b1));
        if (Ls % lay.b1 != 0)
            throw std::invalid_argument("dirty layout: b1 does not divide L*scale");
        b1s.insert(lay.b1);
        b2s.insert(lay.b2);
    }
    if ((std::int64_t)b1s.size() != p.K || (std::int64_t)b2s.size() != p.K)
        throw std::invalid_argument("dirty layout: segment/amplitude collision");
}

DirtyInnerParams dirty_params(int K, int k, const Rat& gamma,
                              std::int64_t cap) {
    check_alphabet(k);
    if (K < 2) throw std::invalid_argument("dirty_params: K must be >= 2");
    if (gamma <= Rat(0) || gamma > Rat(1))
        throw std::invalid_argument("dirty_params: gamma must be in (0, 1]");

    // c must land in [c_max - gamma/4, c_max), c_max = (sqrt(k)-1)/(k-1);
    // both endpoint comparisons are done by squaring.
    auto below_cmax = [&](const Rat& c) {
        const Rat lhs = c * Rat(k - 1) + Rat(1);
        return lhs * lhs < Rat(k);
    };
    auto at_least_lo = [&](const Rat& c) {
        const Rat lhs = (c + gamma / Rat(4)) * Rat(k - 1) + Rat(1);
        return lhs * lhs >= Rat(k);
    };

    const Rat rMin = Rat(56) / gamma;
    std::int64_t R = rMin.floor() + 1;
    const std::int64_t rLimit = R * 16 + 64;
    for (; R < rLimit; ++R) {
        // c = R/t - 1 decreases in t; smallest valid t gives the dirtiest c
        const long double cmax = (std::sqrt((long double)k) - 1) / (k - 1);
        std::int64_t tLo = (std::int64_t)std::floor(R / (1 + cmax));
        tLo = std::max<std::int64_t>(1, tLo - 2);
        for (std::int64_t t = tLo; t <= R; ++t) {
            if (t == R) break; // c would be 0
            const Rat c(R - t, t);
            if (!below_cmax(c)) continue; // c too large, advance t
            if (!at_least_lo(c)) break;   // c fell below the window
            DirtyInnerParams p;
            p.k = k;
            p.K = K;
            p.c = c;
            p.t = t;
            p.R = R;
            p.scale = c.den();
            const __int128 L = ipow(R, 2 * K + 1);
            const __int128 T = L < 0 ? (__int128)-1 : L * k * p.scale;
            if (L < 0 || T > cap) {
                const long double approx =
                    std::pow((long double)R, 2 * K + 1) * k * p.scale;
                throw SizeCapError("dirty_params: T exceeds size cap " +
                                       std::to_string(cap),
                                   approx_str(approx));
            }
            p.L = (std::int64_t)L;
            p.T = (std::int64_t)T;
            p.layout.resize(K);
            for (int i = 1; i <= K; ++i) {
                p.layout[i - 1].b1 = p.scale * (std::int64_t)ipow(R, K + 1 + i);
                p.layout[i - 1].b2 = p.scale * (std::int64_t)ipow(R, K - i);
            }
            p.defaultLayout = true;
            validate_dirty(p);
            return p;
        }
    }
    throw std::logic_error("dirty_params: no (R, t, c) found");
}

DirtyInnerParams dirty_params_explicit(int K, int k, const Rat& c,
                                       std::int64_t t, std::int64_t L,
                                       std::vector<DirtyLayer> layout,
                                       std::int64_t cap) {
    DirtyInnerParams p;
    p.k = k;
    p.K = K;
    p.c = c;
    p.t = t;
    p.R = ((Rat(1) + c) * Rat(t)).is_integer()
              ? ((Rat(1) + c) * Rat(t)).num()
              : 0;
    if (p.R == 0)
        throw std::invalid_argument("dirty_params_explicit: (1+c)t not integral");
    p.scale = c.den();
    p.L = L;
    p.T = k * L * p.scale;
    if (p.T > cap)
        throw SizeCapError("dirty_params_explicit: T exceeds size cap",
                           std::to_string(p.T));
    if (layout.empty()) {
        p.layout.resize(K);
        for (int i = 1; i <= K; ++i) {
            const __int128 b1 = ipow(p.R, K + 1 + i);
            const __int128 b2 = ipow(p.R, K - i);
            if (b1 < 0 || b1 * p.scale > INT64_MAX)
                throw SizeCapError("dirty_params_explicit: layout overflow",
                                   "R^(K+1+i)");
            p.layout[i - 1].b1 = p.scale * (std::int64_t)b1;
            p.layout[i - 1].b2 = p.scale * (std::int64_t)b2;
        }
        p.defaultLayout = true;
    } else {
        p.layout = std::move(layout);
        p.defaultLayout = false;
    }
    validate_dirty(p);
    return p;
}

Word dirty_run(int j, std::int64_t M, std::int64_t a, const DirtyInnerParams& p) {
    if (j < 1 || j > p.k)
        throw std::invalid_argument("dirty_run: symbol out of range");
    const Rat dirtLen = p.c * Rat(a);
    if (!dirtLen.is_integer())
        throw std::invalid_argument("dirty_run: c*a not integral");
    const std::int64_t d = dirtLen.num();
    const std::int64_t unit = a + (std::int64_t)(p.k - 1) * d;
    if (M < 1 || M % unit != 0)
        throw std::invalid_argument("dirty_run: unit does not divide M");
    Word w;
    w.k = (std::uint8_t)p.k;
    w.syms.reserve((std::size_t)M);
    for (std::int64_t rep = 0; rep < M / unit; ++rep) {
        w.syms.insert(w.syms.end(), (std::size_t)a, (std::uint8_t)j);
        for (int s = 1; s <= p.k; ++s)
            if (s != j)
                w.syms.insert(w.syms.end(), (std::size_t)d, (std::uint8_t)s);
    }
    return w;
}

Word dirty_run_prefix(int j, std::int64_t a, const DirtyInnerParams& p,
                      std::int64_t len) {
    const Rat dirtLen = p.c * Rat(a);
    if (!dirtLen.is_integer())
        throw std::invalid_argument("dirty_run_prefix: c*a not integral");
    const std::int64_t d = dirtLen.num();
    Word w;
    w.k = (std::uint8_t)p.k;
    w.syms.reserve((std::size_t)len);
    while ((std::int64_t)w.syms.size() < len) {
        std::int64_t take = std::min<std::int64_t>(a, len - (std::int64_t)w.syms.size());
        w.syms.insert(w.syms.end(), (std::size_t)take, (std::uint8_t)j);
        for (int s = 1; s <= p.k; ++s) {
            if (s == j) continue;
            if ((std::int64_t)w.syms.size() >= len) break;
            take = std::min<std::int64_t>(d, len - (std::int64_t)w.syms.size());
            w.syms.insert(w.syms.end(), (std::size_t)take, (std::uint8_t)s);
        }
    }
    return w;
}

Word dirty_codeword(int i, const DirtyInnerParams& p) {
    Word w = dirty_codeword_prefix(i, p, p.T);
    return w;
}

Word dirty_codeword_prefix(int i, const DirtyInnerParams& p, std::int64_t len) {
    check_source_symbol(i, p.K);
    if (len > p.T)
        throw std::invalid_argument("dirty_codeword_prefix: len exceeds T");
    const DirtyLayer lay = p.layout[i - 1];
    Word w;
    w.k = (std::uint8_t)p.k;
    w.syms.reserve((std::size_t)len);
    const std::int64_t reps = (p.L * p.scale) / lay.b1;
    for (std::int64_t rep = 0; rep < reps && (std::int64_t)w.syms.size() < len; ++rep)
        for (int j = 1; j <= p.k && (std::int64_t)w.syms.size() < len; ++j) {
            const std::int64_t remaining = len - (std::int64_t)w.syms.size();
            if (remaining >= lay.b1) {
                Word seg = dirty_run(j, lay.b1, lay.b2, p);
                w.syms.insert(w.syms.end(), seg.syms.begin(), seg.syms.end());
            } else {
                Word seg = dirty_run_prefix(j, lay.b2, p, remaining);
                w.syms.insert(w.syms.end(), seg.syms.begin(), seg.syms.end());
            }
        }
    return w;
}

Word dirty_encode(const std::vector<int>& word, const DirtyInnerParams& p) {
    Word out;
    out.k = (std::uint8_t)p.k;
    out.syms.reserve(word.size() * (std::size_t)p.T);
    for (int l : word) {
        Word blk = dirty_codeword(l, p);
        out.syms.insert(out.syms.end(), blk.syms.begin(), blk.syms.end());
    }
    return out;
}

std::vector<std::uint8_t> dirty_dirt_mask(int i, const DirtyInnerParams& p) {
    check_source_symbol(i, p.K);
    const DirtyLayer lay = p.layout[i - 1];
    const std::int64_t d = (p.c * Rat(lay.b2)).num();
    const std::int64_t unit = lay.b2 + (std::int64_t)(p.k - 1) * d;
    std::vector<std::uint8_t> mask((std::size_t)p.T, 0);
    std::int64_t pos = 0;
    while (pos < p.T) {
        pos += lay.b2; // signal part of the unit
        for (std::int64_t z = 0; z < (std::int64_t)(p.k - 1) * d; ++z)
            mask[(std::size_t)pos + z] = 1;
        pos += (std::int64_t)(p.k - 1) * d;
    }
    (void)unit;
    return mask;
}

std::vector<std::uint64_t> dirt_positions(const Word& w, const DirtyInnerParams& p) {
    if (w.size() % (std::size_t)p.T != 0)
        throw std::invalid_argument("dirt_positions: length not a multiple of T");
    // cache codewords and masks per source symbol
    std::vector<Word> gs(p.K);
    std::vector<std::vector<std::uint8_t>> masks(p.K);
    for (int i = 1; i <= p.K; ++i) {
        gs[i - 1] = dirty_codeword(i, p);
        masks[i - 1] = dirty_dirt_mask(i, p);
    }
    std::vector<std::uint64_t> out;
    for (std::size_t base = 0; base < w.size(); base += (std::size_t)p.T) {
        int found = -1;
        for (int i = 1; i <= p.K; ++i) {
            if (std::equal(gs[i - 1].syms.begin(), gs[i - 1].syms.end(),
                           w.syms.begin() + base)) {
                found = i;
                break;
            }
        }
        if (found < 0)
            throw std::invalid_argument(
                "dirt_positions: block at offset " + std::to_string(base) +
                " is not a dirty codeword");
        const auto& mask = masks[found - 1];
        for (std::size_t z = 0; z < mask.size(); ++z)
            if (mask[z]) out.push_back(base + z);
    }
    return out;
}

Rat dirt_fraction(const DirtyInnerParams& p) {
    const Rat kc = p.c * Rat(p.k - 1);
    return kc / (Rat(1) + kc);
}

} // namespace delcode
