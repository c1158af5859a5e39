#include "delcode/outer_codes.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "delcode/lcs.hpp"
#include "delcode/rng.hpp"

namespace delcode {

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0)
        throw std::domain_error("binary_entropy: argument outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

bool rate_feasible(int K, double rate, double gamma) {
    if (K < 2) throw std::domain_error("rate_feasible: K must be >= 2");
    const double lg = std::log2((double)K);
    return 2.0 * rate * lg + 2.0 * binary_entropy(gamma) - gamma * lg < 0.0;
}

OuterBuildResult build_random_outer(int K, int n, std::size_t targetSize,
                                    const Rat& gamma, std::uint64_t seed,
                                    std::uint64_t maxAttempts) {
    check_alphabet(K);
    if (n < 1) throw std::invalid_argument("build_random_outer: n must be >= 1");
    if (gamma <= Rat(0))
        throw std::invalid_argument("build_random_outer: gamma must be positive");

    OuterBuildResult res;
    res.code.K = K;
    res.code.n = n;
    res.code.gamma = gamma;
    res.code.seed = seed;

    Rng rng(seed);
    std::set<std::vector<std::uint8_t>> seen;
    auto& kept = res.code.words;
    kept.reserve(targetSize);

    // LCS < gamma*n  <=>  LCS * den < num * n, exactly
    const Rat bound = gamma * Rat(n);
    while (kept.size() < targetSize && res.attempts < maxAttempts) {
        ++res.attempts;
        Word cand;
        cand.k = (std::uint8_t)K;
        cand.syms.resize((std::size_t)n);
        for (auto& s : cand.syms) s = (std::uint8_t)(1 + rng.below((std::uint64_t)K));
        if (!seen.insert(cand.syms).second) continue;
        bool ok = true;
        for (const Word& w : kept)
            if (Rat((std::int64_t)lcs_length_bitparallel(cand, w)) >= bound) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(std::move(cand));
    }
    res.reachedTarget = kept.size() >= targetSize;

    // audit with the plain DP and record the achieved ratio
    std::size_t maxLcs = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            const std::size_t v = lcs_length_dp(kept[i], kept[j]);
            if (Rat((std::int64_t)v) >= bound)
                throw std::logic_error(
                    "build_random_outer: kernel disagreement on audit");
            maxLcs = std::max(maxLcs, v);
        }
    res.code.gammaAchieved = kept.size() < 2 ? Rat(0)
                                             : Rat((std::int64_t)maxLcs, n);
    return res;
}

void write_outer(std::ostream& out, const OuterCode& code) {
    out << code.K << " " << code.n << " " << code.gamma.str() << " "
        << code.seed << "\n";
    for (const Word& w : code.words) out << w.render() << "\n";
}

OuterCode read_outer(std::istream& in) {
    std::string line;
    OuterCode code;
    if (!std::getline(in, line))
        throw std::runtime_error("outer code: missing header");
    std::istringstream hs(line);
    std::string gammaTok;
    if (!(hs >> code.K >> code.n >> gammaTok >> code.seed))
        throw std::runtime_error("outer code: bad header '" + line + "'");
    code.gamma = Rat::parse(gammaTok);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        code.words.push_back(Word::parse(line, code.K));
        if ((int)code.words.back().size() != code.n)
            throw std::runtime_error("outer code: codeword length mismatch");
    }
    if (code.words.size() > 1) {
        std::size_t maxLcs = 0;
        for (std::size_t i = 0; i < code.words.size(); ++i)
            for (std::size_t j = i + 1; j < code.words.size(); ++j)
                maxLcs = std::max(maxLcs,
                                  lcs_length_bitparallel(code.words[i], code.words[j]));
        code.gammaAchieved = Rat((std::int64_t)maxLcs, code.n);
    }
    return code;
}

} // namespace delcode
