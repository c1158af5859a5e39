#include "delcode/channel.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "delcode/lcs.hpp"
#include "delcode/rng.hpp"

namespace delcode {

void validate_pattern(const DeletionPattern& p) {
    if (p.indices.size() > p.len)
        throw std::invalid_argument("pattern budget exceeds word length");
    for (std::size_t i = 0; i < p.indices.size(); ++i) {
        if (p.indices[i] >= p.len)
            throw std::invalid_argument("pattern index out of range");
        if (i > 0 && p.indices[i] <= p.indices[i - 1])
            throw std::invalid_argument("pattern indices not strictly sorted");
    }
}

Word apply_pattern(const Word& w, const DeletionPattern& p) {
    if (p.len != w.size())
        throw std::invalid_argument("pattern is for length " +
                                    std::to_string(p.len) + ", word has " +
                                    std::to_string(w.size()));
    validate_pattern(p);
    Word out;
    out.k = w.k;
    out.syms.reserve(w.size() - p.indices.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (next < p.indices.size() && p.indices[next] == i) {
            ++next;
            continue;
        }
        out.syms.push_back(w.syms[i]);
    }
    return out;
}

DeletionPattern random_pattern(std::uint64_t len, std::uint64_t budget,
                               std::uint64_t seed) {
    if (budget > len)
        throw std::invalid_argument("deletion budget exceeds length");
    Rng rng(seed);
    DeletionPattern p;
    p.len = len;
    p.indices = rng.sample_sorted(len, budget);
    return p;
}

DeletionPattern burst_pattern(std::uint64_t len, std::uint64_t budget,
                              std::uint64_t start) {
    if (start + budget > len)
        throw std::invalid_argument("burst [start, start+budget) exceeds length");
    DeletionPattern p;
    p.len = len;
    p.indices.reserve(budget);
    for (std::uint64_t i = 0; i < budget; ++i) p.indices.push_back(start + i);
    return p;
}

DeletionPattern dirt_strip_pattern(const Word& w, const DirtyInnerParams& p) {
    DeletionPattern out;
    out.len = w.size();
    out.indices = dirt_positions(w, p);
    return out;
}

DeletionPattern greedy_lcs_pattern(const Word& c,
                                   const std::vector<Word>& decoys,
                                   std::uint64_t budget,
                                   std::uint64_t capProduct) {
    if (decoys.empty()) throw std::invalid_argument("no decoys given");
    if (budget > c.size())
        throw std::invalid_argument("deletion budget exceeds length");
    for (const Word& d : decoys) {
        if (d.size() != c.size())
            throw std::invalid_argument("decoy length differs from codeword");
        if ((std::uint64_t)d.size() * c.size() > capProduct)
            throw std::runtime_error("LCS witness cost above cap");
    }
    std::size_t best = 0;
    std::size_t bestLcs = 0;
    for (std::size_t i = 0; i < decoys.size(); ++i) {
        std::size_t l = lcs_length_bitparallel(c, decoys[i]);
        if (l > bestLcs) {
            bestLcs = l;
            best = i;
        }
    }
    Matching m = lcs_witness(c, decoys[best]);
    std::uint64_t keepCount = c.size() - budget;

    std::vector<std::uint8_t> keep(c.size(), 0);
    std::uint64_t kept = 0;
    for (const auto& pr : m) {
        if (kept == keepCount) break;
        keep[pr.first] = 1;
        ++kept;
    }
    for (std::size_t i = 0; i < c.size() && kept < keepCount; ++i) {
        if (!keep[i]) {
            keep[i] = 1;
            ++kept;
        }
    }
    DeletionPattern out;
    out.len = c.size();
    out.indices.reserve(budget);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!keep[i]) out.indices.push_back(i);
    return out;
}

std::string pattern_str(const DeletionPattern& p) {
    std::ostringstream os;
    os << p.len << ' ' << p.indices.size() << '\n';
    for (std::uint64_t i : p.indices) os << i << '\n';
    return os.str();
}

DeletionPattern pattern_parse(std::istream& in) {
    std::string line;
    DeletionPattern p;
    bool haveHeader = false;
    std::uint64_t budget = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!haveHeader) {
            if (!(ls >> p.len >> budget))
                throw std::invalid_argument("bad pattern header: " + line);
            haveHeader = true;
            continue;
        }
        std::uint64_t idx;
        while (ls >> idx) p.indices.push_back(idx);
    }
    if (!haveHeader) throw std::invalid_argument("pattern file has no header");
    if (p.indices.size() != budget)
        throw std::invalid_argument("pattern has " +
                                    std::to_string(p.indices.size()) +
                                    " indices, header says " +
                                    std::to_string(budget));
    validate_pattern(p);
    return p;
}

void write_pattern_file(const std::string& path, const DeletionPattern& p,
                        const std::vector<std::string>& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const std::string& h : header) out << "# " << h << '\n';
    out << pattern_str(p);
    if (!out) throw std::runtime_error("write failed: " + path);
}

DeletionPattern read_pattern_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return pattern_parse(in);
}

} // namespace delcode
