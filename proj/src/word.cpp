#include "delcode/word.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace delcode {

namespace {
constexpr const char* kDigits = "123456789abcdefghijklmnopqrstuvwxyz0";
}

char render_symbol(int sym) {
    if (sym < 1 || sym > kMaxAlphabet)
        throw std::invalid_argument("render_symbol: symbol out of range");
    return kDigits[sym - 1];
}

int parse_symbol(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    if (c == '0') return 36;
    return -1;
}

void check_alphabet(int k) {
    if (k < 2 || k > kMaxAlphabet)
        throw std::invalid_argument("alphabet size must be in [2, 36], got " +
                                    std::to_string(k));
}

void check_word(const Word& w) {
    check_alphabet(w.k);
    for (std::uint8_t s : w.syms)
        if (s < 1 || s > w.k)
            throw std::invalid_argument("word symbol out of range for alphabet");
}

Word Word::slice(std::size_t from, std::size_t len) const {
    Word out;
    out.k = k;
    out.syms.assign(syms.begin() + from, syms.begin() + from + len);
    return out;
}

std::string Word::render() const {
    std::string s;
    s.reserve(syms.size());
    for (std::uint8_t v : syms) s.push_back(render_symbol(v));
    return s;
}

Word Word::parse(const std::string& text, int k) {
    check_alphabet(k);
    Word w;
    w.k = (std::uint8_t)k;
    w.syms.reserve(text.size());
    for (char c : text) {
        int v = parse_symbol(c);
        if (v < 0 || v > k)
            throw std::invalid_argument(std::string("bad symbol '") + c +
                                        "' for alphabet size " + std::to_string(k));
        w.syms.push_back((std::uint8_t)v);
    }
    return w;
}

std::vector<Run> runs_of(const Word& w) {
    std::vector<Run> rs;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w.syms[j] == w.syms[i]) ++j;
        rs.push_back({w.syms[i], (std::uint32_t)(j - i)});
        i = j;
    }
    return rs;
}

bool is_subsequence(const Word& s, const Word& w) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < w.size() && i < s.size(); ++j)
        if (w.syms[j] == s.syms[i]) ++i;
    return i == s.size();
}

bool rle_is_subsequence(const std::vector<Run>& s, const std::vector<Run>& w) {
    std::size_t wi = 0;
    for (const Run& r : s) {
        std::uint64_t need = r.len;
        while (need > 0) {
            while (wi < w.size() && w[wi].sym != r.sym) ++wi;
            if (wi == w.size()) return false;
            std::uint64_t take = std::min<std::uint64_t>(need, w[wi].len);
            need -= take;
            ++wi; // a partially used run cannot serve the next (different) symbol
        }
    }
    return true;
}

std::vector<Word> read_words(std::istream& in, int k) {
    std::vector<Word> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(Word::parse(line, k));
    }
    return out;
}

std::vector<Word> read_word_file(const std::string& path, int k) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open word file: " + path);
    return read_words(in, k);
}

void write_words(std::ostream& out, const std::vector<Word>& words,
                 const std::vector<std::string>& header) {
    for (const std::string& h : header) out << "# " << h << "\n";
    for (const Word& w : words) out << w.render() << "\n";
}

void write_word_file(const std::string& path, const std::vector<Word>& words,
                     const std::vector<std::string>& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    write_words(out, words, header);
}

} // namespace delcode
