#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace delcode {

constexpr int kMaxAlphabet = 36;

/// Symbols are 1..k over a k-ary alphabet, k in [2, 36]. Stored 1-based in
/// uint8_t; rendered through the digit table below ('1'..'9', 'a'..'z', '0').
struct Word {
    std::uint8_t k = 2;
    std::vector<std::uint8_t> syms;

    std::size_t size() const { return syms.size(); }
    bool empty() const { return syms.empty(); }
    std::uint8_t operator[](std::size_t i) const { return syms[i]; }

    bool operator==(const Word& o) const { return k == o.k && syms == o.syms; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    void push(std::uint8_t sym) { syms.push_back(sym); }

    /// subword [from, from+len)
    Word slice(std::size_t from, std::size_t len) const;

    std::string render() const;
    static Word parse(const std::string& text, int k);
};

char render_symbol(int sym);
int parse_symbol(char c);

void check_alphabet(int k);
void check_word(const Word& w);

/// run-length view: (symbol, length) pairs
struct Run {
    std::uint8_t sym;
    std::uint32_t len;
};
std::vector<Run> runs_of(const Word& w);

/// greedy two-pointer subsequence test
bool is_subsequence(const Word& s, const Word& w);
/// same test on run-length encodings (used on long structured words)
bool rle_is_subsequence(const std::vector<Run>& s, const std::vector<Run>& w);

/// word text format: '#' comment lines and blank lines ignored, one word per
/// line. Writing emits the given header lines as '#' comments first.
std::vector<Word> read_words(std::istream& in, int k);
std::vector<Word> read_word_file(const std::string& path, int k);
void write_words(std::ostream& out, const std::vector<Word>& words,
                 const std::vector<std::string>& header);
void write_word_file(const std::string& path, const std::vector<Word>& words,
                     const std::vector<std::string>& header);

} // namespace delcode
