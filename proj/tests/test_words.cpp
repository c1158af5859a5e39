#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "delcode/lcs.hpp"
#include "delcode/rng.hpp"
#include "delcode/word.hpp"
#include "util.hpp"

using namespace delcode;

TEST_CASE("render and parse round trip") {
    Word w = Word::parse("1212331", 3);
    CHECK(w.size() == 7);
    CHECK(w.render() == "1212331");
    CHECK(w[0] == 1);
    CHECK(w[4] == 3);

    // symbols 10.. render as letters, 36 as '0'
    Word big;
    big.k = 36;
    for (int s = 1; s <= 36; ++s) big.push((std::uint8_t)s);
    std::string r = big.render();
    CHECK(r == "123456789abcdefghijklmnopqrstuvwxyz0");
    CHECK(Word::parse(r, 36) == big);

    CHECK_THROWS_AS(Word::parse("124", 3), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("1 2", 3), std::invalid_argument);
    CHECK_THROWS_AS((void)Word::parse("12", 1), std::invalid_argument);
}

TEST_CASE("slice and runs") {
    Word w = Word::parse("11122321", 3);
    CHECK(w.slice(2, 4).render() == "1223");
    CHECK(w.slice(0, 0).empty());
    auto runs = runs_of(w);
    REQUIRE(runs.size() == 5);
    CHECK(runs[0].sym == 1);
    CHECK(runs[0].len == 3);
    CHECK(runs[1].sym == 2);
    CHECK(runs[1].len == 2);
    CHECK(runs[4].sym == 1);
    CHECK(runs[4].len == 1);
}

TEST_CASE("subsequence basics") {
    Word w = Word::parse("1213121", 3);
    CHECK(is_subsequence(Word::parse("111", 3), w));
    CHECK(is_subsequence(Word::parse("2321", 3), w));
    CHECK(!is_subsequence(Word::parse("33", 3), w));
    CHECK(is_subsequence(Word::parse("", 3), w));
    CHECK(!is_subsequence(w, Word::parse("121", 3)));
}

TEST_CASE("word file round trip with headers") {
    std::vector<Word> words = {Word::parse("1122", 2), Word::parse("2211", 2)};
    std::ostringstream os;
    write_words(os, words, {"alphabet 2", "note two words"});
    std::istringstream in(os.str());
    auto back = read_words(in, 2);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == words[0]);
    CHECK(back[1] == words[1]);
}

// greedy containment agrees with the LCS DP on 1e5 random pairs:
// is_subsequence(s, w) iff LCS(s, w) == |s|; the bit-parallel kernel and the
// run-length matcher agree everywhere
TEST_CASE("containment and LCS kernels against the DP oracle") {
    Rng rng(20260822);
    int alphabets[] = {2, 3, 4};
    std::uint64_t checked = 0;
    for (std::uint64_t it = 0; it < 100000; ++it) {
        int k = alphabets[it % 3];
        std::size_t wlen = 1 + rng.below(64);
        Word w = testutil::random_word(rng, k, wlen);
        Word s;
        if (it & 1) {
            s = testutil::random_subsequence(rng, w, 3, 4);
        } else {
            s = testutil::random_word(rng, k, 1 + rng.below(wlen));
        }
        bool greedy = is_subsequence(s, w);
        std::size_t dp = lcs_length_dp(s, w);
        bool viaDp = dp == s.size();
        if (greedy != viaDp) {
            CAPTURE(s.render());
            CAPTURE(w.render());
            REQUIRE(greedy == viaDp);
        }
        if (lcs_length_bitparallel(s, w) != dp) {
            CAPTURE(s.render());
            CAPTURE(w.render());
            REQUIRE(lcs_length_bitparallel(s, w) == dp);
        }
        if (rle_is_subsequence(runs_of(s), runs_of(w)) != greedy) {
            CAPTURE(s.render());
            CAPTURE(w.render());
            REQUIRE(false);
        }
        ++checked;
    }
    CHECK(checked == 100000);
}

TEST_CASE("lcs witness is a valid maximum matching") {
    Rng rng(99);
    for (int it = 0; it < 2000; ++it) {
        int k = 2 + (int)rng.below(3);
        Word a = testutil::random_word(rng, k, 1 + rng.below(48));
        Word b = testutil::random_word(rng, k, 1 + rng.below(48));
        Matching m = lcs_witness(a, b);
        CHECK(m.size() == lcs_length_dp(a, b));
        for (std::size_t i = 0; i < m.size(); ++i) {
            CHECK(a.syms[m[i].first] == b.syms[m[i].second]);
            if (i) {
                CHECK(m[i].first > m[i - 1].first);
                CHECK(m[i].second > m[i - 1].second);
            }
        }
    }
}

// span_profile against explicit enumeration of every common subsequence
TEST_CASE("span profile against the subset-enumeration oracle") {
    Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        int k = 2 + (int)rng.below(2);
        Word w1 = testutil::random_word(rng, k, 1 + rng.below(10));
        Word w2 = testutil::random_word(rng, k, 1 + rng.below(10));
        SpanProfile got = span_profile(w1, w2, 1ull << 20);
        SpanProfile want = testutil::span_oracle(w1, w2);
        CAPTURE(w1.render());
        CAPTURE(w2.render());
        REQUIRE(got.lcs == want.lcs);
        REQUIRE(got.minTotalSpan == want.minTotalSpan);
        REQUIRE(got.minSpanInFirst == want.minSpanInFirst);
    }
}
