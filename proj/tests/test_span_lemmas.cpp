#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delcode/inner_codes.hpp"
#include "delcode/span_profile.hpp"
#include "delcode/word.hpp"
#include "util.hpp"

using namespace delcode;

TEST_CASE("span profile guards its cost cap") {
    Rng rng(1);
    Word a = testutil::random_word(rng, 2, 120); // 120*120 > 10^4
    CHECK_THROWS_AS((void)span_profile(a, a), std::invalid_argument);
}

TEST_CASE("span profile entries are monotone in ell") {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        Word w1 = testutil::random_word(rng, 2, 4 + rng.below(20));
        Word w2 = testutil::random_word(rng, 2, 4 + rng.below(20));
        SpanProfile p = span_profile(w1, w2, 1ull << 20);
        for (std::size_t ell = 1; ell <= p.lcs; ++ell) {
            CHECK(p.minTotalSpan[ell] >= p.minTotalSpan[ell - 1]);
            CHECK(p.minSpanInFirst[ell] >= p.minSpanInFirst[ell - 1]);
            // a length-ell common subsequence occupies at least ell symbols
            // per side
            CHECK(p.minTotalSpan[ell] >= 2 * ell);
            CHECK(p.minSpanInFirst[ell] >= ell);
        }
    }
}

// amplitude-word span bound: common subsequences of truncations of the
// infinite words at amplitudes A and B (kA <= B) satisfy
// minTotalSpan[ell] >= (k+1-kA/B) ell - 2(A+B)
TEST_CASE("amplitude span bound, k=2 A=2 B=8, 48-symbol truncations") {
    Rat slack = testutil::basicspan_min_slack(2, 2, 8, 48);
    CHECK(!(slack < Rat(0)));
}

TEST_CASE("amplitude span bound, k=3 A=1 B=6, 42-symbol truncations") {
    Rat slack = testutil::basicspan_min_slack(3, 1, 6, 42);
    CHECK(!(slack < Rat(0)));
}

// dirty-run span bound: w1 truncates the infinite dirty run at amplitude a,
// w2 = 1_(b1,b2) ... k_(b1,b2); then
// minSpanInFirst[ell] + k b1 >= (k+1+(k-1)c) ell - k^2 a b1 / b2
TEST_CASE("dirty span bound, k=2 c=1/3 a=3 b1=24 b2=9, w1 truncated at 64") {
    Rat slack = testutil::dirtyspan_min_slack(2, Rat(1, 3), 3, 24, 9, 64);
    CHECK(!(slack < Rat(0)));
}

TEST_CASE("dirty span bound, k=3 c=1/4 a=4 b1=24 b2=8, w1 truncated at 60") {
    Rat slack = testutil::dirtyspan_min_slack(3, Rat(1, 4), 4, 24, 8, 60);
    CHECK(!(slack < Rat(0)));
}

// the k=2 c=1/3 instance written out with explicit constants: the bound line
// is (10/3) ell - 32 and the w2 side contributes 2*b1 = 48
TEST_CASE("dirty span bound k=2 instance, explicit constants") {
    DirtyInnerParams p;
    p.k = 2;
    p.K = 1;
    p.c = Rat(1, 3);
    Word w1 = dirty_run_prefix(1, 3, p, 64);
    Word w2;
    w2.k = 2;
    for (int j = 1; j <= 2; ++j) {
        Word seg = dirty_run(j, 24, 9, p);
        w2.syms.insert(w2.syms.end(), seg.syms.begin(), seg.syms.end());
    }
    CHECK(w2.size() == 48);
    SpanProfile prof = span_profile(w1, w2, 1ull << 20);
    CHECK(prof.lcs >= 1);
    for (std::size_t ell = 1; ell <= prof.lcs; ++ell) {
        Rat lhs = Rat((std::int64_t)prof.minSpanInFirst[ell] + 48);
        Rat rhs = Rat(10, 3) * Rat((std::int64_t)ell) - Rat(32);
        CHECK(!(lhs < rhs));
    }
}
