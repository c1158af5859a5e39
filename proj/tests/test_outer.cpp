#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "delcode/lcs.hpp"
#include "delcode/outer_codes.hpp"

using namespace delcode;

TEST_CASE("entropy and the feasibility test") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == doctest::Approx(0.0));
    CHECK(binary_entropy(1.0) == doctest::Approx(0.0));
    // gamma log2 K must beat 2 h(gamma) with room for the rate term
    CHECK(rate_feasible(256, 0.01, 0.9));
    CHECK(!rate_feasible(2, 0.5, 0.1));
}

TEST_CASE("builder reaches 32 words over [16]^32 below gamma 1/2") {
    OuterBuildResult r = build_random_outer(16, 32, 32, Rat(1, 2), 3);
    REQUIRE(r.reachedTarget);
    REQUIRE(r.code.words.size() == 32);
    // exhaustive audit with the plain DP: every pair under 16
    for (std::size_t i = 0; i < 32; ++i)
        for (std::size_t j = i + 1; j < 32; ++j)
            CHECK(lcs_length_dp(r.code.words[i], r.code.words[j]) < 16);
    CHECK(r.code.gammaAchieved < Rat(1, 2));

    // seed determinism: the same build twice
    OuterBuildResult r2 = build_random_outer(16, 32, 32, Rat(1, 2), 3);
    CHECK(r2.code.words == r.code.words);
    CHECK(r2.attempts == r.attempts);

    // a different seed gives a different code
    OuterBuildResult r3 = build_random_outer(16, 32, 32, Rat(1, 2), 4);
    CHECK(r3.code.words != r.code.words);
}

TEST_CASE("builder reports a shortfall honestly") {
    // 5 words of pairwise LCS < 1 over [2]^4 cannot exist (any two words
    // over a binary alphabet of length 4 share a symbol)
    OuterBuildResult r = build_random_outer(2, 4, 5, Rat(1, 4), 1, 2000);
    CHECK(!r.reachedTarget);
    CHECK(r.code.words.size() < 5);
    CHECK(r.attempts == 2000);
}

TEST_CASE("outer code text round trip") {
    OuterBuildResult r = build_random_outer(4, 8, 6, Rat(3, 4), 11);
    REQUIRE(r.reachedTarget);
    std::ostringstream os;
    write_outer(os, r.code);
    std::istringstream in(os.str());
    OuterCode back = read_outer(in);
    CHECK(back.K == r.code.K);
    CHECK(back.n == r.code.n);
    CHECK(back.gamma == r.code.gamma);
    CHECK(back.seed == r.code.seed);
    CHECK(back.words == r.code.words);
}
