#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delcode/concat.hpp"
#include "delcode/lcs.hpp"
#include "delcode/rng.hpp"
#include "util.hpp"

using namespace delcode;

namespace {

// the full-size configuration used by the end-to-end experiments
ConcatCodeSpec desk_spec() {
    InnerConfig inner; // defaults are the desk parameters
    return build_concat(2, Rat(2, 5), 17, inner);
}

// a small configuration for the quadratic audits
ConcatCodeSpec small_spec() {
    InnerConfig inner;
    inner.K = 4;
    inner.n = 12;
    inner.gamma = Rat(5, 6);
    inner.seed = 2;
    inner.c = Rat(1, 4);
    inner.t = 4;
    inner.L = 25;
    inner.layout = {{100, 20}, {20, 4}};
    // layout has K'=2 layers? no: layers sized by inner.K
    return build_concat(2, Rat(2, 5), 5, inner);
}

} // namespace

TEST_CASE("desk construction derives the expected sizes") {
    ConcatCodeSpec spec = desk_spec();
    CHECK(spec.q == 17);
    CHECK(spec.ell == 4); // ceil(0.4 * 17 / 2)
    CHECK(spec.m == 60000);
    CHECK(spec.N == 1020000);
    CHECK(spec.table.size() == 289);
    CHECK(spec.pairCode.words.size() == 289);
    CHECK(spec.pairCode.gammaAchieved < Rat(5, 6));
    for (const Word& w : spec.table) CHECK(w.size() == 60000);

    // run/count caches match the materialized words on a sample
    Rng rng(3);
    for (int it = 0; it < 10; ++it) {
        std::size_t idx = rng.below(spec.table.size());
        const Word& w = spec.table[idx];
        CHECK(spec.tableRuns[idx] == runs_of(w));
        std::vector<std::uint32_t> counts(spec.k + 1, 0);
        for (auto s : w.syms) ++counts[s];
        for (int s = 1; s <= spec.k; ++s)
            CHECK(spec.tableCounts[idx][s] == counts[s]);
    }
}

TEST_CASE("pair indexing and encoding layout") {
    ConcatCodeSpec spec = small_spec();
    CHECK(&inner_index_encode(1, 1, spec) == &spec.table[0]);
    CHECK(&inner_index_encode(2, 3, spec) == &spec.table[spec.q + 2]);
    CHECK_THROWS_AS((void)inner_index_encode(0, 1, spec), std::invalid_argument);
    CHECK_THROWS_AS((void)inner_index_encode(1, spec.q + 1, spec),
                    std::invalid_argument);

    PrimeField F = spec.field();
    Polynomial f = Polynomial::from({2, 1}); // 2 + x
    Word c = concat_encode(f, spec);
    REQUIRE(c.size() == spec.N);
    for (std::uint32_t i = 1; i <= spec.q; ++i) {
        const Word& blk = inner_index_encode(i, f.eval(i - 1, F) + 1, spec);
        for (std::size_t j = 0; j < 20; ++j)
            CHECK(c.syms[(i - 1) * spec.m + j] == blk.syms[j]);
    }
    Polynomial tooBig = Polynomial::from({0, 0, 1}); // degree 2, ell = 1? see below
    if ((int)spec.ell <= tooBig.degree())
        CHECK_THROWS_AS((void)concat_encode(tooBig, spec), std::invalid_argument);
}

TEST_CASE("containment probe against the materialized matcher") {
    ConcatCodeSpec spec = small_spec();
    PrimeField F = spec.field();
    Rng rng(17);
    for (int it = 0; it < 12; ++it) {
        Polynomial f = Polynomial::from({(std::uint32_t)rng.below(spec.q)});
        Word c = concat_encode(f, spec);
        Word s = testutil::random_subsequence(rng, c, 9, 10);
        auto sr = runs_of(s);
        for (std::uint32_t g0 = 0; g0 < spec.q; ++g0) {
            Polynomial g = Polynomial::from({g0});
            Word cg = concat_encode(g, spec);
            bool direct = rle_is_subsequence(sr, runs_of(cg));
            bool virt = codeword_contains(g, sr, s.size(), spec);
            CHECK(virt == direct);
        }
    }
    // trivial edges
    Polynomial g = Polynomial::from({0});
    CHECK(codeword_contains(g, {}, 0, spec));
    CHECK(!codeword_contains(g, {{1, 1}}, spec.N + 1, spec));
}

TEST_CASE("config writes and rebuilds the same code") {
    ConcatCodeSpec spec = small_spec();
    KvConfig cfg = concat_config(spec);
    ConcatCodeSpec back = build_concat_from_config(cfg);
    CHECK(back.q == spec.q);
    CHECK(back.m == spec.m);
    CHECK(back.N == spec.N);
    CHECK(back.table == spec.table);
    CHECK(back.pairCode.words == spec.pairCode.words);

    // stored derived keys are cross-checked on load
    KvConfig tampered = KvConfig::parse(cfg.str());
    ConcatCodeSpec ignore = build_concat_from_config(tampered);
    (void)ignore;
    std::string text = cfg.str();
    auto pos = text.find("m 3000");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 6, "m 3001");
    CHECK_THROWS_AS((void)build_concat_from_config(KvConfig::parse(text)),
                    std::invalid_argument);
}

TEST_CASE("construction rejects an oversized pair table") {
    InnerConfig inner;
    CHECK_THROWS_AS((void)build_concat(2, Rat(2, 5), 257, inner), SizeCapError);
}

TEST_CASE("sampled pairwise codeword distance stays inside the bound") {
    ConcatCodeSpec spec = small_spec();
    Rng rng(23);
    std::vector<std::pair<Polynomial, Polynomial>> pairs;
    while (pairs.size() < 12) {
        Polynomial f = Polynomial::from({(std::uint32_t)rng.below(spec.q)});
        Polynomial g = Polynomial::from({(std::uint32_t)rng.below(spec.q)});
        if (f == g) continue;
        pairs.emplace_back(f, g);
    }
    ConcatAudit audit = audit_concat_lcs(spec, pairs);
    CHECK(audit.pairCount == 12);
    CHECK(audit.maxLcs > 0);
    CHECK(audit.maxLcs < spec.N);
    CHECK(audit.withinBound);
    CHECK(audit.boundRatio > 0.0L);
    CHECK(audit.maxRatio < Rat(1));
}
