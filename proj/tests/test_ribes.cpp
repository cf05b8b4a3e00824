#include "doctest.h"
#include "helpers.hpp"
#include "lddeval/errors.hpp"
#include "lddeval/ribes.hpp"
#include "lddeval/util.hpp"

using namespace lddeval;
using testutil::toks;

namespace {
std::vector<std::string> words(const std::string& line) { return split_ws(line); }
}  // namespace

TEST_CASE("alignment by unique context") {
    SUBCASE("all-distinct identity") {
        CHECK(ribes_align(words("a b c d"), words("a b c d")) == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("all-distinct swap") {
        CHECK(ribes_align(words("a c b d"), words("a b c d")) == std::vector<int>{0, 2, 1, 3});
    }
    SUBCASE("repeated word disambiguated by bigram context") {
        // hand trace: "a"@0 via right bigram "a a" -> ref 1; "a"@1 via left
        // bigram "a a" -> ref 2; "b" unique -> ref 0
        CHECK(ribes_align(words("a a b"), words("b a a")) == std::vector<int>{1, 2, 0});
    }
    SUBCASE("a reference position is claimed at most once") {
        // "a"@1 claims ref 1 via "x a"; "a"@3 reaches ref 1 via "a z" but the
        // slot is taken, so the word is skipped
        CHECK(ribes_align(words("x a y a z"), words("x a z")) == std::vector<int>{0, 1, 2});
    }
    SUBCASE("words missing from the reference are skipped") {
        CHECK(ribes_align(words("a q b"), words("a b")) == std::vector<int>{0, 1});
    }
    SUBCASE("hopelessly ambiguous words are skipped") {
        CHECK(ribes_align(words("a a"), words("a a a")).empty());
    }
}

TEST_CASE("sentence scores") {
    SUBCASE("identity scores one") {
        RibesReport report = ribes_sentence(words("a b c d"), words("a b c d"));
        CHECK(report.score == 1.0);
        CHECK(report.nkt == 1.0);
        CHECK(report.unigram_precision == 1.0);
    }
    SUBCASE("exact reversal scores zero") {
        RibesReport report = ribes_sentence(words("d c b a"), words("a b c d"));
        CHECK(report.nkt == 0.0);
        CHECK(report.score == 0.0);
        CHECK(!report.degenerate);
    }
    SUBCASE("one transposition: 5 of 6 rank pairs ascend") {
        RibesReport report = ribes_sentence(words("a c b d"), words("a b c d"));
        CHECK(report.nkt == doctest::Approx(5.0 / 6.0));
        CHECK(report.unigram_precision == 1.0);
        CHECK(report.brevity_penalty == 1.0);
        CHECK(report.score == doctest::Approx(0.8333).epsilon(1e-4));
    }
    SUBCASE("fewer than two aligned words scores zero") {
        RibesReport report = ribes_sentence(words("a"), words("a"));
        CHECK(report.degenerate);
        CHECK(report.score == 0.0);
    }
    SUBCASE("empty sides score zero and are flagged") {
        CHECK(ribes_sentence({}, words("a b")).degenerate);
        CHECK(ribes_sentence(words("a b"), {}).degenerate);
        CHECK(ribes_sentence({}, {}).score == 0.0);
    }
    SUBCASE("short hypotheses pay the brevity penalty") {
        RibesReport report = ribes_sentence(words("a b"), words("a b c d"));
        CHECK(report.brevity_penalty == doctest::Approx(std::exp(1.0 - 2.0)));
        CHECK(report.score < 1.0);
        CHECK(report.nkt == 1.0);
    }
}

TEST_CASE("scores stay within the unit interval") {
    Rng rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::string> hyp;
        std::vector<std::string> ref;
        for (std::size_t i = 0, n = rng.bounded(9); i < n; ++i)
            hyp.push_back("t" + std::to_string(rng.bounded(4)));
        for (std::size_t i = 0, n = rng.bounded(9); i < n; ++i)
            ref.push_back("t" + std::to_string(rng.bounded(4)));
        RibesReport report = ribes_sentence(hyp, ref);
        CHECK(report.score >= 0.0);
        CHECK(report.score <= 1.0);
    }
}

TEST_CASE("corpus score is the mean of sentence scores") {
    TokenizedCorpus identity = toks({"a b c", "x y z w"});
    CHECK(ribes_corpus(identity, identity) == 1.0);

    TokenizedCorpus hyps = toks({"a b c", "w z y x"});
    TokenizedCorpus refs = toks({"a b c", "x y z w"});
    CHECK(ribes_corpus(hyps, refs) == doctest::Approx(0.5));

    CHECK(ribes_corpus(toks({"a c b d"}), toks({"a b c d"})) ==
          doctest::Approx(ribes_sentence(words("a c b d"), words("a b c d")).score));

    CHECK_THROWS_AS(ribes_corpus({}, {}), Error);
    CHECK_THROWS_AS(ribes_corpus(toks({"a"}), toks({"a", "b"})), Error);
}
