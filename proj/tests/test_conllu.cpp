#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "lddeval/conllu.hpp"
#include "lddeval/errors.hpp"
#include "lddeval/util.hpp"

using namespace lddeval;

TEST_CASE("empty stream yields no sentences") {
    ConlluCorpus corpus = parse_conllu(std::string_view(""));
    CHECK(corpus.sentences.empty());
    CHECK(corpus.warnings.empty());
}

TEST_CASE("minimal two-token block") {
    const std::string text =
        "1\tDer\tder\tDET\t_\t_\t2\tdet\t_\t_\n"
        "2\tMann\tMann\tNOUN\t_\t_\t0\troot\t_\t_\n\n";
    ConlluCorpus corpus = parse_conllu(text);
    REQUIRE(corpus.sentences.size() == 1);
    const ParsedSentence& s = corpus.sentences[0];
    REQUIRE(s.size() == 2);
    CHECK(s.tokens[0].form == "Der");
    CHECK(s.tokens[0].head == 2);
    CHECK(s.tokens[0].deprel == "det");
    CHECK(s.tokens[1].head == 0);
    CHECK(s.sent_id == "1");  // synthesized ordinal
}

TEST_CASE("multiword-token ranges and empty nodes are kept aside") {
    ConlluCorpus corpus = parse_conllu(read_file(testutil::fixture("fixture.conllu")));
    REQUIRE(corpus.sentences.size() == 20);
    CHECK(corpus.warnings.empty());

    // oracle: the range line "5-6 zum" sits before word 5 of s17
    const ParsedSentence& s17 = corpus.sentences[16];
    CHECK(s17.sent_id == "s17");
    REQUIRE(s17.size() == 8);
    std::vector<std::string> forms;
    for (const Token& t : s17.tokens) forms.push_back(t.form);
    CHECK(forms == std::vector<std::string>{"er", "ging", "gestern", "nachmittag", "zu", "dem",
                                            "arzt", "hin"});
    REQUIRE(s17.non_words.size() == 1);
    CHECK(s17.non_words[0].before_token == 4);
    CHECK(s17.non_words[0].raw.substr(0, 3) == "5-6");

    const ParsedSentence& s18 = corpus.sentences[17];
    REQUIRE(s18.size() == 5);
    REQUIRE(s18.non_words.size() == 1);
    CHECK(s18.non_words[0].before_token == 3);
    CHECK(s18.non_words[0].raw.substr(0, 3) == "3.1");
}

TEST_CASE("parsing preserves block order and head bounds") {
    ConlluCorpus corpus = parse_conllu(read_file(testutil::fixture("fixture.conllu")));
    for (std::size_t k = 0; k < corpus.sentences.size(); ++k) {
        CHECK(corpus.sentences[k].sent_id == "s" + std::to_string(k + 1));
        const int n = static_cast<int>(corpus.sentences[k].size());
        for (const Token& t : corpus.sentences[k].tokens) {
            CHECK(t.head >= 0);
            CHECK(t.head <= n);
            CHECK(t.head != t.id);
        }
    }
}

TEST_CASE("feature_lookup is case-insensitive") {
    Token t = testutil::tok(1, "sich", 4, "obj", "PRON", "Reflex=Yes");
    CHECK(feature_lookup(t, "reflex") == "Yes");
    CHECK(feature_lookup(t, "REFLEX") == "Yes");
    CHECK(!feature_lookup(t, "Case").has_value());

    Token bare = testutil::tok(1, "x", 2, "det");
    CHECK(!feature_lookup(bare, "Reflex").has_value());

    Token multi = testutil::tok(1, "x", 2, "det", "X", "Case=Acc|Reflex=Yes");
    CHECK(feature_lookup(multi, "Case") == "Acc");
}

TEST_CASE("malformed sentences are skipped with a warning by default") {
    const std::string good = "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n";
    SUBCASE("wrong column count") {
        const std::string text = "1\ta\ta\tX\t_\t_\t0\troot\t_\n\n" + good;
        ConlluCorpus corpus = parse_conllu(text);
        CHECK(corpus.sentences.size() == 1);
        REQUIRE(corpus.warnings.size() == 1);
        CHECK(corpus.warnings[0].line_no == 1);
        CHECK_THROWS_AS(parse_conllu(text, {true}), ParseError);
    }
    SUBCASE("non-integer head") {
        const std::string text = "1\ta\ta\tX\t_\t_\tx\troot\t_\t_\n\n" + good;
        ConlluCorpus corpus = parse_conllu(text);
        CHECK(corpus.sentences.size() == 1);
        CHECK(corpus.warnings.size() == 1);
        CHECK_THROWS_WITH_AS(parse_conllu(text, {true}), "line 1: non-integer head \"x\"",
                             ParseError);
    }
    SUBCASE("head beyond sentence length") {
        const std::string text = "1\ta\ta\tX\t_\t_\t5\tdet\t_\t_\n\n" + good;
        ConlluCorpus corpus = parse_conllu(text);
        CHECK(corpus.sentences.size() == 1);
        CHECK(corpus.warnings.size() == 1);
    }
    SUBCASE("token as its own head") {
        const std::string text = "1\ta\ta\tX\t_\t_\t1\tdet\t_\t_\n\n" + good;
        CHECK(parse_conllu(text).sentences.size() == 1);
        CHECK_THROWS_AS(parse_conllu(text, {true}), ParseError);
    }
    SUBCASE("ids out of sequence") {
        const std::string text =
            "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n3\tb\tb\tX\t_\t_\t1\tdet\t_\t_\n\n" + good;
        CHECK(parse_conllu(text).sentences.size() == 1);
        CHECK_THROWS_AS(parse_conllu(text, {true}), ParseError);
    }
    SUBCASE("duplicate feature key") {
        const std::string text = "1\ta\ta\tX\t_\tA=1|A=2\t0\troot\t_\t_\n\n" + good;
        CHECK(parse_conllu(text).sentences.size() == 1);
        CHECK_THROWS_AS(parse_conllu(text, {true}), ParseError);
    }
}

TEST_CASE("root-count violations are warnings, not errors") {
    const std::string two_roots =
        "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n"
        "2\tb\tb\tX\t_\t_\t0\troot\t_\t_\n\n";
    ConlluCorpus corpus = parse_conllu(two_roots, {true});  // strict mode still keeps it
    CHECK(corpus.sentences.size() == 1);
    REQUIRE(corpus.warnings.size() == 1);
    CHECK(corpus.warnings[0].message.find("2 roots") != std::string::npos);
}

TEST_CASE("CRLF input is accepted") {
    const std::string text = "# sent_id = a\r\n1\tx\tx\tX\t_\t_\t0\troot\t_\t_\r\n\r\n";
    ConlluCorpus corpus = parse_conllu(text);
    REQUIRE(corpus.sentences.size() == 1);
    CHECK(corpus.sentences[0].sent_id == "a");
    CHECK(corpus.sentences[0].tokens[0].form == "x");
}

TEST_CASE("serialize-reparse round trip over the fixture corpus") {
    ConlluCorpus first = parse_conllu(read_file(testutil::fixture("fixture.conllu")));
    std::string serialized;
    for (const ParsedSentence& s : first.sentences) serialized += to_conllu(s);
    ConlluCorpus second = parse_conllu(serialized);
    REQUIRE(second.sentences.size() == first.sentences.size());
    for (std::size_t i = 0; i < first.sentences.size(); ++i)
        CHECK(first.sentences[i] == second.sentences[i]);
}

TEST_CASE("round trip over randomized sentences") {
    Rng rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        ParsedSentence s;
        s.sent_id = "1";  // reparse of a single block synthesizes ordinal 1
        const int n = 1 + static_cast<int>(rng.bounded(12));
        for (int id = 1; id <= n; ++id) {
            // pick any head != id within [0, n]
            int head;
            do {
                head = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n) + 1));
            } while (head == id);
            std::string feats;
            if (rng.bounded(3) == 0) feats = "Reflex=Yes";
            s.tokens.push_back(testutil::tok(id, "w" + std::to_string(rng.bounded(20)), head,
                                             rng.bounded(2) ? "det" : "obl", "NOUN", feats));
        }
        ConlluCorpus reparsed = parse_conllu(to_conllu(s));
        REQUIRE(reparsed.sentences.size() == 1);
        CHECK(reparsed.sentences[0] == s);
    }
}
