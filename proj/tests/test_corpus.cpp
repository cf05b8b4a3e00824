#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "lddeval/corpus.hpp"
#include "lddeval/errors.hpp"
#include "lddeval/util.hpp"

using namespace lddeval;
namespace fs = std::filesystem;

namespace {

std::vector<BitextRecord> load(const std::string& src, const std::string& tgt,
                               const std::string* conllu = nullptr,
                               const std::string* align = nullptr) {
    std::istringstream s(src), t(tgt);
    std::istringstream c(conllu ? *conllu : ""), a(align ? *align : "");
    return load_bitext(s, t, conllu ? &c : nullptr, align ? &a : nullptr);
}

fs::path temp_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("lddeval_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("bitext join by line number") {
    auto records = load("a b\nc\nd e f\n", "x\ny z\nw\n");
    REQUIRE(records.size() == 3);
    CHECK(records[0].record_id == 0);
    CHECK(records[0].src_tokens == std::vector<std::string>{"a", "b"});
    CHECK(records[1].tgt_tokens == std::vector<std::string>{"y", "z"});
    CHECK(!records[0].parse.has_value());
    CHECK(!records[0].alignment.has_value());
}

TEST_CASE("line-count mismatch is fatal") {
    CHECK_THROWS_WITH_AS(load("a\nb\nc\n", "x\ny\n"), "length mismatch 3 vs 2", Error);
}

TEST_CASE("parse token mismatch is flagged, not fatal") {
    const std::string one_word = "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n\n";
    auto match = load("a\n", "x\n", &one_word);
    REQUIRE(match.size() == 1);
    CHECK(!match[0].parse_token_mismatch);

    auto mismatch = load("a b\n", "x\n", &one_word);
    CHECK(mismatch[0].parse_token_mismatch);
}

TEST_CASE("alignment indices beyond sentence lengths fail at join time") {
    const std::string align_ok = "0-0\n";
    CHECK(load("a\n", "x\n", nullptr, &align_ok)[0].alignment->pairs.size() == 1);
    const std::string align_bad = "0-3\n";
    CHECK_THROWS_AS(load("a\n", "x\n", nullptr, &align_bad), Error);
}

TEST_CASE("challenge set files") {
    auto records = load("a a\nb b\nc c\n", "x x\ny y\nz z\n");

    SUBCASE("empty set") {
        ChallengeSet set;
        set.name = "particle_d0";
        set.phenomenon = Phenomenon::Particle;
        fs::path dir = temp_dir("empty_set");
        write_challenge_set(set, records, dir);
        CHECK(read_file(dir / "source.txt").empty());
        CHECK(read_file(dir / "target.txt").empty());
        CHECK(read_file(dir / "instances.jsonl").empty());
        auto manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
        CHECK(manifest["n_sentences"] == 0);
    }

    SUBCASE("records come out in ascending record order") {
        ChallengeSet set;
        set.name = "particle_d0";
        set.phenomenon = Phenomenon::Particle;
        set.record_ids = {2, 0};
        ChallengeInstance i1{2, Phenomenon::Particle, 1, 2, std::nullopt, 0};
        ChallengeInstance i2{0, Phenomenon::Particle, 1, 2, std::nullopt, 0};
        set.instances = {i1, i2};
        fs::path dir = temp_dir("ordered_set");
        write_challenge_set(set, records, dir);
        CHECK(read_file(dir / "source.txt") == "a a\nc c\n");
        CHECK(read_file(dir / "target.txt") == "x x\nz z\n");
    }

    SUBCASE("two instances in one record share a text line") {
        ChallengeSet set;
        set.name = "reflexive_d0";
        set.phenomenon = Phenomenon::Reflexive;
        set.instances = {ChallengeInstance{1, Phenomenon::Reflexive, 2, 1, std::nullopt, 0},
                         ChallengeInstance{1, Phenomenon::Reflexive, 2, 3, std::nullopt, 0}};
        rebuild_record_ids(set);
        fs::path dir = temp_dir("dedup_set");
        write_challenge_set(set, records, dir);
        CHECK(read_file(dir / "source.txt") == "b b\n");
        CHECK(split_char(read_file(dir / "instances.jsonl"), '\n').size() == 3);  // 2 + trailing
    }
}

TEST_CASE("write then read reproduces record ids and instances") {
    auto records = load("a a a\nb b\nc\nd d\n", "x\ny\nz\nw\n");
    ChallengeSet set;
    set.name = "reorder_d5";
    set.phenomenon = Phenomenon::Reorder;
    set.min_distance = 5;
    ChallengeInstance reorder;
    reorder.record_id = 3;
    reorder.phenomenon = Phenomenon::Reorder;
    reorder.aligned_pair = AlignedPair{0, 11};
    reorder.distance = 11;
    ChallengeInstance lexical{1, Phenomenon::Particle, 2, 1, std::nullopt, 0};
    set.instances = {lexical, reorder};
    rebuild_record_ids(set);

    fs::path dir = temp_dir("roundtrip_set");
    write_challenge_set(set, records, dir);
    ChallengeSet back = read_challenge_set(dir);
    CHECK(back.name == set.name);
    CHECK(back.phenomenon == set.phenomenon);
    CHECK(back.min_distance == set.min_distance);
    CHECK(back.record_ids == set.record_ids);
    REQUIRE(back.instances.size() == set.instances.size());
    CHECK(back.instances[0] == set.instances[0]);
    CHECK(back.instances[1] == set.instances[1]);
}

TEST_CASE("instance serialization uses the fixed field names") {
    ChallengeInstance lexical{7, Phenomenon::Particle, 2, 5, std::nullopt, 2};
    auto j = nlohmann::json::parse(instance_to_json_line(lexical));
    CHECK(j["record_id"] == 7);
    CHECK(j["phenomenon"] == "particle");
    CHECK(j["head_index"] == 2);
    CHECK(j["dep_index"] == 5);
    CHECK(j["distance"] == 2);
    CHECK(j.size() == 5);

    ChallengeInstance reorder;
    reorder.record_id = 1;
    reorder.phenomenon = Phenomenon::Reorder;
    reorder.aligned_pair = AlignedPair{0, 11};
    reorder.distance = 11;
    auto r = nlohmann::json::parse(instance_to_json_line(reorder));
    CHECK(r["head_index"].is_null());
    CHECK(r["dep_index"] == nlohmann::json::array({0, 11}));
    CHECK(instance_from_json_line(instance_to_json_line(reorder)) == reorder);
}
