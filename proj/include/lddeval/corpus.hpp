#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lddeval/alignment.hpp"
#include "lddeval/conllu.hpp"

namespace lddeval {

enum class Phenomenon { Reorder, Reflexive, Particle, PrepStranding };

std::string_view to_string(Phenomenon phenomenon);
std::optional<Phenomenon> phenomenon_from_string(std::string_view name);

/// One sentence pair joined with its optional source-side annotations.
struct BitextRecord {
    int record_id = 0;  // 0-based line number
    std::vector<std::string> src_tokens;
    std::vector<std::string> tgt_tokens;
    std::optional<ParsedSentence> parse;      // source side
    std::optional<AlignmentSet> alignment;
    bool parse_token_mismatch = false;  // |parse.tokens| != |src_tokens|
};

/// A detected phenomenon trigger. Lexical phenomena carry 1-based CoNLL-U
/// head/dep ids and distance = intervening-word count; reorder carries the
/// 0-based alignment pair achieving the maximum displacement and distance =
/// that raw index difference. The two distance semantics are deliberately
/// distinct.
struct ChallengeInstance {
    int record_id = 0;
    Phenomenon phenomenon = Phenomenon::Reorder;
    std::optional<int> head_index;           // lexical only
    std::optional<int> dep_index;            // lexical only
    std::optional<AlignedPair> aligned_pair; // reorder only
    int distance = 0;

    friend bool operator==(const ChallengeInstance&, const ChallengeInstance&) = default;
};

/// A named challenge set. Sizes are counted in sentences: record_ids are the
/// distinct record ids of the instances, ascending; a sentence appears once
/// even with multiple triggers.
struct ChallengeSet {
    std::string name;
    Phenomenon phenomenon = Phenomenon::Reorder;
    int min_distance = 0;
    std::vector<int> record_ids;
    std::vector<ChallengeInstance> instances;

    std::size_t size() const { return record_ids.size(); }
};

/// Recompute record_ids from instances (distinct, ascending).
void rebuild_record_ids(ChallengeSet& set);

/// Join line-aligned streams into records. Tokens are split on ASCII
/// whitespace (inputs are pre-tokenized). Line-count mismatch between any two
/// present streams is fatal; alignment indices outside the joined sentence
/// lengths are fatal (mispaired files).
std::vector<BitextRecord> load_bitext(std::istream& src, std::istream& tgt,
                                      std::istream* parse = nullptr,
                                      std::istream* align = nullptr,
                                      const ConlluOptions& conllu_options = {},
                                      std::vector<ConlluWarning>* warnings = nullptr);

/// Emit a challenge set as a directory: line-aligned source.txt/target.txt
/// restricted to record_ids in ascending record order, instances.jsonl with
/// fields {record_id, phenomenon, head_index, dep_index, distance}, and
/// manifest.json with name/phenomenon/min_distance/counts.
void write_challenge_set(const ChallengeSet& set, const std::vector<BitextRecord>& records,
                         const std::filesystem::path& out_dir);

ChallengeSet read_challenge_set(const std::filesystem::path& dir);

/// JSON-lines instance codec (schema shared with external tools).
std::string instance_to_json_line(const ChallengeInstance& instance);
ChallengeInstance instance_from_json_line(std::string_view line);
std::vector<ChallengeInstance> read_instances_file(const std::filesystem::path& path);

}  // namespace lddeval
