#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lddeval/alignment.hpp"
#include "lddeval/conllu.hpp"
#include "lddeval/corpus.hpp"

namespace lddeval {

struct DetectorConfig {
    Phenomenon phenomenon = Phenomenon::Particle;
    int min_distance = 0;       // lexical: least intervening-word count
    int reorder_threshold = 5;  // reorder: least alignment-index displacement
    std::string source_language;       // gates prep_stranding (English sources)
    bool force_prep_stranding = false; // run prep_stranding regardless of language
};

/// Count of syntactic words strictly between two word positions: |a - b| - 1.
/// d >= 1 means at least one word separates the pair; d = 0 means adjacent.
/// Equal ids are a contract violation.
int dependency_distance(int head_id, int dep_id);

/// Reordering trigger: present iff the maximum alignment displacement reaches
/// the threshold. The stored pair is the lexicographically smallest pair
/// achieving the maximum; distance is the raw index difference |src - tgt|.
std::optional<ChallengeInstance> detect_reordering(const AlignmentSet& alignment, int threshold);

/// Lexical triggers. Each returns one instance per matching token whose
/// head-dep distance reaches min_distance; tokens attached to root carry no
/// word pair and never match.
std::vector<ChallengeInstance> detect_reflexive(const ParsedSentence& sentence, int min_distance);
std::vector<ChallengeInstance> detect_particle(const ParsedSentence& sentence, int min_distance);
std::vector<ChallengeInstance> detect_prep_stranding(const ParsedSentence& sentence, int min_distance);

/// Whether the config's language tag (or force flag) enables prep_stranding.
bool prep_stranding_enabled(const DetectorConfig& config);

std::string challenge_set_name(Phenomenon phenomenon, int min_distance);

/// One ChallengeSet per config; a record is included iff it yields at least
/// one instance at the config's threshold. A config whose required annotation
/// (parse for lexical, alignment for reorder) is missing from any record is
/// fatal, as is a gated prep_stranding config.
std::vector<ChallengeSet> extract_challenge_sets(const std::vector<BitextRecord>& records,
                                                 const std::vector<DetectorConfig>& configs);

/// Partition an extracted set by distance: for each threshold, the records
/// with at least one instance at that distance or more (instances below the
/// threshold are dropped from the slice). Thresholds below the extraction
/// threshold cannot be recovered and are an error.
std::vector<ChallengeSet> slice_by_distance(const ChallengeSet& set,
                                            const std::vector<int>& thresholds);

}  // namespace lddeval
