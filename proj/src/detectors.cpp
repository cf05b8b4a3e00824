#include "lddeval/detectors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "lddeval/errors.hpp"

namespace lddeval {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool is_yes(std::string_view value) { return lower(value) == "yes"; }

ChallengeInstance lexical_instance(Phenomenon phenomenon, const Token& token) {
    ChallengeInstance instance;
    instance.phenomenon = phenomenon;
    instance.head_index = token.head;
    instance.dep_index = token.id;
    instance.distance = dependency_distance(token.head, token.id);
    return instance;
}

/// Shared scan for the lexical rules: `matches` decides whether a token
/// triggers; root-attached tokens have no word pair and never trigger.
template <typename Predicate>
std::vector<ChallengeInstance> detect_lexical(const ParsedSentence& sentence, int min_distance,
                                              Phenomenon phenomenon, Predicate matches) {
    std::vector<ChallengeInstance> instances;
    for (const Token& token : sentence.tokens) {
        if (token.head == 0) continue;
        if (!matches(token)) continue;
        ChallengeInstance instance = lexical_instance(phenomenon, token);
        if (instance.distance >= min_distance) instances.push_back(instance);
    }
    return instances;
}

}  // namespace

int dependency_distance(int head_id, int dep_id) {
    if (head_id == dep_id)
        throw Error("dependency_distance requires distinct word ids (got " +
                    std::to_string(head_id) + ")");
    return std::abs(head_id - dep_id) - 1;
}

std::optional<ChallengeInstance> detect_reordering(const AlignmentSet& alignment, int threshold) {
    if (threshold < 1) throw Error("reorder threshold must be at least 1");
    std::optional<int> displacement = max_displacement(alignment);
    if (!displacement || *displacement < threshold) return std::nullopt;
    // Pairs are stored sorted, so the first pair achieving the maximum is the
    // lexicographically smallest one.
    for (const AlignedPair& pair : alignment.pairs) {
        if (std::abs(pair.src - pair.tgt) == *displacement) {
            ChallengeInstance instance;
            instance.phenomenon = Phenomenon::Reorder;
            instance.aligned_pair = pair;
            instance.distance = *displacement;
            return instance;
        }
    }
    return std::nullopt;  // unreachable
}

std::vector<ChallengeInstance> detect_reflexive(const ParsedSentence& sentence, int min_distance) {
    return detect_lexical(sentence, min_distance, Phenomenon::Reflexive, [](const Token& token) {
        for (const char* key : {"Reflex", "Refl"})
            if (auto value = feature_lookup(token, key); value && is_yes(*value)) return true;
        return false;
    });
}

std::vector<ChallengeInstance> detect_particle(const ParsedSentence& sentence, int min_distance) {
    return detect_lexical(sentence, min_distance, Phenomenon::Particle, [](const Token& token) {
        return token.deprel == "compound:prt" || token.deprel == "prt";
    });
}

std::vector<ChallengeInstance> detect_prep_stranding(const ParsedSentence& sentence,
                                                     int min_distance) {
    return detect_lexical(
        sentence, min_distance, Phenomenon::PrepStranding, [](const Token& token) {
            bool oblique = token.deprel == "obl" || token.deprel.rfind("obl:", 0) == 0;
            return oblique && token.upos == "ADP";
        });
}

bool prep_stranding_enabled(const DetectorConfig& config) {
    if (config.force_prep_stranding) return true;
    std::string tag = lower(config.source_language);
    return tag == "en" || tag == "eng" || tag == "english" || tag.rfind("en-", 0) == 0 ||
           tag.rfind("en_", 0) == 0;
}

std::string challenge_set_name(Phenomenon phenomenon, int min_distance) {
    return std::string(to_string(phenomenon)) + "_d" + std::to_string(min_distance);
}

std::vector<ChallengeSet> extract_challenge_sets(const std::vector<BitextRecord>& records,
                                                 const std::vector<DetectorConfig>& configs) {
    std::vector<ChallengeSet> sets;
    sets.reserve(configs.size());
    for (const DetectorConfig& config : configs) {
        const bool reorder = config.phenomenon == Phenomenon::Reorder;
        ChallengeSet set;
        set.phenomenon = config.phenomenon;
        set.min_distance = reorder ? config.reorder_threshold : config.min_distance;
        set.name = challenge_set_name(config.phenomenon, set.min_distance);

        if (config.phenomenon == Phenomenon::PrepStranding && !prep_stranding_enabled(config))
            throw Error("challenge set " + set.name +
                        ": prep_stranding is extracted only for English sources (source "
                        "language is \"" +
                        config.source_language + "\"); use the force flag to override");

        for (const BitextRecord& record : records) {
            std::vector<ChallengeInstance> found;
            if (reorder) {
                if (!record.alignment)
                    throw Error("challenge set " + set.name + ": record " +
                                std::to_string(record.record_id) + " has no alignment");
                if (auto instance = detect_reordering(*record.alignment, config.reorder_threshold))
                    found.push_back(*instance);
            } else {
                if (!record.parse)
                    throw Error("challenge set " + set.name + ": record " +
                                std::to_string(record.record_id) + " has no dependency parse");
                switch (config.phenomenon) {
                    case Phenomenon::Reflexive:
                        found = detect_reflexive(*record.parse, config.min_distance);
                        break;
                    case Phenomenon::Particle:
                        found = detect_particle(*record.parse, config.min_distance);
                        break;
                    case Phenomenon::PrepStranding:
                        found = detect_prep_stranding(*record.parse, config.min_distance);
                        break;
                    case Phenomenon::Reorder:
                        break;
                }
            }
            for (ChallengeInstance& instance : found) {
                instance.record_id = record.record_id;
                set.instances.push_back(instance);
            }
        }
        std::stable_sort(set.instances.begin(), set.instances.end(),
                         [](const ChallengeInstance& a, const ChallengeInstance& b) {
                             return a.record_id < b.record_id;
                         });
        rebuild_record_ids(set);
        sets.push_back(std::move(set));
    }
    return sets;
}

std::vector<ChallengeSet> slice_by_distance(const ChallengeSet& set,
                                            const std::vector<int>& thresholds) {
    std::vector<ChallengeSet> slices;
    slices.reserve(thresholds.size());
    for (int threshold : thresholds) {
        if (threshold < set.min_distance)
            throw Error("slice threshold " + std::to_string(threshold) +
                        " below the extraction threshold " + std::to_string(set.min_distance) +
                        " of " + set.name + " (filtered records cannot be recovered)");
        ChallengeSet slice;
        slice.phenomenon = set.phenomenon;
        slice.min_distance = threshold;
        slice.name = challenge_set_name(set.phenomenon, threshold);
        for (const ChallengeInstance& instance : set.instances)
            if (instance.distance >= threshold) slice.instances.push_back(instance);
        rebuild_record_ids(slice);
        slices.push_back(std::move(slice));
    }
    return slices;
}

}  // namespace lddeval
