#include "lddeval/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <istream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lddeval/errors.hpp"
#include "lddeval/util.hpp"

namespace lddeval {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(Phenomenon phenomenon) {
    switch (phenomenon) {
        case Phenomenon::Reorder: return "reorder";
        case Phenomenon::Reflexive: return "reflexive";
        case Phenomenon::Particle: return "particle";
        case Phenomenon::PrepStranding: return "prep_stranding";
    }
    return "unknown";
}

std::optional<Phenomenon> phenomenon_from_string(std::string_view name) {
    if (name == "reorder") return Phenomenon::Reorder;
    if (name == "reflexive") return Phenomenon::Reflexive;
    if (name == "particle") return Phenomenon::Particle;
    if (name == "prep_stranding") return Phenomenon::PrepStranding;
    return std::nullopt;
}

void rebuild_record_ids(ChallengeSet& set) {
    std::set<int> ids;
    for (const ChallengeInstance& instance : set.instances) ids.insert(instance.record_id);
    set.record_ids.assign(ids.begin(), ids.end());
}

namespace {

std::vector<std::string> stream_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

std::vector<BitextRecord> load_bitext(std::istream& src, std::istream& tgt, std::istream* parse,
                                      std::istream* align, const ConlluOptions& conllu_options,
                                      std::vector<ConlluWarning>* warnings) {
    std::vector<std::string> src_lines = stream_lines(src);
    std::vector<std::string> tgt_lines = stream_lines(tgt);
    if (src_lines.size() != tgt_lines.size())
        throw Error("length mismatch " + std::to_string(src_lines.size()) + " vs " +
                    std::to_string(tgt_lines.size()));

    std::vector<ParsedSentence> parses;
    if (parse) {
        ConlluCorpus corpus = parse_conllu(*parse, conllu_options);
        if (warnings)
            warnings->insert(warnings->end(), corpus.warnings.begin(), corpus.warnings.end());
        parses = std::move(corpus.sentences);
        if (parses.size() != src_lines.size())
            throw Error("length mismatch " + std::to_string(src_lines.size()) + " vs " +
                        std::to_string(parses.size()) + " (bitext vs parses)");
    }

    std::vector<AlignmentSet> alignments;
    if (align) {
        std::vector<std::string> align_lines = stream_lines(*align);
        if (align_lines.size() != src_lines.size())
            throw Error("length mismatch " + std::to_string(src_lines.size()) + " vs " +
                        std::to_string(align_lines.size()) + " (bitext vs alignments)");
        alignments.reserve(align_lines.size());
        for (std::size_t i = 0; i < align_lines.size(); ++i) {
            try {
                alignments.push_back(parse_pharaoh_line(align_lines[i]));
            } catch (const Error& e) {
                throw Error("alignment line " + std::to_string(i + 1) + ": " + e.what());
            }
        }
    }

    std::vector<BitextRecord> records;
    records.reserve(src_lines.size());
    for (std::size_t i = 0; i < src_lines.size(); ++i) {
        BitextRecord record;
        record.record_id = static_cast<int>(i);
        record.src_tokens = split_ws(src_lines[i]);
        record.tgt_tokens = split_ws(tgt_lines[i]);
        if (parse) {
            record.parse = parses[i];
            record.parse_token_mismatch = record.parse->size() != record.src_tokens.size();
        }
        if (align) {
            for (const AlignedPair& pair : alignments[i].pairs) {
                if (pair.src >= static_cast<int>(record.src_tokens.size()) ||
                    pair.tgt >= static_cast<int>(record.tgt_tokens.size()))
                    throw Error("record " + std::to_string(i) + ": alignment pair " +
                                std::to_string(pair.src) + "-" + std::to_string(pair.tgt) +
                                " outside sentence lengths " +
                                std::to_string(record.src_tokens.size()) + "/" +
                                std::to_string(record.tgt_tokens.size()));
            }
            record.alignment = alignments[i];
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::string instance_to_json_line(const ChallengeInstance& instance) {
    ordered_json j;
    j["record_id"] = instance.record_id;
    j["phenomenon"] = to_string(instance.phenomenon);
    if (instance.aligned_pair) {
        j["head_index"] = nullptr;
        j["dep_index"] = {instance.aligned_pair->src, instance.aligned_pair->tgt};
    } else {
        if (instance.head_index)
            j["head_index"] = *instance.head_index;
        else
            j["head_index"] = nullptr;
        if (instance.dep_index)
            j["dep_index"] = *instance.dep_index;
        else
            j["dep_index"] = nullptr;
    }
    j["distance"] = instance.distance;
    return j.dump();
}

ChallengeInstance instance_from_json_line(std::string_view line) {
    json j = json::parse(line);
    ChallengeInstance instance;
    instance.record_id = j.at("record_id").get<int>();
    auto phenomenon = phenomenon_from_string(j.at("phenomenon").get<std::string>());
    if (!phenomenon)
        throw Error("unknown phenomenon \"" + j.at("phenomenon").get<std::string>() + "\"");
    instance.phenomenon = *phenomenon;
    const json& dep = j.at("dep_index");
    if (dep.is_array()) {
        if (dep.size() != 2) throw Error("reorder dep_index must hold two indices");
        instance.aligned_pair = AlignedPair{dep[0].get<int>(), dep[1].get<int>()};
    } else if (!dep.is_null()) {
        instance.dep_index = dep.get<int>();
    }
    const json& head = j.at("head_index");
    if (!head.is_null()) instance.head_index = head.get<int>();
    instance.distance = j.at("distance").get<int>();
    return instance;
}

std::vector<ChallengeInstance> read_instances_file(const std::filesystem::path& path) {
    std::vector<ChallengeInstance> instances;
    std::size_t line_no = 0;
    for (const std::string& line : read_lines(path)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            instances.push_back(instance_from_json_line(line));
        } catch (const std::exception& e) {
            throw Error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return instances;
}

void write_challenge_set(const ChallengeSet& set, const std::vector<BitextRecord>& records,
                         const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    std::vector<int> ids = set.record_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::unordered_map<int, const BitextRecord*> by_id;
    by_id.reserve(records.size());
    for (const BitextRecord& record : records) by_id.emplace(record.record_id, &record);

    auto join = [](const std::vector<std::string>& tokens) {
        std::string line;
        for (const std::string& token : tokens) {
            if (!line.empty()) line += ' ';
            line += token;
        }
        return line;
    };

    std::string src_text;
    std::string tgt_text;
    for (int id : ids) {
        auto it = by_id.find(id);
        if (it == by_id.end())
            throw Error("challenge set " + set.name + ": record " + std::to_string(id) +
                        " not present in the bitext");
        src_text += join(it->second->src_tokens) + "\n";
        tgt_text += join(it->second->tgt_tokens) + "\n";
    }
    write_file(out_dir / "source.txt", src_text);
    write_file(out_dir / "target.txt", tgt_text);

    std::string instance_lines;
    for (const ChallengeInstance& instance : set.instances)
        instance_lines += instance_to_json_line(instance) + "\n";
    write_file(out_dir / "instances.jsonl", instance_lines);

    ordered_json manifest;
    manifest["name"] = set.name;
    manifest["phenomenon"] = to_string(set.phenomenon);
    manifest["min_distance"] = set.min_distance;
    manifest["n_sentences"] = ids.size();
    manifest["n_instances"] = set.instances.size();
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

ChallengeSet read_challenge_set(const std::filesystem::path& dir) {
    json manifest = json::parse(read_file(dir / "manifest.json"));
    ChallengeSet set;
    set.name = manifest.at("name").get<std::string>();
    auto phenomenon = phenomenon_from_string(manifest.at("phenomenon").get<std::string>());
    if (!phenomenon)
        throw Error(dir.string() + ": unknown phenomenon in manifest");
    set.phenomenon = *phenomenon;
    set.min_distance = manifest.at("min_distance").get<int>();
    set.instances = read_instances_file(dir / "instances.jsonl");
    rebuild_record_ids(set);
    return set;
}

}  // namespace lddeval
