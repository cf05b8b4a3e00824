#include "lddeval/run.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lddeval/bleu.hpp"
#include "lddeval/correlation.hpp"
#include "lddeval/corpus.hpp"
#include "lddeval/detectors.hpp"
#include "lddeval/errors.hpp"
#include "lddeval/permutation.hpp"
#include "lddeval/report.hpp"
#include "lddeval/ribes.hpp"
#include "lddeval/sampling.hpp"
#include "lddeval/util.hpp"
#include "lddeval/version.hpp"

namespace lddeval {

using nlohmann::ordered_json;

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

TokenizedCorpus tokenize_lines(const std::vector<std::string>& lines) {
    TokenizedCorpus corpus;
    corpus.reserve(lines.size());
    for (const std::string& line : lines) corpus.push_back(split_ws(line));
    return corpus;
}

std::vector<int> sorted_unique(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

/// Seeded subsampling cap: uniform without replacement, ascending output.
std::vector<int> cap_ids(std::vector<int> ids, std::size_t cap, Rng& rng) {
    if (cap == 0 || ids.size() <= cap) return ids;
    for (std::size_t i = 0; i < cap; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.bounded(ids.size() - i));
        std::swap(ids[i], ids[j]);
    }
    ids.resize(cap);
    std::sort(ids.begin(), ids.end());
    return ids;
}

void print_warnings(const std::vector<ConlluWarning>& warnings) {
    for (const ConlluWarning& warning : warnings)
        std::cerr << "warning: line " << warning.line_no << ": " << warning.message << "\n";
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string line;
    for (const std::string& token : tokens) {
        if (!line.empty()) line += ' ';
        line += token;
    }
    return line;
}

}  // namespace

void run_extract(const ExtractConfig& config) {
    if (config.phenomena.empty()) throw Error("no phenomena requested");
    std::vector<Phenomenon> phenomena;
    for (const std::string& name : config.phenomena) {
        auto phenomenon = phenomenon_from_string(name);
        if (!phenomenon)
            throw Error("unknown phenomenon \"" + name +
                        "\" (expected reorder, reflexive, particle or prep_stranding)");
        phenomena.push_back(*phenomenon);
    }
    for (Phenomenon phenomenon : phenomena) {
        if (phenomenon == Phenomenon::Reorder && !config.align)
            throw Error("phenomenon reorder requires --align");
        if (phenomenon != Phenomenon::Reorder && !config.conllu)
            throw Error(std::string("phenomenon ") + std::string(to_string(phenomenon)) +
                        " requires --conllu");
    }

    std::ifstream src = open_input(config.src);
    std::ifstream tgt = open_input(config.tgt);
    std::ifstream conllu;
    std::ifstream align;
    if (config.conllu) conllu = open_input(*config.conllu);
    if (config.align) align = open_input(*config.align);

    std::vector<ConlluWarning> warnings;
    std::vector<BitextRecord> records =
        load_bitext(src, tgt, config.conllu ? &conllu : nullptr, config.align ? &align : nullptr,
                    {config.strict_conllu}, &warnings);
    print_warnings(warnings);

    const std::vector<int> thresholds = sorted_unique(config.thresholds);
    std::vector<DetectorConfig> detector_configs;
    for (Phenomenon phenomenon : phenomena) {
        DetectorConfig detector;
        detector.phenomenon = phenomenon;
        detector.reorder_threshold = config.reorder_threshold;
        detector.source_language = config.language;
        detector.force_prep_stranding = config.force_prep_stranding;
        if (phenomenon == Phenomenon::Reorder) {
            detector_configs.push_back(detector);
        } else {
            for (int threshold : thresholds) {
                detector.min_distance = threshold;
                detector_configs.push_back(detector);
            }
        }
    }

    std::vector<ChallengeSet> sets = extract_challenge_sets(records, detector_configs);

    std::filesystem::create_directories(config.out_dir);
    std::vector<SizeRow> rows;
    rows.push_back({"baseline", std::nullopt, records.size()});
    for (const ChallengeSet& set : sets) {
        write_challenge_set(set, records, config.out_dir / set.name);
        rows.push_back({std::string(to_string(set.phenomenon)), set.min_distance, set.size()});
    }

    std::ostringstream sizes;
    write_sizes_tsv(sizes, rows);
    write_file(config.out_dir / "sizes.tsv", sizes.str());
    std::ostringstream table;
    write_sizes_table_tsv(table, rows);
    write_file(config.out_dir / "sizes_table.tsv", table.str());
    std::cout << sizes.str();

    ordered_json manifest_config;
    manifest_config["phenomena"] = config.phenomena;
    manifest_config["thresholds"] = thresholds;
    manifest_config["reorder_threshold"] = config.reorder_threshold;
    manifest_config["language"] = config.language;
    manifest_config["force_prep_stranding"] = config.force_prep_stranding;
    manifest_config["strict_conllu"] = config.strict_conllu;
    std::vector<ManifestInput> inputs{{"src", config.src}, {"tgt", config.tgt}};
    if (config.conllu) inputs.push_back({"conllu", *config.conllu});
    if (config.align) inputs.push_back({"align", *config.align});
    write_manifest(config.out_dir, make_manifest("extract", manifest_config, inputs));
}

namespace {

struct ScoredLines {
    TokenizedCorpus hyps;
    TokenizedCorpus refs;
};

SliceScore score_ids(const std::vector<int>& ids, const TokenizedCorpus& hyps,
                     const TokenizedCorpus& refs, bool want_bleu, bool want_ribes) {
    SliceScore slice;
    slice.n_sentences = ids.size();
    if (ids.empty()) return slice;
    TokenizedCorpus h;
    TokenizedCorpus r;
    h.reserve(ids.size());
    r.reserve(ids.size());
    for (int id : ids) {
        h.push_back(hyps[static_cast<std::size_t>(id)]);
        r.push_back(refs[static_cast<std::size_t>(id)]);
        slice.hyp_len += static_cast<std::int64_t>(h.back().size());
        slice.ref_len += static_cast<std::int64_t>(r.back().size());
    }
    if (want_bleu) slice.bleu = bleu_corpus(h, r);
    if (want_ribes) slice.ribes = ribes_corpus(h, r);
    return slice;
}

}  // namespace

void run_evaluate(const EvaluateConfig& config) {
    bool want_bleu = false;
    bool want_ribes = false;
    for (const std::string& metric : config.metrics) {
        if (metric == "bleu")
            want_bleu = true;
        else if (metric == "ribes")
            want_ribes = true;
        else
            throw Error("unknown metric \"" + metric + "\" (expected bleu or ribes)");
    }
    if (!want_bleu && !want_ribes) throw Error("no metrics requested");
    if (config.format != "tsv" && config.format != "json")
        throw Error("unknown report format \"" + config.format + "\" (expected tsv or json)");

    std::vector<std::string> hyp_lines = read_lines(config.hyp);
    std::vector<std::string> ref_lines = read_lines(config.ref);
    if (hyp_lines.size() != ref_lines.size())
        throw Error("length mismatch " + std::to_string(hyp_lines.size()) + " vs " +
                    std::to_string(ref_lines.size()));
    if (hyp_lines.empty()) throw Error("empty corpus");
    const int n_lines = static_cast<int>(hyp_lines.size());

    TokenizedCorpus hyps = tokenize_lines(hyp_lines);
    TokenizedCorpus refs = tokenize_lines(ref_lines);

    EvalReport report;
    report.n_lines = hyp_lines.size();
    report.metrics = config.metrics;

    Rng rng(config.seed);
    std::vector<int> all_ids(hyp_lines.size());
    std::iota(all_ids.begin(), all_ids.end(), 0);
    report.baseline = score_ids(cap_ids(all_ids, config.max_sentences, rng), hyps, refs,
                                want_bleu, want_ribes);

    if (config.instances) {
        std::vector<ChallengeInstance> instances = read_instances_file(*config.instances);
        for (const ChallengeInstance& instance : instances)
            if (instance.record_id < 0 || instance.record_id >= n_lines)
                throw Error("instance record " + std::to_string(instance.record_id) +
                            " outside the corpus (" + std::to_string(n_lines) + " lines)");

        std::map<std::string, std::vector<const ChallengeInstance*>> by_phenomenon;
        for (const ChallengeInstance& instance : instances)
            by_phenomenon[std::string(to_string(instance.phenomenon))].push_back(&instance);

        const std::vector<int> thresholds = sorted_unique(config.thresholds);
        for (const auto& [name, group] : by_phenomenon) {
            PhenomenonReport phenomenon;
            phenomenon.phenomenon = name;
            std::vector<double> xs;
            std::vector<double> ys;
            for (int threshold : thresholds) {
                std::vector<int> ids;
                for (const ChallengeInstance* instance : group)
                    if (instance->distance >= threshold) ids.push_back(instance->record_id);
                ids = sorted_unique(std::move(ids));
                SliceScore slice = score_ids(cap_ids(std::move(ids), config.max_sentences, rng),
                                             hyps, refs, want_bleu, want_ribes);
                slice.min_distance = threshold;
                if (slice.bleu) {
                    xs.push_back(threshold);
                    ys.push_back(slice.bleu->score);
                }
                phenomenon.slices.push_back(std::move(slice));
            }
            if (xs.size() >= 2) {
                try {
                    phenomenon.spearman = spearman(xs, ys);
                } catch (const Error& e) {
                    std::cerr << "warning: " << name << ": " << e.what() << "\n";
                }
            }
            report.phenomena.push_back(std::move(phenomenon));
        }
    }

    std::filesystem::create_directories(config.out_dir);
    std::ostringstream long_tsv;
    write_report_tsv(long_tsv, report);
    write_file(config.out_dir / "report.tsv", long_tsv.str());
    std::ostringstream wide_tsv;
    write_wide_table_tsv(wide_tsv, report);
    write_file(config.out_dir / "table.tsv", wide_tsv.str());
    const ordered_json report_js = eval_report_json(report);
    write_file(config.out_dir / "report.json", report_js.dump(2) + "\n");

    ordered_json manifest_config;
    manifest_config["metrics"] = config.metrics;
    manifest_config["thresholds"] = sorted_unique(config.thresholds);
    manifest_config["max_sentences"] = config.max_sentences;
    manifest_config["seed"] = config.seed;
    manifest_config["format"] = config.format;
    std::vector<ManifestInput> inputs{{"hyp", config.hyp}, {"ref", config.ref}};
    if (config.instances) inputs.push_back({"instances", *config.instances});
    write_manifest(config.out_dir, make_manifest("evaluate", manifest_config, inputs));

    if (config.format == "json")
        std::cout << report_js.dump(2) << "\n";
    else
        std::cout << long_tsv.str();
}

void run_sample(const SampleConfig& config) {
    ChallengeSet set = read_challenge_set(config.set_dir);
    if (set.record_ids.empty()) throw Error("challenge set " + set.name + " is empty");

    std::ifstream src = open_input(config.src);
    std::ifstream tgt = open_input(config.tgt);
    std::vector<BitextRecord> records = load_bitext(src, tgt);
    std::vector<std::string> hyp_lines = read_lines(config.hyp);
    if (hyp_lines.size() != records.size())
        throw Error("length mismatch " + std::to_string(records.size()) + " vs " +
                    std::to_string(hyp_lines.size()) + " (bitext vs hypotheses)");

    TokenizedCorpus hyps = tokenize_lines(hyp_lines);
    TokenizedCorpus refs;
    refs.reserve(records.size());
    std::vector<std::size_t> lengths;
    lengths.reserve(records.size());
    for (const BitextRecord& record : records) {
        refs.push_back(record.tgt_tokens);
        lengths.push_back(record.src_tokens.size());
    }
    const int n_records = static_cast<int>(records.size());
    for (int id : set.record_ids)
        if (id < 0 || id >= n_records)
            throw Error("challenge record " + std::to_string(id) + " outside the corpus (" +
                        std::to_string(n_records) + " lines)");

    auto score_bleu = [&](const std::vector<int>& ids) {
        TokenizedCorpus h;
        TokenizedCorpus r;
        for (int id : ids) {
            h.push_back(hyps[static_cast<std::size_t>(id)]);
            r.push_back(refs[static_cast<std::size_t>(id)]);
        }
        return bleu_corpus(h, r).score;
    };

    const double challenge_score = score_bleu(set.record_ids);
    LengthMatchedResult samples =
        length_matched_corpora(set, records, config.n_corpora, config.tolerance, config.seed);
    if (samples.replacement_fallback)
        std::cerr << "warning: a length bucket was exhausted; fell back to sampling with "
                     "replacement\n";

    std::vector<double> sample_scores;
    std::vector<double> mean_lengths;
    sample_scores.reserve(samples.corpora.size());
    for (const std::vector<int>& corpus : samples.corpora) {
        sample_scores.push_back(score_bleu(corpus));
        double sum = 0.0;
        for (int id : corpus) sum += static_cast<double>(lengths[static_cast<std::size_t>(id)]);
        mean_lengths.push_back(sum / static_cast<double>(corpus.size()));
    }

    SampleReport report = challenge_rank(challenge_score, sample_scores);
    report.seed = config.seed;

    std::filesystem::create_directories(config.out_dir);
    ordered_json report_js;
    report_js["seed"] = report.seed;
    report_js["generator"] = report.generator;
    report_js["n_corpora"] = report.n_corpora;
    report_js["challenge_set"] = set.name;
    report_js["challenge_score"] = report.challenge_score;
    report_js["rank"] = report.rank;
    report_js["empirical_p"] = report.empirical_p;
    report_js["below_all_samples"] = report.rank == 0;
    report_js["replacement_fallback"] = samples.replacement_fallback;
    report_js["sample_scores"] = report.sample_scores;
    write_file(config.out_dir / "sample_report.json", report_js.dump(2) + "\n");

    std::ostringstream tsv;
    tsv << "corpus_index\tmean_length\tscore\n";
    for (std::size_t i = 0; i < sample_scores.size(); ++i)
        tsv << i << '\t' << format_score(mean_lengths[i], 4) << '\t'
            << format_score(sample_scores[i], 2) << '\n';
    write_file(config.out_dir / "samples.tsv", tsv.str());

    ordered_json manifest_config;
    manifest_config["set"] = config.set_dir.string();
    manifest_config["n_corpora"] = config.n_corpora;
    manifest_config["tolerance"] = config.tolerance;
    manifest_config["seed"] = config.seed;
    write_manifest(config.out_dir,
                   make_manifest("sample", manifest_config,
                                 {{"src", config.src},
                                  {"tgt", config.tgt},
                                  {"hyp", config.hyp},
                                  {"instances", config.set_dir / "instances.jsonl"}}));

    std::cout << "challenge_set=" << set.name << " challenge_score="
              << format_score(report.challenge_score, 2) << " rank=" << report.rank << "/"
              << report.n_corpora << " below_all_samples="
              << (report.rank == 0 ? "true" : "false") << "\n";
}

void run_permute(const PermuteConfig& config) {
    std::vector<std::string> src_lines = read_lines(config.src);
    std::vector<std::string> tgt_lines = read_lines(config.tgt);
    if (src_lines.size() != tgt_lines.size())
        throw Error("length mismatch " + std::to_string(src_lines.size()) + " vs " +
                    std::to_string(tgt_lines.size()));

    TokenizedCorpus src_tokens = tokenize_lines(src_lines);
    std::vector<std::size_t> lengths;
    lengths.reserve(src_tokens.size());
    for (const auto& tokens : src_tokens) lengths.push_back(tokens.size());

    const bool per_line_reverse = config.sigma == "reverse";
    std::optional<Permutation> sigma;
    if (config.sigma == "builtin") {
        sigma = builtin_sigma18();
    } else if (config.sigma == "random") {
        if (!config.length) throw Error("--sigma random requires --length");
        sigma = random_sigma(static_cast<int>(*config.length), config.seed);
    } else if (config.sigma == "file") {
        if (!config.sigma_file) throw Error("--sigma file requires --sigma-file");
        std::vector<int> map;
        for (const std::string& field : split_ws(read_file(*config.sigma_file)))
            map.push_back(std::stoi(field));
        sigma = Permutation::from_map(std::move(map));
    } else if (!per_line_reverse) {
        throw Error("unknown sigma source \"" + config.sigma +
                    "\" (expected builtin, reverse, random or file)");
    }
    if (sigma && config.length && static_cast<int>(*config.length) != sigma->size())
        throw Error("--length " + std::to_string(*config.length) + " does not match the length-" +
                    std::to_string(sigma->size()) + " permutation");

    std::vector<std::size_t> kept(src_lines.size());
    std::iota(kept.begin(), kept.end(), 0);
    LengthFilterResult filtered = filter_by_length(lengths, config.length.value_or(0));
    if (config.length) kept = filtered.kept;

    auto [train, held] = holdout_split(kept.size(), config.holdout, config.seed);

    auto permute_line = [&](std::size_t line) {
        const std::vector<std::string>& tokens = src_tokens[line];
        if (per_line_reverse)
            return join_tokens(
                apply_permutation(tokens, reverse_sigma(static_cast<int>(tokens.size()))));
        return join_tokens(apply_permutation(tokens, *sigma));
    };

    std::filesystem::create_directories(config.out_dir);
    auto emit = [&](const std::vector<std::size_t>& selection, const std::string& prefix) {
        std::string src_out;
        std::string tgt_out;
        for (std::size_t position : selection) {
            const std::size_t line = kept[position];
            src_out += permute_line(line) + "\n";
            tgt_out += tgt_lines[line] + "\n";
        }
        write_file(config.out_dir / (prefix + "source.txt"), src_out);
        write_file(config.out_dir / (prefix + "target.txt"), tgt_out);
    };
    emit(train, "");
    if (config.holdout > 0) emit(held, "holdout.");

    std::string sigma_sidecar = "sigma\t" + config.sigma + "\n";
    if (sigma) {
        sigma_sidecar += "map\t";
        for (std::size_t i = 0; i < sigma->map.size(); ++i) {
            if (i > 0) sigma_sidecar += ' ';
            sigma_sidecar += std::to_string(sigma->map[i]);
        }
        sigma_sidecar += "\n";
    }
    write_file(config.out_dir / "sigma.txt", sigma_sidecar);

    std::string histogram = "length\tcount\n";
    for (const auto& [length, count] : filtered.histogram)
        histogram += std::to_string(length) + "\t" + std::to_string(count) + "\n";
    write_file(config.out_dir / "length_histogram.tsv", histogram);

    ordered_json manifest_config;
    manifest_config["sigma"] = config.sigma;
    if (config.sigma_file) manifest_config["sigma_file"] = config.sigma_file->string();
    if (config.length) manifest_config["length"] = *config.length;
    manifest_config["holdout"] = config.holdout;
    manifest_config["seed"] = config.seed;
    std::vector<ManifestInput> inputs{{"src", config.src}, {"tgt", config.tgt}};
    if (config.sigma_file) inputs.push_back({"sigma_file", *config.sigma_file});
    write_manifest(config.out_dir, make_manifest("permute", manifest_config, inputs));

    std::cout << "kept=" << train.size() << " holdout=" << held.size() << "\n";
}

void run_report(const ReportConfig& config) {
    if (config.inputs.empty()) throw Error("no report inputs given");
    EvalReport merged;
    std::set<std::string> metrics;
    bool first = true;
    for (const std::filesystem::path& path : config.inputs) {
        EvalReport report = eval_report_from_json(nlohmann::json::parse(read_file(path)));
        if (first) {
            merged.n_lines = report.n_lines;
            if (report.baseline) merged.baseline = report.baseline;
            first = false;
        } else if (!merged.baseline && report.baseline) {
            merged.baseline = report.baseline;
        }
        for (const std::string& metric : report.metrics) metrics.insert(metric);
        for (PhenomenonReport& phenomenon : report.phenomena)
            merged.phenomena.push_back(std::move(phenomenon));
    }
    merged.metrics.assign(metrics.begin(), metrics.end());

    std::ostringstream table;
    write_wide_table_tsv(table, merged);
    if (config.out) {
        write_file(*config.out, table.str());
    } else {
        std::cout << table.str();
    }
}

}  // namespace lddeval
