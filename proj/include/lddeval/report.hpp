#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lddeval/bleu.hpp"

namespace lddeval {

/// Scores for one evaluated sentence set (the full corpus or one distance
/// slice). Metric fields are absent when the slice is empty or the metric
/// was not requested.
struct SliceScore {
    std::optional<int> min_distance;  // absent for the baseline row
    std::size_t n_sentences = 0;
    std::int64_t hyp_len = 0;
    std::int64_t ref_len = 0;
    std::optional<BleuReport> bleu;
    std::optional<double> ribes;
};

struct PhenomenonReport {
    std::string phenomenon;
    std::vector<SliceScore> slices;  // ascending by min_distance
    std::optional<double> spearman;  // BLEU vs min distance, when defined
};

struct EvalReport {
    std::size_t n_lines = 0;
    std::vector<std::string> metrics;
    std::optional<SliceScore> baseline;
    std::vector<PhenomenonReport> phenomena;
};

/// Long-format report. Header is fixed:
/// phenomenon\tmin_distance\tn_sentences\tbleu\tribes\tspearman
void write_report_tsv(std::ostream& out, const EvalReport& report);

/// Paper-style wide table: one row per phenomenon, one column per distance
/// threshold, spearman last. The baseline row repeats its single score.
void write_wide_table_tsv(std::ostream& out, const EvalReport& report);

nlohmann::ordered_json slice_json(const SliceScore& slice);
nlohmann::ordered_json eval_report_json(const EvalReport& report);
EvalReport eval_report_from_json(const nlohmann::json& j);

/// Extraction size summary rows (long and wide emission).
struct SizeRow {
    std::string phenomenon;
    std::optional<int> min_distance;  // absent for the baseline row
    std::size_t n_sentences = 0;
};

void write_sizes_tsv(std::ostream& out, const std::vector<SizeRow>& rows);
void write_sizes_table_tsv(std::ostream& out, const std::vector<SizeRow>& rows);

/// Run manifest: config, seed, input digests, tool version; no timestamps,
/// so an identical rerun reproduces it byte for byte.
struct ManifestInput {
    std::string role;
    std::filesystem::path path;
};

nlohmann::ordered_json make_manifest(std::string_view subcommand,
                                     const nlohmann::ordered_json& config,
                                     const std::vector<ManifestInput>& inputs);
void write_manifest(const std::filesystem::path& out_dir, const nlohmann::ordered_json& manifest);

std::string format_score(double value, int decimals);

}  // namespace lddeval
