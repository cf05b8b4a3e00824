#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lddeval {

struct ExtractConfig {
    std::filesystem::path src;
    std::filesystem::path tgt;
    std::optional<std::filesystem::path> conllu;
    std::optional<std::filesystem::path> align;
    std::vector<std::string> phenomena;
    std::vector<int> thresholds{0, 1, 2, 3};
    int reorder_threshold = 5;
    std::string language = "en";
    bool force_prep_stranding = false;
    bool strict_conllu = false;
    std::filesystem::path out_dir;
};

struct EvaluateConfig {
    std::filesystem::path hyp;
    std::filesystem::path ref;
    std::optional<std::filesystem::path> instances;
    std::vector<int> thresholds{0, 1, 2, 3};
    std::vector<std::string> metrics{"bleu"};
    std::size_t max_sentences = 0;  // 0 = no cap
    std::uint64_t seed = 0;
    std::filesystem::path out_dir;
    std::string format = "tsv";  // stdout format: tsv | json
};

struct SampleConfig {
    std::filesystem::path src;
    std::filesystem::path tgt;
    std::filesystem::path hyp;
    std::filesystem::path set_dir;  // a directory written by `extract`
    int n_corpora = 100;
    int tolerance = 1;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir;
};

struct PermuteConfig {
    std::filesystem::path src;
    std::filesystem::path tgt;
    std::string sigma = "builtin";  // builtin | reverse | random | file
    std::optional<std::filesystem::path> sigma_file;
    std::optional<std::size_t> length;  // keep only source lines of this length
    std::size_t holdout = 0;            // held-out pair count (seeded)
    std::uint64_t seed = 0;
    std::filesystem::path out_dir;
};

struct ReportConfig {
    std::vector<std::filesystem::path> inputs;  // evaluate report.json files
    std::optional<std::filesystem::path> out;
};

void run_extract(const ExtractConfig& config);
void run_evaluate(const EvaluateConfig& config);
void run_sample(const SampleConfig& config);
void run_permute(const PermuteConfig& config);
void run_report(const ReportConfig& config);

}  // namespace lddeval
