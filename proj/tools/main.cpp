#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lddeval/run.hpp"
#include "lddeval/version.hpp"

namespace {

std::filesystem::path default_out_dir() {
    if (const char* env = std::getenv("LDDEVAL_OUT_DIR")) return env;
    return "lddeval_out";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Challenge-set extraction and fine-grained MT evaluation for "
                 "long-distance dependencies"};
    app.set_version_flag("--version", std::string(lddeval::kVersion));
    app.require_subcommand(1);

    lddeval::ExtractConfig extract;
    extract.out_dir = default_out_dir();
    auto* extract_cmd = app.add_subcommand(
        "extract", "Extract challenge sets from an annotated parallel corpus");
    extract_cmd->add_option("--src", extract.src, "Tokenized source corpus, one sentence per line")
        ->required()
        ->check(CLI::ExistingFile);
    extract_cmd->add_option("--tgt", extract.tgt, "Tokenized target corpus")
        ->required()
        ->check(CLI::ExistingFile);
    extract_cmd->add_option("--conllu", extract.conllu, "Source-side CoNLL-U parses")
        ->check(CLI::ExistingFile);
    extract_cmd->add_option("--align", extract.align, "Pharaoh word alignments, one line per pair")
        ->check(CLI::ExistingFile);
    extract_cmd
        ->add_option("--phenomena", extract.phenomena,
                     "Comma-separated: reorder, reflexive, particle, prep_stranding")
        ->required()
        ->delimiter(',');
    extract_cmd
        ->add_option("--thresholds", extract.thresholds,
                     "Minimum intervening-word distances for the lexical sets")
        ->delimiter(',');
    extract_cmd->add_option("--reorder-threshold", extract.reorder_threshold,
                            "Minimum alignment-index displacement for the reorder set");
    extract_cmd->add_option("--language", extract.language,
                            "Source language tag (prep_stranding is English-only by default)");
    extract_cmd->add_flag("--force-prep-stranding", extract.force_prep_stranding,
                          "Extract prep_stranding regardless of source language");
    extract_cmd->add_flag("--strict-conllu", extract.strict_conllu,
                          "Abort on malformed CoNLL-U sentences instead of skipping them");
    extract_cmd->add_option("--out-dir", extract.out_dir, "Output directory");

    lddeval::EvaluateConfig evaluate;
    evaluate.out_dir = default_out_dir();
    auto* evaluate_cmd =
        app.add_subcommand("evaluate", "Score hypotheses, whole-corpus and per distance slice");
    evaluate_cmd->add_option("--hyp", evaluate.hyp, "System output, one sentence per line")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate_cmd->add_option("--ref", evaluate.ref, "Reference, line-aligned with --hyp")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate_cmd
        ->add_option("--instances", evaluate.instances,
                     "instances.jsonl of a challenge set; enables per-distance slicing")
        ->check(CLI::ExistingFile);
    evaluate_cmd->add_option("--thresholds", evaluate.thresholds, "Distance slice thresholds")
        ->delimiter(',');
    evaluate_cmd->add_option("--metrics", evaluate.metrics, "Comma-separated: bleu, ribes")
        ->delimiter(',');
    evaluate_cmd->add_option("--max-sentences", evaluate.max_sentences,
                             "Cap each evaluated set to this many sentences (seeded; 0 = no cap)");
    evaluate_cmd->add_option("--seed", evaluate.seed, "Seed for the subsampling cap");
    evaluate_cmd->add_option("--out-dir", evaluate.out_dir, "Output directory");
    evaluate_cmd->add_option("--format", evaluate.format, "Stdout format: tsv or json");

    lddeval::SampleConfig sample;
    sample.out_dir = default_out_dir();
    auto* sample_cmd = app.add_subcommand(
        "sample", "Score length-matched random control corpora against a challenge set");
    sample_cmd->add_option("--src", sample.src, "Tokenized source corpus (sampling pool)")
        ->required()
        ->check(CLI::ExistingFile);
    sample_cmd->add_option("--tgt", sample.tgt, "Tokenized target corpus (references)")
        ->required()
        ->check(CLI::ExistingFile);
    sample_cmd->add_option("--hyp", sample.hyp, "System output for the whole corpus")
        ->required()
        ->check(CLI::ExistingFile);
    sample_cmd->add_option("--set", sample.set_dir, "Challenge-set directory written by extract")
        ->required()
        ->check(CLI::ExistingDirectory);
    sample_cmd->add_option("--n-corpora", sample.n_corpora, "Number of control corpora");
    sample_cmd->add_option("--tol", sample.tolerance, "Per-sentence length tolerance");
    sample_cmd->add_option("--seed", sample.seed, "Sampling seed");
    sample_cmd->add_option("--out-dir", sample.out_dir, "Output directory");

    lddeval::PermuteConfig permute;
    permute.out_dir = default_out_dir();
    auto* permute_cmd = app.add_subcommand(
        "permute", "Apply a fixed token permutation to the source side of a bitext");
    permute_cmd->add_option("--src", permute.src, "Tokenized source corpus")
        ->required()
        ->check(CLI::ExistingFile);
    permute_cmd->add_option("--tgt", permute.tgt, "Tokenized target corpus (passes through)")
        ->required()
        ->check(CLI::ExistingFile);
    permute_cmd->add_option("--sigma", permute.sigma,
                            "Permutation source: builtin, reverse, random or file");
    permute_cmd->add_option("--sigma-file", permute.sigma_file,
                            "Space-separated permutation map (with --sigma file)")
        ->check(CLI::ExistingFile);
    permute_cmd->add_option("--length", permute.length,
                            "Keep only source lines with this many tokens before permuting");
    permute_cmd->add_option("--holdout", permute.holdout,
                            "Hold out this many pairs into holdout.* files (seeded)");
    permute_cmd->add_option("--seed", permute.seed, "Seed for random sigma and holdout split");
    permute_cmd->add_option("--out-dir", permute.out_dir, "Output directory");

    lddeval::ReportConfig report;
    auto* report_cmd = app.add_subcommand(
        "report", "Merge evaluate JSON reports into one wide score table");
    report_cmd->add_option("--inputs", report.inputs, "report.json files from evaluate runs")
        ->required()
        ->check(CLI::ExistingFile);
    report_cmd->add_option("--out", report.out, "Output TSV path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (extract_cmd->parsed()) lddeval::run_extract(extract);
        if (evaluate_cmd->parsed()) lddeval::run_evaluate(evaluate);
        if (sample_cmd->parsed()) lddeval::run_sample(sample);
        if (permute_cmd->parsed()) lddeval::run_permute(permute);
        if (report_cmd->parsed()) lddeval::run_report(report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
