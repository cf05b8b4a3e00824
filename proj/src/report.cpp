#include "lddeval/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>

#include "lddeval/errors.hpp"
#include "lddeval/util.hpp"
#include "lddeval/version.hpp"

namespace lddeval {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_score(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

namespace {

std::string threshold_label(int threshold) {
    return threshold == 0 ? "all" : "ge" + std::to_string(threshold);
}

std::string bleu_cell(const SliceScore& slice) {
    return slice.bleu ? format_score(slice.bleu->score, 2) : "";
}

std::string ribes_cell(const SliceScore& slice) {
    return slice.ribes ? format_score(*slice.ribes, 4) : "";
}

void long_row(std::ostream& out, std::string_view phenomenon, const SliceScore& slice,
              const std::optional<double>& spearman) {
    out << phenomenon << '\t';
    if (slice.min_distance) out << *slice.min_distance;
    out << '\t' << slice.n_sentences << '\t' << bleu_cell(slice) << '\t' << ribes_cell(slice)
        << '\t';
    if (spearman) out << format_score(*spearman, 4);
    out << '\n';
}

}  // namespace

void write_report_tsv(std::ostream& out, const EvalReport& report) {
    out << "phenomenon\tmin_distance\tn_sentences\tbleu\tribes\tspearman\n";
    if (report.baseline) long_row(out, "baseline", *report.baseline, std::nullopt);
    for (const PhenomenonReport& phenomenon : report.phenomena)
        for (const SliceScore& slice : phenomenon.slices)
            long_row(out, phenomenon.phenomenon, slice, phenomenon.spearman);
}

void write_wide_table_tsv(std::ostream& out, const EvalReport& report) {
    std::set<int> thresholds;
    for (const PhenomenonReport& phenomenon : report.phenomena)
        for (const SliceScore& slice : phenomenon.slices)
            if (slice.min_distance) thresholds.insert(*slice.min_distance);
    if (thresholds.empty()) thresholds.insert(0);

    const bool use_bleu =
        std::find(report.metrics.begin(), report.metrics.end(), "bleu") != report.metrics.end();
    auto cell = [&](const SliceScore& slice) {
        if (use_bleu) return slice.bleu ? format_score(slice.bleu->score, 2) : std::string();
        return slice.ribes ? format_score(*slice.ribes, 2) : std::string();
    };

    out << "phenomenon";
    for (int threshold : thresholds) out << '\t' << threshold_label(threshold);
    out << "\tspearman\n";

    if (report.baseline) {
        out << "baseline";
        const std::string score = cell(*report.baseline);
        for (std::size_t i = 0; i < thresholds.size(); ++i) out << '\t' << score;
        out << "\t\n";
    }
    for (const PhenomenonReport& phenomenon : report.phenomena) {
        out << phenomenon.phenomenon;
        for (int threshold : thresholds) {
            out << '\t';
            for (const SliceScore& slice : phenomenon.slices)
                if (slice.min_distance && *slice.min_distance == threshold) {
                    out << cell(slice);
                    break;
                }
        }
        out << '\t';
        if (phenomenon.spearman) out << format_score(*phenomenon.spearman, 2);
        out << '\n';
    }
}

ordered_json slice_json(const SliceScore& slice) {
    ordered_json j;
    if (slice.min_distance) j["min_distance"] = *slice.min_distance;
    j["n_sentences"] = slice.n_sentences;
    if (slice.bleu) {
        ordered_json b;
        b["metric"] = "bleu";
        b["score"] = slice.bleu->score;
        b["precisions"] = slice.bleu->precisions;
        b["bp"] = slice.bleu->brevity_penalty;
        b["hyp_len"] = slice.bleu->hyp_len;
        b["ref_len"] = slice.bleu->ref_len;
        b["n_sentences"] = slice.n_sentences;
        j["bleu"] = std::move(b);
    }
    if (slice.ribes) {
        ordered_json r;
        r["metric"] = "ribes";
        r["score"] = *slice.ribes;
        r["hyp_len"] = slice.hyp_len;
        r["ref_len"] = slice.ref_len;
        r["n_sentences"] = slice.n_sentences;
        j["ribes"] = std::move(r);
    }
    return j;
}

ordered_json eval_report_json(const EvalReport& report) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["n_lines"] = report.n_lines;
    j["metrics"] = report.metrics;
    if (report.baseline) j["baseline"] = slice_json(*report.baseline);
    ordered_json phenomena = ordered_json::array();
    for (const PhenomenonReport& phenomenon : report.phenomena) {
        ordered_json p;
        p["phenomenon"] = phenomenon.phenomenon;
        if (phenomenon.spearman)
            p["spearman"] = *phenomenon.spearman;
        else
            p["spearman"] = nullptr;
        ordered_json slices = ordered_json::array();
        for (const SliceScore& slice : phenomenon.slices) slices.push_back(slice_json(slice));
        p["slices"] = std::move(slices);
        phenomena.push_back(std::move(p));
    }
    j["phenomena"] = std::move(phenomena);
    return j;
}

namespace {

SliceScore slice_from_json(const json& j) {
    SliceScore slice;
    if (j.contains("min_distance")) slice.min_distance = j.at("min_distance").get<int>();
    slice.n_sentences = j.at("n_sentences").get<std::size_t>();
    if (j.contains("bleu")) {
        const json& b = j.at("bleu");
        BleuReport report;
        report.score = b.at("score").get<double>();
        report.brevity_penalty = b.at("bp").get<double>();
        report.hyp_len = b.at("hyp_len").get<std::int64_t>();
        report.ref_len = b.at("ref_len").get<std::int64_t>();
        const auto& precisions = b.at("precisions");
        for (std::size_t i = 0; i < report.precisions.size() && i < precisions.size(); ++i)
            report.precisions[i] = precisions[i].get<double>();
        slice.hyp_len = report.hyp_len;
        slice.ref_len = report.ref_len;
        slice.bleu = report;
    }
    if (j.contains("ribes")) {
        const json& r = j.at("ribes");
        slice.ribes = r.at("score").get<double>();
        slice.hyp_len = r.at("hyp_len").get<std::int64_t>();
        slice.ref_len = r.at("ref_len").get<std::int64_t>();
    }
    return slice;
}

}  // namespace

EvalReport eval_report_from_json(const json& j) {
    EvalReport report;
    report.n_lines = j.at("n_lines").get<std::size_t>();
    report.metrics = j.at("metrics").get<std::vector<std::string>>();
    if (j.contains("baseline")) report.baseline = slice_from_json(j.at("baseline"));
    for (const json& p : j.at("phenomena")) {
        PhenomenonReport phenomenon;
        phenomenon.phenomenon = p.at("phenomenon").get<std::string>();
        if (p.contains("spearman") && !p.at("spearman").is_null())
            phenomenon.spearman = p.at("spearman").get<double>();
        for (const json& s : p.at("slices")) phenomenon.slices.push_back(slice_from_json(s));
        report.phenomena.push_back(std::move(phenomenon));
    }
    return report;
}

void write_sizes_tsv(std::ostream& out, const std::vector<SizeRow>& rows) {
    out << "phenomenon\tmin_distance\tn_sentences\n";
    for (const SizeRow& row : rows) {
        out << row.phenomenon << '\t';
        if (row.min_distance) out << *row.min_distance;
        out << '\t' << row.n_sentences << '\n';
    }
}

void write_sizes_table_tsv(std::ostream& out, const std::vector<SizeRow>& rows) {
    std::set<int> thresholds;
    std::vector<std::string> order;
    for (const SizeRow& row : rows) {
        if (row.min_distance) thresholds.insert(*row.min_distance);
        if (std::find(order.begin(), order.end(), row.phenomenon) == order.end())
            order.push_back(row.phenomenon);
    }
    if (thresholds.empty()) thresholds.insert(0);

    out << "phenomenon";
    for (int threshold : thresholds) out << '\t' << threshold_label(threshold);
    out << '\n';
    for (const std::string& phenomenon : order) {
        out << phenomenon;
        for (int threshold : thresholds) {
            out << '\t';
            for (const SizeRow& row : rows) {
                if (row.phenomenon != phenomenon) continue;
                // baseline rows carry no threshold; show the count everywhere
                if (!row.min_distance || *row.min_distance == threshold) {
                    out << row.n_sentences;
                    break;
                }
            }
        }
        out << '\n';
    }
}

ordered_json make_manifest(std::string_view subcommand, const ordered_json& config,
                           const std::vector<ManifestInput>& inputs) {
    ordered_json manifest;
    manifest["tool"] = kToolName;
    manifest["version"] = kVersion;
    manifest["subcommand"] = std::string(subcommand);
    manifest["config"] = config;
    ordered_json digests = ordered_json::array();
    for (const ManifestInput& input : inputs) {
        ordered_json entry;
        entry["role"] = input.role;
        entry["path"] = input.path.string();
        entry["digest"] = "fnv1a64:" + fnv1a64_hex(read_file(input.path));
        digests.push_back(std::move(entry));
    }
    manifest["inputs"] = std::move(digests);
    return manifest;
}

void write_manifest(const std::filesystem::path& out_dir, const ordered_json& manifest) {
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace lddeval
