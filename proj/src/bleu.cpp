#include "lddeval/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "lddeval/errors.hpp"

namespace lddeval {

namespace {

/// n-gram occurrence counts keyed by the tokens joined on an unprintable
/// separator (tokens are whitespace-split, so the key is unambiguous).
std::unordered_map<std::string, std::int64_t> ngram_counts(const std::vector<std::string>& tokens,
                                                           int order) {
    std::unordered_map<std::string, std::int64_t> counts;
    const int len = static_cast<int>(tokens.size());
    for (int start = 0; start + order <= len; ++start) {
        std::string key;
        for (int k = 0; k < order; ++k) {
            if (k > 0) key += '\x1f';
            key += tokens[static_cast<std::size_t>(start + k)];
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace

BleuReport bleu_corpus(const TokenizedCorpus& hyps, const TokenizedCorpus& refs) {
    if (hyps.empty()) throw Error("bleu_corpus: empty corpus");
    if (hyps.size() != refs.size())
        throw Error("bleu_corpus: length mismatch " + std::to_string(hyps.size()) + " vs " +
                    std::to_string(refs.size()));

    BleuReport report;
    for (std::size_t i = 0; i < hyps.size(); ++i) {
        const auto& hyp = hyps[i];
        const auto& ref = refs[i];
        report.hyp_len += static_cast<std::int64_t>(hyp.size());
        report.ref_len += static_cast<std::int64_t>(ref.size());
        for (int order = 1; order <= kBleuOrder; ++order) {
            const std::int64_t total =
                std::max<std::int64_t>(0, static_cast<std::int64_t>(hyp.size()) - order + 1);
            if (total == 0) continue;
            report.totals[static_cast<std::size_t>(order - 1)] += total;
            auto ref_counts = ngram_counts(ref, order);
            for (const auto& [key, count] : ngram_counts(hyp, order)) {
                auto it = ref_counts.find(key);
                if (it != ref_counts.end())
                    report.matches[static_cast<std::size_t>(order - 1)] +=
                        std::min(count, it->second);
            }
        }
    }

    for (int order = 0; order < kBleuOrder; ++order) {
        const auto o = static_cast<std::size_t>(order);
        report.precisions[o] =
            report.totals[o] > 0
                ? static_cast<double>(report.matches[o]) / static_cast<double>(report.totals[o])
                : 0.0;
    }

    if (report.hyp_len == 0) {
        report.empty_hypothesis = true;
        report.brevity_penalty = 0.0;
        report.score = 0.0;
        return report;
    }

    report.brevity_penalty = std::min(
        1.0, std::exp(1.0 - static_cast<double>(report.ref_len) /
                                static_cast<double>(report.hyp_len)));

    bool zero_order = false;
    double log_precision_sum = 0.0;
    for (int order = 0; order < kBleuOrder; ++order) {
        const auto o = static_cast<std::size_t>(order);
        if (report.matches[o] == 0 || report.totals[o] == 0) {
            zero_order = true;
            break;
        }
        log_precision_sum += std::log(report.precisions[o]);
    }
    report.score = zero_order ? 0.0
                              : report.brevity_penalty *
                                    std::exp(log_precision_sum / kBleuOrder) * 100.0;
    return report;
}

}  // namespace lddeval
