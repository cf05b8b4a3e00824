#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lddeval {

inline constexpr int kBleuOrder = 4;

/// Corpus BLEU decomposition, multi-bleu semantics, 0-100 scale.
struct BleuReport {
    std::array<std::int64_t, kBleuOrder> matches{};  // clipped n-gram matches
    std::array<std::int64_t, kBleuOrder> totals{};   // hypothesis n-gram counts
    std::array<double, kBleuOrder> precisions{};
    double brevity_penalty = 0.0;
    std::int64_t hyp_len = 0;
    std::int64_t ref_len = 0;
    double score = 0.0;
    bool empty_hypothesis = false;  // all-empty hypothesis corpus (bp fixed at 0)
};

using TokenizedCorpus = std::vector<std::vector<std::string>>;

/// Corpus-level clipped n-gram counting (sum matches and totals over the
/// corpus, then divide), bp = min(1, e^(1 - ref_len/hyp_len)), zero matches
/// or totals at any order force score 0 with precisions still reported.
/// Case-sensitive, single reference. Empty corpus or length mismatch throws.
BleuReport bleu_corpus(const TokenizedCorpus& hyps, const TokenizedCorpus& refs);

}  // namespace lddeval
