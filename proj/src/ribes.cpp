#include "lddeval/ribes.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "lddeval/errors.hpp"

namespace lddeval {

namespace {

using Tokens = std::vector<std::string>;

std::string ngram_key(const Tokens& tokens, std::size_t start, std::size_t len) {
    std::string key;
    for (std::size_t k = 0; k < len; ++k) {
        if (k > 0) key += '\x1f';
        key += tokens[start + k];
    }
    return key;
}

/// start positions per n-gram, built lazily per order
struct NgramIndex {
    explicit NgramIndex(const Tokens& tokens) : tokens_(tokens) {}

    const std::vector<int>& positions_key(const std::string& key, std::size_t len) {
        auto& level = levels_[len];
        if (level.empty() && tokens_.size() + 1 > len) {
            for (std::size_t s = 0; s + len <= tokens_.size(); ++s)
                level[ngram_key(tokens_, s, len)].push_back(static_cast<int>(s));
        }
        static const std::vector<int> none;
        auto it = level.find(key);
        return it == level.end() ? none : it->second;
    }

private:
    const Tokens& tokens_;
    std::unordered_map<std::size_t, std::unordered_map<std::string, std::vector<int>>> levels_;
};

}  // namespace

std::vector<int> ribes_align(const Tokens& hyp, const Tokens& ref) {
    std::vector<int> ranks;
    if (hyp.empty() || ref.empty()) return ranks;

    NgramIndex hyp_index(hyp);
    NgramIndex ref_index(ref);
    std::unordered_set<int> used;

    for (std::size_t i = 0; i < hyp.size(); ++i) {
        const std::string& word = hyp[i];
        const auto& in_ref = ref_index.positions_key(word, 1);
        if (in_ref.empty()) continue;

        int candidate = -1;
        if (in_ref.size() == 1 && hyp_index.positions_key(word, 1).size() == 1) {
            candidate = in_ref.front();
        } else {
            // Ambiguous unigram: grow the context window one word at a time,
            // right then left, until some hyp n-gram containing this word
            // occurs exactly once on both sides.
            const std::size_t max_grow = std::max(i, hyp.size() - 1 - i);
            for (std::size_t n = 1; n <= max_grow && candidate < 0; ++n) {
                if (i + n < hyp.size()) {
                    const std::string key = ngram_key(hyp, i, n + 1);
                    const auto& r = ref_index.positions_key(key, n + 1);
                    if (r.size() == 1 && hyp_index.positions_key(key, n + 1).size() == 1)
                        candidate = r.front();  // word sits at the n-gram start
                }
                if (candidate < 0 && i >= n) {
                    const std::string key = ngram_key(hyp, i - n, n + 1);
                    const auto& r = ref_index.positions_key(key, n + 1);
                    if (r.size() == 1 && hyp_index.positions_key(key, n + 1).size() == 1)
                        candidate = r.front() + static_cast<int>(n);  // word sits at the end
                }
            }
        }
        if (candidate < 0 || used.count(candidate)) continue;
        used.insert(candidate);
        ranks.push_back(candidate);
    }
    return ranks;
}

RibesReport ribes_sentence(const Tokens& hyp, const Tokens& ref, double alpha, double beta) {
    RibesReport report;
    report.alpha = alpha;
    report.beta = beta;
    if (hyp.empty() || ref.empty()) {
        report.degenerate = true;
        return report;
    }

    report.ranks = ribes_align(hyp, ref);
    const std::size_t k = report.ranks.size();
    report.unigram_precision = static_cast<double>(k) / static_cast<double>(hyp.size());
    report.brevity_penalty = std::min(
        1.0, std::exp(1.0 - static_cast<double>(ref.size()) / static_cast<double>(hyp.size())));
    if (k < 2) {
        report.degenerate = true;
        return report;
    }

    std::size_t ascending = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (report.ranks[i] < report.ranks[j]) ++ascending;
    const std::size_t pairs = k * (k - 1) / 2;
    report.nkt = static_cast<double>(ascending) / static_cast<double>(pairs);
    report.score = report.nkt * std::pow(report.unigram_precision, alpha) *
                   std::pow(report.brevity_penalty, beta);
    return report;
}

double ribes_corpus(const TokenizedCorpus& hyps, const TokenizedCorpus& refs, double alpha,
                    double beta) {
    if (hyps.empty()) throw Error("ribes_corpus: empty corpus");
    if (hyps.size() != refs.size())
        throw Error("ribes_corpus: length mismatch " + std::to_string(hyps.size()) + " vs " +
                    std::to_string(refs.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < hyps.size(); ++i)
        sum += ribes_sentence(hyps[i], refs[i], alpha, beta).score;
    return sum / static_cast<double>(hyps.size());
}

}  // namespace lddeval
