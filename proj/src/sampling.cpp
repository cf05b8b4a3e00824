#include "lddeval/sampling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "lddeval/correlation.hpp"
#include "lddeval/errors.hpp"
#include "lddeval/util.hpp"

namespace lddeval {

namespace {

long checked_tolerance(int tolerance) {
    if (tolerance < 0) throw Error("length tolerance must be non-negative");
    return tolerance;
}

}  // namespace

LengthMatchedResult length_matched_corpora(const std::vector<std::size_t>& challenge_lengths,
                                           const std::vector<PoolEntry>& pool, int n_corpora,
                                           int tolerance, std::uint64_t seed) {
    const long tol = checked_tolerance(tolerance);
    if (n_corpora < 0) throw Error("n_corpora must be non-negative");

    // Candidate pool indices per challenge length, precomputed once.
    std::map<std::size_t, std::vector<int>> buckets;
    for (std::size_t i = 0; i < challenge_lengths.size(); ++i) {
        const std::size_t length = challenge_lengths[i];
        if (buckets.count(length)) continue;
        std::vector<int> candidates;
        for (std::size_t p = 0; p < pool.size(); ++p) {
            const long diff = static_cast<long>(pool[p].length) - static_cast<long>(length);
            if (std::abs(diff) <= tol) candidates.push_back(static_cast<int>(p));
        }
        if (candidates.empty())
            throw Error("no pool sentence within tolerance " + std::to_string(tolerance) +
                        " of length " + std::to_string(length));
        buckets.emplace(length, std::move(candidates));
    }

    LengthMatchedResult result;
    result.corpora.reserve(static_cast<std::size_t>(n_corpora));
    for (int corpus_index = 0; corpus_index < n_corpora; ++corpus_index) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(corpus_index));
        std::unordered_set<int> used;
        std::vector<int> corpus;
        corpus.reserve(challenge_lengths.size());
        for (std::size_t i = 0; i < challenge_lengths.size(); ++i) {
            const std::vector<int>& candidates = buckets.at(challenge_lengths[i]);
            std::size_t available = 0;
            for (int c : candidates)
                if (!used.count(c)) ++available;
            int chosen;
            if (available > 0) {
                // k-th unused candidate, uniform over the unused ones
                std::uint64_t k = rng.bounded(available);
                chosen = -1;
                for (int c : candidates) {
                    if (used.count(c)) continue;
                    if (k == 0) {
                        chosen = c;
                        break;
                    }
                    --k;
                }
            } else {
                result.replacement_fallback = true;
                chosen = candidates[rng.bounded(candidates.size())];
            }
            used.insert(chosen);
            corpus.push_back(pool[static_cast<std::size_t>(chosen)].record_id);
        }
        result.corpora.push_back(std::move(corpus));
    }
    return result;
}

LengthMatchedResult length_matched_corpora(const ChallengeSet& challenge,
                                           const std::vector<BitextRecord>& pool, int n_corpora,
                                           int tolerance, std::uint64_t seed) {
    std::unordered_map<int, std::size_t> length_by_id;
    std::vector<PoolEntry> entries;
    entries.reserve(pool.size());
    for (const BitextRecord& record : pool) {
        entries.push_back({record.record_id, record.src_tokens.size()});
        length_by_id.emplace(record.record_id, record.src_tokens.size());
    }
    std::vector<std::size_t> challenge_lengths;
    challenge_lengths.reserve(challenge.record_ids.size());
    for (int id : challenge.record_ids) {
        auto it = length_by_id.find(id);
        if (it == length_by_id.end())
            throw Error("challenge record " + std::to_string(id) + " not present in the pool");
        challenge_lengths.push_back(it->second);
    }
    return length_matched_corpora(challenge_lengths, entries, n_corpora, tolerance, seed);
}

std::vector<std::vector<int>> random_corpora(std::size_t pool_size, std::size_t size, int n,
                                             std::uint64_t seed) {
    if (size > pool_size)
        throw Error("sample size " + std::to_string(size) + " exceeds pool size " +
                    std::to_string(pool_size));
    if (n < 0) throw Error("n must be non-negative");

    std::vector<std::vector<int>> corpora;
    corpora.reserve(static_cast<std::size_t>(n));
    for (int corpus_index = 0; corpus_index < n; ++corpus_index) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(corpus_index));
        // Partial Fisher-Yates: the first `size` slots end up a uniform
        // without-replacement sample.
        std::vector<int> indices(pool_size);
        std::iota(indices.begin(), indices.end(), 0);
        for (std::size_t i = 0; i < size; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.bounded(pool_size - i));
            std::swap(indices[i], indices[j]);
        }
        indices.resize(size);
        std::sort(indices.begin(), indices.end());
        corpora.push_back(std::move(indices));
    }
    return corpora;
}

double length_score_correlation(const std::vector<std::vector<int>>& corpora,
                                const std::vector<std::size_t>& lengths_by_record,
                                const std::vector<double>& scores) {
    if (corpora.size() != scores.size())
        throw Error("length_score_correlation: " + std::to_string(corpora.size()) +
                    " corpora vs " + std::to_string(scores.size()) + " scores");
    if (corpora.size() < 2) throw Error("length_score_correlation: need at least 2 corpora");

    std::vector<double> mean_lengths;
    mean_lengths.reserve(corpora.size());
    for (const std::vector<int>& corpus : corpora) {
        if (corpus.empty()) throw Error("length_score_correlation: empty corpus");
        double sum = 0.0;
        for (int id : corpus) {
            if (id < 0 || static_cast<std::size_t>(id) >= lengths_by_record.size())
                throw Error("length_score_correlation: record " + std::to_string(id) +
                            " outside the pool");
            sum += static_cast<double>(lengths_by_record[static_cast<std::size_t>(id)]);
        }
        mean_lengths.push_back(sum / static_cast<double>(corpus.size()));
    }
    return pearson(mean_lengths, scores);
}

SampleReport challenge_rank(double challenge_score, const std::vector<double>& sample_scores) {
    if (sample_scores.empty()) throw Error("challenge_rank: no sample scores");
    SampleReport report;
    report.n_corpora = static_cast<int>(sample_scores.size());
    report.sample_scores = sample_scores;
    report.challenge_score = challenge_score;
    for (double s : sample_scores)
        if (s <= challenge_score) ++report.rank;
    report.empirical_p = static_cast<double>(report.rank) / static_cast<double>(report.n_corpora);
    return report;
}

}  // namespace lddeval
