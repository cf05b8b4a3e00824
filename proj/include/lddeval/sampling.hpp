#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lddeval/corpus.hpp"

namespace lddeval {

struct SampleReport {
    std::uint64_t seed = 0;
    std::string generator = "mt19937_64";
    int n_corpora = 0;
    std::vector<double> sample_scores;
    double challenge_score = 0.0;
    int rank = 0;          // samples scoring <= challenge_score (ties count)
    double empirical_p = 0.0;
};

/// A sampling-pool entry: a record id and its source-side token count.
struct PoolEntry {
    int record_id = 0;
    std::size_t length = 0;
};

struct LengthMatchedResult {
    std::vector<std::vector<int>> corpora;  // record ids, one corpus per entry,
                                            // positions matching the challenge order
    bool replacement_fallback = false;      // a bucket ran dry within one corpus
};

/// For each challenge sentence, draw a pool record whose length is within
/// tolerance, without replacement inside one corpus when possible (falling
/// back to with-replacement with the flag set). An empty bucket is fatal and
/// names the length. Corpus k uses substream seed XOR k, so output is
/// independent of scheduling and identical across runs.
LengthMatchedResult length_matched_corpora(const std::vector<std::size_t>& challenge_lengths,
                                           const std::vector<PoolEntry>& pool, int n_corpora,
                                           int tolerance, std::uint64_t seed);

/// Convenience overload: challenge lengths are looked up in the pool by
/// record id (every challenge record must be present in the pool).
LengthMatchedResult length_matched_corpora(const ChallengeSet& challenge,
                                           const std::vector<BitextRecord>& pool, int n_corpora,
                                           int tolerance, std::uint64_t seed);

/// n uniform without-replacement samples of `size` record indices out of
/// [0, pool_size); each sampled corpus is returned ascending. size beyond the
/// pool is an error.
std::vector<std::vector<int>> random_corpora(std::size_t pool_size, std::size_t size, int n,
                                             std::uint64_t seed);

/// Pearson correlation between per-corpus mean source length and score.
double length_score_correlation(const std::vector<std::vector<int>>& corpora,
                                const std::vector<std::size_t>& lengths_by_record,
                                const std::vector<double>& scores);

/// rank = #{s : s <= challenge_score}; ties count against the challenge set.
SampleReport challenge_rank(double challenge_score, const std::vector<double>& sample_scores);

}  // namespace lddeval
