#pragma once

#include <string>
#include <vector>

#include "lddeval/bleu.hpp"  // TokenizedCorpus

namespace lddeval {

inline constexpr double kRibesAlpha = 0.25;
inline constexpr double kRibesBeta = 0.10;

struct RibesReport {
    std::vector<int> ranks;  // aligned ref positions, one per aligned hyp word, hyp order
    double nkt = 0.0;                // ascending pairs / C(k, 2)
    double unigram_precision = 0.0;  // aligned words / |hyp|
    double brevity_penalty = 0.0;
    double alpha = kRibesAlpha;
    double beta = kRibesBeta;
    double score = 0.0;  // nkt * precision^alpha * bp^beta, in [0, 1]
    bool degenerate = false;  // empty input or fewer than 2 aligned words
};

/// Align hypothesis words to reference positions: a word aligns when a
/// context n-gram containing it occurs exactly once in the hypothesis and
/// exactly once in the reference. Starts at the unigram; on ambiguity the
/// context grows one word at a time, right then left, up to the sentence
/// bound. Words with no unique context are skipped, and a reference position
/// is used at most once (later claims are skipped).
std::vector<int> ribes_align(const std::vector<std::string>& hyp,
                             const std::vector<std::string>& ref);

RibesReport ribes_sentence(const std::vector<std::string>& hyp,
                           const std::vector<std::string>& ref,
                           double alpha = kRibesAlpha, double beta = kRibesBeta);

/// Arithmetic mean of sentence scores. Length mismatch or empty corpus throws.
double ribes_corpus(const TokenizedCorpus& hyps, const TokenizedCorpus& refs,
                    double alpha = kRibesAlpha, double beta = kRibesBeta);

}  // namespace lddeval
