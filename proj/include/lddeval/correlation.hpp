#pragma once

#include <vector>

namespace lddeval {

/// 1-based average (fractional) ranks; ties share the mean of their ranks.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Pearson correlation. Throws on n < 2 or a constant series.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

/// Spearman rank correlation: Pearson over average-ranked values.
/// Throws on n < 2 or a constant series (rank correlation is undefined).
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace lddeval
