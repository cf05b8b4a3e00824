#include "lddeval/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "lddeval/errors.hpp"

namespace lddeval {

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // tied block [i, j] shares the mean of ranks i+1 .. j+1
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw Error("pearson: length mismatch " + std::to_string(xs.size()) + " vs " +
                    std::to_string(ys.size()));
    const std::size_t n = xs.size();
    if (n < 2) throw Error("pearson: need at least 2 points, got " + std::to_string(n));

    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double cov = 0.0;
    double var_x = 0.0;
    double var_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if (var_x == 0.0 || var_y == 0.0) throw Error("pearson: constant series, correlation undefined");
    return cov / std::sqrt(var_x * var_y);
}

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw Error("spearman: length mismatch " + std::to_string(xs.size()) + " vs " +
                    std::to_string(ys.size()));
    if (xs.size() < 2)
        throw Error("spearman: need at least 2 points, got " + std::to_string(xs.size()));
    try {
        return pearson(average_ranks(xs), average_ranks(ys));
    } catch (const Error&) {
        throw Error("spearman: constant series, rank correlation undefined");
    }
}

}  // namespace lddeval
