#include "lddeval/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "lddeval/errors.hpp"
#include "lddeval/util.hpp"

namespace lddeval {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map.resize(static_cast<std::size_t>(n));
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
}

Permutation Permutation::from_map(std::vector<int> map) {
    std::vector<bool> seen(map.size(), false);
    for (int value : map) {
        if (value < 0 || static_cast<std::size_t>(value) >= map.size() ||
            seen[static_cast<std::size_t>(value)])
            throw Error("not a bijection on [0, " + std::to_string(map.size()) + ")");
        seen[static_cast<std::size_t>(value)] = true;
    }
    Permutation p;
    p.map = std::move(map);
    return p;
}

Permutation builtin_sigma18() {
    return Permutation::from_map({11, 5, 9, 15, 8, 14, 10, 1, 3, 16, 12, 2, 0, 6, 17, 4, 13, 7});
}

Permutation reverse_sigma(int n) {
    if (n < 1) throw Error("permutation size must be positive");
    Permutation p;
    p.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.map[static_cast<std::size_t>(i)] = n - 1 - i;
    return p;
}

Permutation random_sigma(int n, std::uint64_t seed) {
    if (n < 1) throw Error("permutation size must be positive");
    Permutation p = Permutation::identity(n);
    Rng rng(seed);
    rng.shuffle(p.map);
    return p;
}

Permutation invert(const Permutation& p) {
    Permutation q;
    q.map.resize(p.map.size());
    for (std::size_t i = 0; i < p.map.size(); ++i)
        q.map[static_cast<std::size_t>(p.map[i])] = static_cast<int>(i);
    return q;
}

std::vector<std::string> apply_permutation(const std::vector<std::string>& tokens,
                                           const Permutation& p) {
    if (tokens.size() != p.map.size())
        throw Error("cannot permute " + std::to_string(tokens.size()) + " tokens with a length-" +
                    std::to_string(p.map.size()) + " permutation");
    std::vector<std::string> out(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i)
        out[i] = tokens[static_cast<std::size_t>(p.map[i])];
    return out;
}

LengthFilterResult filter_by_length(const std::vector<std::size_t>& src_lengths,
                                    std::size_t target_length) {
    LengthFilterResult result;
    for (std::size_t i = 0; i < src_lengths.size(); ++i) {
        ++result.histogram[src_lengths[i]];
        if (src_lengths[i] == target_length) result.kept.push_back(i);
    }
    return result;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> holdout_split(
    std::size_t n, std::size_t n_holdout, std::uint64_t seed) {
    if (n_holdout > n)
        throw Error("holdout of " + std::to_string(n_holdout) + " exceeds corpus size " +
                    std::to_string(n));
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), 0);
    Rng rng(seed);
    for (std::size_t i = 0; i < n_holdout; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.bounded(n - i));
        std::swap(indices[i], indices[j]);
    }
    std::vector<std::size_t> held(indices.begin(),
                                  indices.begin() + static_cast<std::ptrdiff_t>(n_holdout));
    std::vector<std::size_t> kept(indices.begin() + static_cast<std::ptrdiff_t>(n_holdout),
                                  indices.end());
    std::sort(held.begin(), held.end());
    std::sort(kept.begin(), kept.end());
    return {kept, held};
}

}  // namespace lddeval
