#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lddeval {

/// A bijection on positions [0, n): output position i holds input token
/// map[i]. The opposite reading is available via invert().
struct Permutation {
    std::vector<int> map;

    int size() const { return static_cast<int>(map.size()); }

    static Permutation identity(int n);
    /// Validates that `map` is a bijection on [0, |map|); throws otherwise.
    static Permutation from_map(std::vector<int> map);
};

/// The built-in fixed permutation on 18 positions used for the shuffled-source
/// training condition.
Permutation builtin_sigma18();

Permutation reverse_sigma(int n);
Permutation random_sigma(int n, std::uint64_t seed);
Permutation invert(const Permutation& p);

/// out[i] = tokens[p.map[i]]. Length mismatch names both lengths.
std::vector<std::string> apply_permutation(const std::vector<std::string>& tokens,
                                           const Permutation& p);

struct LengthFilterResult {
    std::vector<std::size_t> kept;                 // line indices, original order
    std::map<std::size_t, std::size_t> histogram;  // length -> line count
};

/// Keep lines whose source token count equals target_length; the histogram
/// covers the whole corpus so the most common length can be read off.
LengthFilterResult filter_by_length(const std::vector<std::size_t>& src_lengths,
                                    std::size_t target_length);

/// Seed-deterministic holdout selection: returns (kept, held_out) line index
/// lists, both ascending. n_holdout beyond n is an error.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> holdout_split(
    std::size_t n, std::size_t n_holdout, std::uint64_t seed);

}  // namespace lddeval
