#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

namespace lddeval {

/// One word-alignment link; indices are 0-based (Pharaoh convention).
struct AlignedPair {
    int src = 0;
    int tgt = 0;

    friend auto operator<=>(const AlignedPair&, const AlignedPair&) = default;
};

/// Set of alignment links for one sentence pair; sorted, duplicates collapsed.
struct AlignmentSet {
    std::vector<AlignedPair> pairs;

    bool empty() const { return pairs.empty(); }

    friend bool operator==(const AlignmentSet&, const AlignmentSet&) = default;
};

/// Parse one Pharaoh line ("0-0 1-2 2-1"). Empty line gives an empty set.
/// A token not of the form "i-j" raises Error naming the token.
AlignmentSet parse_pharaoh_line(std::string_view line);

/// Largest |src - tgt| over the links; absent for an empty set.
std::optional<int> max_displacement(const AlignmentSet& alignment);

}  // namespace lddeval
