#include "lddeval/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "lddeval/errors.hpp"
#include "lddeval/util.hpp"

namespace lddeval {

namespace {

bool parse_index(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
}

}  // namespace

AlignmentSet parse_pharaoh_line(std::string_view line) {
    AlignmentSet alignment;
    for (const std::string& token : split_ws(line)) {
        std::size_t dash = token.find('-');
        AlignedPair pair;
        if (dash == std::string::npos || !parse_index(token.substr(0, dash), pair.src) ||
            !parse_index(token.substr(dash + 1), pair.tgt))
            throw Error("invalid alignment token \"" + token + "\"");
        alignment.pairs.push_back(pair);
    }
    std::sort(alignment.pairs.begin(), alignment.pairs.end());
    alignment.pairs.erase(std::unique(alignment.pairs.begin(), alignment.pairs.end()),
                          alignment.pairs.end());
    return alignment;
}

std::optional<int> max_displacement(const AlignmentSet& alignment) {
    if (alignment.empty()) return std::nullopt;
    int best = 0;
    for (const AlignedPair& pair : alignment.pairs)
        best = std::max(best, std::abs(pair.src - pair.tgt));
    return best;
}

}  // namespace lddeval
