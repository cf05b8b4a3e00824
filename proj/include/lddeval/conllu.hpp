#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lddeval {

/// One syntactic word of a dependency-parsed sentence (CoNLL-U word line).
/// Positional indexing (ids, heads, distances) is over syntactic words only;
/// multiword-token ranges and empty nodes never get ids here.
struct Token {
    int id = 0;             // 1-based word index, consecutive within a sentence
    std::string form;
    std::string lemma;
    std::string upos;
    std::string xpos;       // passthrough column
    std::vector<std::pair<std::string, std::string>> feats;  // ordered, unique keys
    int head = 0;           // 0 = root
    std::string deprel;
    std::string deps;       // passthrough column
    std::string misc;       // passthrough column

    friend bool operator==(const Token&, const Token&) = default;
};

/// Case-insensitive morphological feature lookup; returns the stored value.
std::optional<std::string> feature_lookup(const Token& token, std::string_view key);

/// A multiword-token range line ("4-5") or empty-node line ("5.1"), retained
/// verbatim for round-tripping but excluded from positional indexing.
struct NonWordLine {
    std::size_t before_token = 0;  // index into tokens before which the line sat
    std::string raw;

    friend bool operator==(const NonWordLine&, const NonWordLine&) = default;
};

struct ParsedSentence {
    std::string sent_id;                // "# sent_id" comment or synthesized ordinal
    std::optional<std::string> text;
    std::vector<std::string> comments;  // all comment lines, verbatim, in order
    std::vector<Token> tokens;          // ordered by id
    std::vector<NonWordLine> non_words;

    std::size_t size() const { return tokens.size(); }
    const Token* token_by_id(int id) const;  // nullptr when out of range

    friend bool operator==(const ParsedSentence&, const ParsedSentence&) = default;
};

struct ConlluOptions {
    bool strict = false;  // fail-fast instead of skip-with-warning
};

struct ConlluWarning {
    std::size_t line_no = 0;
    std::string message;
};

struct ConlluCorpus {
    std::vector<ParsedSentence> sentences;
    std::vector<ConlluWarning> warnings;
};

/// Parse UD v2 CoNLL-U. One ParsedSentence per blank-line-separated block, in
/// input order. Malformed sentences are skipped with a warning by default;
/// options.strict turns them into ParseError. Structural oddities that UD
/// tolerates (zero or multiple roots) are warnings in either mode.
ConlluCorpus parse_conllu(std::istream& in, const ConlluOptions& options = {});
ConlluCorpus parse_conllu(std::string_view text, const ConlluOptions& options = {});

/// Serialize back to CoNLL-U (LF line endings, trailing blank line).
void write_conllu(std::ostream& out, const ParsedSentence& sentence);
std::string to_conllu(const ParsedSentence& sentence);

}  // namespace lddeval
