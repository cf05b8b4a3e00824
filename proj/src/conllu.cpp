#include "lddeval/conllu.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "lddeval/errors.hpp"
#include "lddeval/util.hpp"

namespace lddeval {

namespace {

constexpr int kColumnCount = 10;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

enum class IdKind { Word, Range, EmptyNode, Bad };

IdKind classify_id(std::string_view id) {
    if (all_digits(id)) return IdKind::Word;
    std::size_t dash = id.find('-');
    if (dash != std::string_view::npos && all_digits(id.substr(0, dash)) &&
        all_digits(id.substr(dash + 1)))
        return IdKind::Range;
    std::size_t dot = id.find('.');
    if (dot != std::string_view::npos && all_digits(id.substr(0, dot)) &&
        all_digits(id.substr(dot + 1)))
        return IdKind::EmptyNode;
    return IdKind::Bad;
}

int parse_int(std::string_view s, std::size_t line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(line_no, std::string("non-integer ") + what + " \"" + std::string(s) + "\"");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Value of a "# key = value" comment, if this comment carries that key.
std::optional<std::string> comment_value(std::string_view comment, std::string_view key) {
    comment.remove_prefix(1);  // '#'
    comment = trim(comment);
    if (comment.substr(0, key.size()) != key) return std::nullopt;
    comment.remove_prefix(key.size());
    comment = trim(comment);
    if (comment.empty() || comment.front() != '=') return std::nullopt;
    comment.remove_prefix(1);
    return std::string(trim(comment));
}

std::vector<std::pair<std::string, std::string>> parse_feats(std::string_view column,
                                                             std::size_t line_no) {
    std::vector<std::pair<std::string, std::string>> feats;
    if (column == "_" || column.empty()) return feats;
    for (const std::string& part : split_char(column, '|')) {
        std::size_t eq = part.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(line_no, "malformed feature \"" + part + "\"");
        std::string key = part.substr(0, eq);
        for (const auto& [existing, _] : feats)
            if (existing == key) throw ParseError(line_no, "duplicate feature key \"" + key + "\"");
        feats.emplace_back(std::move(key), part.substr(eq + 1));
    }
    return feats;
}

struct BlockLine {
    std::size_t line_no = 0;
    std::string text;
};

/// Parse one blank-line-delimited block. Throws ParseError on malformed
/// content; the caller decides whether that skips or aborts.
ParsedSentence parse_block(const std::vector<BlockLine>& block, std::size_t ordinal,
                           std::vector<ConlluWarning>& warnings) {
    ParsedSentence sentence;
    sentence.sent_id = std::to_string(ordinal);
    std::vector<std::size_t> token_lines;
    for (const BlockLine& line : block) {
        if (line.text.front() == '#') {
            sentence.comments.push_back(line.text);
            if (auto id = comment_value(line.text, "sent_id")) sentence.sent_id = *id;
            if (auto text = comment_value(line.text, "text")) sentence.text = *text;
            continue;
        }
        std::vector<std::string> columns = split_char(line.text, '\t');
        if (columns.size() != kColumnCount)
            throw ParseError(line.line_no, "expected " + std::to_string(kColumnCount) +
                                               " tab-separated columns, got " +
                                               std::to_string(columns.size()));
        switch (classify_id(columns[0])) {
            case IdKind::Word:
                break;
            case IdKind::Range:
            case IdKind::EmptyNode:
                sentence.non_words.push_back({sentence.tokens.size(), line.text});
                continue;
            case IdKind::Bad:
                throw ParseError(line.line_no, "malformed token id \"" + columns[0] + "\"");
        }
        Token token;
        token.id = parse_int(columns[0], line.line_no, "token id");
        token.form = columns[1];
        token.lemma = columns[2];
        token.upos = columns[3];
        token.xpos = columns[4];
        token.feats = parse_feats(columns[5], line.line_no);
        token.head = parse_int(columns[6], line.line_no, "head");
        token.deprel = columns[7];
        token.deps = columns[8];
        token.misc = columns[9];

        int expected_id = static_cast<int>(sentence.tokens.size()) + 1;
        if (token.id != expected_id)
            throw ParseError(line.line_no, "token id " + std::to_string(token.id) +
                                               " out of sequence (expected " +
                                               std::to_string(expected_id) + ")");
        sentence.tokens.push_back(std::move(token));
        token_lines.push_back(line.line_no);
    }

    const int n = static_cast<int>(sentence.tokens.size());
    int roots = 0;
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        const Token& token = sentence.tokens[i];
        if (token.head < 0 || token.head > n)
            throw ParseError(token_lines[i], "head " + std::to_string(token.head) +
                                                 " outside [0, " + std::to_string(n) + "]");
        if (token.head == token.id)
            throw ParseError(token_lines[i],
                             "token " + std::to_string(token.id) + " is its own head");
        if (token.head == 0) ++roots;
    }
    if (n > 0 && roots != 1)
        warnings.push_back({block.front().line_no, "sentence " + sentence.sent_id + " has " +
                                                       std::to_string(roots) + " roots"});
    return sentence;
}

}  // namespace

std::optional<std::string> feature_lookup(const Token& token, std::string_view key) {
    auto lower_eq = [](std::string_view a, std::string_view b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(a[i])) !=
                std::tolower(static_cast<unsigned char>(b[i])))
                return false;
        return true;
    };
    for (const auto& [k, v] : token.feats)
        if (lower_eq(k, key)) return v;
    return std::nullopt;
}

const Token* ParsedSentence::token_by_id(int id) const {
    if (id < 1 || id > static_cast<int>(tokens.size())) return nullptr;
    return &tokens[static_cast<std::size_t>(id) - 1];
}

ConlluCorpus parse_conllu(std::istream& in, const ConlluOptions& options) {
    ConlluCorpus corpus;
    std::vector<BlockLine> block;
    std::string line;
    std::size_t line_no = 0;

    auto flush = [&] {
        if (block.empty()) return;
        std::size_t ordinal = corpus.sentences.size() + 1;
        try {
            corpus.sentences.push_back(parse_block(block, ordinal, corpus.warnings));
        } catch (const ParseError& e) {
            if (options.strict) throw;
            corpus.warnings.push_back({e.line_no(), std::string("skipped sentence: ") + e.what()});
        }
        block.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
        } else {
            block.push_back({line_no, line});
        }
    }
    flush();
    return corpus;
}

ConlluCorpus parse_conllu(std::string_view text, const ConlluOptions& options) {
    std::istringstream in{std::string(text)};
    return parse_conllu(in, options);
}

namespace {

const std::string& column_or_underscore(const std::string& value) {
    static const std::string underscore = "_";
    return value.empty() ? underscore : value;
}

std::string feats_column(const Token& token) {
    if (token.feats.empty()) return "_";
    std::string out;
    for (const auto& [k, v] : token.feats) {
        if (!out.empty()) out += '|';
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

}  // namespace

void write_conllu(std::ostream& out, const ParsedSentence& sentence) {
    for (const std::string& comment : sentence.comments) out << comment << '\n';
    std::size_t next_non_word = 0;
    for (std::size_t i = 0; i <= sentence.tokens.size(); ++i) {
        while (next_non_word < sentence.non_words.size() &&
               sentence.non_words[next_non_word].before_token == i) {
            out << sentence.non_words[next_non_word].raw << '\n';
            ++next_non_word;
        }
        if (i == sentence.tokens.size()) break;
        const Token& t = sentence.tokens[i];
        out << t.id << '\t' << column_or_underscore(t.form) << '\t'
            << column_or_underscore(t.lemma) << '\t' << column_or_underscore(t.upos) << '\t'
            << column_or_underscore(t.xpos) << '\t' << feats_column(t) << '\t' << t.head << '\t'
            << column_or_underscore(t.deprel) << '\t' << column_or_underscore(t.deps) << '\t'
            << column_or_underscore(t.misc) << '\n';
    }
    out << '\n';
}

std::string to_conllu(const ParsedSentence& sentence) {
    std::ostringstream out;
    write_conllu(out, sentence);
    return out.str();
}

}  // namespace lddeval
