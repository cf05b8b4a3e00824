#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lddeval/alignment.hpp"
#include "lddeval/bleu.hpp"
#include "lddeval/conllu.hpp"
#include "lddeval/util.hpp"

namespace testutil {

inline std::filesystem::path fixture_dir() {
#ifdef LDDEVAL_FIXTURE_DIR
    return LDDEVAL_FIXTURE_DIR;
#else
    return std::filesystem::path("tests") / "fixtures";
#endif
}

inline std::filesystem::path fixture(const std::string& name) { return fixture_dir() / name; }

/// Token shorthand for hand-built trees; feats given as "Key=Val|Key2=Val2".
inline lddeval::Token tok(int id, std::string form, int head, std::string deprel,
                          std::string upos = "X", const std::string& feats = "") {
    lddeval::Token token;
    token.id = id;
    token.form = std::move(form);
    token.lemma = "_";
    token.upos = std::move(upos);
    token.xpos = "_";
    token.head = head;
    token.deprel = std::move(deprel);
    token.deps = "_";
    token.misc = "_";
    if (!feats.empty()) {
        for (const std::string& part : lddeval::split_char(feats, '|')) {
            auto eq = part.find('=');
            token.feats.emplace_back(part.substr(0, eq), part.substr(eq + 1));
        }
    }
    return token;
}

inline lddeval::ParsedSentence sent(std::vector<lddeval::Token> tokens,
                                    std::string sent_id = "t1") {
    lddeval::ParsedSentence sentence;
    sentence.sent_id = std::move(sent_id);
    sentence.tokens = std::move(tokens);
    return sentence;
}

inline lddeval::TokenizedCorpus toks(const std::vector<std::string>& lines) {
    lddeval::TokenizedCorpus corpus;
    for (const std::string& line : lines) corpus.push_back(lddeval::split_ws(line));
    return corpus;
}

}  // namespace testutil
