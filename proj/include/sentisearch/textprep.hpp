/*
 * Copyright 2026 The sentisearch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sentisearch/errors.hpp"
#include "sentisearch/porter.hpp"

namespace sentisearch {

/// One preprocessed token. `surface` is the lowercased pre-stem form,
/// `position` its index in the post-stopword sequence.
struct Token {
    std::string surface;
    std::string stem;
    std::size_t position{};

    bool operator==(const Token&) const = default;
};

using TokenStream = std::vector<Token>;

/// Lowercase stopword set. Every instance contains at least the six
/// determiners (a, that, the, an, and, those) -- they are seeded on
/// construction and cannot be removed.
class StopwordList {
public:
    StopwordList() { seed_determiners(); }

    explicit StopwordList(const std::vector<std::string>& words) {
        for (const auto& w : words) words_.insert(w);
        seed_determiners();
    }

    /// A standard English list (~180 words) extended with the corpus
    /// stopwords "said" and "mr".
    static StopwordList defaults();

    /// Loads one lowercase word per line; '#' starts a comment, blank lines
    /// are skipped.
    static StopwordList load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open stopword file: " + path);
        StopwordList list;
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            const auto end = line.find_last_not_of(" \t\r");
            list.words_.insert(line.substr(begin, end - begin + 1));
        }
        return list;
    }

    bool contains(const std::string& word) const { return words_.count(word) > 0; }
    std::size_t size() const { return words_.size(); }
    const std::unordered_set<std::string>& words() const { return words_; }

private:
    std::unordered_set<std::string> words_;

    void seed_determiners() {
        for (const char* w : {"a", "that", "the", "an", "and", "those"}) words_.insert(w);
    }
};

/// Splits on whitespace and punctuation, lowercasing as it goes. Every
/// non-alphanumeric byte separates tokens, so "Covid-19:" yields
/// ["covid", "19"].
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

/// Order-preserving stopword filter. Input tokens must already be lowercase.
inline std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                                 const StopwordList& list) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens)
        if (!list.contains(t)) out.push_back(t);
    return out;
}

/// Porter stem of a lowercase surface form.
inline std::string stem(std::string_view surface) { return porter_stem(surface); }

enum class StemMode {
    porter, // index pipeline: full normalization
    none    // lexicon pipeline: sentiment lexicons key on surface words
};

/// Full pipeline: tokenize -> remove stopwords -> stem. Positions are
/// assigned over the post-stopword sequence.
inline TokenStream preprocess(std::string_view text, const StopwordList& list,
                              StemMode mode = StemMode::porter) {
    TokenStream stream;
    std::size_t pos = 0;
    for (auto& surface : remove_stopwords(tokenize(text), list)) {
        Token tok;
        tok.stem = mode == StemMode::porter ? porter_stem(surface) : surface;
        tok.surface = std::move(surface);
        tok.position = pos++;
        stream.push_back(std::move(tok));
    }
    return stream;
}

inline std::vector<std::string> stems_of(const TokenStream& stream) {
    std::vector<std::string> out;
    out.reserve(stream.size());
    for (const auto& t : stream) out.push_back(t.stem);
    return out;
}

inline std::vector<std::string> surfaces_of(const TokenStream& stream) {
    std::vector<std::string> out;
    out.reserve(stream.size());
    for (const auto& t : stream) out.push_back(t.surface);
    return out;
}

/// Period/question/exclamation sentence splitter. Consumers that need
/// sentence units (dual-scale scoring) use this; the word pipeline does not.
inline std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        const auto begin = cur.find_first_not_of(" \t\r\n");
        if (begin != std::string::npos) {
            const auto end = cur.find_last_not_of(" \t\r\n");
            out.push_back(cur.substr(begin, end - begin + 1));
        }
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        cur.push_back(text[i]);
        if (text[i] == '.' || text[i] == '?' || text[i] == '!') {
            const bool run_continues = i + 1 < text.size() &&
                (text[i + 1] == '.' || text[i + 1] == '?' || text[i + 1] == '!');
            if (!run_continues) flush();
        }
    }
    flush();
    return out;
}

inline StopwordList StopwordList::defaults() {
    static const std::vector<std::string> kWords = {
        "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
        "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
        "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
        "hers", "herself", "it", "it's", "its", "itself", "they", "them",
        "their", "theirs", "themselves", "what", "which", "who", "whom",
        "this", "that", "that'll", "these", "those", "am", "is", "are",
        "was", "were", "be", "been", "being", "have", "has", "had", "having",
        "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if",
        "or", "because", "as", "until", "while", "of", "at", "by", "for",
        "with", "about", "against", "between", "into", "through", "during",
        "before", "after", "above", "below", "to", "from", "up", "down",
        "in", "out", "on", "off", "over", "under", "again", "further",
        "then", "once", "here", "there", "when", "where", "why", "how",
        "all", "any", "both", "each", "few", "more", "most", "other",
        "some", "such", "no", "nor", "not", "only", "own", "same", "so",
        "than", "too", "very", "s", "t", "can", "will", "just", "don",
        "don't", "should", "should've", "now", "d", "ll", "m", "o", "re",
        "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't", "didn",
        "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't",
        "haven", "haven't", "isn", "isn't", "ma", "mightn", "mightn't",
        "mustn", "mustn't", "needn", "needn't", "shan", "shan't", "shouldn",
        "shouldn't", "wasn", "wasn't", "weren", "weren't", "won", "won't",
        "wouldn", "wouldn't",
        // corpus-specific reporting verbs and honorifics
        "said", "mr",
    };
    return StopwordList(kWords);
}

}  // namespace sentisearch
