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

#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "sentisearch/errors.hpp"
#include "sentisearch/sentiment/verdict.hpp"

namespace sentisearch {

/// Two disjoint word lists, one positive and one negative.
class WordListLexicon {
public:
    static WordListLexicon load(const std::string& positive_path,
                                const std::string& negative_path) {
        WordListLexicon lex;
        lex.positive_ = read_words(positive_path);
        lex.negative_ = read_words(negative_path);
        for (const auto& w : lex.positive_)
            if (lex.negative_.count(w) > 0)
                throw InputError("word lists overlap on \"" + w + "\"");
        return lex;
    }

    static WordListLexicon from_words(std::vector<std::string> positive,
                                      std::vector<std::string> negative) {
        WordListLexicon lex;
        lex.positive_.insert(positive.begin(), positive.end());
        lex.negative_.insert(negative.begin(), negative.end());
        for (const auto& w : lex.positive_)
            if (lex.negative_.count(w) > 0)
                throw InputError("word lists overlap on \"" + w + "\"");
        return lex;
    }

    bool is_positive(const std::string& word) const { return positive_.count(word) > 0; }
    bool is_negative(const std::string& word) const { return negative_.count(word) > 0; }
    std::size_t size() const { return positive_.size() + negative_.size(); }
    std::size_t positive_size() const { return positive_.size(); }
    std::size_t negative_size() const { return negative_.size(); }

private:
    std::unordered_set<std::string> positive_;
    std::unordered_set<std::string> negative_;

    static std::unordered_set<std::string> read_words(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open word list: " + path);
        std::unordered_set<std::string> words;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#' || line[0] == ';') continue;
            words.insert(line);
        }
        return words;
    }
};

/// Counts positive-set and negative-set hits over the token list; the larger
/// count wins, ties (including 0-0) are Neutral. Order-independent.
inline SentimentVerdict liu_hu_classify(const std::vector<std::string>& tokens,
                                        const WordListLexicon& lexicon) {
    SentimentVerdict verdict;
    verdict.model = "liu-hu";
    verdict.total_tokens = tokens.size();
    std::size_t pos = 0, neg = 0;
    for (const auto& token : tokens) {
        if (lexicon.is_positive(token)) {
            ++pos;
            ++verdict.covered_tokens;
        } else if (lexicon.is_negative(token)) {
            ++neg;
            ++verdict.covered_tokens;
        }
    }
    verdict.scores["positive_hits"] = static_cast<double>(pos);
    verdict.scores["negative_hits"] = static_cast<double>(neg);
    verdict.polarity = pos > neg   ? Polarity::positive
                       : neg > pos ? Polarity::negative
                                   : Polarity::neutral;
    return verdict;
}

}  // namespace sentisearch
