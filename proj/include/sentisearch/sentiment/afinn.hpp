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
#include <unordered_map>
#include <vector>

#include "sentisearch/errors.hpp"
#include "sentisearch/sentiment/verdict.hpp"

namespace sentisearch {

/// word (or phrase) -> integer score in [-5, 5]. Scoring looks tokens up
/// one at a time, so multi-word phrase entries load fine but never match --
/// mirroring the plain dict-lookup summation this scorer reproduces.
class IntegerLexicon {
public:
    static IntegerLexicon load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open integer lexicon: " + path);
        IntegerLexicon lex;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            const auto tab = line.rfind('\t');
            if (tab == std::string::npos)
                throw InputError("integer lexicon " + path + " line " +
                                 std::to_string(line_no) + ": expected word<TAB>int");
            int value = 0;
            try {
                value = std::stoi(line.substr(tab + 1));
            } catch (const std::exception&) {
                throw InputError("integer lexicon " + path + " line " +
                                 std::to_string(line_no) + ": bad integer value");
            }
            if (value < -5 || value > 5)
                throw InputError("integer lexicon " + path + " line " +
                                 std::to_string(line_no) + ": value outside [-5, 5]");
            lex.values_[line.substr(0, tab)] = value;
        }
        return lex;
    }

    static IntegerLexicon from_entries(const std::vector<std::pair<std::string, int>>& entries) {
        IntegerLexicon lex;
        for (const auto& [word, value] : entries) {
            if (value < -5 || value > 5)
                throw InputError("integer lexicon value outside [-5, 5] for \"" + word + "\"");
            lex.values_[word] = value;
        }
        return lex;
    }

    int value_or_zero(const std::string& word) const {
        const auto it = values_.find(word);
        return it == values_.end() ? 0 : it->second;
    }

    bool contains(const std::string& word) const { return values_.count(word) > 0; }
    std::size_t size() const { return values_.size(); }

private:
    std::unordered_map<std::string, int> values_;
};

/// Sums per-token lexicon values (0 for absent tokens). Exactly additive
/// over concatenation. Tokens must be lowercase.
inline SentimentVerdict afinn_score(const std::vector<std::string>& tokens,
                                    const IntegerLexicon& lexicon) {
    SentimentVerdict verdict;
    verdict.model = "afinn";
    verdict.total_tokens = tokens.size();
    long long score = 0;
    for (const auto& token : tokens) {
        if (lexicon.contains(token)) {
            ++verdict.covered_tokens;
            score += lexicon.value_or_zero(token);
        }
    }
    verdict.scores["score"] = static_cast<double>(score);
    verdict.polarity = score > 0   ? Polarity::positive
                       : score < 0 ? Polarity::negative
                                   : Polarity::neutral;
    return verdict;
}

}  // namespace sentisearch
