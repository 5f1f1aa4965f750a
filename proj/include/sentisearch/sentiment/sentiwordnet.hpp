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
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentisearch/errors.hpp"
#include "sentisearch/sentiment/verdict.hpp"

namespace sentisearch {

/// Synset-style lexicon: (term, part of speech, sense) -> (PosScore,
/// NegScore), each in [0,1] with PosScore + NegScore <= 1. The objectivity
/// score is derived: Obj = 1 - (Pos + Neg). All parts of speech pool
/// together per surface term; senses are averaged unweighted.
class SynsetLexicon {
public:
    struct Sense {
        double pos_score{};
        double neg_score{};
    };

    /// File format: `pos<TAB>sense_id<TAB>PosScore<TAB>NegScore<TAB>terms`
    /// where terms is a space-separated list of `word` or `word#rank`
    /// entries. Lines starting with '#' are comments.
    static SynsetLexicon load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open synset lexicon: " + path);
        SynsetLexicon lex;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            std::vector<std::string> fields;
            std::size_t start = 0;
            while (true) {
                const auto tab = line.find('\t', start);
                fields.push_back(line.substr(start, tab - start));
                if (tab == std::string::npos) break;
                start = tab + 1;
            }
            if (fields.size() < 5)
                throw InputError("synset lexicon " + path + " line " + std::to_string(line_no) +
                                 ": expected pos<TAB>sense_id<TAB>PosScore<TAB>NegScore<TAB>terms");
            Sense sense;
            try {
                sense.pos_score = std::stod(fields[2]);
                sense.neg_score = std::stod(fields[3]);
            } catch (const std::exception&) {
                throw InputError("synset lexicon " + path + " line " + std::to_string(line_no) +
                                 ": bad scores");
            }
            if (sense.pos_score < 0 || sense.pos_score > 1 || sense.neg_score < 0 ||
                sense.neg_score > 1 || sense.pos_score + sense.neg_score > 1.0 + 1e-12)
                throw InputError("synset lexicon " + path + " line " + std::to_string(line_no) +
                                 ": scores must lie in [0,1] with Pos+Neg <= 1");
            std::istringstream terms(fields[4]);
            std::string term;
            while (terms >> term) {
                const auto hash = term.find('#');
                if (hash != std::string::npos) term.erase(hash);
                if (!term.empty()) {
                    lex.senses_[term].push_back(sense);
                    ++lex.entry_count_;
                }
            }
        }
        return lex;
    }

    const std::vector<Sense>* senses(const std::string& term) const {
        const auto it = senses_.find(term);
        return it == senses_.end() ? nullptr : &it->second;
    }

    std::size_t entry_count() const { return entry_count_; }
    std::size_t term_count() const { return senses_.size(); }

    const std::unordered_map<std::string, std::vector<Sense>>& by_term() const {
        return senses_;
    }

private:
    std::unordered_map<std::string, std::vector<Sense>> senses_;
    std::size_t entry_count_{};
};

/// Per token: average Pos/Neg over all its senses. Document posAvg/negAvg
/// are means over covered tokens; objAvg = 1 - posAvg - negAvg. Positive
/// when posAvg > negAvg, Negative when negAvg > posAvg, Neutral on ties and
/// when nothing is covered.
inline SentimentVerdict swn_score(const std::vector<std::string>& tokens,
                                  const SynsetLexicon& lexicon) {
    SentimentVerdict verdict;
    verdict.model = "sentiwordnet";
    verdict.total_tokens = tokens.size();
    double pos_total = 0.0, neg_total = 0.0;
    for (const auto& token : tokens) {
        const auto* senses = lexicon.senses(token);
        if (senses == nullptr || senses->empty()) continue;
        ++verdict.covered_tokens;
        double pos = 0.0, neg = 0.0;
        for (const auto& s : *senses) {
            pos += s.pos_score;
            neg += s.neg_score;
        }
        pos_total += pos / static_cast<double>(senses->size());
        neg_total += neg / static_cast<double>(senses->size());
    }
    double pos_avg = 0.0, neg_avg = 0.0;
    if (verdict.covered_tokens > 0) {
        pos_avg = pos_total / static_cast<double>(verdict.covered_tokens);
        neg_avg = neg_total / static_cast<double>(verdict.covered_tokens);
    }
    verdict.scores["posAvg"] = pos_avg;
    verdict.scores["negAvg"] = neg_avg;
    verdict.scores["objAvg"] = 1.0 - pos_avg - neg_avg;
    verdict.polarity = pos_avg > neg_avg   ? Polarity::positive
                       : neg_avg > pos_avg ? Polarity::negative
                                           : Polarity::neutral;
    return verdict;
}

}  // namespace sentisearch
