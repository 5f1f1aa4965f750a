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

// Dual-scale strength scoring in the SentiStrength style: every text gets a
// positive strength in [1, 5] and a negative strength in [-5, -1]. The
// combination rules implemented here are: boosters adjust the magnitude of
// the next sentiment word, negations flip its sign, idioms override the
// words they are made of, and emoticons score 1 + |listed score| with the
// listed sign. Texts are scored per sentence; the text keeps the strongest
// positive and strongest negative sentence scores.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentisearch/errors.hpp"
#include "sentisearch/sentiment/verdict.hpp"
#include "sentisearch/textprep.hpp"

namespace sentisearch {

/// Five-list lexicon: sentiment strength words, boosters, idioms, negations
/// and emoticons (directory of strength.txt, booster.txt, idiom.txt,
/// negation.txt, emoticon.txt).
class DualScaleLexicon {
public:
    static DualScaleLexicon load_dir(const std::string& dir) {
        namespace fs = std::filesystem;
        DualScaleLexicon lex;
        lex.strength_ = read_scored(fs::path(dir) / "strength.txt", /*allow_zero=*/false);
        lex.boosters_ = read_scored(fs::path(dir) / "booster.txt", /*allow_zero=*/true);
        for (const auto& [phrase, score] : read_scored(fs::path(dir) / "idiom.txt", true)) {
            std::vector<std::string> words;
            std::istringstream ss(phrase);
            std::string w;
            while (ss >> w) words.push_back(lower(w));
            if (!words.empty()) lex.idioms_.push_back({std::move(words), score});
        }
        // longest idioms match first
        std::sort(lex.idioms_.begin(), lex.idioms_.end(),
                  [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
        lex.negations_ = read_bare(fs::path(dir) / "negation.txt");
        // emoticon keys are case-sensitive glyph sequences
        lex.emoticons_ = read_scored(fs::path(dir) / "emoticon.txt", true,
                                     /*lowercase_keys=*/false);
        return lex;
    }

    static DualScaleLexicon from_lists(
        std::unordered_map<std::string, int> strength,
        std::unordered_map<std::string, int> boosters,
        std::vector<std::pair<std::string, int>> idioms,
        std::unordered_set<std::string> negations,
        std::unordered_map<std::string, int> emoticons) {
        DualScaleLexicon lex;
        for (const auto& [w, s] : strength)
            if (s == 0) throw InputError("strength score for \"" + w + "\" must not be 0");
        lex.strength_ = std::move(strength);
        lex.boosters_ = std::move(boosters);
        for (const auto& [phrase, score] : idioms) {
            std::vector<std::string> words;
            std::istringstream ss(phrase);
            std::string w;
            while (ss >> w) words.push_back(lower(w));
            if (!words.empty()) lex.idioms_.push_back({std::move(words), score});
        }
        std::sort(lex.idioms_.begin(), lex.idioms_.end(),
                  [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
        lex.negations_ = std::move(negations);
        lex.emoticons_ = std::move(emoticons);
        return lex;
    }

    const std::unordered_map<std::string, int>& strength_words() const { return strength_; }
    const std::unordered_map<std::string, int>& boosters() const { return boosters_; }
    const std::vector<std::pair<std::vector<std::string>, int>>& idioms() const {
        return idioms_;
    }
    const std::unordered_set<std::string>& negations() const { return negations_; }
    const std::unordered_map<std::string, int>& emoticons() const { return emoticons_; }

    std::size_t size() const {
        return strength_.size() + boosters_.size() + idioms_.size() + negations_.size() +
               emoticons_.size();
    }

private:
    std::unordered_map<std::string, int> strength_;
    std::unordered_map<std::string, int> boosters_;
    std::vector<std::pair<std::vector<std::string>, int>> idioms_;
    std::unordered_set<std::string> negations_;
    std::unordered_map<std::string, int> emoticons_;

    static std::string lower(const std::string& s) {
        std::string out = s;
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return out;
    }

    static std::unordered_map<std::string, int> read_scored(const std::filesystem::path& path,
                                                            bool allow_zero,
                                                            bool lowercase_keys = true) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open lexicon list: " + path.string());
        std::unordered_map<std::string, int> out;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            const auto tab = line.rfind('\t');
            if (tab == std::string::npos)
                throw InputError("lexicon list " + path.string() + " line " +
                                 std::to_string(line_no) + ": expected entry<TAB>score");
            int score = 0;
            try {
                score = std::stoi(line.substr(tab + 1));
            } catch (const std::exception&) {
                throw InputError("lexicon list " + path.string() + " line " +
                                 std::to_string(line_no) + ": bad score");
            }
            if (!allow_zero && score == 0)
                throw InputError("lexicon list " + path.string() + " line " +
                                 std::to_string(line_no) + ": strength score must not be 0");
            const std::string key = line.substr(0, tab);
            out[lowercase_keys ? lower(key) : key] = score;
        }
        return out;
    }

    static std::unordered_set<std::string> read_bare(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open lexicon list: " + path.string());
        std::unordered_set<std::string> out;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            // tolerate a trailing tab column (the reference lists carry one)
            const auto tab = line.find('\t');
            out.insert(lower(line.substr(0, tab)));
        }
        return out;
    }
};

namespace sentistrength_detail {

struct Unit {
    // sign * magnitude before clamping; 0 magnitude never occurs
    int sign{};       // +1 or -1
    double magnitude{};
    bool matched{};   // true when this token hit any lexicon list
    bool booster{};
    bool negation{};
    int booster_value{};
};

inline std::string strip_word(const std::string& token) {
    std::size_t b = 0, e = token.size();
    while (b < e && std::ispunct(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(token[e - 1]))) --e;
    std::string out = token.substr(b, e - b);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct SentenceScore {
    int positive{1};
    int negative{-1};
    std::size_t covered{};
    std::size_t total{};
};

inline SentenceScore score_sentence(const std::string& sentence,
                                    const DualScaleLexicon& lexicon) {
    // raw whitespace tokens; emoticons must match before punctuation is
    // stripped
    std::vector<std::string> raw;
    {
        std::istringstream ss(sentence);
        std::string tok;
        while (ss >> tok) raw.push_back(tok);
    }
    const std::size_t n = raw.size();
    std::vector<Unit> units(n);
    std::vector<std::string> words(n);
    for (std::size_t i = 0; i < n; ++i) words[i] = strip_word(raw[i]);

    // idioms first: they override the words they span
    std::vector<bool> consumed(n, false);
    std::vector<std::pair<std::size_t, int>> idiom_hits; // start index -> score
    for (const auto& [phrase, score] : lexicon.idioms()) {
        if (phrase.empty() || phrase.size() > n) continue;
        for (std::size_t start = 0; start + phrase.size() <= n; ++start) {
            bool hit = true;
            for (std::size_t k = 0; k < phrase.size(); ++k) {
                if (consumed[start + k] || words[start + k] != phrase[k]) {
                    hit = false;
                    break;
                }
            }
            if (hit) {
                for (std::size_t k = 0; k < phrase.size(); ++k) consumed[start + k] = true;
                idiom_hits.emplace_back(start, score);
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (consumed[i]) continue;
        const auto emo = lexicon.emoticons().find(raw[i]);
        if (emo != lexicon.emoticons().end()) {
            units[i].matched = true;
            units[i].sign = emo->second >= 0 ? 1 : -1;
            units[i].magnitude = 1.0 + std::abs(emo->second);
            continue;
        }
        const auto booster = lexicon.boosters().find(words[i]);
        if (booster != lexicon.boosters().end()) {
            units[i].booster = true;
            units[i].booster_value = booster->second;
            units[i].matched = true;
            continue;
        }
        if (lexicon.negations().count(words[i]) > 0) {
            units[i].negation = true;
            units[i].matched = true;
            continue;
        }
        const auto strength = lexicon.strength_words().find(words[i]);
        if (strength != lexicon.strength_words().end()) {
            units[i].matched = true;
            units[i].sign = strength->second > 0 ? 1 : -1;
            units[i].magnitude = std::abs(strength->second);
        }
    }
    for (const auto& [start, score] : idiom_hits) {
        units[start].matched = true;
        units[start].sign = score >= 0 ? 1 : -1;
        units[start].magnitude = std::abs(score);
    }

    SentenceScore result;
    result.total = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (units[i].matched) ++result.covered;
        if (units[i].magnitude == 0.0) continue;
        double magnitude = units[i].magnitude;
        int sign = units[i].sign;
        std::size_t back = i;
        if (back > 0 && units[back - 1].booster) {
            magnitude += units[back - 1].booster_value;
            --back;
        }
        if (back > 0 && units[back - 1].negation) sign = -sign;
        const int clamped = static_cast<int>(std::clamp(magnitude, 1.0, 5.0));
        if (sign > 0)
            result.positive = std::max(result.positive, clamped);
        else
            result.negative = std::min(result.negative, -clamped);
    }
    return result;
}

}  // namespace sentistrength_detail

/// Dual-scale score for raw text: scores["positive"] in {1..5},
/// scores["negative"] in {-5..-1}. Polarity goes to the larger magnitude;
/// equal magnitudes are Neutral.
inline SentimentVerdict sentistrength_score(std::string_view text,
                                            const DualScaleLexicon& lexicon) {
    SentimentVerdict verdict;
    verdict.model = "sentistrength";
    int positive = 1, negative = -1;
    for (const auto& sentence : split_sentences(std::string(text))) {
        const auto s = sentistrength_detail::score_sentence(sentence, lexicon);
        positive = std::max(positive, s.positive);
        negative = std::min(negative, s.negative);
        verdict.covered_tokens += s.covered;
        verdict.total_tokens += s.total;
    }
    verdict.scores["positive"] = positive;
    verdict.scores["negative"] = negative;
    verdict.polarity = positive > -negative   ? Polarity::positive
                       : -negative > positive ? Polarity::negative
                                              : Polarity::neutral;
    return verdict;
}

}  // namespace sentisearch
