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

// Valence-based sentiment scoring following Hutto & Gilbert's VADER rule
// engine (ICWSM 2014) and its reference implementation: booster and
// dampener adjustment with distance damping, negation flips, all-caps
// emphasis, special-case idioms, "but" clause reweighting, exclamation and
// question-mark emphasis, and alpha-normalized compound scoring.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentisearch/errors.hpp"
#include "sentisearch/sentiment/verdict.hpp"

namespace sentisearch {

/// token -> mean valence in [-4, 4]. File format: tab-separated
/// `token<TAB>valence`, further tab-separated columns ignored (the upstream
/// distribution appends a stddev and raw ratings). Keys are expected
/// lowercase.
class ValenceLexicon {
public:
    static ValenceLexicon load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open valence lexicon: " + path);
        ValenceLexicon lex;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw InputError("valence lexicon " + path + " line " +
                                 std::to_string(line_no) + ": expected token<TAB>valence");
            const std::string token = line.substr(0, tab);
            const auto second_tab = line.find('\t', tab + 1);
            const std::string value_text =
                line.substr(tab + 1, second_tab == std::string::npos ? std::string::npos
                                                                     : second_tab - tab - 1);
            try {
                lex.valences_[token] = std::stod(value_text);
            } catch (const std::exception&) {
                throw InputError("valence lexicon " + path + " line " +
                                 std::to_string(line_no) + ": bad valence \"" + value_text +
                                 "\"");
            }
        }
        return lex;
    }

    static ValenceLexicon from_entries(
        const std::vector<std::pair<std::string, double>>& entries) {
        ValenceLexicon lex;
        for (const auto& [token, valence] : entries) lex.valences_[token] = valence;
        return lex;
    }

    bool contains(const std::string& lower_token) const {
        return valences_.count(lower_token) > 0;
    }
    double valence(const std::string& lower_token) const { return valences_.at(lower_token); }
    std::size_t size() const { return valences_.size(); }

private:
    std::unordered_map<std::string, double> valences_;
};

namespace vader_detail {

inline constexpr double kBoostIncr = 0.293;
inline constexpr double kBoostDecr = -0.293;
inline constexpr double kCapsIncr = 0.733;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kNormAlpha = 15.0;
inline constexpr double kExclamationStep = 0.292;   // per '!', at most 4 counted
inline constexpr double kQuestionStep = 0.18;       // per '?' when 2..3 present
inline constexpr double kQuestionCap = 0.96;        // 4 or more '?'
inline constexpr double kButBefore = 0.5;
inline constexpr double kButAfter = 1.5;
inline constexpr double kNeverBoost = 1.25;

inline const std::unordered_set<std::string>& negate_words() {
    static const std::unordered_set<std::string> kSet{
        "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
        "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
        "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
        "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
        "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing",
        "nowhere", "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
        "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't", "without",
        "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom", "despite"};
    return kSet;
}

inline const std::unordered_map<std::string, double>& booster_dict() {
    static const std::unordered_map<std::string, double> kDict{
        {"absolutely", kBoostIncr}, {"amazingly", kBoostIncr}, {"awfully", kBoostIncr},
        {"completely", kBoostIncr}, {"considerable", kBoostIncr},
        {"considerably", kBoostIncr}, {"decidedly", kBoostIncr}, {"deeply", kBoostIncr},
        {"effing", kBoostIncr}, {"enormous", kBoostIncr}, {"enormously", kBoostIncr},
        {"entirely", kBoostIncr}, {"especially", kBoostIncr}, {"exceptional", kBoostIncr},
        {"exceptionally", kBoostIncr}, {"extreme", kBoostIncr}, {"extremely", kBoostIncr},
        {"fabulously", kBoostIncr}, {"flipping", kBoostIncr}, {"flippin", kBoostIncr},
        {"frackin", kBoostIncr}, {"fracking", kBoostIncr}, {"fricking", kBoostIncr},
        {"frickin", kBoostIncr}, {"frigging", kBoostIncr}, {"friggin", kBoostIncr},
        {"fully", kBoostIncr}, {"fuckin", kBoostIncr}, {"fucking", kBoostIncr},
        {"fuggin", kBoostIncr}, {"fugging", kBoostIncr}, {"greatly", kBoostIncr},
        {"hella", kBoostIncr}, {"highly", kBoostIncr}, {"hugely", kBoostIncr},
        {"incredible", kBoostIncr}, {"incredibly", kBoostIncr}, {"intensely", kBoostIncr},
        {"major", kBoostIncr}, {"majorly", kBoostIncr}, {"more", kBoostIncr},
        {"most", kBoostIncr}, {"particularly", kBoostIncr}, {"purely", kBoostIncr},
        {"quite", kBoostIncr}, {"really", kBoostIncr}, {"remarkably", kBoostIncr},
        {"so", kBoostIncr}, {"substantially", kBoostIncr}, {"thoroughly", kBoostIncr},
        {"total", kBoostIncr}, {"totally", kBoostIncr}, {"tremendous", kBoostIncr},
        {"tremendously", kBoostIncr}, {"uber", kBoostIncr}, {"unbelievably", kBoostIncr},
        {"unusually", kBoostIncr}, {"utter", kBoostIncr}, {"utterly", kBoostIncr},
        {"very", kBoostIncr},
        {"almost", kBoostDecr}, {"barely", kBoostDecr}, {"hardly", kBoostDecr},
        {"just enough", kBoostDecr}, {"kind of", kBoostDecr}, {"kinda", kBoostDecr},
        {"kindof", kBoostDecr}, {"kind-of", kBoostDecr}, {"less", kBoostDecr},
        {"little", kBoostDecr}, {"marginal", kBoostDecr}, {"marginally", kBoostDecr},
        {"occasional", kBoostDecr}, {"occasionally", kBoostDecr}, {"partly", kBoostDecr},
        {"scarce", kBoostDecr}, {"scarcely", kBoostDecr}, {"slight", kBoostDecr},
        {"slightly", kBoostDecr}, {"somewhat", kBoostDecr}, {"sort of", kBoostDecr},
        {"sorta", kBoostDecr}, {"sortof", kBoostDecr}, {"sort-of", kBoostDecr}};
    return kDict;
}

inline const std::unordered_map<std::string, double>& special_cases() {
    static const std::unordered_map<std::string, double> kDict{
        {"the shit", 3.0},      {"the bomb", 3.0},     {"bad ass", 1.5},
        {"badass", 1.5},        {"bus stop", 0.0},     {"yeah right", -2.0},
        {"kiss of death", -1.5}, {"to die for", 3.0},  {"beating heart", 3.1},
        {"broken heart", -2.9}};
    return kDict;
}

inline bool is_ascii_punct(unsigned char c) { return std::ispunct(c) != 0; }

/// Mirrors Python str.isupper(): at least one letter and every letter
/// uppercase.
inline bool is_upper_token(const std::string& token) {
    bool has_alpha = false;
    for (const char ch : token) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isalpha(c)) {
            has_alpha = true;
            if (!std::isupper(c)) return false;
        }
    }
    return has_alpha;
}

inline std::string to_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

/// Whitespace split, then punctuation stripped from token edges unless the
/// stripped core is two characters or shorter (preserves emoticons).
inline std::vector<std::string> words_and_emoticons(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t b = 0, e = cur.size();
        while (b < e && is_ascii_punct(static_cast<unsigned char>(cur[b]))) ++b;
        while (e > b && is_ascii_punct(static_cast<unsigned char>(cur[e - 1]))) --e;
        const std::string stripped = cur.substr(b, e - b);
        tokens.push_back(stripped.size() <= 2 ? cur : stripped);
        cur.clear();
    };
    for (const char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            cur.push_back(ch);
    }
    flush();
    return tokens;
}

inline bool has_cap_differential(const std::vector<std::string>& tokens) {
    std::size_t caps = 0;
    for (const auto& t : tokens)
        if (is_upper_token(t)) ++caps;
    return caps > 0 && caps < tokens.size();
}

inline bool negated(const std::string& lower_token) {
    if (negate_words().count(lower_token) > 0) return true;
    return lower_token.find("n't") != std::string::npos;
}

inline double scalar_inc_dec(const std::string& token, const std::string& lower_token,
                             double valence, bool cap_diff) {
    const auto it = booster_dict().find(lower_token);
    if (it == booster_dict().end()) return 0.0;
    double scalar = it->second;
    if (valence < 0) scalar = -scalar;
    if (is_upper_token(token) && cap_diff) scalar += valence > 0 ? kCapsIncr : -kCapsIncr;
    return scalar;
}

inline double negation_check(double valence, const std::vector<std::string>& lower,
                             std::size_t start_i, std::size_t i) {
    if (start_i == 0) {
        if (negated(lower[i - 1])) valence *= kNegationScalar;
    } else if (start_i == 1) {
        if (lower[i - 2] == "never" && (lower[i - 1] == "so" || lower[i - 1] == "this")) {
            valence *= kNeverBoost;
        } else if (lower[i - 2] == "without" && lower[i - 1] == "doubt") {
            // leave unchanged
        } else if (negated(lower[i - 2])) {
            valence *= kNegationScalar;
        }
    } else if (start_i == 2) {
        // parenthesization mirrors the reference implementation
        if ((lower[i - 3] == "never" && (lower[i - 2] == "so" || lower[i - 2] == "this")) ||
            (lower[i - 1] == "so" || lower[i - 1] == "this")) {
            valence *= kNeverBoost;
        } else if (lower[i - 3] == "without" &&
                   (lower[i - 2] == "doubt" || lower[i - 1] == "doubt")) {
            // leave unchanged
        } else if (negated(lower[i - 3])) {
            valence *= kNegationScalar;
        }
    }
    return valence;
}

inline double special_idioms_check(double valence, const std::vector<std::string>& lower,
                                   std::size_t i) {
    // only reached with i >= 3
    const std::string one_zero = lower[i - 1] + " " + lower[i];
    const std::string two_one_zero = lower[i - 2] + " " + lower[i - 1] + " " + lower[i];
    const std::string two_one = lower[i - 2] + " " + lower[i - 1];
    const std::string three_two_one = lower[i - 3] + " " + lower[i - 2] + " " + lower[i - 1];
    const std::string three_two = lower[i - 3] + " " + lower[i - 2];

    for (const auto* seq : {&one_zero, &two_one_zero, &two_one, &three_two_one, &three_two}) {
        const auto it = special_cases().find(*seq);
        if (it != special_cases().end()) {
            valence = it->second;
            break;
        }
    }
    if (lower.size() - 1 > i) {
        const std::string zero_one = lower[i] + " " + lower[i + 1];
        const auto it = special_cases().find(zero_one);
        if (it != special_cases().end()) valence = it->second;
    }
    if (lower.size() - 1 > i + 1) {
        const std::string zero_one_two = lower[i] + " " + lower[i + 1] + " " + lower[i + 2];
        const auto it = special_cases().find(zero_one_two);
        if (it != special_cases().end()) valence = it->second;
    }
    for (const auto* gram : {&three_two_one, &three_two, &two_one}) {
        const auto it = booster_dict().find(*gram);
        if (it != booster_dict().end()) valence += it->second;
    }
    return valence;
}

inline double least_check(double valence, const std::vector<std::string>& lower,
                          const ValenceLexicon& lexicon, std::size_t i) {
    if (i > 1 && !lexicon.contains(lower[i - 1]) && lower[i - 1] == "least") {
        if (lower[i - 2] != "at" && lower[i - 2] != "very") valence *= kNegationScalar;
    } else if (i > 0 && !lexicon.contains(lower[i - 1]) && lower[i - 1] == "least") {
        valence *= kNegationScalar;
    }
    return valence;
}

inline double sentiment_valence(const ValenceLexicon& lexicon,
                                const std::vector<std::string>& tokens,
                                const std::vector<std::string>& lower, std::size_t i,
                                bool cap_diff) {
    const std::string& item = lower[i];
    if (!lexicon.contains(item)) return 0.0;
    double valence = lexicon.valence(item);

    // "no" right before a lexicon item negates it instead of scoring itself
    if (item == "no" && i + 1 < tokens.size() && lexicon.contains(lower[i + 1])) valence = 0.0;
    if ((i >= 1 && lower[i - 1] == "no") || (i >= 2 && lower[i - 2] == "no") ||
        (i >= 3 && lower[i - 3] == "no" && (lower[i - 1] == "or" || lower[i - 1] == "nor")))
        valence = lexicon.valence(item) * kNegationScalar;

    if (is_upper_token(tokens[i]) && cap_diff) valence += valence > 0 ? kCapsIncr : -kCapsIncr;

    for (std::size_t start_i = 0; start_i < 3; ++start_i) {
        if (i > start_i && !lexicon.contains(lower[i - (start_i + 1)])) {
            double s = scalar_inc_dec(tokens[i - (start_i + 1)], lower[i - (start_i + 1)],
                                      valence, cap_diff);
            if (start_i == 1 && s != 0.0) s *= 0.95;
            if (start_i == 2 && s != 0.0) s *= 0.9;
            valence += s;
            valence = negation_check(valence, lower, start_i, i);
            if (start_i == 2) valence = special_idioms_check(valence, lower, i);
        }
    }
    return least_check(valence, lower, lexicon, i);
}

inline void but_check(const std::vector<std::string>& lower, std::vector<double>& sentiments) {
    const auto it = std::find(lower.begin(), lower.end(), "but");
    if (it == lower.end()) return;
    const auto but_index = static_cast<std::size_t>(std::distance(lower.begin(), it));
    for (std::size_t i = 0; i < sentiments.size(); ++i) {
        if (i < but_index)
            sentiments[i] *= kButBefore;
        else if (i > but_index)
            sentiments[i] *= kButAfter;
    }
}

inline double punctuation_emphasis(std::string_view text) {
    const auto ep_count =
        std::min<std::ptrdiff_t>(std::count(text.begin(), text.end(), '!'), 4);
    double amplifier = static_cast<double>(ep_count) * kExclamationStep;
    const auto qm_count = std::count(text.begin(), text.end(), '?');
    if (qm_count > 1) amplifier += qm_count <= 3 ? static_cast<double>(qm_count) * kQuestionStep
                                                 : kQuestionCap;
    return amplifier;
}

inline double normalize_score(double score) {
    const double norm = score / std::sqrt(score * score + kNormAlpha);
    return std::clamp(norm, -1.0, 1.0);
}

inline double round_to(double value, int digits) {
    const double scale = std::pow(10.0, digits);
    return std::round(value * scale) / scale;
}

}  // namespace vader_detail

/// Scores raw text (punctuation and casing carry signal here, so the input
/// must not be preprocessed). Polarity thresholds: compound >= 0.05 is
/// Positive, <= -0.05 is Negative, the open interval between is Neutral.
inline SentimentVerdict vader_score(std::string_view text, const ValenceLexicon& lexicon) {
    namespace vd = vader_detail;

    const auto tokens = vd::words_and_emoticons(text);
    std::vector<std::string> lower;
    lower.reserve(tokens.size());
    for (const auto& t : tokens) lower.push_back(vd::to_lower(t));
    const bool cap_diff = vd::has_cap_differential(tokens);

    std::vector<double> sentiments;
    sentiments.reserve(tokens.size());
    std::size_t covered = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (lexicon.contains(lower[i])) ++covered;
        if (vd::booster_dict().count(lower[i]) > 0) {
            sentiments.push_back(0.0);
            continue;
        }
        if (i + 1 < tokens.size() && lower[i] == "kind" && lower[i + 1] == "of") {
            sentiments.push_back(0.0);
            continue;
        }
        sentiments.push_back(vd::sentiment_valence(lexicon, tokens, lower, i, cap_diff));
    }
    vd::but_check(lower, sentiments);

    SentimentVerdict verdict;
    verdict.model = "vader";
    verdict.total_tokens = tokens.size();
    verdict.covered_tokens = covered;

    double compound = 0.0, pos = 0.0, neg = 0.0, neu = 0.0;
    if (!sentiments.empty()) {
        double sum = 0.0;
        for (const double v : sentiments) sum += v;
        const double punct = vd::punctuation_emphasis(text);
        if (sum > 0)
            sum += punct;
        else if (sum < 0)
            sum -= punct;
        compound = vd::normalize_score(sum);

        double pos_sum = 0.0, neg_sum = 0.0;
        std::size_t neu_count = 0;
        for (const double v : sentiments) {
            if (v > 0)
                pos_sum += v + 1.0; // +1 compensates neutrals counted as 1
            else if (v < 0)
                neg_sum += v - 1.0;
            else
                ++neu_count;
        }
        if (pos_sum > std::fabs(neg_sum))
            pos_sum += punct;
        else if (pos_sum < std::fabs(neg_sum))
            neg_sum -= punct;

        const double total = pos_sum + std::fabs(neg_sum) + static_cast<double>(neu_count);
        if (total > 0) {
            pos = std::fabs(pos_sum / total);
            neg = std::fabs(neg_sum / total);
            neu = std::fabs(static_cast<double>(neu_count) / total);
        }
    }

    verdict.scores["pos"] = vd::round_to(pos, 3);
    verdict.scores["neg"] = vd::round_to(neg, 3);
    verdict.scores["neu"] = vd::round_to(neu, 3);
    verdict.scores["compound"] = vd::round_to(compound, 4);

    const double c = verdict.scores["compound"];
    verdict.polarity = c >= 0.05   ? Polarity::positive
                       : c <= -0.05 ? Polarity::negative
                                    : Polarity::neutral;
    return verdict;
}

}  // namespace sentisearch
