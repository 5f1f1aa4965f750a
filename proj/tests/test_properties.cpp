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

// Randomized robustness checks: arbitrary printable input must never crash
// any text-facing entry point, and the advertised invariants must hold.

#include <catch2/catch_amalgamated.hpp>

#include <cctype>
#include <string>

#include "sentisearch/html.hpp"
#include "sentisearch/rng.hpp"
#include "sentisearch/sentiment/sentistrength.hpp"
#include "sentisearch/sentiment/vader.hpp"
#include "sentisearch/textprep.hpp"

using namespace sentisearch;

namespace {

std::string random_text(SplitMix64& rng, std::size_t max_len) {
    // printable ascii plus whitespace, heavy on punctuation and brackets
    static const std::string alphabet =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
        "     \t\n!!??.,;:'\"()<>/\\-_=+*&^%$#@[]{}|~`";
    const std::size_t len = rng.next_below(max_len + 1);
    std::string out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(alphabet[rng.next_below(alphabet.size())]);
    return out;
}

}  // namespace

TEST_CASE("random input never breaks the text pipeline invariants") {
    SplitMix64 rng(8080);
    const auto stopwords = StopwordList::defaults();
    const auto vader_lexicon = ValenceLexicon::from_entries(
        {{"good", 1.9}, {"bad", -2.5}, {"no", -1.2}, {"great", 3.1}});
    const auto dual_lexicon = DualScaleLexicon::from_lists(
        {{"good", 2}, {"bad", -2}}, {{"very", 1}}, {{"shock horror", -2}}, {"not"},
        {{":)", 1}, {":(", -1}});

    for (int trial = 0; trial < 300; ++trial) {
        const auto text = random_text(rng, 160);
        INFO("input: " << text);

        const auto cleaned = clean_html(text);
        CHECK(cleaned.find('<') == std::string::npos);
        CHECK(cleaned.find('>') == std::string::npos);
        CHECK(clean_html(cleaned) == cleaned);

        const auto stream = preprocess(text, stopwords);
        for (std::size_t i = 0; i < stream.size(); ++i) {
            CHECK(stream[i].position == i);
            CHECK_FALSE(stream[i].stem.empty());
            for (const char c : stream[i].stem)
                CHECK(std::isalnum(static_cast<unsigned char>(c)));
        }

        const auto vader = vader_score(text, vader_lexicon);
        CHECK(vader.scores.at("compound") >= -1.0);
        CHECK(vader.scores.at("compound") <= 1.0);
        if (vader.total_tokens > 0) {
            const double sum = vader.scores.at("pos") + vader.scores.at("neg") +
                               vader.scores.at("neu");
            CHECK(sum >= 0.999);
            CHECK(sum <= 1.001);
        }
        CHECK(vader.covered_tokens <= vader.total_tokens);

        const auto dual = sentistrength_score(text, dual_lexicon);
        CHECK(dual.scores.at("positive") >= 1);
        CHECK(dual.scores.at("positive") <= 5);
        CHECK(dual.scores.at("negative") >= -5);
        CHECK(dual.scores.at("negative") <= -1);
    }
}
