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

#include <map>
#include <string>
#include <string_view>

#include "sentisearch/errors.hpp"

namespace sentisearch {

enum class Polarity { positive, negative, neutral };

inline std::string_view to_string(Polarity p) {
    switch (p) {
        case Polarity::positive: return "Positive";
        case Polarity::negative: return "Negative";
        case Polarity::neutral: return "Neutral";
    }
    return "Neutral";
}

inline Polarity polarity_from_string(std::string_view s) {
    std::string lower;
    for (const char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "positive" || lower == "pos") return Polarity::positive;
    if (lower == "negative" || lower == "neg") return Polarity::negative;
    if (lower == "neutral" || lower == "neu") return Polarity::neutral;
    throw InputError("unknown polarity label: " + std::string(s));
}

/// Per-model polarity output: the raw model-specific scores plus the ternary
/// label, with lexicon-coverage counters.
struct SentimentVerdict {
    std::string model;
    Polarity polarity{Polarity::neutral};
    std::map<std::string, double> scores;
    std::size_t covered_tokens{};
    std::size_t total_tokens{};

    bool operator==(const SentimentVerdict&) const = default;
};

}  // namespace sentisearch
