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

// Shared fixture builders for the test suites.

#pragma once

#include <string>
#include <vector>

#include "sentisearch/corpus.hpp"
#include "sentisearch/rng.hpp"

namespace sentisearch::testing {

inline Document make_doc(int id, std::string content, std::string label = "Covid") {
    Document doc;
    doc.id = id;
    doc.url = "http://example.test/" + std::to_string(id);
    doc.content = std::move(content);
    doc.date = "2021";
    doc.title = "doc " + std::to_string(id);
    doc.label = std::move(label);
    return doc;
}

inline Corpus corpus_from_contents(const std::vector<std::string>& contents) {
    Corpus corpus;
    int id = 1;
    for (const auto& c : contents) corpus.docs.push_back(make_doc(id++, c));
    return corpus;
}

/// Vocabulary of plain words that neither stem into each other nor hit the
/// default stopword list.
inline const std::vector<std::string>& sample_vocab() {
    static const std::vector<std::string> kVocab = {
        "covid",  "vaccine", "travel",  "border",   "flight",  "doctor", "nurse",
        "summer", "winter",  "economy", "minister", "school",  "virus",  "variant",
        "mask",   "beach",   "airport", "hotel",    "spain",   "france", "kent",
        "murder", "officer", "arrest",  "woodland", "remains", "human",  "rules",
        "people", "outdoor", "meeting", "scotland", "bbc",     "news",   "sarah",
    };
    return kVocab;
}

inline Corpus random_corpus(SplitMix64& rng, std::size_t max_docs = 50,
                            std::size_t max_words = 30) {
    const auto& vocab = sample_vocab();
    const std::size_t n_docs = 1 + rng.next_below(max_docs);
    Corpus corpus;
    for (std::size_t d = 0; d < n_docs; ++d) {
        const std::size_t n_words = 1 + rng.next_below(max_words);
        std::string content;
        for (std::size_t w = 0; w < n_words; ++w) {
            if (w > 0) content.push_back(' ');
            content += vocab[rng.next_below(vocab.size())];
        }
        const char* labels[] = {"Covid", "Vaccine", "Travel"};
        corpus.docs.push_back(
            make_doc(static_cast<int>(d) + 1, content, labels[rng.next_below(3)]));
    }
    return corpus;
}

/// 800 documents shaped like the production snapshot: "bbc" and "news"
/// appear in documents 1..697, "covid" in 1..100, "suspicion" only in
/// document 1.
inline Corpus snapshot_corpus() {
    Corpus corpus;
    const char* labels[] = {"Covid", "Vaccine", "Travel"};
    for (int id = 1; id <= 800; ++id) {
        std::string content;
        if (id <= 697) content += "bbc news ";
        if (id <= 100) content += "covid ";
        if (id == 1) content += "suspicion ";
        content += "story segment " + std::to_string(id % 13);
        corpus.docs.push_back(make_doc(id, content, labels[(id - 1) % 3]));
    }
    return corpus;
}

}  // namespace sentisearch::testing
