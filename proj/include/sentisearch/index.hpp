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
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "sentisearch/corpus.hpp"
#include "sentisearch/errors.hpp"
#include "sentisearch/textprep.hpp"

namespace sentisearch {

/// Zipf term weight w = log2(N) - log2(n) + 1 for a term contained in n of
/// N documents. Strictly decreasing in n; exactly 1 when n = N.
inline double term_weight(std::int64_t total_docs, std::int64_t containing_docs) {
    if (total_docs < 1) throw InputError("term_weight: N must be >= 1");
    if (containing_docs < 1 || containing_docs > total_docs)
        throw InputError("term_weight: n must satisfy 1 <= n <= N");
    return std::log2(static_cast<double>(total_docs)) -
           std::log2(static_cast<double>(containing_docs)) + 1.0;
}

struct PostingEntry {
    int doc_id{};
    int tf{};
    double weight{}; // Zipf weight of the term at build time

    bool operator==(const PostingEntry&) const = default;
};

struct IndexEntry {
    std::string term; // stem
    int df{};
    std::vector<PostingEntry> postings; // strictly increasing by doc id

    bool operator==(const IndexEntry&) const = default;
};

inline constexpr int kIndexFormatVersion = 1;

/// Term -> postings index over the stemmed, stopword-filtered corpus.
/// Immutable once built; doc lengths are recovered from the postings
/// themselves (length of doc d = sum of tf over all terms of d).
class InvertedIndex {
public:
    static InvertedIndex build(const Corpus& corpus, const StopwordList& stopwords) {
        if (corpus.empty()) throw InputError("build_index: empty corpus");
        InvertedIndex index;
        index.total_docs_ = static_cast<int>(corpus.size());
        std::size_t total_tokens = 0;
        for (const auto& doc : corpus.docs) {
            const auto stream = preprocess(doc.content, stopwords, StemMode::porter);
            total_tokens += stream.size();
            std::map<std::string, int> tf;
            for (const auto& tok : stream) ++tf[tok.stem];
            for (const auto& [term, count] : tf) {
                auto& entry = index.entries_[term];
                entry.term = term;
                entry.postings.push_back({doc.id, count, 0.0});
            }
        }
        for (auto& [term, entry] : index.entries_) {
            entry.df = static_cast<int>(entry.postings.size());
            const double w = term_weight(index.total_docs_, entry.df);
            for (auto& p : entry.postings) p.weight = w;
        }
        index.avg_doc_len_ =
            static_cast<double>(total_tokens) / static_cast<double>(corpus.size());
        index.rebuild_doc_lengths();
        return index;
    }

    /// Exact-match lookup on a stem; nullptr when absent.
    const IndexEntry* lookup(const std::string& term) const {
        const auto it = entries_.find(term);
        return it == entries_.end() ? nullptr : &it->second;
    }

    /// Pattern fallback for terms with no exact entry: anchored-prefix
    /// matches first, then substring matches, each ranked by descending df
    /// with lexicographic tie-break. An exact entry, if present anyway,
    /// always ranks first.
    std::vector<const IndexEntry*> fuzzy_lookup(std::string_view raw, std::size_t k) const {
        std::string needle(raw);
        std::transform(needle.begin(), needle.end(), needle.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        std::vector<const IndexEntry*> exact, prefix, substring;
        for (const auto& [term, entry] : entries_) {
            if (term == needle) {
                exact.push_back(&entry);
            } else if (term.starts_with(needle)) {
                prefix.push_back(&entry);
            } else if (term.find(needle) != std::string::npos) {
                substring.push_back(&entry);
            }
        }
        const auto by_df = [](const IndexEntry* a, const IndexEntry* b) {
            if (a->df != b->df) return a->df > b->df;
            return a->term < b->term;
        };
        std::sort(prefix.begin(), prefix.end(), by_df);
        std::sort(substring.begin(), substring.end(), by_df);
        std::vector<const IndexEntry*> out;
        for (const auto& bucket : {exact, prefix, substring})
            for (const auto* e : bucket) {
                if (out.size() >= k) return out;
                out.push_back(e);
            }
        return out;
    }

    const std::map<std::string, IndexEntry>& entries() const { return entries_; }
    int total_docs() const { return total_docs_; }
    double avg_doc_len() const { return avg_doc_len_; }

    /// Post-preprocessing token count of one document (0 for documents whose
    /// content was entirely stopwords).
    int doc_length(int doc_id) const {
        if (doc_id < 1 || doc_id > total_docs_)
            throw InputError("doc id out of range: " + std::to_string(doc_id));
        const auto it = doc_lengths_.find(doc_id);
        return it == doc_lengths_.end() ? 0 : it->second;
    }

    /// Versioned JSON serialization, entries sorted by term. Rebuilding the
    /// same corpus reproduces this byte-for-byte.
    std::string to_json_string() const {
        nlohmann::ordered_json doc;
        doc["version"] = kIndexFormatVersion;
        doc["N"] = total_docs_;
        doc["avg_doc_len"] = avg_doc_len_;
        auto entries = nlohmann::ordered_json::array();
        for (const auto& [term, entry] : entries_) {
            nlohmann::ordered_json e;
            e["term"] = entry.term;
            e["df"] = entry.df;
            auto postings = nlohmann::ordered_json::array();
            for (const auto& p : entry.postings)
                postings.push_back({p.doc_id, p.tf, p.weight});
            e["postings"] = std::move(postings);
            entries.push_back(std::move(e));
        }
        doc["entries"] = std::move(entries);
        return doc.dump();
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw IoError("cannot write index file: " + path);
        out << to_json_string() << '\n';
    }

    static InvertedIndex load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open index file: " + path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            // nlohmann parse errors carry the byte offset of the failure
            throw InputError(std::string("index file ") + path + ": " + e.what());
        }
        InvertedIndex index;
        try {
            const int version = doc.at("version").get<int>();
            if (version != kIndexFormatVersion)
                throw InputError("index file " + path + ": unsupported version " +
                                 std::to_string(version));
            index.total_docs_ = doc.at("N").get<int>();
            index.avg_doc_len_ = doc.at("avg_doc_len").get<double>();
            for (const auto& e : doc.at("entries")) {
                IndexEntry entry;
                entry.term = e.at("term").get<std::string>();
                entry.df = e.at("df").get<int>();
                for (const auto& p : e.at("postings"))
                    entry.postings.push_back(
                        {p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<double>()});
                if (entry.df != static_cast<int>(entry.postings.size()))
                    throw InputError("index file " + path + ": df mismatch for term \"" +
                                     entry.term + "\"");
                int prev_id = 0;
                for (const auto& p : entry.postings) {
                    if (p.doc_id <= prev_id || p.doc_id > index.total_docs_ || p.tf < 1)
                        throw InputError("index file " + path + ": bad posting for term \"" +
                                         entry.term + "\"");
                    prev_id = p.doc_id;
                }
                index.entries_[entry.term] = std::move(entry);
            }
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("index file ") + path + ": " + e.what());
        }
        index.rebuild_doc_lengths();
        return index;
    }

    bool operator==(const InvertedIndex& other) const {
        return entries_ == other.entries_ && total_docs_ == other.total_docs_ &&
               avg_doc_len_ == other.avg_doc_len_;
    }

private:
    std::map<std::string, IndexEntry> entries_;
    int total_docs_{};
    double avg_doc_len_{};
    std::unordered_map<int, int> doc_lengths_;

    void rebuild_doc_lengths() {
        doc_lengths_.clear();
        for (const auto& [term, entry] : entries_)
            for (const auto& p : entry.postings) doc_lengths_[p.doc_id] += p.tf;
    }
};

}  // namespace sentisearch
