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
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "sentisearch/corpus.hpp"
#include "sentisearch/errors.hpp"
#include "sentisearch/index.hpp"
#include "sentisearch/sentiment/verdict.hpp"
#include "sentisearch/textprep.hpp"

namespace sentisearch {

/// Okapi BM25 parameters: k1 saturates term frequency, b scales length
/// normalization. `fuse_zipf` additionally multiplies each term's
/// contribution by its stored Zipf weight (off by default; ranking quality
/// with fusion is unvalidated).
struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
    bool fuse_zipf = false;
};

struct Query {
    std::string raw;
    TokenStream tokens;
    std::optional<std::string> category;
};

inline Query make_query(std::string raw, const StopwordList& stopwords,
                        std::optional<std::string> category = std::nullopt) {
    Query q;
    q.tokens = preprocess(raw, stopwords, StemMode::porter);
    q.raw = std::move(raw);
    q.category = std::move(category);
    return q;
}

struct SearchResult {
    int doc_id{};
    double score{};
    std::string title;
    std::string url;
    std::string snippet;
    bool via_fallback{};
    std::optional<SentimentVerdict> sentiment;
};

/// BM25 score of one document against a list of query stems. Stems are
/// scored as given (a repeated stem contributes twice); terms absent from
/// the document contribute exactly 0. idf uses the +1-smoothed form
/// ln((N - df + 0.5) / (df + 0.5) + 1), nonnegative for every df.
inline double bm25_score(const InvertedIndex& index, int doc_id,
                         const std::vector<std::string>& stems, const Bm25Params& params) {
    if (doc_id < 1 || doc_id > index.total_docs())
        throw InputError("bm25_score: doc id out of range: " + std::to_string(doc_id));
    const double n_docs = static_cast<double>(index.total_docs());
    const double len = static_cast<double>(index.doc_length(doc_id));
    const double avg = index.avg_doc_len();
    double score = 0.0;
    for (const auto& stem : stems) {
        const IndexEntry* entry = index.lookup(stem);
        if (entry == nullptr) continue;
        const auto posting = std::lower_bound(
            entry->postings.begin(), entry->postings.end(), doc_id,
            [](const PostingEntry& p, int id) { return p.doc_id < id; });
        if (posting == entry->postings.end() || posting->doc_id != doc_id) continue;
        const double df = static_cast<double>(entry->df);
        const double idf = std::log((n_docs - df + 0.5) / (df + 0.5) + 1.0);
        const double tf = static_cast<double>(posting->tf);
        const double norm = 1.0 - params.b + params.b * (avg > 0.0 ? len / avg : 0.0);
        double contribution = idf * tf * (params.k1 + 1.0) / (tf + params.k1 * norm);
        if (params.fuse_zipf) contribution *= posting->weight;
        score += contribution;
    }
    return score;
}

namespace detail {

inline std::string make_snippet(const std::string& content, std::size_t limit = 200) {
    if (content.size() <= limit) return content;
    std::size_t cut = content.rfind(' ', limit);
    if (cut == std::string::npos || cut == 0) cut = limit;
    return content.substr(0, cut) + "...";
}

inline std::vector<SearchResult> rank_candidates(const InvertedIndex& index,
                                                 const Corpus& corpus,
                                                 const std::set<int>& candidates,
                                                 const std::vector<std::string>& stems,
                                                 const Bm25Params& params, std::size_t top_k,
                                                 bool via_fallback) {
    std::vector<SearchResult> results;
    results.reserve(candidates.size());
    for (const int doc_id : candidates) {
        const auto& doc = corpus.by_id(doc_id);
        SearchResult r;
        r.doc_id = doc_id;
        r.score = bm25_score(index, doc_id, stems, params);
        r.title = doc.title;
        r.url = doc.url;
        r.snippet = make_snippet(doc.content);
        r.via_fallback = via_fallback;
        results.push_back(std::move(r));
    }
    std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
    if (results.size() > top_k) results.resize(top_k);
    return results;
}

}  // namespace detail

/// Ranked keyword search. Candidates are the union of the query stems'
/// posting lists (OR semantics); when that union is empty the most similar
/// indexed terms stand in for the query and results are flagged
/// `via_fallback`.
inline std::vector<SearchResult> search(const InvertedIndex& index, const Corpus& corpus,
                                        const Query& query, const Bm25Params& params = {},
                                        std::size_t top_k = 10) {
    if (top_k < 1) throw InputError("search: top_k must be >= 1");
    if (query.tokens.empty())
        throw InputError("query \"" + query.raw + "\" has no searchable terms");
    const auto stems = stems_of(query.tokens);

    std::set<int> candidates;
    for (const auto& stem : stems)
        if (const IndexEntry* entry = index.lookup(stem))
            for (const auto& p : entry->postings) candidates.insert(p.doc_id);

    bool via_fallback = false;
    std::vector<std::string> effective_stems = stems;
    if (candidates.empty()) {
        via_fallback = true;
        effective_stems.clear();
        constexpr std::size_t kFuzzyPerTerm = 3;
        for (const auto& stem : stems)
            for (const IndexEntry* entry : index.fuzzy_lookup(stem, kFuzzyPerTerm)) {
                if (std::find(effective_stems.begin(), effective_stems.end(), entry->term) ==
                    effective_stems.end())
                    effective_stems.push_back(entry->term);
                for (const auto& p : entry->postings) candidates.insert(p.doc_id);
            }
        if (candidates.empty()) return {};
    }
    return detail::rank_candidates(index, corpus, candidates, effective_stems, params, top_k,
                                   via_fallback);
}

/// Append-only JSONL query log.
class QueryLog {
public:
    explicit QueryLog(std::string path) : path_(std::move(path)) {}

    const std::string& path() const { return path_; }

    void append(const nlohmann::ordered_json& record) const {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw IoError("cannot append to query log: " + path_);
        out << record.dump() << '\n';
    }

private:
    std::string path_;
};

namespace detail {

inline std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

/// Matches the query against the configured categories (a query matches a
/// category when any query stem equals any stemmed category keyword) and
/// appends {ts, raw, stems, category} to the log.
inline std::optional<std::string> record_query(const Query& query, const CategoryConfig& config,
                                               const QueryLog& log) {
    std::optional<std::string> matched;
    for (const auto& name : config.names()) {
        for (const auto& keyword : config.keywords(name)) {
            for (const auto& kw_token : tokenize(keyword)) {
                const std::string kw_stem = porter_stem(kw_token);
                for (const auto& tok : query.tokens) {
                    if (tok.stem == kw_stem) {
                        matched = name;
                        break;
                    }
                }
                if (matched) break;
            }
            if (matched) break;
        }
        if (matched) break;
    }
    nlohmann::ordered_json record;
    record["ts"] = detail::iso8601_utc_now();
    record["raw"] = query.raw;
    record["stems"] = stems_of(query.tokens);
    record["category"] = matched ? nlohmann::ordered_json(*matched) : nullptr;
    log.append(record);
    return matched;
}

/// Category-constrained "smart" search: identical to `search` but the
/// candidate documents are restricted to the requested label, and the query
/// is recorded when a log is attached.
inline std::vector<SearchResult> smart_search(const InvertedIndex& index, const Corpus& corpus,
                                              const CategoryConfig& config, const Query& query,
                                              const std::string& category,
                                              const Bm25Params& params = {},
                                              std::size_t top_k = 10,
                                              const QueryLog* log = nullptr) {
    const auto canonical = config.resolve(category);
    if (!canonical) throw ConfigError("unknown category: " + category);
    if (top_k < 1) throw InputError("search: top_k must be >= 1");
    if (query.tokens.empty())
        throw InputError("query \"" + query.raw + "\" has no searchable terms");
    if (log != nullptr) record_query(query, config, *log);

    const auto stems = stems_of(query.tokens);
    std::set<int> candidates;
    for (const auto& stem : stems)
        if (const IndexEntry* entry = index.lookup(stem))
            for (const auto& p : entry->postings)
                if (corpus.by_id(p.doc_id).label == *canonical) candidates.insert(p.doc_id);

    bool via_fallback = false;
    std::vector<std::string> effective_stems = stems;
    if (candidates.empty()) {
        via_fallback = true;
        effective_stems.clear();
        constexpr std::size_t kFuzzyPerTerm = 3;
        for (const auto& stem : stems)
            for (const IndexEntry* entry : index.fuzzy_lookup(stem, kFuzzyPerTerm)) {
                if (std::find(effective_stems.begin(), effective_stems.end(), entry->term) ==
                    effective_stems.end())
                    effective_stems.push_back(entry->term);
                for (const auto& p : entry->postings)
                    if (corpus.by_id(p.doc_id).label == *canonical) candidates.insert(p.doc_id);
            }
        if (candidates.empty()) return {};
    }
    return detail::rank_candidates(index, corpus, candidates, effective_stems, params, top_k,
                                   via_fallback);
}

}  // namespace sentisearch
