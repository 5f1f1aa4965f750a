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
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "sentisearch/errors.hpp"
#include "sentisearch/rng.hpp"
#include "sentisearch/textprep.hpp"

namespace sentisearch {

/// One news item. Ids are 1-based row indices assigned at ingestion.
struct Document {
    int id{};
    std::string url;
    std::string content;
    std::string date;
    std::string title;
    std::string label;
    std::optional<std::string> polarity; // gold polarity, evaluation fixtures only

    bool operator==(const Document&) const = default;
};

/// The embedded category set with per-category seed keywords. Category
/// names are unique case-insensitively; order is preserved.
class CategoryConfig {
public:
    CategoryConfig() = default;

    CategoryConfig(std::vector<std::pair<std::string, std::vector<std::string>>> entries) {
        for (auto& [name, keywords] : entries) add(name, keywords);
        if (names_.empty()) throw ConfigError("category config needs at least one category");
    }

    static CategoryConfig defaults() {
        return CategoryConfig({
            {"Covid", {"covid", "coronavirus", "lockdown", "pandemic"}},
            {"Vaccine", {"vaccine", "vaccination", "jab", "dose"}},
            {"Travel", {"travel", "flight", "quarantine", "border"}},
        });
    }

    /// Reads the "categories" object of the JSON config file, preserving
    /// the order in which categories are written.
    static CategoryConfig load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open config file: " + path);
        nlohmann::ordered_json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("config file ") + path + ": " + e.what());
        }
        if (!doc.contains("categories") || !doc["categories"].is_object())
            throw ConfigError("config file " + path + ": missing \"categories\" object");
        std::vector<std::pair<std::string, std::vector<std::string>>> entries;
        for (const auto& [name, value] : doc["categories"].items()) {
            std::vector<std::string> keywords;
            for (const auto& k : value) keywords.push_back(k.get<std::string>());
            entries.emplace_back(name, std::move(keywords));
        }
        return CategoryConfig(std::move(entries));
    }

    const std::vector<std::string>& names() const { return names_; }

    /// Case-insensitive membership check; returns the canonical name.
    std::optional<std::string> resolve(std::string_view name) const {
        const std::string key = lower(name);
        for (const auto& n : names_)
            if (lower(n) == key) return n;
        return std::nullopt;
    }

    bool has(std::string_view name) const { return resolve(name).has_value(); }

    const std::vector<std::string>& keywords(const std::string& category) const {
        const auto canonical = resolve(category);
        if (!canonical) throw ConfigError("unknown category: " + category);
        return keywords_.at(*canonical);
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::vector<std::string>> keywords_;

    static std::string lower(std::string_view s) {
        std::string out(s);
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return out;
    }

    void add(const std::string& name, std::vector<std::string>& keywords) {
        if (has(name)) throw ConfigError("duplicate category (case-insensitive): " + name);
        names_.push_back(name);
        keywords_[name] = std::move(keywords);
    }
};

struct Corpus {
    std::vector<Document> docs;

    std::size_t size() const { return docs.size(); }
    bool empty() const { return docs.empty(); }

    /// Documents are stored in id order, id = index + 1.
    const Document& by_id(int id) const {
        if (id < 1 || static_cast<std::size_t>(id) > docs.size())
            throw InputError("document id out of range: " + std::to_string(id));
        return docs[static_cast<std::size_t>(id) - 1];
    }
};

/// Descriptive statistics over a corpus. Punctuation is counted per
/// character occurrence and numbers as maximal digit runs; the counting
/// unit for these two is a reporting convention, not a contract.
struct CorpusStats {
    std::size_t observations{};
    double unique_fraction{};
    std::size_t word_count{};
    std::map<std::string, std::size_t> stopword_histogram;
    std::size_t punctuation_chars{};
    std::size_t number_tokens{};
};

namespace detail {

inline std::string json_string_field(const nlohmann::json& obj, const char* field,
                                     std::size_t line_no) {
    if (!obj.contains(field))
        throw InputError("line " + std::to_string(line_no) + ": missing field \"" + field + "\"");
    const auto& v = obj.at(field);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError("line " + std::to_string(line_no) + ": field \"" + field +
                     "\" must be a string");
}

}  // namespace detail

/// Reads a UTF-8 JSONL corpus (one document object per line, fields
/// url/content/date/title/label, optional polarity) and assigns sequential
/// ids. Records whose label is not in the configured category set are
/// rejected.
inline Corpus ingest_jsonl(const std::string& path, const CategoryConfig& config) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file: " + path);
    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!obj.is_object())
            throw InputError("line " + std::to_string(line_no) + ": expected a JSON object");
        Document doc;
        doc.id = static_cast<int>(corpus.docs.size()) + 1;
        doc.url = detail::json_string_field(obj, "url", line_no);
        doc.content = detail::json_string_field(obj, "content", line_no);
        doc.date = detail::json_string_field(obj, "date", line_no);
        doc.title = detail::json_string_field(obj, "title", line_no);
        doc.label = detail::json_string_field(obj, "label", line_no);
        if (doc.content.empty())
            throw InputError("line " + std::to_string(line_no) + ": empty \"content\"");
        const auto canonical = config.resolve(doc.label);
        if (!canonical)
            throw InputError("line " + std::to_string(line_no) + ": label \"" + doc.label +
                             "\" is not a configured category");
        doc.label = *canonical;
        if (obj.contains("polarity"))
            doc.polarity = detail::json_string_field(obj, "polarity", line_no);
        corpus.docs.push_back(std::move(doc));
    }
    return corpus;
}

inline nlohmann::ordered_json document_to_json(const Document& doc) {
    nlohmann::ordered_json obj;
    obj["url"] = doc.url;
    obj["content"] = doc.content;
    obj["date"] = doc.date;
    obj["title"] = doc.title;
    obj["label"] = doc.label;
    if (doc.polarity) obj["polarity"] = *doc.polarity;
    return obj;
}

/// Writes the corpus back as JSONL; ingest(write(corpus)) round-trips
/// field-by-field.
inline void write_jsonl(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write corpus file: " + path);
    for (const auto& doc : corpus.docs) out << document_to_json(doc).dump() << '\n';
}

inline void append_jsonl(const Document& doc, const std::string& path) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cannot append to corpus file: " + path);
    out << document_to_json(doc).dump() << '\n';
}

inline CorpusStats corpus_stats(const Corpus& corpus, const StopwordList& stopwords) {
    if (corpus.empty()) throw InputError("corpus_stats: empty corpus");
    CorpusStats stats;
    stats.observations = corpus.size();
    std::unordered_set<std::string> distinct;
    for (const auto& doc : corpus.docs) {
        distinct.insert(doc.content);
        std::istringstream words(doc.content);
        std::string w;
        while (words >> w) {
            ++stats.word_count;
            // trim punctuation from the edges, lowercase, then match
            std::size_t b = 0, e = w.size();
            while (b < e && !std::isalnum(static_cast<unsigned char>(w[b]))) ++b;
            while (e > b && !std::isalnum(static_cast<unsigned char>(w[e - 1]))) --e;
            std::string core = w.substr(b, e - b);
            std::transform(core.begin(), core.end(), core.begin(), [](unsigned char c) {
                return static_cast<char>(std::tolower(c));
            });
            if (!core.empty() && stopwords.contains(core)) ++stats.stopword_histogram[core];
        }
        bool in_digits = false;
        for (const char ch : doc.content) {
            const auto c = static_cast<unsigned char>(ch);
            if (std::ispunct(c)) ++stats.punctuation_chars;
            if (std::isdigit(c)) {
                if (!in_digits) ++stats.number_tokens;
                in_digits = true;
            } else {
                in_digits = false;
            }
        }
    }
    stats.unique_fraction =
        static_cast<double>(distinct.size()) / static_cast<double>(corpus.size());
    return stats;
}

/// Seeded uniform split. |train| = round(ratio * N); the two halves are
/// disjoint, keep id order, and are identical across runs for identical
/// (corpus, ratio, seed). With `stratified` the same split ratio is applied
/// per label, using largest-remainder allocation so the global train size
/// still equals round(ratio * N).
inline std::pair<Corpus, Corpus> split_train_test(const Corpus& corpus, double ratio,
                                                  std::uint64_t seed, bool stratified = false) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw InputError("split ratio must be inside (0,1)");
    if (corpus.size() < 2) throw InputError("split needs at least 2 documents");

    const std::size_t n = corpus.size();
    const auto train_target =
        static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));

    std::vector<std::size_t> train_idx;
    if (!stratified) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        SplitMix64 rng(seed);
        shuffle(order, rng);
        train_idx.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train_target));
    } else {
        std::map<std::string, std::vector<std::size_t>> by_label;
        for (std::size_t i = 0; i < n; ++i) by_label[corpus.docs[i].label].push_back(i);
        // largest-remainder allocation of the train budget across labels
        std::vector<std::pair<double, std::string>> remainders;
        std::map<std::string, std::size_t> quota;
        std::size_t assigned = 0;
        for (const auto& [label, idx] : by_label) {
            const double exact = ratio * static_cast<double>(idx.size());
            quota[label] = static_cast<std::size_t>(exact);
            assigned += quota[label];
            remainders.emplace_back(-(exact - std::floor(exact)), label);
        }
        std::sort(remainders.begin(), remainders.end());
        for (const auto& [neg_rem, label] : remainders) {
            if (assigned >= train_target) break;
            if (quota[label] < by_label[label].size()) {
                ++quota[label];
                ++assigned;
            }
        }
        SplitMix64 rng(seed);
        for (auto& [label, idx] : by_label) {
            shuffle(idx, rng);
            train_idx.insert(train_idx.end(), idx.begin(),
                             idx.begin() + static_cast<std::ptrdiff_t>(quota[label]));
        }
    }

    std::vector<bool> in_train(n, false);
    for (const auto i : train_idx) in_train[i] = true;
    Corpus train, test;
    for (std::size_t i = 0; i < n; ++i)
        (in_train[i] ? train : test).docs.push_back(corpus.docs[i]);
    return {std::move(train), std::move(test)};
}

}  // namespace sentisearch
