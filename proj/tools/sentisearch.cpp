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

// Command-line front end: ingest, crawl, index, search, sentiment,
// evaluate, stats and lexicon-check subcommands over the library.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sentisearch/corpus.hpp"
#include "sentisearch/crawler.hpp"
#include "sentisearch/embeddings.hpp"
#include "sentisearch/errors.hpp"
#include "sentisearch/evaluation.hpp"
#include "sentisearch/format.hpp"
#include "sentisearch/html.hpp"
#include "sentisearch/index.hpp"
#include "sentisearch/search.hpp"
#include "sentisearch/sentiment/engines.hpp"
#include "sentisearch/textprep.hpp"

namespace {

using namespace sentisearch;

struct CommonOptions {
    std::string corpus_path;
    std::string index_path;
    std::string config_path;
    std::string stopword_path;
    std::string lexicon_dir;
    std::string format = "table";
};

CategoryConfig load_config(const CommonOptions& opts) {
    return opts.config_path.empty() ? CategoryConfig::defaults()
                                    : CategoryConfig::load(opts.config_path);
}

StopwordList load_stopwords(const CommonOptions& opts) {
    return opts.stopword_path.empty() ? StopwordList::defaults()
                                      : StopwordList::load(opts.stopword_path);
}

std::vector<ModelKind> parse_models(const std::string& csv) {
    std::vector<ModelKind> models;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) models.push_back(model_from_string(item));
    if (models.empty()) throw ConfigError("no sentiment models requested");
    return models;
}

LexiconSet make_lexicons(const CommonOptions& opts) {
    if (!opts.lexicon_dir.empty()) return LexiconSet(opts.lexicon_dir);
    throw ConfigError(
        "no lexicon directory: pass --lexicon-dir or set SENTISEARCH_LEXICON_DIR");
}

nlohmann::ordered_json verdict_to_json(const SentimentVerdict& v) {
    nlohmann::ordered_json obj;
    obj["model"] = v.model;
    obj["polarity"] = std::string(to_string(v.polarity));
    obj["scores"] = v.scores;
    obj["covered_tokens"] = v.covered_tokens;
    obj["total_tokens"] = v.total_tokens;
    return obj;
}

std::string verdict_summary(const SentimentVerdict& v) {
    std::ostringstream out;
    out << to_string(v.polarity);
    bool first = true;
    out << " (";
    for (const auto& [key, value] : v.scores) {
        if (!first) out << ", ";
        first = false;
        out << key << "=" << fixed(value, 3);
    }
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------- ingest --

struct IngestOptions {
    CommonOptions common;
    std::string input_path;
    std::string out_path;
};

int run_ingest(const IngestOptions& opts) {
    const auto config = load_config(opts.common);
    const auto corpus = ingest_jsonl(opts.input_path, config);
    if (!opts.out_path.empty()) write_jsonl(corpus, opts.out_path);

    std::map<std::string, std::size_t> label_counts;
    for (const auto& doc : corpus.docs) ++label_counts[doc.label];
    if (opts.common.format == "json") {
        nlohmann::ordered_json obj;
        obj["documents"] = corpus.size();
        obj["labels"] = label_counts;
        if (!opts.out_path.empty()) obj["written"] = opts.out_path;
        std::cout << obj.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [label, count] : label_counts)
            rows.push_back({label, std::to_string(count)});
        rows.push_back({"total", std::to_string(corpus.size())});
        std::cout << text_table({"label", "documents"}, rows);
    }
    return kExitOk;
}

// ----------------------------------------------------------------- crawl --

struct CrawlOptions {
    CommonOptions common;
    std::string pages_path;
    std::string url, title, label;
    std::string out_path;
};

int run_crawl(const CrawlOptions& opts) {
    if (opts.common.config_path.empty())
        throw ConfigError("crawl needs --config with a crawl section");
    auto crawl_config = CrawlConfig::load(opts.common.config_path);
    const auto categories = load_config(opts.common);
    const std::string out = !opts.out_path.empty() ? opts.out_path
                            : !crawl_config.output_path.empty()
                                ? crawl_config.output_path
                                : throw ConfigError("no output path configured for crawl");

    if (!crawl_config.start_time.empty() && !crawl_config.end_time.empty()) {
        const auto now = sentisearch::detail::iso8601_utc_now();
        if (now < crawl_config.start_time || now > crawl_config.end_time)
            throw ConfigError("current time is outside the configured crawl window");
    }

    struct PageSpec {
        std::string url, title, label;
    };
    std::vector<PageSpec> specs;
    if (!opts.pages_path.empty()) {
        std::ifstream in(opts.pages_path);
        if (!in) throw IoError("cannot open pages file: " + opts.pages_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            nlohmann::json obj;
            try {
                obj = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                throw InputError("pages file line " + std::to_string(line_no) + ": " +
                                 e.what());
            }
            specs.push_back({obj.at("url").get<std::string>(),
                             obj.at("title").get<std::string>(),
                             obj.at("label").get<std::string>()});
        }
    }
    if (!opts.url.empty()) specs.push_back({opts.url, opts.title, opts.label});
    if (specs.empty()) throw InputError("nothing to crawl: pass --pages or --url");

    PageFetcher fetcher(crawl_config);
    std::size_t fetched = 0;
    for (const auto& spec : specs) {
        const auto canonical = categories.resolve(spec.label);
        if (!canonical) throw ConfigError("unknown category: " + spec.label);
        const auto page = fetcher.fetch(spec.url);
        auto doc = page_to_document(page, spec.title, *canonical);
        append_jsonl(doc, out);
        ++fetched;
        std::cerr << "fetched " << spec.url << " -> " << out << '\n';
    }
    if (opts.common.format == "json") {
        nlohmann::ordered_json obj;
        obj["fetched"] = fetched;
        obj["output"] = out;
        std::cout << obj.dump(2) << '\n';
    } else {
        std::cout << fetched << " page(s) appended to " << out << '\n';
    }
    return kExitOk;
}

// ----------------------------------------------------------------- index --

struct IndexOptions {
    CommonOptions common;
    std::string out_path;
    std::string vectors_path;
    SgnsConfig sgns;
};

int run_index(const IndexOptions& opts) {
    const auto config = load_config(opts.common);
    const auto stopwords = load_stopwords(opts.common);
    const auto corpus = ingest_jsonl(opts.common.corpus_path, config);
    const auto index = InvertedIndex::build(corpus, stopwords);
    index.save(opts.out_path);
    std::cout << "indexed " << index.total_docs() << " documents, "
              << index.entries().size() << " terms -> " << opts.out_path << '\n';

    if (!opts.vectors_path.empty()) {
        std::vector<std::vector<std::string>> streams;
        for (const auto& doc : corpus.docs)
            streams.push_back(stems_of(preprocess(doc.content, stopwords)));
        const auto result = train_sgns(streams, opts.sgns);
        save_vectors(result.matrix, opts.vectors_path);
        std::cout << "trained " << result.matrix.vocab.size() << "x" << result.matrix.dim
                  << " vectors -> " << opts.vectors_path << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- search --

struct SearchOptions {
    CommonOptions common;
    std::string query;
    std::string category;
    std::size_t top_k = 10;
    bool fuse_zipf = false;
    bool interactive = false;
    std::string log_path;
    std::string models_csv;
    std::string vectors_path;
    std::size_t suggest = 0;
    std::size_t related = 0;
};

void print_results(const std::vector<SearchResult>& results, const Corpus& corpus,
                   const std::string& format) {
    if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json obj;
            obj["doc_id"] = r.doc_id;
            obj["score"] = r.score;
            obj["label"] = corpus.by_id(r.doc_id).label;
            obj["title"] = r.title;
            obj["url"] = r.url;
            obj["snippet"] = r.snippet;
            obj["via_fallback"] = r.via_fallback;
            if (r.sentiment) obj["sentiment"] = verdict_to_json(*r.sentiment);
            arr.push_back(std::move(obj));
        }
        std::cout << arr.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    int rank = 1;
    for (const auto& r : results) {
        std::vector<std::string> row = {
            std::to_string(rank++),          std::to_string(r.doc_id),
            fixed(r.score, 4),               corpus.by_id(r.doc_id).label,
            r.title,                         r.via_fallback ? "yes" : "no",
        };
        if (r.sentiment) row.push_back(verdict_summary(*r.sentiment));
        rows.push_back(std::move(row));
    }
    std::vector<std::string> headers = {"rank", "doc", "score", "label", "title", "fallback"};
    if (!results.empty() && results.front().sentiment) headers.push_back("sentiment");
    std::cout << text_table(headers, rows);
    if (results.empty()) std::cout << "no results\n";
}

int run_search(const SearchOptions& opts) {
    const auto config = load_config(opts.common);
    const auto stopwords = load_stopwords(opts.common);
    const auto corpus = ingest_jsonl(opts.common.corpus_path, config);
    const auto index = InvertedIndex::load(opts.common.index_path);
    Bm25Params params;
    params.fuse_zipf = opts.fuse_zipf;

    std::optional<QueryLog> log;
    if (!opts.log_path.empty()) log.emplace(opts.log_path);

    std::optional<LexiconSet> lexicons;
    std::vector<ModelKind> models;
    if (!opts.models_csv.empty()) {
        models = parse_models(opts.models_csv);
        lexicons.emplace(make_lexicons(opts.common));
    }
    std::optional<EmbeddingMatrix> vectors;
    if (!opts.vectors_path.empty()) vectors = load_vectors(opts.vectors_path);

    auto run_one = [&](const std::string& raw) {
        auto query = make_query(raw, stopwords);
        auto results = opts.category.empty()
                           ? search(index, corpus, query, params, opts.top_k)
                           : smart_search(index, corpus, config, query, opts.category, params,
                                          opts.top_k, log ? &*log : nullptr);
        for (auto& r : results) {
            for (const auto model : models)
                r.sentiment = score_text(corpus.by_id(r.doc_id).content, model, *lexicons,
                                         stopwords);
        }
        print_results(results, corpus, opts.common.format);

        if (vectors && opts.suggest > 0) {
            for (const auto& tok : query.tokens) {
                if (!vectors->index_of(tok.stem)) continue;
                std::cout << "similar to \"" << tok.stem << "\":";
                for (const auto& rel : related_terms(*vectors, tok.stem, opts.suggest))
                    std::cout << ' ' << rel.term << " (" << fixed(rel.similarity, 3) << ")";
                std::cout << '\n';
            }
        }
        if (vectors && opts.related > 0) {
            const auto related = related_documents(*vectors, corpus, stopwords,
                                                   stems_of(query.tokens), opts.related);
            std::cout << "related documents:";
            for (const auto& rel : related)
                std::cout << ' ' << rel.doc_id << " (" << fixed(rel.similarity, 3) << ")";
            std::cout << '\n';
        }
    };

    if (opts.interactive) {
        std::string line;
        while (true) {
            std::cerr << "query> " << std::flush;
            if (!std::getline(std::cin, line)) break;
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            try {
                run_one(line);
            } catch (const InputError& e) {
                std::cerr << "error: " << e.what() << '\n';
            }
        }
        return kExitOk;
    }
    if (opts.query.empty()) throw InputError("search needs --query or --interactive");
    run_one(opts.query);
    return kExitOk;
}

// ------------------------------------------------------------- sentiment --

struct SentimentOptions {
    CommonOptions common;
    std::string text;
    std::string batch_in;
    std::string batch_out;
    std::string models_csv;
};

int run_sentiment(const SentimentOptions& opts) {
    const auto stopwords = load_stopwords(opts.common);
    auto lexicons = make_lexicons(opts.common);
    const auto models = parse_models(opts.models_csv);

    if (!opts.batch_in.empty()) {
        // batch mode: copy each input line with <TAB>pos<TAB>neg appended
        if (opts.batch_out.empty()) throw InputError("batch mode needs --out");
        std::ifstream in(opts.batch_in);
        if (!in) throw IoError("cannot open batch input: " + opts.batch_in);
        std::ofstream out(opts.batch_out);
        if (!out) throw IoError("cannot write batch output: " + opts.batch_out);
        if (models.size() != 1)
            throw ConfigError("batch mode scores with exactly one model");
        const auto render = [](double x) {
            if (x == static_cast<long long>(x)) return std::to_string(static_cast<long long>(x));
            return fixed(x, 3);
        };
        std::string line;
        while (std::getline(in, line)) {
            const auto v = score_text(line, models[0], lexicons, stopwords);
            const auto [pos, neg] = dual_scale_of(v);
            out << line << '\t' << render(pos) << '\t' << render(neg) << '\n';
        }
        std::cout << "batch written to " << opts.batch_out << '\n';
        return kExitOk;
    }

    if (!opts.text.empty()) {
        if (opts.common.format == "json") {
            auto arr = nlohmann::ordered_json::array();
            for (const auto model : models)
                arr.push_back(verdict_to_json(score_text(opts.text, model, lexicons, stopwords)));
            std::cout << arr.dump(2) << '\n';
        } else {
            std::vector<std::vector<std::string>> rows;
            for (const auto model : models) {
                const auto v = score_text(opts.text, model, lexicons, stopwords);
                rows.push_back({std::string(to_string(model)), verdict_summary(v)});
            }
            std::cout << text_table({"model", "verdict"}, rows);
        }
        return kExitOk;
    }

    if (opts.common.corpus_path.empty())
        throw InputError("sentiment needs --text, --batch or --corpus");
    const auto config = load_config(opts.common);
    const auto corpus = ingest_jsonl(opts.common.corpus_path, config);
    if (opts.common.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto model : models) {
            const auto run = classify_corpus(corpus, model, lexicons, stopwords);
            nlohmann::ordered_json entry;
            entry["model"] = std::string(to_string(model));
            entry["seconds"] = run.seconds;
            auto verdicts = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < run.verdicts.size(); ++i) {
                auto v = verdict_to_json(run.verdicts[i]);
                v["doc_id"] = corpus.docs[i].id;
                verdicts.push_back(std::move(v));
            }
            entry["verdicts"] = std::move(verdicts);
            arr.push_back(std::move(entry));
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        for (const auto model : models) {
            const auto run = classify_corpus(corpus, model, lexicons, stopwords);
            std::vector<std::vector<std::string>> rows;
            for (std::size_t i = 0; i < run.verdicts.size(); ++i)
                rows.push_back({std::to_string(corpus.docs[i].id),
                                std::string(to_string(run.verdicts[i].polarity)),
                                corpus.docs[i].title});
            std::cout << "model: " << to_string(model) << " ("
                      << fixed(run.seconds, 3) << "s)\n"
                      << text_table({"doc", "polarity", "title"}, rows) << '\n';
        }
    }
    return kExitOk;
}

// -------------------------------------------------------------- evaluate --

struct EvaluateOptions {
    CommonOptions common;
    std::string models_csv;
    double split_ratio = 0.0; // 0 = whole corpus
    std::uint64_t seed = 1;
    bool micro = false;
};

int run_evaluate(const EvaluateOptions& opts) {
    const auto config = load_config(opts.common);
    const auto stopwords = load_stopwords(opts.common);
    auto lexicons = make_lexicons(opts.common);
    const auto models = parse_models(opts.models_csv);
    auto corpus = ingest_jsonl(opts.common.corpus_path, config);
    if (opts.split_ratio > 0.0) {
        // train/test split in the configured ratio; evaluation runs on the
        // held-out test side
        auto [train, test] = split_train_test(corpus, opts.split_ratio, opts.seed);
        corpus = std::move(test);
    }
    const auto comparison = compare_models(corpus, models, lexicons, stopwords);

    if (opts.common.format == "json") {
        nlohmann::ordered_json obj;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : comparison.rows) rows.push_back(report_to_json(row));
        obj["models"] = std::move(rows);
        auto matrices = nlohmann::ordered_json::object();
        for (const auto& [model, matrix] : comparison.matrices)
            matrices[model] = matrix_to_json(matrix);
        obj["confusion"] = std::move(matrices);
        auto coverage = nlohmann::ordered_json::object();
        for (const auto& [model, cov] : comparison.coverage) {
            nlohmann::ordered_json c;
            c["rate"] = cov.rate;
            auto top = nlohmann::ordered_json::array();
            for (const auto& [token, count] : cov.top_uncovered)
                top.push_back({token, count});
            c["top_uncovered"] = std::move(top);
            coverage[model] = std::move(c);
        }
        obj["coverage"] = std::move(coverage);
        std::cout << obj.dump(2) << '\n';
        return kExitOk;
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto& row : comparison.rows) {
        rows.push_back({row.model,
                        fixed(opts.micro ? row.micro_precision : row.macro_precision),
                        fixed(opts.micro ? row.micro_recall : row.macro_recall),
                        fixed(opts.micro ? row.micro_f1 : row.macro_f1),
                        fixed(row.accuracy), fixed(row.misclassification),
                        fixed(row.coverage), fixed(row.seconds, 3)});
    }
    const std::string agg = opts.micro ? "micro" : "macro";
    std::cout << text_table({"model", agg + "-p", agg + "-r", agg + "-f1", "accuracy",
                             "misclass", "coverage", "seconds"},
                            rows);
    for (const auto& row : comparison.rows) {
        std::cout << "\nconfusion (" << row.model << "):\n"
                  << render_confusion(comparison.matrices.at(row.model));
        const auto& cov = comparison.coverage.at(row.model);
        if (!cov.top_uncovered.empty()) {
            std::cout << "most frequent uncovered tokens:";
            std::size_t shown = 0;
            for (const auto& [token, count] : cov.top_uncovered) {
                if (shown++ == 8) break;
                std::cout << ' ' << token << "(" << count << ")";
            }
            std::cout << '\n';
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------- stats --

struct StatsOptions {
    CommonOptions common;
    std::size_t preview = 10;
};

int run_stats(const StatsOptions& opts) {
    if (!opts.common.index_path.empty()) {
        const auto index = InvertedIndex::load(opts.common.index_path);
        if (opts.common.format == "json") {
            nlohmann::ordered_json obj;
            obj["documents"] = index.total_docs();
            obj["terms"] = index.entries().size();
            obj["avg_doc_len"] = index.avg_doc_len();
            std::cout << obj.dump(2) << '\n';
        } else {
            std::cout << "documents: " << index.total_docs() << '\n'
                      << "terms: " << index.entries().size() << '\n'
                      << "avg doc length: " << fixed(index.avg_doc_len(), 2) << '\n';
            std::vector<std::vector<std::string>> rows;
            std::size_t shown = 0;
            for (const auto& [term, entry] : index.entries()) {
                if (shown++ == opts.preview) break;
                std::ostringstream docs;
                for (std::size_t i = 0; i < entry.postings.size() && i < 4; ++i) {
                    const auto& p = entry.postings[i];
                    docs << "[" << p.doc_id << ", " << p.tf << ", " << fixed(p.weight, 0)
                         << "]";
                }
                if (entry.postings.size() > 4) docs << "...";
                rows.push_back({term, std::to_string(entry.df), docs.str()});
            }
            std::cout << text_table({"term", "df", "docs"}, rows);
        }
        return kExitOk;
    }

    if (opts.common.corpus_path.empty())
        throw InputError("stats needs --corpus or --index");
    const auto config = load_config(opts.common);
    const auto stopwords = load_stopwords(opts.common);
    const auto corpus = ingest_jsonl(opts.common.corpus_path, config);
    const auto stats = corpus_stats(corpus, stopwords);
    if (opts.common.format == "json") {
        nlohmann::ordered_json obj;
        obj["observations"] = stats.observations;
        obj["unique_fraction"] = stats.unique_fraction;
        obj["word_count"] = stats.word_count;
        obj["punctuation_chars"] = stats.punctuation_chars;
        obj["number_tokens"] = stats.number_tokens;
        obj["stopword_histogram"] = stats.stopword_histogram;
        std::cout << obj.dump(2) << '\n';
    } else {
        std::cout << "observations: " << stats.observations << '\n'
                  << "unique content: " << fixed(stats.unique_fraction * 100.0, 1) << "%\n"
                  << "words: " << stats.word_count << '\n'
                  << "punctuation characters: " << stats.punctuation_chars << '\n'
                  << "numeric tokens: " << stats.number_tokens << '\n';
        std::vector<std::pair<std::size_t, std::string>> top;
        for (const auto& [word, count] : stats.stopword_histogram)
            top.emplace_back(count, word);
        std::sort(top.rbegin(), top.rend());
        std::cout << "top stopwords:";
        for (std::size_t i = 0; i < top.size() && i < 10; ++i)
            std::cout << ' ' << top[i].second << "(" << top[i].first << ")";
        std::cout << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------- lexicon-check --

int run_lexicon_check(const CommonOptions& common) {
    auto lexicons = make_lexicons(common);
    std::vector<std::vector<std::string>> rows;
    auto try_one = [&](const std::string& name, auto&& loader) {
        try {
            rows.push_back({name, std::to_string(loader()), "ok"});
        } catch (const Error& e) {
            rows.push_back({name, "-", e.what()});
        }
    };
    try_one("vader", [&] { return lexicons.vader().size(); });
    try_one("sentiwordnet", [&] { return lexicons.sentiwordnet().entry_count(); });
    try_one("sentistrength", [&] { return lexicons.sentistrength().size(); });
    try_one("liu-hu", [&] { return lexicons.liu_hu().size(); });
    try_one("afinn", [&] { return lexicons.afinn().size(); });

    if (common.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : rows)
            arr.push_back({{"lexicon", row[0]}, {"entries", row[1]}, {"status", row[2]}});
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << text_table({"lexicon", "entries", "status"}, rows);
    }
    for (const auto& row : rows)
        if (row[2] != "ok") throw ConfigError("lexicon \"" + row[0] + "\": " + row[2]);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"news search engine with lexicon-based sentiment analysis"};
    app.require_subcommand(1);

    auto add_common = [](CLI::App* sub, CommonOptions& common, bool with_lexicons = false) {
        sub->add_option("--corpus", common.corpus_path, "corpus JSONL file");
        sub->add_option("--index", common.index_path, "index JSON file");
        sub->add_option("--config", common.config_path, "category/crawl config JSON");
        sub->add_option("--stopwords", common.stopword_path, "stopword list file");
        sub->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
        if (with_lexicons)
            sub->add_option("--lexicon-dir", common.lexicon_dir, "lexicon directory")
                ->envname("SENTISEARCH_LEXICON_DIR");
    };

    IngestOptions ingest_opts;
    auto* ingest_cmd = app.add_subcommand("ingest", "validate and normalize a corpus file");
    add_common(ingest_cmd, ingest_opts.common);
    ingest_cmd->add_option("--input", ingest_opts.input_path, "raw JSONL input")->required();
    ingest_cmd->add_option("--out", ingest_opts.out_path, "write normalized corpus here");

    CrawlOptions crawl_opts;
    auto* crawl_cmd = app.add_subcommand("crawl", "fetch pages and append documents");
    add_common(crawl_cmd, crawl_opts.common);
    crawl_cmd->add_option("--pages", crawl_opts.pages_path,
                          "JSONL file of {url, title, label} page specs");
    crawl_cmd->add_option("--url", crawl_opts.url, "single page url");
    crawl_cmd->add_option("--title", crawl_opts.title, "title for --url");
    crawl_cmd->add_option("--label", crawl_opts.label, "category label for --url");
    crawl_cmd->add_option("--out", crawl_opts.out_path, "override configured output path");

    IndexOptions index_opts;
    auto* index_cmd = app.add_subcommand("index", "build the inverted index");
    add_common(index_cmd, index_opts.common);
    index_cmd->add_option("--out", index_opts.out_path, "index output file")->required();
    index_cmd->add_option("--vectors", index_opts.vectors_path,
                          "also train embeddings and write this vector file");
    index_cmd->add_option("--dim", index_opts.sgns.dimension, "embedding dimension");
    index_cmd->add_option("--window", index_opts.sgns.window, "context window");
    index_cmd->add_option("--negatives", index_opts.sgns.negatives, "negatives per pair");
    index_cmd->add_option("--epochs", index_opts.sgns.epochs, "training epochs");
    index_cmd->add_option("--lr", index_opts.sgns.learning_rate, "initial learning rate");
    index_cmd->add_option("--min-count", index_opts.sgns.min_count, "vocabulary min count");
    index_cmd->add_option("--seed", index_opts.sgns.seed, "training seed");

    SearchOptions search_opts;
    auto* search_cmd = app.add_subcommand("search", "run ranked keyword queries");
    add_common(search_cmd, search_opts.common, /*with_lexicons=*/true);
    search_cmd->add_option("--query", search_opts.query, "query string");
    search_cmd->add_option("--category", search_opts.category,
                           "restrict results to one category (smart search)");
    search_cmd->add_option("--top-k", search_opts.top_k, "result list size");
    search_cmd->add_flag("--fuse-zipf", search_opts.fuse_zipf,
                         "multiply BM25 contributions by stored Zipf weights");
    search_cmd->add_flag("--interactive", search_opts.interactive,
                         "read queries from stdin until end of input");
    search_cmd->add_option("--log", search_opts.log_path, "query log JSONL path");
    search_cmd->add_option("--models", search_opts.models_csv,
                           "attach sentiment verdicts from these models (csv)");
    search_cmd->add_option("--vectors", search_opts.vectors_path, "embedding vector file");
    search_cmd->add_option("--suggest", search_opts.suggest,
                           "print k similar terms per query stem (needs --vectors)");
    search_cmd->add_option("--related", search_opts.related,
                           "print k related documents (needs --vectors)");

    SentimentOptions sentiment_opts;
    auto* sentiment_cmd = app.add_subcommand("sentiment", "classify text polarity");
    add_common(sentiment_cmd, sentiment_opts.common, /*with_lexicons=*/true);
    sentiment_cmd->add_option("--text", sentiment_opts.text, "score one text");
    sentiment_cmd->add_option("--batch", sentiment_opts.batch_in,
                              "batch input, one text per line");
    sentiment_cmd->add_option("--out", sentiment_opts.batch_out, "batch output path");
    sentiment_cmd->add_option("--models", sentiment_opts.models_csv, "models (csv)")
        ->required();

    EvaluateOptions evaluate_opts;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "compare models on gold labels");
    add_common(evaluate_cmd, evaluate_opts.common, /*with_lexicons=*/true);
    evaluate_cmd->add_option("--models", evaluate_opts.models_csv, "models (csv)")->required();
    evaluate_cmd->add_option("--split", evaluate_opts.split_ratio,
                             "train ratio; evaluate on the held-out remainder");
    evaluate_cmd->add_option("--seed", evaluate_opts.seed, "split seed");
    evaluate_cmd->add_flag("--micro", evaluate_opts.micro,
                           "report micro instead of macro aggregates");

    StatsOptions stats_opts;
    auto* stats_cmd = app.add_subcommand("stats", "corpus or index statistics");
    add_common(stats_cmd, stats_opts.common);
    stats_cmd->add_option("--preview", stats_opts.preview, "index preview rows");

    CommonOptions lexcheck_common;
    auto* lexcheck_cmd = app.add_subcommand("lexicon-check", "validate lexicon files");
    add_common(lexcheck_cmd, lexcheck_common, /*with_lexicons=*/true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << '\n';
        return sentisearch::kExitInput;
    }

    try {
        if (ingest_cmd->parsed()) return run_ingest(ingest_opts);
        if (crawl_cmd->parsed()) return run_crawl(crawl_opts);
        if (index_cmd->parsed()) return run_index(index_opts);
        if (search_cmd->parsed()) return run_search(search_opts);
        if (sentiment_cmd->parsed()) return run_sentiment(sentiment_opts);
        if (evaluate_cmd->parsed()) return run_evaluate(evaluate_opts);
        if (stats_cmd->parsed()) return run_stats(stats_opts);
        if (lexcheck_cmd->parsed()) return run_lexicon_check(lexcheck_common);
    } catch (const sentisearch::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return sentisearch::kExitIo;
    } catch (const sentisearch::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return sentisearch::kExitConfig;
    } catch (const sentisearch::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return sentisearch::kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
