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

// Acceptance suite: runs each release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fail.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sentisearch/corpus.hpp"
#include "sentisearch/embeddings.hpp"
#include "sentisearch/evaluation.hpp"
#include "sentisearch/index.hpp"
#include "sentisearch/rng.hpp"
#include "sentisearch/search.hpp"
#include "sentisearch/sentiment/engines.hpp"
#include "sentisearch/textprep.hpp"

using namespace sentisearch;
namespace fs = std::filesystem;

namespace {

const std::string kData = SENTISEARCH_DATA_DIR;

struct Checker {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
    int id;
    std::string name;
    std::function<void(Checker&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::vector<std::string>& acceptance_vocab() {
    static const std::vector<std::string> kVocab = {
        "covid",  "vaccine", "travel",  "border",   "flight",  "doctor", "nurse",
        "summer", "winter",  "economy", "minister", "school",  "virus",  "variant",
        "mask",   "beach",   "airport", "hotel",    "spain",   "france", "kent",
        "murder", "officer", "arrest",  "woodland", "remains", "human",  "rules",
        "people", "outdoor", "meeting", "scotland", "bbc",     "news",   "sarah",
    };
    return kVocab;
}

std::string fmt(double value, int digits = 4) {
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << value;
    return out.str();
}

// --------------------------------------------------------------------------

void criterion_vader(Checker& c) {
    const auto lexicon = ValenceLexicon::load(kData + "/lexicons/vader_lexicon.txt");
    const auto start = std::chrono::steady_clock::now();

    const auto book = vader_score("The book was good", lexicon);
    c.require(std::fabs(book.scores.at("compound") - 0.4404) <= 0.001,
              "\"The book was good\" compound 0.4404, got " +
                  fmt(book.scores.at("compound")));
    c.require(std::fabs(book.scores.at("pos") - 0.492) <= 0.001,
              "\"The book was good\" pos 0.492, got " + fmt(book.scores.at("pos"), 3));
    c.require(std::fabs(book.scores.at("neu") - 0.508) <= 0.001,
              "\"The book was good\" neu 0.508, got " + fmt(book.scores.at("neu"), 3));
    c.require(std::fabs(book.scores.at("neg") - 0.0) <= 0.001,
              "\"The book was good\" neg 0.0, got " + fmt(book.scores.at("neg"), 3));

    // published row, asserted exactly as printed
    const auto truncated = vader_score("VADER is not smart nor funny.", lexicon);
    c.require(std::fabs(truncated.scores.at("compound") - (-0.7424)) <= 0.001,
              "\"VADER is not smart nor funny.\" compound -0.7424, got " +
                  fmt(truncated.scores.at("compound")));
    c.require(std::fabs(truncated.scores.at("neg") - 0.646) <= 0.001,
              "\"VADER is not smart nor funny.\" neg 0.646, got " +
                  fmt(truncated.scores.at("neg"), 3));

    // the untruncated sentence the published scores actually belong to
    const auto full = vader_score("VADER is not smart, handsome, nor funny.", lexicon);
    const bool full_ok = std::fabs(full.scores.at("compound") - (-0.7424)) <= 0.001 &&
                         std::fabs(full.scores.at("neg") - 0.646) <= 0.001;
    c.note(std::string("cross-check \"VADER is not smart, handsome, nor funny.\" -> ") +
           "compound " + fmt(full.scores.at("compound")) + ", neg " +
           fmt(full.scores.at("neg"), 3) + (full_ok ? " (matches -0.7424/0.646)" : ""));
    if (!c.ok && full_ok)
        c.note("the published -0.7424/0.646 pair is the reference output for the sentence "
               "WITH \"handsome,\"; the truncated sentence scores " +
               fmt(truncated.scores.at("compound")) +
               " under the reference rule engine, so the row as printed cannot pass");

    const auto mixed = vader_score("Today only kinda sux! But I'll get by, lol", lexicon);
    c.require(std::fabs(mixed.scores.at("compound") - 0.5249) <= 0.001,
              "\"Today only kinda sux! ...\" compound 0.5249, got " +
                  fmt(mixed.scores.at("compound")));

    const double elapsed = seconds_since(start);
    c.require(elapsed < 1.0, "runtime < 1 s, got " + fmt(elapsed, 3));
}

void criterion_afinn(Checker& c) {
    const auto lexicon = IntegerLexicon::load(kData + "/lexicons/afinn-111.txt");
    std::vector<std::string> tokens;
    {
        std::istringstream ss("afinn is very good");
        std::string w;
        while (ss >> w) tokens.push_back(w);
    }
    const auto v = afinn_score(tokens, lexicon);
    c.require(v.scores.at("score") == 3.0,
              "\"AFINN is very good\" score 3, got " + fmt(v.scores.at("score"), 0));

    const std::vector<std::string> pool = {"lose", "loss", "love",  "loved", "lovable",
                                           "good", "bad",  "lucky", "walk",  "lowest",
                                           "win",  "fear", "talk",  "crisis"};
    SplitMix64 rng(1001);
    bool additive = true;
    for (int trial = 0; trial < 1000 && additive; ++trial) {
        std::vector<std::string> a, b;
        for (std::uint64_t i = 0, n = rng.next_below(10); i < n; ++i)
            a.push_back(pool[rng.next_below(pool.size())]);
        for (std::uint64_t i = 0, n = rng.next_below(10); i < n; ++i)
            b.push_back(pool[rng.next_below(pool.size())]);
        std::vector<std::string> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        additive = afinn_score(ab, lexicon).scores.at("score") ==
                   afinn_score(a, lexicon).scores.at("score") +
                       afinn_score(b, lexicon).scores.at("score");
    }
    c.require(additive, "additivity over 1000 random token-list pairs, exact");
}

void criterion_sentistrength(Checker& c) {
    const char* ref_env = std::getenv("SENTISEARCH_SENTISTRENGTH_REF");
    if (ref_env != nullptr && fs::exists(ref_env)) {
        const auto reference = DualScaleLexicon::load_dir(ref_env);
        const auto linux_row = sentistrength_score(
            "using Linux and loving it - so much nicer than windows... Looking forward to "
            "using the wysiwyg latex editor!",
            reference);
        c.require(linux_row.scores.at("positive") == 4 && linux_row.scores.at("negative") == -1,
                  "reference row 1 = (+4, -1)");
        const auto dentist_row = sentistrength_score(
            "@kirstiealley I hate going to the dentist.. !!!", reference);
        c.require(dentist_row.scores.at("positive") == 1 &&
                      dentist_row.scores.at("negative") == -4,
                  "reference row 2 = (+1, -4)");
        return;
    }
    c.note("reference word lists not available (set SENTISEARCH_SENTISTRENGTH_REF to check "
           "the published rows); running the sample-lexicon rule checks");

    const auto lexicon = DualScaleLexicon::from_lists(
        {{"awful", -4}, {"blissful", 5}, {"nice", 2}, {"hate", -4}},
        {{"slightly", -1}, {"extremely", 2}},
        {{"shock horror", -2}, {"whats good", 2}},
        {"cant", "never"},
        {{":'(", -1}, {":-D", 1}});
    const auto dual = [&](const char* text) {
        const auto v = sentistrength_score(text, lexicon);
        return std::pair<int, int>{static_cast<int>(v.scores.at("positive")),
                                   static_cast<int>(v.scores.at("negative"))};
    };
    c.require(dual("awful") == std::pair{1, -4}, "strength word: awful -> (+1, -4)");
    c.require(dual("blissful") == std::pair{5, -1}, "strength word: blissful -> (+5, -1)");
    c.require(dual("extremely nice") == std::pair{4, -1}, "booster: extremely nice -> (+4, -1)");
    c.require(dual("slightly awful") == std::pair{1, -3}, "booster: slightly awful -> (+1, -3)");
    c.require(dual("extremely awful") == std::pair{1, -5},
              "clamping: extremely awful -> (+1, -5)");
    c.require(dual("extremely blissful") == std::pair{5, -1},
              "clamping: extremely blissful -> (+5, -1)");
    c.require(dual("cant hate") == std::pair{4, -1}, "negation: cant hate -> (+4, -1)");
    c.require(dual("never nice") == std::pair{1, -2}, "negation: never nice -> (+1, -2)");
    c.require(dual("shock horror") == std::pair{1, -2}, "idiom: shock horror -> (+1, -2)");
    c.require(dual("whats good") == std::pair{2, -1}, "idiom: whats good -> (+2, -1)");
    c.require(dual(":-D") == std::pair{2, -1}, "emoticon: :-D -> (+2, -1)");
    c.require(dual(":'(") == std::pair{1, -2}, "emoticon: :'( -> (+1, -2)");
    c.require(dual("plain text") == std::pair{1, -1}, "baseline -> (+1, -1)");
}

void criterion_sentiwordnet(Checker& c) {
    const auto lexicon = SynsetLexicon::load(kData + "/lexicons/sentiwordnet.tsv");
    bool sums_ok = true;
    for (const auto& [term, senses] : lexicon.by_term()) {
        for (const auto& s : senses) {
            const double obj = 1.0 - (s.pos_score + s.neg_score);
            if (std::fabs(s.pos_score + s.neg_score + obj - 1.0) > 1e-9 || obj < -1e-9 ||
                s.pos_score < 0 || s.neg_score < 0)
                sums_ok = false;
        }
    }
    c.require(sums_ok, "Pos + Neg + Obj = 1 (1e-9) for every lexicon entry");
    c.note("checked " + std::to_string(lexicon.entry_count()) + " entries");

    const auto nice = swn_score({"nice"}, lexicon);
    c.require(std::fabs(nice.scores.at("posAvg") - 0.875) < 1e-12 &&
                  std::fabs(nice.scores.at("objAvg") - 0.125) < 1e-12 &&
                  nice.polarity == Polarity::positive,
              "\"nice\" -> posAvg 0.875, objAvg 0.125, Positive");
    const auto very = swn_score({"very"}, lexicon);
    c.require(very.polarity == Polarity::neutral &&
                  std::fabs(very.scores.at("objAvg") - 0.5) < 1e-12,
              "\"very\" -> Neutral with objAvg 0.5");
}

void criterion_term_weight(Checker& c) {
    c.require(std::fabs(term_weight(800, 697) - 1.1988) <= 1e-3,
              "w(800, 697) = 1.1988 +- 1e-3, got " + fmt(term_weight(800, 697)));
    bool unit_ok = true;
    for (std::int64_t n = 1; n <= 1000; ++n)
        if (term_weight(n, n) != 1.0) unit_ok = false;
    c.require(unit_ok, "w(N, N) = 1 exactly for N in 1..1000");

    SplitMix64 rng(2002);
    bool monotone = true;
    for (int trial = 0; trial < 10000 && monotone; ++trial) {
        const auto n_total = static_cast<std::int64_t>(2 + rng.next_below(1000000));
        const auto a = static_cast<std::int64_t>(
            1 + rng.next_below(static_cast<std::uint64_t>(n_total)));
        const auto b = static_cast<std::int64_t>(
            1 + rng.next_below(static_cast<std::uint64_t>(n_total)));
        if (a == b) continue;
        const auto lo = std::min(a, b), hi = std::max(a, b);
        monotone = term_weight(n_total, lo) > term_weight(n_total, hi);
    }
    c.require(monotone, "strictly decreasing over 10^4 random (N, n) pairs");
}

void criterion_ranking_oracle(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto stopwords = StopwordList::defaults();
    const Bm25Params params;
    SplitMix64 rng(3003);
    const auto& vocab = acceptance_vocab();

    bool all_equal = true;
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // random corpus <= 50 docs x <= 30 words
        Corpus corpus;
        const std::size_t n_docs = 1 + rng.next_below(50);
        for (std::size_t d = 0; d < n_docs; ++d) {
            Document doc;
            doc.id = static_cast<int>(d) + 1;
            doc.url = "http://t/" + std::to_string(doc.id);
            doc.title = "t" + std::to_string(doc.id);
            doc.date = "2021";
            doc.label = "Covid";
            const std::size_t n_words = 1 + rng.next_below(30);
            for (std::size_t w = 0; w < n_words; ++w) {
                if (w > 0) doc.content += ' ';
                doc.content += vocab[rng.next_below(vocab.size())];
            }
            corpus.docs.push_back(std::move(doc));
        }
        const auto index = InvertedIndex::build(corpus, stopwords);
        std::string raw = vocab[rng.next_below(vocab.size())] + " " +
                          vocab[rng.next_below(vocab.size())];
        const auto query = make_query(raw, stopwords);

        // exhaustive linear scan straight from token streams
        std::vector<std::vector<std::string>> streams;
        for (const auto& doc : corpus.docs)
            streams.push_back(stems_of(preprocess(doc.content, stopwords)));
        double total_len = 0;
        for (const auto& s : streams) total_len += static_cast<double>(s.size());
        const double avg_len = total_len / static_cast<double>(streams.size());
        std::vector<std::pair<int, double>> expected;
        for (std::size_t i = 0; i < streams.size(); ++i) {
            double score = 0;
            for (const auto& tok : query.tokens) {
                std::size_t tf = 0;
                for (const auto& t : streams[i]) tf += t == tok.stem;
                if (tf == 0) continue;
                std::size_t df = 0;
                for (const auto& s : streams)
                    for (const auto& t : s)
                        if (t == tok.stem) {
                            ++df;
                            break;
                        }
                const double idf = std::log(
                    (static_cast<double>(streams.size()) - static_cast<double>(df) + 0.5) /
                        (static_cast<double>(df) + 0.5) +
                    1.0);
                const double len = static_cast<double>(streams[i].size());
                score += idf * static_cast<double>(tf) * (params.k1 + 1.0) /
                         (static_cast<double>(tf) +
                          params.k1 * (1.0 - params.b + params.b * len / avg_len));
            }
            if (score > 0) expected.emplace_back(static_cast<int>(i) + 1, score);
        }
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });

        const auto actual = search(index, corpus, query, params, corpus.size());
        ++compared;
        if (expected.empty()) {
            for (const auto& r : actual)
                if (!r.via_fallback) all_equal = false;
            continue;
        }
        if (actual.size() != expected.size()) {
            all_equal = false;
            continue;
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (actual[i].doc_id != expected[i].first ||
                std::fabs(actual[i].score - expected[i].second) >= 1e-9)
                all_equal = false;
        }
    }
    const double elapsed = seconds_since(start);
    c.require(all_equal,
              "index ranking = exhaustive ranking on 200 corpora, deltas < 1e-9");
    c.require(elapsed < 30.0, "runtime < 30 s, got " + fmt(elapsed, 2));
    c.note(std::to_string(compared) + " corpora compared in " + fmt(elapsed, 2) + " s");
}

void criterion_index_roundtrip(Checker& c) {
    const auto stopwords = StopwordList::defaults();
    const auto corpus =
        ingest_jsonl(kData + "/fixtures/news60.jsonl", CategoryConfig::defaults());
    const auto index = InvertedIndex::build(corpus, stopwords);
    const auto path = fs::temp_directory_path() / "acceptance_index.json";
    index.save(path.string());
    const auto loaded = InvertedIndex::load(path.string());

    const char* queries[] = {
        "vaccine",       "covid lockdown", "travel",          "crisis",   "success",
        "awful failure", "good news",      "recovery plan",   "panic",    "flight",
        "quarantine",    "victory",        "scandal fraud",   "briefing", "schedule",
        "hopeful",       "death toll",     "holiday",         "kent",     "scotland",
    };
    bool replay_ok = true;
    for (const auto* raw : queries) {
        const auto query = make_query(raw, stopwords);
        const auto before = search(index, corpus, query, {}, corpus.size());
        const auto after = search(loaded, corpus, query, {}, corpus.size());
        if (before.size() != after.size()) {
            replay_ok = false;
            continue;
        }
        for (std::size_t i = 0; i < before.size(); ++i)
            if (before[i].doc_id != after[i].doc_id || before[i].score != after[i].score)
                replay_ok = false;
    }
    c.require(replay_ok, "20-query replay identical before save and after load");

    const auto rebuilt = InvertedIndex::build(corpus, stopwords);
    c.require(rebuilt.to_json_string() == index.to_json_string(),
              "rebuild produces a byte-exact serialized index");
    fs::remove(path);
}

void criterion_metrics(Checker& c) {
    const std::vector<std::string> classes = {"P", "N"};
    const auto m = confusion_matrix({"P", "P", "N", "N"}, {"P", "N", "N", "N"}, classes);
    const auto report = metrics(m);
    c.require(report.per_class[0].precision == 1.0, "precision(P) = 1.0 exactly");
    c.require(report.per_class[0].recall == 0.5, "recall(P) = 0.5 exactly");
    c.require(report.per_class[0].f1 == 2.0 / 3.0, "F1(P) = 2/3 exactly");
    c.require(report.accuracy == 0.75, "accuracy = 0.75 exactly");

    SplitMix64 rng(4004);
    const std::vector<std::string> ternary = {"Positive", "Negative", "Neutral"};
    bool recount_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.next_below(20);
        std::vector<std::string> gold, pred;
        for (std::size_t i = 0; i < n; ++i) {
            gold.push_back(ternary[rng.next_below(3)]);
            pred.push_back(ternary[rng.next_below(3)]);
        }
        const auto r = metrics(confusion_matrix(gold, pred, ternary));
        std::size_t correct = 0;
        for (std::size_t i = 0; i < n; ++i) correct += gold[i] == pred[i];
        if (r.accuracy != static_cast<double>(correct) / static_cast<double>(n))
            recount_ok = false;
        for (std::size_t k = 0; k < ternary.size(); ++k) {
            std::size_t tp = 0, fp = 0, fn = 0;
            for (std::size_t i = 0; i < n; ++i) {
                tp += gold[i] == ternary[k] && pred[i] == ternary[k];
                fp += gold[i] != ternary[k] && pred[i] == ternary[k];
                fn += gold[i] == ternary[k] && pred[i] != ternary[k];
            }
            const double precision = tp + fp ? double(tp) / double(tp + fp) : 0.0;
            const double recall = tp + fn ? double(tp) / double(tp + fn) : 0.0;
            if (r.per_class[k].precision != precision || r.per_class[k].recall != recall)
                recount_ok = false;
        }
    }
    c.require(recount_ok, "brute-force recount equivalence on 100 random cases");
}

void criterion_embeddings(Checker& c) {
    const auto start = std::chrono::steady_clock::now();

    SplitMix64 rng(5005);
    bool grad_ok = true;
    const double h = 1e-5;
    for (int config = 0; config < 100 && grad_ok; ++config) {
        const std::size_t dim = 2 + rng.next_below(8);
        std::vector<double> center(dim), context(dim);
        for (auto& x : center) x = rng.next_in(-1, 1);
        for (auto& x : context) x = rng.next_in(-1, 1);
        std::vector<std::vector<double>> negatives(1 + rng.next_below(4));
        for (auto& neg : negatives) {
            neg.resize(dim);
            for (auto& x : neg) x = rng.next_in(-1, 1);
        }
        const auto grad = sgns_gradient(center, context, negatives);
        auto check = [&](std::vector<double>& vec, std::size_t i, double analytic) {
            const double saved = vec[i];
            vec[i] = saved + h;
            const double up = sgns_loss(center, context, negatives);
            vec[i] = saved - h;
            const double down = sgns_loss(center, context, negatives);
            vec[i] = saved;
            const double numeric = (up - down) / (2 * h);
            const double denom = std::max({std::fabs(numeric), std::fabs(analytic), 1e-8});
            if (std::fabs(numeric - analytic) / denom >= 1e-4) grad_ok = false;
        };
        for (std::size_t i = 0; i < dim; ++i) check(center, i, grad.d_center[i]);
        for (std::size_t i = 0; i < dim; ++i) check(context, i, grad.d_context[i]);
        for (std::size_t k = 0; k < negatives.size(); ++k)
            for (std::size_t i = 0; i < dim; ++i)
                check(negatives[k], i, grad.d_negatives[k][i]);
    }
    c.require(grad_ok,
              "analytic vs central finite-difference gradients, rel err < 1e-4, 100 configs");

    // deterministic retraining + two-topic separation
    std::vector<std::vector<std::string>> streams;
    const std::vector<std::string> covid = {"covid", "virus", "variant", "infect", "ward"};
    const std::vector<std::string> travel = {"travel", "flight", "beach", "hotel", "airport"};
    SplitMix64 gen(606);
    for (int s = 0; s < 40; ++s) {
        const auto& topic = s % 2 ? travel : covid;
        std::vector<std::string> stream;
        for (int w = 0; w < 30; ++w) stream.push_back(topic[gen.next_below(topic.size())]);
        streams.push_back(std::move(stream));
    }
    SgnsConfig config;
    config.dimension = 24;
    config.epochs = 8;
    config.seed = 42;
    const auto first = train_sgns(streams, config);
    const auto second = train_sgns(streams, config);
    c.require(first.matrix == second.matrix, "retraining under a fixed seed is bit-identical");

    const auto& m = first.matrix;
    auto vec = [&](const std::string& t) { return m.input_vector(*m.index_of(t)); };
    double intra = 0, inter = 0;
    int n_intra = 0, n_inter = 0;
    for (std::size_t i = 0; i < covid.size(); ++i) {
        for (std::size_t j = i + 1; j < covid.size(); ++j) {
            intra += cosine(vec(covid[i]), vec(covid[j]), m.dim);
            intra += cosine(vec(travel[i]), vec(travel[j]), m.dim);
            n_intra += 2;
        }
        for (const auto& t : travel) {
            inter += cosine(vec(covid[i]), vec(t), m.dim);
            ++n_inter;
        }
    }
    c.require(intra / n_intra > inter / n_inter,
              "two-topic corpus separates (intra mean cosine " + fmt(intra / n_intra, 3) +
                  " > inter " + fmt(inter / n_inter, 3) + ")");
    const double elapsed = seconds_since(start);
    c.require(elapsed < 60.0, "runtime < 60 s, got " + fmt(elapsed, 2));
}

void criterion_desk_experiment(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto stopwords = StopwordList::defaults();
    const auto config = CategoryConfig::defaults();
    const auto corpus = ingest_jsonl(kData + "/fixtures/news60.jsonl", config);
    c.require(corpus.size() == 60, "gold fixture has 60 documents");
    const auto index = InvertedIndex::build(corpus, stopwords);

    const auto query = make_query("vaccine", stopwords);
    const auto unrestricted = search(index, corpus, query, {}, corpus.size());
    std::set<std::string> labels;
    for (const auto& r : unrestricted) labels.insert(corpus.by_id(r.doc_id).label);
    c.require(labels.size() > 1,
              "unrestricted search mixes labels (got " + std::to_string(labels.size()) +
                  " distinct labels)");

    bool pure = true;
    for (const auto& category : config.names()) {
        const auto restricted =
            smart_search(index, corpus, config, query, category, {}, corpus.size());
        for (const auto& r : restricted)
            if (corpus.by_id(r.doc_id).label != category) pure = false;
    }
    c.require(pure, "category-restricted results are 100% label-pure");

    LexiconSet lexicons(kData + "/lexicons");
    const std::vector<ModelKind> models = {ModelKind::vader, ModelKind::sentiwordnet,
                                           ModelKind::sentistrength, ModelKind::liu_hu,
                                           ModelKind::afinn};
    const auto first = compare_models(corpus, models, lexicons, stopwords);
    LexiconSet again(kData + "/lexicons");
    const auto second = compare_models(corpus, models, again, stopwords);
    bool deterministic = first.rows.size() == second.rows.size();
    for (std::size_t i = 0; deterministic && i < first.rows.size(); ++i) {
        deterministic = first.rows[i].model == second.rows[i].model &&
                        first.rows[i].accuracy == second.rows[i].accuracy &&
                        first.rows[i].macro_f1 == second.rows[i].macro_f1 &&
                        first.rows[i].coverage == second.rows[i].coverage;
    }
    c.require(deterministic, "comparison report is deterministic (timings aside)");
    const double elapsed = seconds_since(start);
    c.require(elapsed < 10.0, "runtime < 10 s, got " + fmt(elapsed, 2));
    c.note("5-model comparison over the 60-document gold fixture in " + fmt(elapsed, 2) +
           " s");
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "VADER golden values (reference valence lexicon)", criterion_vader},
        {2, "AFINN golden value and exact additivity", criterion_afinn},
        {3, "dual-scale rule engine (sample lexicon route)", criterion_sentistrength},
        {4, "synset score identity and sample verdicts", criterion_sentiwordnet},
        {5, "Zipf term weight formula and monotonicity", criterion_term_weight},
        {6, "BM25 ranking oracle over 200 random corpora", criterion_ranking_oracle},
        {7, "index save/load round-trip and byte-exact rebuild", criterion_index_roundtrip},
        {8, "metrics golden case and brute-force recount", criterion_metrics},
        {9, "SGNS gradient check, determinism, topic separation", criterion_embeddings},
        {10, "desk experiment: category purity and deterministic report",
         criterion_desk_experiment},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        Checker checker;
        try {
            criterion.body(checker);
        } catch (const std::exception& e) {
            checker.ok = false;
            checker.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << criterion.id << ": " << (checker.ok ? "PASS" : "FAIL")
                  << " - " << criterion.name << '\n';
        for (const auto& note : checker.notes) std::cout << "    " << note << '\n';
        if (!checker.ok) ++failures;
    }
    if (failures > 0)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
