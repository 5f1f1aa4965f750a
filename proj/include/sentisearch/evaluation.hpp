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
#include <map>
#include <string>
#include <vector>

#include "sentisearch/corpus.hpp"
#include "sentisearch/errors.hpp"
#include "sentisearch/sentiment/engines.hpp"
#include "sentisearch/sentiment/verdict.hpp"

namespace sentisearch {

/// Gold-by-predicted count table. Rows are gold classes, columns predicted.
struct ConfusionMatrix {
    std::vector<std::string> classes;
    std::vector<std::vector<long>> counts;

    long total() const {
        long t = 0;
        for (const auto& row : counts)
            for (const long c : row) t += c;
        return t;
    }

    long trace() const {
        long t = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
        return t;
    }

    long row_sum(std::size_t i) const {
        long t = 0;
        for (const long c : counts[i]) t += c;
        return t;
    }

    long col_sum(std::size_t j) const {
        long t = 0;
        for (const auto& row : counts) t += row[j];
        return t;
    }
};

inline ConfusionMatrix confusion_matrix(const std::vector<std::string>& gold,
                                        const std::vector<std::string>& predicted,
                                        const std::vector<std::string>& classes) {
    if (gold.size() != predicted.size())
        throw InputError("confusion_matrix: gold and predicted lengths differ");
    if (gold.empty()) throw InputError("confusion_matrix: no samples");
    ConfusionMatrix m;
    m.classes = classes;
    m.counts.assign(classes.size(), std::vector<long>(classes.size(), 0));
    auto class_index = [&](const std::string& label) {
        const auto it = std::find(classes.begin(), classes.end(), label);
        if (it == classes.end()) throw InputError("confusion_matrix: unknown label " + label);
        return static_cast<std::size_t>(std::distance(classes.begin(), it));
    };
    for (std::size_t k = 0; k < gold.size(); ++k)
        ++m.counts[class_index(gold[k])][class_index(predicted[k])];
    return m;
}

struct ClassMetrics {
    std::string label;
    double precision{};
    double recall{};
    double f1{};
    bool degenerate{}; // a zero denominator forced a 0 metric
};

struct EvalReport {
    std::string model;
    std::vector<ClassMetrics> per_class;
    double macro_precision{};
    double macro_recall{};
    double macro_f1{};
    double micro_precision{};
    double micro_recall{};
    double micro_f1{};
    double accuracy{};
    double misclassification{}; // always exactly 1 - accuracy
    double coverage{};          // lexicon coverage rate
    double seconds{};
};

/// Precision/recall/F1 per class plus macro and micro aggregates. Zero
/// denominators produce a 0 metric with the degenerate flag set.
inline EvalReport metrics(const ConfusionMatrix& m) {
    if (m.total() < 1) throw InputError("metrics: empty confusion matrix");
    EvalReport report;
    double psum = 0, rsum = 0, fsum = 0;
    for (std::size_t i = 0; i < m.classes.size(); ++i) {
        ClassMetrics c;
        c.label = m.classes[i];
        const long tp = m.counts[i][i];
        const long col = m.col_sum(i);
        const long row = m.row_sum(i);
        if (col > 0)
            c.precision = static_cast<double>(tp) / static_cast<double>(col);
        else
            c.degenerate = true;
        if (row > 0)
            c.recall = static_cast<double>(tp) / static_cast<double>(row);
        else
            c.degenerate = true;
        if (c.precision + c.recall > 0)
            c.f1 = 2.0 * c.precision * c.recall / (c.precision + c.recall);
        else
            c.degenerate = true;
        psum += c.precision;
        rsum += c.recall;
        fsum += c.f1;
        report.per_class.push_back(std::move(c));
    }
    const auto k = static_cast<double>(m.classes.size());
    report.macro_precision = psum / k;
    report.macro_recall = rsum / k;
    report.macro_f1 = fsum / k;
    // single-label multiclass: micro precision = micro recall = accuracy
    report.accuracy = static_cast<double>(m.trace()) / static_cast<double>(m.total());
    report.micro_precision = report.accuracy;
    report.micro_recall = report.accuracy;
    report.micro_f1 = report.accuracy;
    report.misclassification = 1.0 - report.accuracy;
    return report;
}

struct CoverageReport {
    double rate{};
    bool zero_tokens{};
    std::vector<std::pair<std::string, std::size_t>> top_uncovered;
};

/// Aggregate lexicon coverage over a verdict list, with the most frequent
/// uncovered tokens when a census is supplied.
inline CoverageReport lexicon_coverage(
    const std::vector<SentimentVerdict>& verdicts,
    const std::map<std::string, std::size_t>& uncovered = {}, std::size_t top_n = 20) {
    if (verdicts.empty()) throw InputError("lexicon_coverage: no verdicts");
    CoverageReport report;
    std::size_t covered = 0, total = 0;
    for (const auto& v : verdicts) {
        covered += v.covered_tokens;
        total += v.total_tokens;
    }
    if (total == 0) {
        report.rate = 0.0;
        report.zero_tokens = true;
    } else {
        report.rate = static_cast<double>(covered) / static_cast<double>(total);
    }
    std::vector<std::pair<std::string, std::size_t>> items(uncovered.begin(), uncovered.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (items.size() > top_n) items.resize(top_n);
    report.top_uncovered = std::move(items);
    return report;
}

inline const std::vector<std::string>& polarity_classes() {
    static const std::vector<std::string> kClasses = {"Positive", "Negative", "Neutral"};
    return kClasses;
}

struct ModelComparison {
    std::vector<EvalReport> rows;                      // one per model, input order
    std::map<std::string, ConfusionMatrix> matrices;   // model name -> matrix
    std::map<std::string, CoverageReport> coverage;    // model name -> coverage
};

/// Runs every requested model over the same corpus (each document needs a
/// gold polarity) and collects one report row per model.
inline ModelComparison compare_models(const Corpus& corpus,
                                      const std::vector<ModelKind>& models,
                                      LexiconSet& lexicons, const StopwordList& stopwords) {
    if (corpus.empty()) throw InputError("compare_models: empty corpus");
    std::vector<std::string> gold;
    gold.reserve(corpus.size());
    for (const auto& doc : corpus.docs) {
        if (!doc.polarity)
            throw InputError("document " + std::to_string(doc.id) + " has no gold polarity");
        gold.push_back(std::string(to_string(polarity_from_string(*doc.polarity))));
    }
    ModelComparison comparison;
    for (const auto model : models) {
        const auto run = classify_corpus(corpus, model, lexicons, stopwords);
        std::vector<std::string> predicted;
        predicted.reserve(run.verdicts.size());
        for (const auto& v : run.verdicts) predicted.push_back(std::string(to_string(v.polarity)));
        const auto matrix = confusion_matrix(gold, predicted, polarity_classes());
        auto report = metrics(matrix);
        report.model = std::string(to_string(model));
        const auto cov = lexicon_coverage(run.verdicts, run.uncovered_tokens);
        report.coverage = cov.rate;
        report.seconds = run.seconds;
        comparison.rows.push_back(std::move(report));
        comparison.matrices.emplace(std::string(to_string(model)), matrix);
        comparison.coverage.emplace(std::string(to_string(model)), cov);
    }
    return comparison;
}

}  // namespace sentisearch
