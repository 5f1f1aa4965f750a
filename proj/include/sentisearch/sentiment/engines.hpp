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

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sentisearch/corpus.hpp"
#include "sentisearch/errors.hpp"
#include "sentisearch/sentiment/afinn.hpp"
#include "sentisearch/sentiment/liu_hu.hpp"
#include "sentisearch/sentiment/sentistrength.hpp"
#include "sentisearch/sentiment/sentiwordnet.hpp"
#include "sentisearch/sentiment/vader.hpp"
#include "sentisearch/sentiment/verdict.hpp"
#include "sentisearch/textprep.hpp"

namespace sentisearch {

enum class ModelKind { vader, sentiwordnet, sentistrength, liu_hu, afinn };

inline std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::vader: return "vader";
        case ModelKind::sentiwordnet: return "sentiwordnet";
        case ModelKind::sentistrength: return "sentistrength";
        case ModelKind::liu_hu: return "liu-hu";
        case ModelKind::afinn: return "afinn";
    }
    return "vader";
}

inline ModelKind model_from_string(std::string_view name) {
    std::string lower;
    for (const char c : name)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "vader") return ModelKind::vader;
    if (lower == "sentiwordnet" || lower == "swn") return ModelKind::sentiwordnet;
    if (lower == "sentistrength") return ModelKind::sentistrength;
    if (lower == "liu-hu" || lower == "liuhu" || lower == "liu_hu") return ModelKind::liu_hu;
    if (lower == "afinn" || lower == "afinn-111") return ModelKind::afinn;
    throw ConfigError("unknown sentiment model: " + std::string(name));
}

inline const std::vector<ModelKind>& all_models() {
    static const std::vector<ModelKind> kAll = {
        ModelKind::vader, ModelKind::sentiwordnet, ModelKind::sentistrength,
        ModelKind::liu_hu, ModelKind::afinn};
    return kAll;
}

/// Lazily loads the lexicons living under one directory, using the
/// conventional file names:
///   vader_lexicon.txt, sentiwordnet.tsv, sentistrength/ (directory),
///   liu_hu_positive.txt, liu_hu_negative.txt, afinn-111.txt
class LexiconSet {
public:
    explicit LexiconSet(std::string dir) : dir_(std::move(dir)) {}

    const std::string& dir() const { return dir_; }

    const ValenceLexicon& vader() {
        if (!vader_) vader_ = ValenceLexicon::load(require("vader", "vader_lexicon.txt"));
        return *vader_;
    }

    const SynsetLexicon& sentiwordnet() {
        if (!swn_) swn_ = SynsetLexicon::load(require("sentiwordnet", "sentiwordnet.tsv"));
        return *swn_;
    }

    const DualScaleLexicon& sentistrength() {
        if (!ss_) ss_ = DualScaleLexicon::load_dir(require("sentistrength", "sentistrength"));
        return *ss_;
    }

    const WordListLexicon& liu_hu() {
        if (!liu_hu_)
            liu_hu_ = WordListLexicon::load(require("liu-hu", "liu_hu_positive.txt"),
                                            require("liu-hu", "liu_hu_negative.txt"));
        return *liu_hu_;
    }

    const IntegerLexicon& afinn() {
        if (!afinn_) afinn_ = IntegerLexicon::load(require("afinn", "afinn-111.txt"));
        return *afinn_;
    }

private:
    std::string dir_;
    std::optional<ValenceLexicon> vader_;
    std::optional<SynsetLexicon> swn_;
    std::optional<DualScaleLexicon> ss_;
    std::optional<WordListLexicon> liu_hu_;
    std::optional<IntegerLexicon> afinn_;

    std::string require(const std::string& model, const std::string& name) const {
        const auto path = std::filesystem::path(dir_) / name;
        if (!std::filesystem::exists(path))
            throw ConfigError("model \"" + model + "\" needs lexicon file " + path.string());
        return path.string();
    }
};

/// Scores one text with one model. VADER and the dual-scale engine read the
/// raw text (casing and punctuation carry signal); the token-based engines
/// get the lexicon pipeline (tokenize + lowercase + stopword removal,
/// stemming off -- their lexicons key on surface words).
inline SentimentVerdict score_text(std::string_view text, ModelKind model, LexiconSet& lexicons,
                                   const StopwordList& stopwords) {
    switch (model) {
        case ModelKind::vader:
            return vader_score(text, lexicons.vader());
        case ModelKind::sentistrength:
            return sentistrength_score(text, lexicons.sentistrength());
        case ModelKind::sentiwordnet:
            return swn_score(surfaces_of(preprocess(text, stopwords, StemMode::none)),
                             lexicons.sentiwordnet());
        case ModelKind::liu_hu:
            return liu_hu_classify(surfaces_of(preprocess(text, stopwords, StemMode::none)),
                                   lexicons.liu_hu());
        case ModelKind::afinn:
            return afinn_score(surfaces_of(preprocess(text, stopwords, StemMode::none)),
                               lexicons.afinn());
    }
    throw ConfigError("unhandled sentiment model");
}

/// Projects any verdict onto the (positive, negative) dual scale used by
/// batch mode output.
inline std::pair<double, double> dual_scale_of(const SentimentVerdict& v) {
    const auto score = [&](const char* key) {
        const auto it = v.scores.find(key);
        return it == v.scores.end() ? 0.0 : it->second;
    };
    if (v.model == "sentistrength") return {score("positive"), score("negative")};
    if (v.model == "vader") return {score("pos"), -score("neg")};
    if (v.model == "sentiwordnet") return {score("posAvg"), -score("negAvg")};
    if (v.model == "liu-hu") return {score("positive_hits"), -score("negative_hits")};
    const double s = score("score"); // afinn
    return {s > 0 ? s : 0.0, s < 0 ? s : 0.0};
}

struct ClassifyRun {
    std::vector<SentimentVerdict> verdicts; // one per document, corpus order
    double seconds{};                       // wall clock around the scoring loop only
    std::map<std::string, std::size_t> uncovered_tokens;
};

/// One verdict per document, plus the census of tokens the model's lexicon
/// does not know (taken over the lexicon-pipeline tokens for every model).
inline ClassifyRun classify_corpus(const Corpus& corpus, ModelKind model, LexiconSet& lexicons,
                                   const StopwordList& stopwords) {
    // trigger lazy loads up front so timing covers scoring only
    auto knows = [&]() -> std::function<bool(const std::string&)> {
        switch (model) {
            case ModelKind::vader: {
                const auto& lex = lexicons.vader();
                return [&lex](const std::string& w) { return lex.contains(w); };
            }
            case ModelKind::sentiwordnet: {
                const auto& lex = lexicons.sentiwordnet();
                return [&lex](const std::string& w) { return lex.senses(w) != nullptr; };
            }
            case ModelKind::sentistrength: {
                const auto& lex = lexicons.sentistrength();
                return [&lex](const std::string& w) {
                    return lex.strength_words().count(w) > 0 || lex.boosters().count(w) > 0 ||
                           lex.negations().count(w) > 0 || lex.emoticons().count(w) > 0;
                };
            }
            case ModelKind::liu_hu: {
                const auto& lex = lexicons.liu_hu();
                return [&lex](const std::string& w) {
                    return lex.is_positive(w) || lex.is_negative(w);
                };
            }
            case ModelKind::afinn: {
                const auto& lex = lexicons.afinn();
                return [&lex](const std::string& w) { return lex.contains(w); };
            }
        }
        throw ConfigError("unhandled sentiment model");
    }();

    ClassifyRun run;
    run.verdicts.reserve(corpus.size());
    const auto started = std::chrono::steady_clock::now();
    for (const auto& doc : corpus.docs)
        run.verdicts.push_back(score_text(doc.content, model, lexicons, stopwords));
    const auto finished = std::chrono::steady_clock::now();
    run.seconds = std::chrono::duration<double>(finished - started).count();

    for (const auto& doc : corpus.docs)
        for (const auto& tok : preprocess(doc.content, stopwords, StemMode::none))
            if (!knows(tok.surface)) ++run.uncovered_tokens[tok.surface];
    return run;
}

}  // namespace sentisearch
