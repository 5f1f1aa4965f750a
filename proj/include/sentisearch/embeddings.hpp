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

// Skip-gram with negative sampling, trained by plain SGD. Single-threaded
// and seeded: identical config and corpus give bitwise-identical matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentisearch/corpus.hpp"
#include "sentisearch/errors.hpp"
#include "sentisearch/rng.hpp"
#include "sentisearch/textprep.hpp"

namespace sentisearch {

struct SgnsConfig {
    std::size_t dimension = 50;
    std::size_t window = 4;
    std::size_t negatives = 5; // per positive pair
    double learning_rate = 0.025; // linearly decayed
    std::size_t epochs = 5;
    std::uint64_t seed = 1;
    std::size_t min_count = 2;

    void validate() const {
        if (dimension < 2) throw InputError("sgns: dimension must be >= 2");
        if (window < 1) throw InputError("sgns: window must be >= 1");
        if (negatives < 1) throw InputError("sgns: negatives must be >= 1");
        if (!(learning_rate > 0)) throw InputError("sgns: learning rate must be > 0");
        if (epochs < 1) throw InputError("sgns: epochs must be >= 1");
        if (min_count < 1) throw InputError("sgns: min count must be >= 1");
    }
};

struct EmbeddingMatrix {
    std::vector<std::string> vocab; // stems, ordered by count desc then term
    std::size_t dim{};
    std::vector<double> input;  // |V| x dim, row-major
    std::vector<double> output; // |V| x dim

    std::optional<std::size_t> index_of(const std::string& term) const {
        const auto it = index_.find(term);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const double* input_vector(std::size_t i) const { return input.data() + i * dim; }
    const double* output_vector(std::size_t i) const { return output.data() + i * dim; }

    void rebuild_lookup() {
        index_.clear();
        for (std::size_t i = 0; i < vocab.size(); ++i) index_[vocab[i]] = i;
    }

    bool operator==(const EmbeddingMatrix& other) const {
        return vocab == other.vocab && dim == other.dim && input == other.input &&
               output == other.output;
    }

private:
    std::unordered_map<std::string, std::size_t> index_;
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

/// Cosine similarity; both vectors must be nonzero.
inline double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw InputError("cosine: dimension mismatch");
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw InputError("cosine: zero-norm vector");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

inline double cosine(const double* a, const double* b, std::size_t dim) {
    return cosine(std::vector<double>(a, a + dim), std::vector<double>(b, b + dim));
}

struct SgnsGradients {
    std::vector<double> d_center;
    std::vector<double> d_context;
    std::vector<std::vector<double>> d_negatives;
};

/// Loss of one training example:
///   L = -log sigma(u_o . v_c) - sum_k log sigma(-u_k . v_c)
inline double sgns_loss(const std::vector<double>& center, const std::vector<double>& context,
                        const std::vector<std::vector<double>>& negatives) {
    double dot = 0;
    for (std::size_t i = 0; i < center.size(); ++i) dot += center[i] * context[i];
    double loss = -std::log(sigmoid(dot));
    for (const auto& neg : negatives) {
        double nd = 0;
        for (std::size_t i = 0; i < center.size(); ++i) nd += center[i] * neg[i];
        loss -= std::log(sigmoid(-nd));
    }
    return loss;
}

/// Analytic gradients of sgns_loss with respect to all inputs.
inline SgnsGradients sgns_gradient(const std::vector<double>& center,
                                   const std::vector<double>& context,
                                   const std::vector<std::vector<double>>& negatives) {
    const std::size_t dim = center.size();
    SgnsGradients g;
    g.d_center.assign(dim, 0.0);
    g.d_context.assign(dim, 0.0);
    double dot = 0;
    for (std::size_t i = 0; i < dim; ++i) dot += center[i] * context[i];
    const double pos_coeff = sigmoid(dot) - 1.0;
    for (std::size_t i = 0; i < dim; ++i) {
        g.d_center[i] += pos_coeff * context[i];
        g.d_context[i] = pos_coeff * center[i];
    }
    for (const auto& neg : negatives) {
        double nd = 0;
        for (std::size_t i = 0; i < dim; ++i) nd += center[i] * neg[i];
        const double neg_coeff = sigmoid(nd);
        std::vector<double> d_neg(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            g.d_center[i] += neg_coeff * neg[i];
            d_neg[i] = neg_coeff * center[i];
        }
        g.d_negatives.push_back(std::move(d_neg));
    }
    return g;
}

struct TrainResult {
    EmbeddingMatrix matrix;
    std::vector<double> epoch_losses; // mean loss per epoch
};

/// Trains SGNS over stemmed token streams. Negatives are drawn from the
/// unigram distribution raised to 3/4; input vectors start uniform in
/// [-0.5/d, 0.5/d], output vectors start at zero.
inline TrainResult train_sgns(const std::vector<std::vector<std::string>>& streams,
                              const SgnsConfig& config) {
    config.validate();

    std::map<std::string, std::size_t> counts;
    for (const auto& stream : streams)
        for (const auto& term : stream) ++counts[term];
    std::vector<std::pair<std::string, std::size_t>> kept;
    for (const auto& [term, count] : counts)
        if (count >= config.min_count) kept.emplace_back(term, count);
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (kept.size() < 2)
        throw InputError("sgns: vocabulary has fewer than 2 terms after min-count filtering");

    TrainResult result;
    EmbeddingMatrix& m = result.matrix;
    m.dim = config.dimension;
    for (const auto& [term, count] : kept) m.vocab.push_back(term);
    m.rebuild_lookup();
    const std::size_t v = m.vocab.size();

    SplitMix64 rng(config.seed);
    m.input.resize(v * m.dim);
    m.output.assign(v * m.dim, 0.0);
    const double init_bound = 0.5 / static_cast<double>(m.dim);
    for (auto& x : m.input) x = rng.next_in(-init_bound, init_bound);

    // unigram^(3/4) cumulative table for negative sampling
    std::vector<double> cumulative(v);
    double acc = 0;
    for (std::size_t i = 0; i < v; ++i) {
        acc += std::pow(static_cast<double>(kept[i].second), 0.75);
        cumulative[i] = acc;
    }
    auto sample_negative = [&]() -> std::size_t {
        const double r = rng.next_double() * acc;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        return std::min(static_cast<std::size_t>(it - cumulative.begin()), v - 1);
    };

    // streams mapped to vocab ids, out-of-vocabulary terms dropped
    std::vector<std::vector<std::size_t>> encoded;
    std::size_t pairs_per_epoch = 0;
    for (const auto& stream : streams) {
        std::vector<std::size_t> ids;
        for (const auto& term : stream)
            if (const auto idx = m.index_of(term)) ids.push_back(*idx);
        if (ids.size() < 2) continue;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const std::size_t lo = i >= config.window ? i - config.window : 0;
            const std::size_t hi = std::min(ids.size() - 1, i + config.window);
            pairs_per_epoch += hi - lo; // excludes the center itself
        }
        encoded.push_back(std::move(ids));
    }
    if (pairs_per_epoch == 0)
        throw InputError("sgns: no co-occurrence pairs to train on");

    const double total_pairs =
        static_cast<double>(pairs_per_epoch) * static_cast<double>(config.epochs);
    std::size_t processed = 0;
    std::vector<double> d_center(m.dim);

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        double epoch_loss = 0;
        std::size_t epoch_pairs = 0;
        for (const auto& ids : encoded) {
            for (std::size_t i = 0; i < ids.size(); ++i) {
                const std::size_t center = ids[i];
                double* v_c = m.input.data() + center * m.dim;
                const std::size_t lo = i >= config.window ? i - config.window : 0;
                const std::size_t hi = std::min(ids.size() - 1, i + config.window);
                for (std::size_t j = lo; j <= hi; ++j) {
                    if (j == i) continue;
                    const std::size_t context = ids[j];
                    const double alpha = config.learning_rate *
                        std::max(1.0 - static_cast<double>(processed) / total_pairs, 1e-4);
                    ++processed;
                    ++epoch_pairs;
                    std::fill(d_center.begin(), d_center.end(), 0.0);

                    double* u_o = m.output.data() + context * m.dim;
                    double dot = 0;
                    for (std::size_t d = 0; d < m.dim; ++d) dot += v_c[d] * u_o[d];
                    epoch_loss -= std::log(sigmoid(dot));
                    const double pos_coeff = sigmoid(dot) - 1.0;
                    for (std::size_t d = 0; d < m.dim; ++d) {
                        d_center[d] += pos_coeff * u_o[d];
                        u_o[d] -= alpha * pos_coeff * v_c[d];
                    }
                    for (std::size_t k = 0; k < config.negatives; ++k) {
                        std::size_t neg = sample_negative();
                        if (neg == context) continue; // skip accidental positives
                        double* u_n = m.output.data() + neg * m.dim;
                        double nd = 0;
                        for (std::size_t d = 0; d < m.dim; ++d) nd += v_c[d] * u_n[d];
                        epoch_loss -= std::log(sigmoid(-nd));
                        const double neg_coeff = sigmoid(nd);
                        for (std::size_t d = 0; d < m.dim; ++d) {
                            d_center[d] += neg_coeff * u_n[d];
                            u_n[d] -= alpha * neg_coeff * v_c[d];
                        }
                    }
                    for (std::size_t d = 0; d < m.dim; ++d) v_c[d] -= alpha * d_center[d];
                }
            }
        }
        result.epoch_losses.push_back(epoch_loss / static_cast<double>(epoch_pairs));
    }

    for (const double x : m.input)
        if (!std::isfinite(x)) throw Error("sgns: non-finite value in trained input vectors");
    for (const double x : m.output)
        if (!std::isfinite(x)) throw Error("sgns: non-finite value in trained output vectors");
    return result;
}

struct Related {
    std::string term; // term mode
    int doc_id{};     // document mode
    double similarity{};
};

/// Top-k vocabulary terms by cosine against one term's input vector, the
/// query itself excluded.
inline std::vector<Related> related_terms(const EmbeddingMatrix& matrix,
                                          const std::string& term, std::size_t k) {
    const auto idx = matrix.index_of(term);
    if (!idx) throw InputError("term \"" + term + "\" is not in the trained vocabulary");
    std::vector<Related> out;
    for (std::size_t i = 0; i < matrix.vocab.size(); ++i) {
        if (i == *idx) continue;
        Related r;
        r.term = matrix.vocab[i];
        r.similarity = cosine(matrix.input_vector(*idx), matrix.input_vector(i), matrix.dim);
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Related& a, const Related& b) { return a.similarity > b.similarity; });
    if (out.size() > k) out.resize(k);
    return out;
}

/// Mean of the in-vocabulary stem input-vectors; nullopt when nothing is
/// covered.
inline std::optional<std::vector<double>> document_vector(const EmbeddingMatrix& matrix,
                                                          const std::vector<std::string>& stems) {
    std::vector<double> acc(matrix.dim, 0.0);
    std::size_t hits = 0;
    for (const auto& s : stems) {
        if (const auto idx = matrix.index_of(s)) {
            const double* v = matrix.input_vector(*idx);
            for (std::size_t d = 0; d < matrix.dim; ++d) acc[d] += v[d];
            ++hits;
        }
    }
    if (hits == 0) return std::nullopt;
    for (auto& x : acc) x /= static_cast<double>(hits);
    return acc;
}

/// Top-k documents by cosine between the query vector and each document's
/// mean vector. Ties break by ascending doc id; `exclude_doc_id` removes the
/// query document itself in document-to-document mode.
inline std::vector<Related> related_documents(const EmbeddingMatrix& matrix,
                                              const Corpus& corpus,
                                              const StopwordList& stopwords,
                                              const std::vector<std::string>& query_stems,
                                              std::size_t k, int exclude_doc_id = -1) {
    const auto query_vec = document_vector(matrix, query_stems);
    if (!query_vec)
        throw InputError("query has no in-vocabulary terms; cannot build a vector");
    std::vector<Related> out;
    for (const auto& doc : corpus.docs) {
        if (doc.id == exclude_doc_id) continue;
        const auto stems = stems_of(preprocess(doc.content, stopwords, StemMode::porter));
        const auto vec = document_vector(matrix, stems);
        if (!vec) continue;
        Related r;
        r.doc_id = doc.id;
        r.similarity = cosine(*query_vec, *vec);
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const Related& a, const Related& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.doc_id < b.doc_id;
    });
    if (out.size() > k) out.resize(k);
    return out;
}

/// Text vector file: header `|V| d`, then one `term v1..vd` line per term.
/// Components are written with 17 significant digits, so save/load
/// round-trips bit-exactly.
inline void save_vectors(const EmbeddingMatrix& matrix, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write vector file: " + path);
    out << matrix.vocab.size() << ' ' << matrix.dim << '\n';
    char buf[32];
    for (std::size_t i = 0; i < matrix.vocab.size(); ++i) {
        out << matrix.vocab[i];
        for (std::size_t d = 0; d < matrix.dim; ++d) {
            std::snprintf(buf, sizeof buf, "%.17g", matrix.input_vector(i)[d]);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

inline EmbeddingMatrix load_vectors(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open vector file: " + path);
    std::size_t v = 0, dim = 0;
    if (!(in >> v >> dim) || dim == 0)
        throw InputError("vector file " + path + ": malformed header");
    EmbeddingMatrix m;
    m.dim = dim;
    m.vocab.reserve(v);
    m.input.reserve(v * dim);
    for (std::size_t i = 0; i < v; ++i) {
        std::string term;
        if (!(in >> term)) throw InputError("vector file " + path + ": truncated");
        m.vocab.push_back(term);
        for (std::size_t d = 0; d < dim; ++d) {
            double x = 0;
            if (!(in >> x)) throw InputError("vector file " + path + ": truncated");
            m.input.push_back(x);
        }
    }
    m.output.assign(v * dim, 0.0);
    m.rebuild_lookup();
    return m;
}

}  // namespace sentisearch
