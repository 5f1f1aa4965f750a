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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>

#include "helpers.hpp"
#include "sentisearch/embeddings.hpp"

using namespace sentisearch;

namespace {

std::vector<double> random_vector(SplitMix64& rng, std::size_t dim, double scale = 1.0) {
    std::vector<double> v(dim);
    for (auto& x : v) x = rng.next_in(-scale, scale);
    return v;
}

/// Two interleaved topics over disjoint vocabularies.
std::vector<std::vector<std::string>> two_topic_streams() {
    std::vector<std::vector<std::string>> streams;
    const std::vector<std::string> covid = {"covid", "virus", "variant", "infect", "ward"};
    const std::vector<std::string> travel = {"travel", "flight", "beach", "hotel", "airport"};
    SplitMix64 rng(321);
    for (int s = 0; s < 40; ++s) {
        const auto& topic = s % 2 ? travel : covid;
        std::vector<std::string> stream;
        for (int w = 0; w < 30; ++w) stream.push_back(topic[rng.next_below(topic.size())]);
        streams.push_back(std::move(stream));
    }
    return streams;
}

}  // namespace

TEST_CASE("cosine similarity fundamentals") {
    const std::vector<double> v = {1.0, 2.0, -0.5};
    CHECK(cosine(v, v) == Catch::Approx(1.0));
    std::vector<double> neg = v;
    for (auto& x : neg) x = -x;
    CHECK(cosine(v, neg) == Catch::Approx(-1.0));
    CHECK(cosine({1.0, 0.0}, {0.0, 1.0}) == Catch::Approx(0.0));
    CHECK_THROWS_AS(cosine({0.0, 0.0}, {1.0, 0.0}), InputError);

    SplitMix64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_vector(rng, 8);
        const auto b = random_vector(rng, 8);
        const double ab = cosine(a, b);
        CHECK(ab == Catch::Approx(cosine(b, a)));
        CHECK(ab >= -1.0 - 1e-12);
        CHECK(ab <= 1.0 + 1e-12);
    }
}

TEST_CASE("analytic gradients match central finite differences") {
    SplitMix64 rng(42);
    const double h = 1e-5;
    for (int config = 0; config < 100; ++config) {
        const std::size_t dim = 2 + rng.next_below(8);
        const std::size_t n_neg = 1 + rng.next_below(4);
        auto center = random_vector(rng, dim);
        auto context = random_vector(rng, dim);
        std::vector<std::vector<double>> negatives;
        for (std::size_t k = 0; k < n_neg; ++k) negatives.push_back(random_vector(rng, dim));

        const auto grad = sgns_gradient(center, context, negatives);
        auto check_component = [&](std::vector<double>& vec, std::size_t i, double analytic) {
            const double saved = vec[i];
            vec[i] = saved + h;
            const double up = sgns_loss(center, context, negatives);
            vec[i] = saved - h;
            const double down = sgns_loss(center, context, negatives);
            vec[i] = saved;
            const double numeric = (up - down) / (2 * h);
            const double denom = std::max({std::fabs(numeric), std::fabs(analytic), 1e-8});
            CHECK(std::fabs(numeric - analytic) / denom < 1e-4);
        };
        for (std::size_t i = 0; i < dim; ++i) check_component(center, i, grad.d_center[i]);
        for (std::size_t i = 0; i < dim; ++i) check_component(context, i, grad.d_context[i]);
        for (std::size_t k = 0; k < n_neg; ++k)
            for (std::size_t i = 0; i < dim; ++i)
                check_component(negatives[k], i, grad.d_negatives[k][i]);
    }
}

TEST_CASE("positive-pair gradient at zero dot product is -u/2") {
    const std::vector<double> center = {0.0, 0.0, 0.0};
    const std::vector<double> context = {1.0, -2.0, 0.5};
    const auto grad = sgns_gradient(center, context, {});
    for (std::size_t i = 0; i < context.size(); ++i)
        CHECK(grad.d_center[i] == Catch::Approx(-0.5 * context[i]));
}

TEST_CASE("zero vectors in, finite gradients out") {
    const std::vector<double> zero(4, 0.0);
    const auto grad = sgns_gradient(zero, zero, {zero, zero});
    for (const double g : grad.d_center) CHECK(std::isfinite(g));
    for (const double g : grad.d_context) CHECK(std::isfinite(g));
}

TEST_CASE("training is deterministic under a fixed seed") {
    const auto streams = two_topic_streams();
    SgnsConfig config;
    config.dimension = 16;
    config.epochs = 2;
    config.seed = 7;
    const auto a = train_sgns(streams, config);
    const auto b = train_sgns(streams, config);
    CHECK(a.matrix == b.matrix); // bitwise
    CHECK(a.epoch_losses == b.epoch_losses);

    config.seed = 8;
    const auto c = train_sgns(streams, config);
    CHECK_FALSE(a.matrix == c.matrix);
}

TEST_CASE("trained matrices contain no NaN or Inf") {
    const auto result = train_sgns(two_topic_streams(), SgnsConfig{.dimension = 12, .epochs = 2});
    for (const double x : result.matrix.input) CHECK(std::isfinite(x));
    for (const double x : result.matrix.output) CHECK(std::isfinite(x));
}

TEST_CASE("mean epoch loss is non-increasing over the first three epochs") {
    SgnsConfig config;
    config.dimension = 16;
    config.epochs = 3;
    config.seed = 11;
    config.learning_rate = 0.01; // keeps early epochs on the descent slope
    const auto result = train_sgns(two_topic_streams(), config);
    REQUIRE(result.epoch_losses.size() == 3);
    CHECK(result.epoch_losses[1] <= result.epoch_losses[0]);
    CHECK(result.epoch_losses[2] <= result.epoch_losses[1]);
}

TEST_CASE("co-occurring tokens end up closer than unrelated ones") {
    // "alpha beta" repeated against an unrelated pile
    std::vector<std::vector<std::string>> streams;
    SplitMix64 rng(5);
    const std::vector<std::string> noise = {"gamma", "delta", "epsilon", "zeta"};
    for (int i = 0; i < 60; ++i) {
        streams.push_back({"alpha", "beta"});
        std::vector<std::string> other;
        for (int w = 0; w < 4; ++w) other.push_back(noise[rng.next_below(noise.size())]);
        streams.push_back(std::move(other));
    }
    SgnsConfig config;
    config.dimension = 8;
    config.window = 2;
    config.epochs = 200;
    config.seed = 99;
    config.min_count = 2;
    const auto result = train_sgns(streams, config);
    const auto& m = result.matrix;
    const auto idx = [&](const char* t) { return *m.index_of(t); };
    const double paired = cosine(m.input_vector(idx("alpha")), m.input_vector(idx("beta")), m.dim);
    const double random_pair =
        cosine(m.input_vector(idx("alpha")), m.input_vector(idx("gamma")), m.dim);
    CHECK(paired > random_pair);
}

TEST_CASE("two-topic corpus separates intra from inter cosine") {
    SgnsConfig config;
    config.dimension = 24;
    config.epochs = 8;
    config.seed = 13;
    const auto result = train_sgns(two_topic_streams(), config);
    const auto& m = result.matrix;
    const std::vector<std::string> covid = {"covid", "virus", "variant", "infect", "ward"};
    const std::vector<std::string> travel = {"travel", "flight", "beach", "hotel", "airport"};
    double intra = 0, inter = 0;
    int n_intra = 0, n_inter = 0;
    auto vec = [&](const std::string& t) { return m.input_vector(*m.index_of(t)); };
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
    CHECK(intra / n_intra > inter / n_inter);
}

TEST_CASE("vocabulary below two terms is a training error") {
    CHECK_THROWS_AS(train_sgns({{"solo", "solo", "solo"}}, SgnsConfig{}), InputError);
    CHECK_THROWS_AS(train_sgns({}, SgnsConfig{}), InputError);
}

TEST_CASE("related terms exclude the query and respect k") {
    const auto result = train_sgns(two_topic_streams(), SgnsConfig{.dimension = 8, .epochs = 2});
    const auto related = related_terms(result.matrix, "covid", 3);
    CHECK(related.size() == 3);
    for (const auto& r : related) CHECK(r.term != "covid");
    const auto all = related_terms(result.matrix, "covid", 100);
    CHECK(all.size() == result.matrix.vocab.size() - 1); // k larger than candidates
    CHECK_THROWS_AS(related_terms(result.matrix, "unseen", 3), InputError);
}

TEST_CASE("duplicate documents are each other's closest neighbors") {
    const auto stopwords = StopwordList::defaults();
    Corpus corpus;
    corpus.docs.push_back(sentisearch::testing::make_doc(1, "covid virus variant ward covid virus"));
    corpus.docs.push_back(sentisearch::testing::make_doc(2, "travel flight beach hotel airport beach"));
    corpus.docs.push_back(sentisearch::testing::make_doc(3, "covid virus variant ward covid virus"));

    std::vector<std::vector<std::string>> streams;
    for (const auto& doc : corpus.docs)
        streams.push_back(stems_of(preprocess(doc.content, stopwords)));
    SgnsConfig config;
    config.dimension = 8;
    config.epochs = 30;
    config.min_count = 1;
    config.seed = 3;
    const auto result = train_sgns(streams, config);

    const auto query = stems_of(preprocess(corpus.docs[0].content, stopwords));
    const auto related =
        related_documents(result.matrix, corpus, stopwords, query, 2, /*exclude=*/1);
    REQUIRE_FALSE(related.empty());
    CHECK(related[0].doc_id == 3);
    CHECK(related[0].similarity == Catch::Approx(1.0).margin(1e-9));

    SECTION("fully out-of-vocabulary queries are a coverage error") {
        CHECK_THROWS_AS(
            related_documents(result.matrix, corpus, stopwords, {"zzz"}, 2), InputError);
    }
}

TEST_CASE("vector file round-trips exactly") {
    const auto result = train_sgns(two_topic_streams(), SgnsConfig{.dimension = 6, .epochs = 1});
    const auto path = std::filesystem::temp_directory_path() / "vectors.txt";
    save_vectors(result.matrix, path.string());
    const auto loaded = load_vectors(path.string());
    REQUIRE(loaded.vocab == result.matrix.vocab);
    REQUIRE(loaded.dim == result.matrix.dim);
    for (std::size_t i = 0; i < loaded.input.size(); ++i)
        CHECK(loaded.input[i] == result.matrix.input[i]); // bit-exact via %.17g
    std::filesystem::remove(path);

    SECTION("truncated vector files fail to load") {
        const auto bad = std::filesystem::temp_directory_path() / "vectors_bad.txt";
        std::ofstream(bad.string()) << "3 4\nonly_one 0.5 0.5\n";
        CHECK_THROWS_AS(load_vectors(bad.string()), InputError);
        std::filesystem::remove(bad);
    }
}
