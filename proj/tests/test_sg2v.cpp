// Copyright 2026 The swge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "swge/error.hpp"
#include "swge/sg2v.hpp"

using namespace swge;
using namespace fixtures;

namespace {

double cosine(std::span<const double> a, std::span<const double> b) {
    double ab = 0.0;
    double aa = 0.0;
    double bb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += a[i] * b[i];
        aa += a[i] * a[i];
        bb += b[i] * b[i];
    }
    return ab / std::sqrt(aa * bb);
}

std::vector<SignedGraph> small_collection(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<SignedGraph> graphs;
    for (std::size_t i = 0; i < count; ++i) {
        graphs.push_back(random_graph(6 + uniform_index(rng, 8), 0.35, 0.4, rng));
    }
    return graphs;
}

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("corpus sizes") {
    const std::vector<SignedGraph> graphs{relabel_unsigned()};
    const auto c = build_corpus(graphs, WlVariant::unsigned_wl, 1);
    REQUIRE(c.documents.size() == 1);
    CHECK(c.documents[0].size() == 8);
    CHECK(std::accumulate(c.token_counts.begin(), c.token_counts.end(), std::uint64_t{0}) == 8);

    CorpusOptions skip;
    skip.include_initial_labels = false;
    const auto d = build_corpus(graphs, WlVariant::unsigned_wl, 3, skip);
    CHECK(d.documents[0].size() == 12);

    CHECK_THROWS_AS(build_corpus(graphs, WlVariant::unsigned_wl, 0), DomainError);
    CHECK_THROWS_AS(build_corpus(std::span<const SignedGraph>{}, WlVariant::unsigned_wl, 1), DomainError);
}

TEST_CASE("a rooted subgraph seen once is one token occurrence") {
    const std::vector<SignedGraph> graphs{relabel_signed()};
    const auto c = build_corpus(graphs, WlVariant::signed_neutral, 1);
    // Vertex 0 is the only vertex with composite "1,+2-3+4" at iteration 1.
    LabelDictionary d;
    const auto trace = relabel(relabel_signed(), WlVariant::signed_neutral, 1, d);
    const auto token = c.vocabulary.at({1, trace.steps[1].labels[0]});
    CHECK(std::count(c.documents[0].begin(), c.documents[0].end(), token) == 1);
    CHECK(c.token_counts[token] == 1);
}

TEST_CASE("isomorphic graphs produce identical documents") {
    Rng rng(7);
    const auto g = random_graph(10, 0.4, 0.4, rng);
    std::vector<Vertex> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    const std::vector<SignedGraph> graphs{g, g.permuted(perm)};
    for (const auto v : {WlVariant::unsigned_wl, WlVariant::signed_neutral, WlVariant::signed_balanced}) {
        const auto c = build_corpus(graphs, v, 3);
        CHECK(sorted(c.documents[0]) == sorted(c.documents[1]));
    }
}

TEST_CASE("the same label at different iterations is a different token") {
    // An edgeless graph keeps one label, but each iteration adds a new word.
    const std::vector<SignedGraph> graphs{SignedGraph(3, {})};
    const auto c = build_corpus(graphs, WlVariant::unsigned_wl, 2);
    CHECK(c.vocabulary_size() == 3);
}

TEST_CASE("negative-sampling gradient matches finite differences") {
    Rng rng(11);
    const std::size_t dim = 6;
    const std::size_t vocab = 5;
    std::vector<double> doc(dim);
    std::vector<double> out(vocab * dim);
    for (auto& x : doc) {
        x = uniform(rng, -0.5, 0.5);
    }
    for (auto& x : out) {
        x = uniform(rng, -0.5, 0.5);
    }
    // The noise draw may repeat a token, and may even draw the true one.
    const std::vector<SampledToken> terms{{2, true}, {0, false}, {4, false}, {0, false}, {2, false}};
    const TokenVectors tokens{out, dim};

    std::vector<double> grad_doc(dim, 0.0);
    std::vector<double> grad_out(out.size(), 0.0);
    const double loss = negative_sampling_backward(doc, tokens, terms, grad_doc, TokenVectors{grad_out, dim});
    auto f = [&] { return negative_sampling_loss(doc, tokens, terms); };
    CHECK(loss == doctest::Approx(f()));
    CHECK(max_relative_error(grad_doc, numeric_gradient(doc, f)) < 1e-4);
    CHECK(max_relative_error(grad_out, numeric_gradient(out, f)) < 1e-4);
}

TEST_CASE("loss oracle") {
    const std::vector<double> doc{1.0, 0.0};
    std::vector<double> out{2.0, 0.0, -1.0, 0.0};
    const TokenVectors tokens{out, 2};
    const std::vector<SampledToken> terms{{0, true}, {1, false}};
    const double expected = std::log1p(std::exp(-2.0)) + std::log1p(std::exp(-1.0));
    CHECK(negative_sampling_loss(doc, tokens, terms) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("training is deterministic and independent of the thread count") {
    const auto graphs = small_collection(5, 16);
    const auto corpus = build_corpus(graphs, WlVariant::signed_balanced, 2);
    PvDbowOptions o;
    o.dim = 16;
    o.epochs = 5;
    o.seed = 9;
    const auto a = train_pvdbow(corpus, o);
    const auto b = train_pvdbow(corpus, o);
    o.threads = 4;
    const auto c = train_pvdbow(corpus, o);
    CHECK(a.values == b.values);
    CHECK(a.values == c.values);
    CHECK(a.rows == 16);
    CHECK(a.dim == 16);
    o.seed = 10;
    CHECK(train_pvdbow(corpus, o).values != a.values);
}

TEST_CASE("hogwild training produces finite vectors") {
    const auto graphs = small_collection(6, 16);
    const auto corpus = build_corpus(graphs, WlVariant::signed_neutral, 2);
    PvDbowOptions o;
    o.dim = 8;
    o.epochs = 3;
    o.hogwild = true;
    o.threads = 4;
    const auto e = train_pvdbow(corpus, o);
    CHECK(std::all_of(e.values.begin(), e.values.end(), [](double x) { return std::isfinite(x); }));
}

TEST_CASE("training loss decreases") {
    const auto graphs = small_collection(8, 30);
    const auto corpus = build_corpus(graphs, WlVariant::unsigned_wl, 2);
    PvDbowOptions o;
    o.dim = 16;
    o.epochs = 30;
    TrainingCurve curve;
    train_pvdbow(corpus, o, &curve);
    REQUIRE(curve.epoch_loss.size() == 30);
    CHECK(curve.epoch_loss.back() < 0.8 * curve.epoch_loss.front());
}

TEST_CASE("identical documents get nearly identical vectors") {
    auto graphs = small_collection(12, 20);
    graphs.push_back(graphs[3]);
    const auto corpus = build_corpus(graphs, WlVariant::signed_balanced, 2);
    PvDbowOptions o;
    o.dim = 32;
    o.epochs = 200;
    const auto e = train_pvdbow(corpus, o);
    CHECK(cosine(e.row(3), e.row(20)) >= 0.99);
}

TEST_CASE("option validation") {
    const std::vector<SignedGraph> graphs{two_factions()};
    const auto corpus = build_corpus(graphs, WlVariant::unsigned_wl, 1);
    PvDbowOptions o;
    o.dim = 0;
    CHECK_THROWS_AS(train_pvdbow(corpus, o), DomainError);
    o.dim = 4;
    o.epochs = 0;
    CHECK_THROWS_AS(train_pvdbow(corpus, o), DomainError);
}
