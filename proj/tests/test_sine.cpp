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

#include "fixtures.hpp"
#include "swge/sine.hpp"

using namespace swge;
using namespace fixtures;

namespace {

std::size_t expected_triads(const SignedGraph& g) {
    std::size_t total = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        const std::size_t p = g.positive_degree(u);
        const std::size_t n = g.negative_degree(u);
        total += n > 0 ? p * n : p;
    }
    return total;
}

} // namespace

TEST_CASE("triad extraction on small patterns") {
    // Center 0 with two positive and one negative neighbor.
    const SignedGraph mixed(4, {{0, 1, P}, {0, 2, P}, {0, 3, N}});
    const auto t = extract_triads(mixed);
    const auto count_center = [&](Vertex c) {
        return std::count_if(t.begin(), t.end(), [&](const Triad& x) { return x.center == c; });
    };
    CHECK(count_center(0) == 2);
    CHECK(std::find(t.begin(), t.end(), Triad{0, 1, 3}) != t.end());
    CHECK(std::find(t.begin(), t.end(), Triad{0, 2, 3}) != t.end());
    // Leaves 1 and 2 have only a positive neighbor: one dummy triad each.
    CHECK(std::find(t.begin(), t.end(), Triad{1, 0, dummy_vertex}) != t.end());
    CHECK(std::find(t.begin(), t.end(), Triad{2, 0, dummy_vertex}) != t.end());
    // Leaf 3 has only a negative neighbor.
    CHECK(count_center(3) == 0);
    CHECK(t.size() == 4);

    const SignedGraph all_negative(3, {{0, 1, N}, {0, 2, N}, {1, 2, N}});
    CHECK(extract_triads(all_negative).empty());
    CHECK(extract_triads(SignedGraph(3, {})).empty());
}

TEST_CASE("triad count matches the degree formula") {
    CHECK(extract_triads(two_factions()).size() == expected_triads(two_factions()));
    Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_graph(3 + uniform_index(rng, 12), 0.4, 0.4, rng);
        const auto t = extract_triads(g);
        CHECK(t.size() == expected_triads(g));
        for (const auto& x : t) {
            CHECK((g.find_edge(x.center, x.positive_neighbor) && *g.find_edge(x.center, x.positive_neighbor) == P));
            if (x.negative_neighbor == dummy_vertex) {
                CHECK(g.negative_degree(x.center) == 0);
            } else {
                CHECK((g.find_edge(x.center, x.negative_neighbor) && *g.find_edge(x.center, x.negative_neighbor) == N));
            }
        }
    }
}

TEST_CASE("loss gradient matches finite differences") {
    const auto g = two_factions();
    const auto triads = extract_triads(g);
    for (const std::size_t layers : {1, 2, 3}) {
        SineModel m(g.order(), 4, layers);
        m.initialize(3, 5);
        auto params = m.parameters();
        std::vector<double> grad(params.size(), 0.0);
        // A large margin keeps every hinge active, away from its kink.
        const double margin = 5.0;
        const auto loss = sine_loss(m, triads, margin, 0.01, grad);
        auto f = [&] { return sine_loss(m, triads, margin, 0.01).total(); };
        CHECK(loss.total() == doctest::Approx(f()));
        CHECK(max_relative_error(grad, numeric_gradient(params, f)) < 1e-4);
    }
}

TEST_CASE("similarity backward matches finite differences") {
    SineModel m(3, 5, 2);
    m.initialize(8, 9);
    auto params = m.parameters();
    for (const bool tower : {true, false}) {
        std::vector<double> grad(params.size(), 0.0);
        m.similarity_backward(tower, 0, dummy_vertex, 1.0, grad);
        auto f = [&] { return m.similarity(tower, 0, dummy_vertex); };
        CHECK(max_relative_error(grad, numeric_gradient(params, f)) < 1e-4);
    }
}

TEST_CASE("a single triad is separated by the margin") {
    const SignedGraph g(3, {{0, 1, P}, {0, 2, N}});
    const std::vector<Triad> one{{0, 1, 2}};
    SineOptions o;
    o.dim = 8;
    o.epochs = 300;
    o.margin = 1.0;
    o.l2 = 0.0;
    o.learning_rate = 0.05;
    const auto m = train_sine(g, one, o);
    CHECK(m.similarity(true, 0, 1) - m.similarity(false, 0, 2) >= 0.9 * o.margin);
}

TEST_CASE("zero margin drives the hinge to zero") {
    const auto g = two_factions();
    const auto triads = extract_triads(g);
    SineOptions o;
    o.dim = 8;
    o.epochs = 200;
    o.margin = 0.0;
    o.l2 = 0.0;
    SineTrainingLog log;
    const auto m = train_sine(g, triads, o, 0, &log);
    CHECK(sine_loss(m, triads, 0.0, 0.0).total() < 1e-3);
    CHECK(log.epoch_hinge.size() == 200);
}

TEST_CASE("training reduces the hinge") {
    const auto g = three_factions();
    const auto triads = extract_triads(g);
    SineOptions o;
    o.dim = 8;
    o.epochs = 100;
    SineTrainingLog log;
    train_sine(g, triads, o, 0, &log);
    CHECK(log.epoch_hinge.back() < log.epoch_hinge.front());
}

TEST_CASE("graph aggregation") {
    SineModel m(3, 2, 1);
    m.initialize(1, 2);
    std::vector<double> sum(2, 0.0);
    for (Vertex v = 0; v < 3; ++v) {
        for (std::size_t k = 0; k < 2; ++k) {
            sum[k] += m.vertex_vector(v)[k];
        }
    }
    const auto s = aggregate_vertices(m, Aggregation::sum);
    const auto a = aggregate_vertices(m, Aggregation::average);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(s[k] == doctest::Approx(sum[k]));
        CHECK(a[k] == doctest::Approx(sum[k] / 3.0));
    }
    // The dummy row is excluded.
    CHECK(m.vertex_vector(dummy_vertex).size() == 2);
}

TEST_CASE("collection embedding flags graphs without triads") {
    GraphCollection c;
    c.add("a", two_factions(), 0);
    c.add("b", SignedGraph(3, {{0, 1, N}, {1, 2, N}}), 1);
    c.add("c", three_factions(), 0);
    SineOptions o;
    o.dim = 4;
    o.epochs = 5;
    const auto e = embed_sine(c, o, 1);
    CHECK(e.graphs_without_triads == 1);
    CHECK(e.sum.rows == 3);
    CHECK(e.average.dim == 4);
    const auto b = e.sum.row(1);
    CHECK(std::all_of(b.begin(), b.end(), [](double x) { return x == 0.0; }));

    const auto e4 = embed_sine(c, o, 4);
    CHECK(e4.sum.values == e.sum.values);
    CHECK(e4.average.values == e.average.values);
}
