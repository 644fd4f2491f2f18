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
#include <limits>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "swge/balance.hpp"
#include "swge/error.hpp"

using namespace swge;
using namespace fixtures;
using namespace oracles;

TEST_CASE("brute-force enumerators visit Bell(n) partitions and 2^(n-1) bisections") {
    CHECK(brute_free(SignedGraph(5, {})).states == 52);
    CHECK(brute_free(SignedGraph(7, {})).states == 877);
    CHECK(brute_bisection(SignedGraph(5, {})).states == 16);
}

TEST_CASE("partition validation and canonical form") {
    CHECK_THROWS_AS(Partition({0, 2}), DomainError);
    CHECK_THROWS_AS(Partition({1, 1}), DomainError);
    const Partition p({0, 1, 1, 2});
    CHECK(p.cluster_count() == 3);
    const std::vector<std::uint32_t> raw{2, 0, 0, 1};
    const auto c = Partition::canonical(raw);
    CHECK(c.assignment() == std::vector<std::uint32_t>{0, 1, 1, 2});
    CHECK(c == p);
    CHECK(c.checksum() == p.checksum());
    CHECK(Partition({0, 0, 1, 2}).checksum() != p.checksum());
    CHECK(p.clusters() == std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3}});
}

TEST_CASE("frustration of a partition") {
    const auto g = two_factions();
    CHECK(frustration_of_partition(g, Partition({0, 0, 0, 1, 1, 1, 1})) == 0);
    CHECK(frustration_of_partition(g, Partition(std::vector<std::uint32_t>(7, 0))) == 3);
    std::vector<std::uint32_t> singletons(7);
    for (std::uint32_t i = 0; i < 7; ++i) {
        singletons[i] = i;
    }
    CHECK(frustration_of_partition(g, Partition(singletons)) == g.positive_edge_count());
    CHECK_THROWS_AS(frustration_of_partition(g, Partition({0, 1})), DomainError);
    // Relabeling cluster ids does not change the count.
    CHECK(frustration_of_partition(g, Partition({1, 1, 1, 0, 0, 0, 0})) == 0);
}

TEST_CASE("exact solver on the balanced faction graphs") {
    const auto a = exact_min_frustration(two_factions(), BalanceMode::bisection);
    CHECK(a.frustrated_edge_count == 0);
    CHECK(a.exact);
    CHECK(a.partition.assignment() == std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1, 1});

    const auto b = exact_min_frustration(three_factions(), BalanceMode::free_k);
    CHECK(b.frustrated_edge_count == 0);
    CHECK(b.partition.cluster_count() == 3);
    CHECK(b.partition.assignment() == std::vector<std::uint32_t>{0, 0, 0, 1, 1, 2, 2, 2});
    CHECK(exact_min_frustration(three_factions(), BalanceMode::bisection).frustrated_edge_count > 0);
}

TEST_CASE("master-node example has four optimal partitions; the smallest wins") {
    const auto g = six_vertex_frustrated();
    const std::vector<std::vector<std::uint32_t>> optima{
        {0, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 2, 2}, {0, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 2, 2}};
    for (const auto& p : optima) {
        CHECK(frustration_of_partition(g, Partition(p)) == 1);
    }
    const auto r = exact_min_frustration(g, BalanceMode::free_k);
    CHECK(r.frustrated_edge_count == 1);
    CHECK(r.partition.assignment() == optima.front());
    CHECK(brute_free(g).best == 1);
}

TEST_CASE("exact solver matches independent enumeration") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + uniform_index(rng, 9);
        const auto g = random_graph(n, 0.5, 0.45, rng);
        const auto sb = exact_min_frustration(g, BalanceMode::bisection);
        const auto gb = exact_min_frustration(g, BalanceMode::free_k);
        const auto bsb = brute_bisection(g);
        const auto bgb = brute_free(g);
        CHECK(sb.frustrated_edge_count == bsb.best);
        CHECK(gb.frustrated_edge_count == bgb.best);
        CHECK(frustration_of_partition(g, sb.partition) == sb.frustrated_edge_count);
        CHECK(frustration_of_partition(g, gb.partition) == gb.frustrated_edge_count);
        CHECK(sb.partition.cluster_count() <= 2);
        CHECK(gb.frustrated_edge_count <= sb.frustrated_edge_count);
        if (connected_components(g).size() == 1) {
            CHECK(sb.partition.assignment() == bsb.argmin);
            CHECK(gb.partition.assignment() == bgb.argmin);
        }
        CHECK(sb.frustration_ratio == doctest::Approx(g.size() ? double(sb.frustrated_edge_count) / g.size() : 0.0));
    }
}

TEST_CASE("exact solver enforces its size caps") {
    const SignedGraph big(max_exact_free_k_order + 1, {});
    CHECK_THROWS_AS(exact_min_frustration(big, BalanceMode::free_k), CapacityError);
    CHECK_NOTHROW(exact_min_frustration(big, BalanceMode::bisection));
    const SignedGraph bigger(max_exact_bisection_order + 1, {});
    CHECK_THROWS_AS(exact_min_frustration(bigger, BalanceMode::bisection), CapacityError);
    // min_frustration falls back to local search beyond the caps.
    const auto r = min_frustration(bigger, BalanceMode::bisection, 1);
    CHECK_FALSE(r.exact);
    CHECK(r.frustrated_edge_count == 0);
}

TEST_CASE("local search") {
    CHECK(local_search_min_frustration(two_factions(), BalanceMode::bisection, 5, 17).frustrated_edge_count == 0);
    CHECK(local_search_min_frustration(two_factions(), BalanceMode::bisection, 5, 99).frustrated_edge_count == 0);

    std::vector<Edge> positive;
    for (Vertex u = 0; u < 6; ++u) {
        for (Vertex v = u + 1; v < 6; ++v) {
            positive.push_back({u, v, P});
        }
    }
    const auto k6 = local_search_min_frustration(SignedGraph(6, positive), BalanceMode::free_k, 3, 1);
    CHECK(k6.frustrated_edge_count == 0);
    CHECK(k6.partition.cluster_count() == 1);

    Rng rng(77);
    int hits = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_graph(10, 0.5, 0.45, rng);
        const auto mode = trial % 2 == 0 ? BalanceMode::bisection : BalanceMode::free_k;
        const auto exact = exact_min_frustration(g, mode);
        const auto local = local_search_min_frustration(g, mode, 50, static_cast<std::uint64_t>(trial));
        CHECK(local.frustrated_edge_count >= exact.frustrated_edge_count);
        CHECK(frustration_of_partition(g, local.partition) == local.frustrated_edge_count);
        hits += local.frustrated_edge_count == exact.frustrated_edge_count ? 1 : 0;
    }
    CHECK(hits >= 90);
}

TEST_CASE("local search is deterministic and thread-count independent") {
    Rng rng(8);
    const auto g = random_graph(30, 0.4, 0.5, rng);
    const auto a = local_search_min_frustration(g, BalanceMode::free_k, 8, 5, 1);
    const auto b = local_search_min_frustration(g, BalanceMode::free_k, 8, 5, 1);
    const auto c = local_search_min_frustration(g, BalanceMode::free_k, 8, 5, 4);
    CHECK(a.partition == b.partition);
    CHECK(a.partition == c.partition);
    CHECK(a.frustrated_edge_count == c.frustrated_edge_count);
}

TEST_CASE("balance tests") {
    CHECK(is_balanced(two_factions(), BalanceKind::strict));
    CHECK_FALSE(is_balanced(three_factions(), BalanceKind::strict));
    CHECK(is_balanced(three_factions(), BalanceKind::generalized));
    const SignedGraph triangle(3, {{0, 1, P}, {1, 2, P}, {0, 2, N}});
    CHECK_FALSE(is_balanced(triangle, BalanceKind::strict));
    CHECK_FALSE(is_balanced(triangle, BalanceKind::generalized));

    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_graph(1 + uniform_index(rng, 8), 0.4, 0.3, rng);
        CHECK(is_balanced(g, BalanceKind::strict) ==
              (exact_min_frustration(g, BalanceMode::bisection).frustrated_edge_count == 0));
        CHECK(is_balanced(g, BalanceKind::generalized) ==
              (exact_min_frustration(g, BalanceMode::free_k).frustrated_edge_count == 0));
    }
}
