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

#include "swge/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "swge/error.hpp"

namespace swge {

SignedGraph::SignedGraph(std::size_t order, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(order), positive_degree_(order, 0) {
    for (auto& e : edges_) {
        if (e.u >= order || e.v >= order) {
            throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") outside vertex range [0," + std::to_string(order) + ")");
        }
        if (e.u == e.v) {
            throw DomainError("self-loop on vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw DomainError("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                              std::to_string(edges_[i].v) + ")");
        }
    }
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back({e.v, e.sign});
        adjacency_[e.v].push_back({e.u, e.sign});
        if (e.sign == Sign::positive) {
            ++positive_degree_[e.u];
            ++positive_degree_[e.v];
            ++positive_edges_;
        }
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
}

void SignedGraph::check_vertex(Vertex u) const {
    if (u >= order()) {
        throw DomainError("vertex " + std::to_string(u) + " out of range for graph of order " +
                          std::to_string(order()));
    }
}

std::span<const Neighbor> SignedGraph::adjacent(Vertex u) const {
    check_vertex(u);
    return adjacency_[u];
}

std::vector<Vertex> SignedGraph::neighborhood(Vertex u, NeighborFilter filter) const {
    check_vertex(u);
    std::vector<Vertex> out;
    for (const auto& nb : adjacency_[u]) {
        if (filter == NeighborFilter::any || (filter == NeighborFilter::positive) == (nb.sign == Sign::positive)) {
            out.push_back(nb.vertex);
        }
    }
    return out;
}

std::size_t SignedGraph::degree(Vertex u) const {
    check_vertex(u);
    return adjacency_[u].size();
}

std::size_t SignedGraph::positive_degree(Vertex u) const {
    check_vertex(u);
    return positive_degree_[u];
}

std::size_t SignedGraph::negative_degree(Vertex u) const {
    check_vertex(u);
    return adjacency_[u].size() - positive_degree_[u];
}

const Sign* SignedGraph::find_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
    if (it == list.end() || it->vertex != v) {
        return nullptr;
    }
    return &it->sign;
}

SignedGraph SignedGraph::flipped() const {
    std::vector<Edge> out(edges_.begin(), edges_.end());
    for (auto& e : out) {
        e.sign = flip(e.sign);
    }
    return SignedGraph(order(), std::move(out));
}

SignedGraph SignedGraph::permuted(std::span<const Vertex> permutation) const {
    if (permutation.size() != order()) {
        throw DomainError("permutation length does not match graph order");
    }
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        out.push_back({permutation[e.u], permutation[e.v], e.sign});
    }
    return SignedGraph(order(), std::move(out));
}

Sign path_sign(std::span<const Sign> signs) {
    if (signs.empty()) {
        throw DomainError("path_sign of an empty path");
    }
    const auto negatives = std::count(signs.begin(), signs.end(), Sign::negative);
    return negatives % 2 == 0 ? Sign::positive : Sign::negative;
}

ReachableSets reachable_sets(const SignedGraph& g, Vertex u) {
    const std::size_t n = g.order();
    if (u >= n) {
        throw DomainError("vertex " + std::to_string(u) + " out of range");
    }
    // Bit 0: reached by a positive shortest path, bit 1: by a negative one.
    constexpr std::uint8_t pos_bit = 1;
    constexpr std::uint8_t neg_bit = 2;
    std::vector<int> dist(n, -1);
    std::vector<std::uint8_t> mask(n, 0);
    std::vector<Vertex> frontier{u};
    dist[u] = 0;
    mask[u] = pos_bit;
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (const Vertex x : frontier) {
            for (const auto& nb : g.adjacent(x)) {
                const Vertex y = nb.vertex;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    next.push_back(y);
                }
                if (dist[y] == dist[x] + 1) {
                    std::uint8_t carried = mask[x];
                    if (nb.sign == Sign::negative) {
                        carried = static_cast<std::uint8_t>(((carried & pos_bit) << 1) | ((carried & neg_bit) >> 1));
                    }
                    mask[y] |= carried;
                }
            }
        }
        frontier = std::move(next);
    }
    ReachableSets out;
    for (Vertex v = 0; v < n; ++v) {
        if (v == u || dist[v] <= 0) {
            continue;
        }
        if (mask[v] & pos_bit) {
            out.positive.push_back(v);
        }
        if (mask[v] & neg_bit) {
            out.negative.push_back(v);
        }
        if (mask[v] == (pos_bit | neg_bit)) {
            ++out.ambiguous;
        }
    }
    return out;
}

std::vector<int> bfs_distances(const SignedGraph& g, Vertex u) {
    std::vector<int> dist(g.order(), -1);
    if (u >= g.order()) {
        throw DomainError("vertex " + std::to_string(u) + " out of range");
    }
    std::deque<Vertex> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (const auto& nb : g.adjacent(x)) {
            if (dist[nb.vertex] == -1) {
                dist[nb.vertex] = dist[x] + 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    return dist;
}

std::size_t diameter(const SignedGraph& g) {
    int best = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (const int d : bfs_distances(g, u)) {
            best = std::max(best, d);
        }
    }
    return static_cast<std::size_t>(best);
}

GraphStats graph_stats(const SignedGraph& g) {
    GraphStats s;
    s.order = g.order();
    s.size = g.size();
    s.positive_edge_count = g.positive_edge_count();
    s.negative_edge_count = g.negative_edge_count();
    if (s.order >= 2) {
        s.density = 2.0 * static_cast<double>(s.size) / (static_cast<double>(s.order) * static_cast<double>(s.order - 1));
    }
    if (s.size > 0) {
        s.positive_edge_proportion = 100.0 * static_cast<double>(s.positive_edge_count) / static_cast<double>(s.size);
    }
    return s;
}

std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (const auto& nb : g.adjacent(comp[i])) {
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = true;
                    comp.push_back(nb.vertex);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace swge
