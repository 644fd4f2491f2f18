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

#ifndef SWGE_GRAPH_HPP
#define SWGE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swge {

using Vertex = std::uint32_t;

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::positive : Sign::negative;
}

constexpr Sign flip(Sign s) {
    return s == Sign::positive ? Sign::negative : Sign::positive;
}

constexpr char sign_char(Sign s) {
    return s == Sign::positive ? '+' : '-';
}

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Sign sign = Sign::positive;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex vertex = 0;
    Sign sign = Sign::positive;
};

enum class NeighborFilter { any, positive, negative };

/// Simple undirected signed graph on dense vertex ids 0..n-1. Immutable once
/// built; all queries are const and safe to share across threads.
class SignedGraph {
public:
    SignedGraph() = default;

    /// Throws DomainError on out-of-range ids, self-loops and duplicate pairs
    /// (a repeated pair is rejected whatever its sign).
    SignedGraph(std::size_t order, std::vector<Edge> edges);

    [[nodiscard]] std::size_t order() const { return adjacency_.size(); }
    [[nodiscard]] std::size_t size() const { return edges_.size(); }

    /// Edges normalized to u < v and sorted by (u, v).
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }

    /// All incident edges of u, sorted by neighbor id.
    [[nodiscard]] std::span<const Neighbor> adjacent(Vertex u) const;

    [[nodiscard]] std::vector<Vertex> neighborhood(Vertex u, NeighborFilter filter = NeighborFilter::any) const;

    [[nodiscard]] std::size_t degree(Vertex u) const;
    [[nodiscard]] std::size_t positive_degree(Vertex u) const;
    [[nodiscard]] std::size_t negative_degree(Vertex u) const;

    [[nodiscard]] std::size_t positive_edge_count() const { return positive_edges_; }
    [[nodiscard]] std::size_t negative_edge_count() const { return edges_.size() - positive_edges_; }

    /// Sign of edge (u, v) if present.
    [[nodiscard]] const Sign* find_edge(Vertex u, Vertex v) const;

    /// Same graph with every sign reversed.
    [[nodiscard]] SignedGraph flipped() const;

    /// Graph whose vertex permutation[u] corresponds to u here.
    [[nodiscard]] SignedGraph permuted(std::span<const Vertex> permutation) const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.order() == b.order() && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex u) const;

    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<std::uint32_t> positive_degree_;
    std::size_t positive_edges_ = 0;
};

/// Product of the signs; DomainError on an empty list.
Sign path_sign(std::span<const Sign> signs);

struct ReachableSets {
    std::vector<Vertex> positive;
    std::vector<Vertex> negative;
    // Vertices reached by shortest paths of both signs (listed in both sets).
    std::size_t ambiguous = 0;
};

/// Vertices joined to u by positive (resp. negative) shortest paths. u itself
/// is in neither set, nor are vertices of other components.
ReachableSets reachable_sets(const SignedGraph& g, Vertex u);

/// Shortest-path distances from u; unreachable vertices get -1.
std::vector<int> bfs_distances(const SignedGraph& g, Vertex u);

/// Largest finite eccentricity over all vertices (0 for graphs without edges).
std::size_t diameter(const SignedGraph& g);

struct GraphStats {
    std::size_t order = 0;
    std::size_t size = 0;
    double density = 0.0;
    std::size_t positive_edge_count = 0;
    std::size_t negative_edge_count = 0;
    double positive_edge_proportion = 0.0; // percentage
};

GraphStats graph_stats(const SignedGraph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g);

} // namespace swge

#endif // SWGE_GRAPH_HPP
