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

#ifndef SWGE_TESTS_FIXTURES_HPP
#define SWGE_TESTS_FIXTURES_HPP

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "swge/graph.hpp"
#include "swge/rng.hpp"

namespace fixtures {

using swge::Edge;
using swge::SignedGraph;
using swge::Vertex;

constexpr auto P = swge::Sign::positive;
constexpr auto N = swge::Sign::negative;

// Vertices are numbered from 0, so v1 is vertex 0.

// Two clusters {v1,v2,v3} and {v4..v7}, strictly balanced.
inline SignedGraph two_factions() {
    return SignedGraph(7, {{0, 1, P}, {0, 2, P}, {1, 2, P}, {1, 3, N}, {2, 3, N}, {2, 5, N},
                           {3, 4, P}, {3, 6, P}, {4, 5, P}, {5, 6, P}});
}

// Three clusters {v1,v2,v3}, {v4,v5}, {v6,v7,v8}, generalized but not strict balance.
inline SignedGraph three_factions() {
    return SignedGraph(8, {{0, 1, P}, {0, 2, P}, {1, 2, P}, {3, 4, P}, {5, 6, P}, {5, 7, P},
                           {1, 3, N}, {1, 7, N}, {2, 3, N}, {2, 7, N}, {3, 7, N}, {4, 7, N}, {4, 6, N}});
}

// Relabeling examples: unsigned and signed versions of one graph.
inline SignedGraph relabel_unsigned() {
    return SignedGraph(4, {{0, 1, P}, {0, 2, P}, {0, 3, P}, {1, 2, P}});
}

inline SignedGraph relabel_signed() {
    return SignedGraph(4, {{0, 1, P}, {0, 2, N}, {0, 3, P}, {1, 2, N}});
}

// Convolution example around v1: positive neighbors v2, v3, negative neighbor
// v4; v9 is two positive hops away (through v2), v10 is reached by a positive
// then a negative edge (through v3). Vertex ids: v1=0, v2=1, v3=2, v4=3,
// v9=4, v10=5.
inline SignedGraph two_hop_paths() {
    return SignedGraph(6, {{0, 1, P}, {0, 2, P}, {0, 3, N}, {1, 4, P}, {2, 5, N}});
}
constexpr Vertex path_source = 0;
constexpr Vertex positive_path_end = 4;
constexpr Vertex negative_path_end = 5;

// Master-node scheme examples: six vertices, one frustrated edge at best.
inline SignedGraph six_vertex_frustrated() {
    return SignedGraph(6, {{0, 1, P}, {0, 2, N}, {1, 2, N}, {1, 3, P}, {2, 3, P}, {3, 4, N}, {3, 5, N}, {4, 5, P}});
}

inline SignedGraph random_graph(std::size_t n, double edge_probability, double negative_probability, swge::Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (swge::uniform01(rng) < edge_probability) {
                edges.push_back({u, v, swge::uniform01(rng) < negative_probability ? N : P});
            }
        }
    }
    return SignedGraph(n, std::move(edges));
}

/// Largest relative error between two gradients, with an absolute floor for tiny entries.
inline double max_relative_error(std::span<const double> a, std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double scale = std::max({std::abs(a[i]), std::abs(b[i]), 1e-6});
        worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
    }
    return worst;
}

/// Central differences of f over params, restoring each entry afterwards.
inline std::vector<double> numeric_gradient(std::span<double> params, const std::function<double()>& f,
                                            double h = 1e-6) {
    std::vector<double> g(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double keep = params[i];
        params[i] = keep + h;
        const double up = f();
        params[i] = keep - h;
        const double down = f();
        params[i] = keep;
        g[i] = (up - down) / (2.0 * h);
    }
    return g;
}

} // namespace fixtures

#endif // SWGE_TESTS_FIXTURES_HPP
