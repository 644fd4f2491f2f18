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

#ifndef SWGE_COLLECTION_HPP
#define SWGE_COLLECTION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swge/graph.hpp"

namespace swge {

/// Labeled set of graphs, stored column-wise. Row i of every vector
/// describes graph i.
struct GraphCollection {
    std::string name;
    std::vector<std::string> ids;
    std::vector<SignedGraph> graphs;
    std::vector<std::uint32_t> labels;
    std::vector<std::string> class_names;
    // Original vertex names per graph; empty when vertices were already 0..n-1.
    std::vector<std::vector<std::string>> vertex_names;

    [[nodiscard]] std::size_t size() const { return graphs.size(); }

    void add(std::string id, SignedGraph g, std::uint32_t label) {
        ids.push_back(std::move(id));
        graphs.push_back(std::move(g));
        labels.push_back(label);
        vertex_names.emplace_back();
    }
};

/// Stable 64-bit key of a graph id, used to derive per-graph random streams.
std::uint64_t graph_key(std::string_view id);

/// Dense vectors, one row per graph, in collection order.
struct EmbeddingMatrix {
    std::size_t rows = 0;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    std::vector<double> values;

    EmbeddingMatrix() = default;
    EmbeddingMatrix(std::size_t rows_, std::size_t dim_, std::uint64_t seed_ = 0)
        : rows(rows_), dim(dim_), seed(seed_), values(rows_ * dim_, 0.0) {}

    [[nodiscard]] std::span<double> row(std::size_t i) { return {values.data() + i * dim, dim}; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const { return {values.data() + i * dim, dim}; }
};

} // namespace swge

#endif // SWGE_COLLECTION_HPP
