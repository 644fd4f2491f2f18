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

#ifndef SWGE_SINE_HPP
#define SWGE_SINE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "swge/collection.hpp"
#include "swge/graph.hpp"

namespace swge {

/// Stands for the extra negative neighbor added to vertices whose
/// neighborhood is entirely positive. One per graph.
inline constexpr Vertex dummy_vertex = std::numeric_limits<Vertex>::max();

struct Triad {
    Vertex center = 0;
    Vertex positive_neighbor = 0;
    Vertex negative_neighbor = 0; // dummy_vertex for augmented triads

    friend bool operator==(const Triad&, const Triad&) = default;
};

/// Every open triad with one negative and one positive edge at the center,
/// plus one dummy triad per positive neighbor of each vertex without negative
/// neighbors. Vertices whose neighbors are all negative contribute nothing.
std::vector<Triad> extract_triads(const SignedGraph& g);

struct SineOptions {
    std::size_t dim = 32;
    std::size_t layers = 2;         // shared first layer + (layers - 1) per-tower layers
    std::size_t epochs = 50;
    double margin = 1.0;
    double learning_rate = 0.01;
    double l2 = 1e-4;
    std::size_t batch_size = 32;
    std::size_t triads_per_vertex = 0; // per center and epoch; 0 = all
    std::uint64_t seed = 1;
};

/// Vertex vectors plus a two-tower scorer. The first dense layer, applied to
/// the concatenated pair, is shared; the positive tower scores (center,
/// positive neighbor) pairs and the negative tower (center, negative
/// neighbor) pairs. All parameters live in one flat vector.
class SineModel {
public:
    SineModel() = default;
    SineModel(std::size_t vertices, std::size_t dim, std::size_t layers);

    [[nodiscard]] std::size_t vertex_count() const { return vertices_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t layers() const { return layers_; }

    [[nodiscard]] std::span<double> parameters() { return params_; }
    [[nodiscard]] std::span<const double> parameters() const { return params_; }

    /// Row of a vertex; dummy_vertex maps to the extra last row.
    [[nodiscard]] std::span<const double> vertex_vector(Vertex v) const;

    /// Scalar tower output for the pair (center, other).
    [[nodiscard]] double similarity(bool positive_tower, Vertex center, Vertex other) const;

    /// Backpropagates `upstream` times d similarity / d params into grad.
    void similarity_backward(bool positive_tower, Vertex center, Vertex other, double upstream,
                             std::span<double> grad) const;

    void initialize(std::uint64_t weight_seed, std::uint64_t vertex_seed);

    bool no_triads = false; // trained on nothing; vertex vectors are zero

private:
    [[nodiscard]] std::size_t vertex_offset(Vertex v) const;
    [[nodiscard]] std::size_t tower_offset(bool positive_tower) const;

    std::size_t vertices_ = 0; // real vertices, excluding the dummy
    std::size_t dim_ = 0;
    std::size_t layers_ = 0;
    std::vector<double> params_;
};

struct SineLoss {
    double hinge = 0.0;          // mean over the triads
    double regularization = 0.0; // l2 / 2 * |params|^2
    [[nodiscard]] double total() const { return hinge + regularization; }
};

/// Mean over triads of max(0, sim_neg(c, n) + margin - sim_pos(c, p)) plus
/// l2 regularization. Adds the gradient into grad when it is non-empty.
SineLoss sine_loss(const SineModel& model, std::span<const Triad> triads, double margin, double l2,
                   std::span<double> grad = {});

struct SineTrainingLog {
    std::vector<double> epoch_hinge;
};

/// Trains one graph. `graph_key` seeds the vertex vectors and the triad
/// order; the scorer weights start from the same draw for every graph.
SineModel train_sine(const SignedGraph& g, std::span<const Triad> triads, const SineOptions& options,
                     std::uint64_t graph_key = 0, SineTrainingLog* log = nullptr);

enum class Aggregation { sum, average };

/// Componentwise sum or mean over the real vertices (the dummy is excluded).
std::vector<double> aggregate_vertices(const SineModel& model, Aggregation mode);

struct SineEmbeddings {
    EmbeddingMatrix sum;
    EmbeddingMatrix average;
    std::size_t graphs_without_triads = 0;
};

/// Trains every graph independently on `threads` threads.
SineEmbeddings embed_sine(const GraphCollection& collection, const SineOptions& options, int threads = 1);

} // namespace swge

#endif // SWGE_SINE_HPP
