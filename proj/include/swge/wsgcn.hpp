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

#ifndef SWGE_WSGCN_HPP
#define SWGE_WSGCN_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swge/balance.hpp"
#include "swge/collection.hpp"
#include "swge/graph.hpp"
#include "swge/rng.hpp"
#include "swge/sine.hpp"

namespace swge {

enum class MasterScheme { none, plus, minus, plusminus, sb, gb };

const char* to_string(MasterScheme s);

/// Inverse of to_string; DomainError on unknown names.
MasterScheme master_scheme_from_string(std::string_view name);

/// Base graph plus master vertices n, n+1, ... wired to every base vertex.
struct AugmentedGraph {
    SignedGraph base;
    SignedGraph graph; // base edges followed by master edges, on base.order() + masters.size() vertices
    MasterScheme scheme = MasterScheme::none;
    std::vector<Vertex> masters;
    std::vector<Edge> master_edges;
    std::optional<Partition> partition; // sb and gb only
    std::size_t partition_frustration = 0;
    bool partition_exact = false;
};

/// Wires master vertices for `scheme`. sb and gb use `partition` when given,
/// otherwise the minimum-frustration partition (exact within the solver caps,
/// local search with `restarts` beyond). Throws DomainError on an empty graph.
AugmentedGraph attach_master_nodes(const SignedGraph& g, MasterScheme scheme, const Partition* partition = nullptr,
                                   std::uint64_t seed = 1, std::size_t restarts = 20);

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Positive and negative hidden states of every vertex at one layer.
struct DualLayer {
    RowMatrix positive;
    RowMatrix negative;
};

/// layers[0] holds the input features, layers[t] the output of layer t.
struct DualHidden {
    std::vector<DualLayer> layers;

    /// [h+(u), h-(u)] at the last layer.
    [[nodiscard]] Eigen::VectorXd representation(Vertex u) const;
};

/// h+ = [k+, k+ / max(1, k), random tail], h- likewise with k-, degrees taken
/// on the augmented graph. The tail of each vertex comes from its own stream.
DualLayer init_features(const AugmentedGraph& ag, std::size_t feature_dim, std::uint64_t seed,
                        std::uint64_t graph_key = 0);

enum class Activation { tanh, linear };

/// Per-layer weights W+ and W- (each 3 * d_in x d_out, applied as X * W) and
/// the bilinear link scorer B (2d x 2d), in one flat vector.
class WsgcnWeights {
public:
    WsgcnWeights() = default;
    WsgcnWeights(std::size_t input_dim, std::size_t dim, std::size_t layers);

    [[nodiscard]] std::size_t input_dim() const { return input_dim_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t layers() const { return layers_; }
    [[nodiscard]] std::size_t layer_input(std::size_t t) const { return t == 1 ? input_dim_ : dim_; }

    [[nodiscard]] std::span<double> parameters() { return params_; }
    [[nodiscard]] std::span<const double> parameters() const { return params_; }

    /// Offset of W+ (positive = true) or W- of layer t in 1..layers.
    [[nodiscard]] std::size_t layer_offset(std::size_t t, bool positive) const;
    [[nodiscard]] std::size_t bilinear_offset() const;

    [[nodiscard]] Eigen::Map<const RowMatrix> weight(std::size_t t, bool positive) const;
    [[nodiscard]] Eigen::Map<const RowMatrix> bilinear() const;

    void initialize(std::uint64_t seed);

private:
    std::size_t input_dim_ = 0;
    std::size_t dim_ = 0;
    std::size_t layers_ = 0;
    std::vector<double> params_;
};

/// Signed convolution over the augmented graph:
///   h+_t(u) = s(W+_t [mean h+_{t-1} over N+(u), mean h-_{t-1} over N-(u), h+_{t-1}(u)])
///   h-_t(u) = s(W-_t [mean h-_{t-1} over N+(u), mean h+_{t-1} over N-(u), h-_{t-1}(u)])
/// An empty neighborhood contributes a zero block.
DualHidden sgcn_forward(const AugmentedGraph& ag, const DualLayer& features, const WsgcnWeights& weights,
                        Activation activation = Activation::tanh);

/// Same computation with dense row-normalized adjacency matrices; kept as the
/// reference the sparse kernel is tested against.
DualHidden sgcn_forward_reference(const AugmentedGraph& ag, const DualLayer& features, const WsgcnWeights& weights,
                                  Activation activation = Activation::tanh);

enum class LinkKind { positive, negative, none };

struct LinkSample {
    Vertex u = 0;
    Vertex v = 0;
    LinkKind kind = LinkKind::positive;
};

/// Mean over samples of the link-sign loss on score = z_u^T B z_v with
/// z = [h+_T, h-_T]: -log s(score) for positive edges, -log s(-score) for
/// negative ones, -log s(m - score) - log s(m + score) for non-edges; plus
/// l2 / 2 * |weights|^2. Adds the gradient into grad when it is non-empty.
double wsgcn_loss(const AugmentedGraph& ag, const DualLayer& features, const WsgcnWeights& weights,
                  std::span<const LinkSample> samples, double neutral_margin, double l2, Activation activation,
                  std::span<double> grad = {});

/// Every base edge with its sign plus up to one sampled base non-edge per edge.
std::vector<LinkSample> link_samples(const SignedGraph& base, Rng& rng);

enum class RepresentationMode { last_layer, sum_layers };

struct WsgcnOptions {
    MasterScheme scheme = MasterScheme::gb;
    std::size_t dim = 32;
    std::size_t feature_dim = 16;
    std::size_t layers = 2;
    std::size_t epochs = 50;
    double learning_rate = 0.01;
    double l2 = 1e-4;
    double neutral_margin = 1.0;
    Activation activation = Activation::tanh;
    RepresentationMode mode = RepresentationMode::last_layer;
    Aggregation fallback = Aggregation::sum;
    std::size_t balance_restarts = 20;
    std::uint64_t seed = 1;
};

struct TrainedWsgcn {
    WsgcnWeights weights;
    DualLayer features;
    DualHidden hidden;
    std::vector<double> epoch_loss;
};

/// Trains on the link-sign objective over base edges; master edges carry
/// messages but are never scored. Weights start from the same draw for every
/// graph; features and non-edge samples use streams keyed by graph_key.
TrainedWsgcn train_wsgcn(const AugmentedGraph& ag, const WsgcnOptions& options, std::uint64_t graph_key = 0);

/// Fraction of base edges whose score sign matches the edge sign.
double edge_sign_accuracy(const AugmentedGraph& ag, const DualHidden& hidden, const WsgcnWeights& weights);

/// Sum of the master representations ([h+, h-] at the last layer, or summed
/// over layers 1..T); without masters, the sum or mean of the base vertices.
Eigen::VectorXd graph_representation(const AugmentedGraph& ag, const DualHidden& hidden, RepresentationMode mode,
                                     Aggregation fallback = Aggregation::sum);

struct WsgcnGraphMeta {
    MasterScheme scheme = MasterScheme::none;
    std::size_t masters = 0;
    std::size_t clusters = 0;
    std::uint64_t partition_checksum = 0;
    std::size_t partition_frustration = 0;
    bool partition_exact = false;
};

struct WsgcnEmbeddings {
    EmbeddingMatrix matrix;
    std::vector<WsgcnGraphMeta> meta;
};

WsgcnEmbeddings embed_wsgcn(const GraphCollection& collection, const WsgcnOptions& options, int threads = 1);

} // namespace swge

#endif // SWGE_WSGCN_HPP
