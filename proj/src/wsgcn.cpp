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

#include "swge/wsgcn.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "swge/error.hpp"
#include "swge/optim.hpp"
#include "swge/parallel.hpp"

namespace swge {

const char* to_string(MasterScheme s) {
    switch (s) {
    case MasterScheme::none:
        return "none";
    case MasterScheme::plus:
        return "plus";
    case MasterScheme::minus:
        return "minus";
    case MasterScheme::plusminus:
        return "plusminus";
    case MasterScheme::sb:
        return "sb";
    case MasterScheme::gb:
        return "gb";
    }
    return "?";
}

MasterScheme master_scheme_from_string(std::string_view name) {
    for (const auto s : {MasterScheme::none, MasterScheme::plus, MasterScheme::minus, MasterScheme::plusminus,
                         MasterScheme::sb, MasterScheme::gb}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    throw DomainError("unknown master scheme '" + std::string(name) + "'");
}

AugmentedGraph attach_master_nodes(const SignedGraph& g, MasterScheme scheme, const Partition* partition,
                                   std::uint64_t seed, std::size_t restarts) {
    const std::size_t n = g.order();
    if (n == 0) {
        throw DomainError("cannot attach master nodes to an empty graph");
    }
    AugmentedGraph ag;
    ag.base = g;
    ag.scheme = scheme;

    auto add_master = [&](auto sign_of) {
        const auto m = static_cast<Vertex>(n + ag.masters.size());
        ag.masters.push_back(m);
        for (Vertex u = 0; u < n; ++u) {
            ag.master_edges.push_back({u, m, sign_of(u)});
        }
    };

    switch (scheme) {
    case MasterScheme::none:
        break;
    case MasterScheme::plus:
        add_master([](Vertex) { return Sign::positive; });
        break;
    case MasterScheme::minus:
        add_master([](Vertex) { return Sign::negative; });
        break;
    case MasterScheme::plusminus:
        add_master([](Vertex) { return Sign::positive; });
        add_master([](Vertex) { return Sign::negative; });
        break;
    case MasterScheme::sb:
    case MasterScheme::gb: {
        const auto mode = scheme == MasterScheme::sb ? BalanceMode::bisection : BalanceMode::free_k;
        if (partition != nullptr) {
            if (partition->size() != n) {
                throw DomainError("partition does not cover the graph");
            }
            ag.partition = *partition;
            ag.partition_frustration = frustration_of_partition(g, *partition);
            ag.partition_exact = false;
        } else {
            auto solved = min_frustration(g, mode, seed, restarts);
            ag.partition = solved.partition;
            ag.partition_frustration = solved.frustrated_edge_count;
            ag.partition_exact = solved.exact;
        }
        const Partition& p = *ag.partition;
        // sb always gets two masters, even when one side of the bisection is empty.
        const std::size_t count = scheme == MasterScheme::sb ? 2 : p.cluster_count();
        for (std::uint32_t c = 0; c < count; ++c) {
            add_master([&](Vertex u) { return p.cluster(u) == c ? Sign::positive : Sign::negative; });
        }
        break;
    }
    }

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.insert(edges.end(), ag.master_edges.begin(), ag.master_edges.end());
    ag.graph = SignedGraph(n + ag.masters.size(), std::move(edges));
    return ag;
}

Eigen::VectorXd DualHidden::representation(Vertex u) const {
    const auto& last = layers.back();
    Eigen::VectorXd z(last.positive.cols() + last.negative.cols());
    z << last.positive.row(u).transpose(), last.negative.row(u).transpose();
    return z;
}

DualLayer init_features(const AugmentedGraph& ag, std::size_t feature_dim, std::uint64_t seed,
                        std::uint64_t graph_key) {
    if (feature_dim < 2) {
        throw DomainError("feature dimension must be at least 2");
    }
    const auto& g = ag.graph;
    const std::size_t n = g.order();
    DualLayer f{RowMatrix::Zero(n, feature_dim), RowMatrix::Zero(n, feature_dim)};
    const std::uint64_t graph_seed = derive_seed(seed, "wsgcn-features", graph_key);
    for (Vertex u = 0; u < n; ++u) {
        const double k = static_cast<double>(std::max<std::size_t>(1, g.degree(u)));
        const double kp = static_cast<double>(g.positive_degree(u));
        const double kn = static_cast<double>(g.negative_degree(u));
        f.positive(u, 0) = kp;
        f.positive(u, 1) = kp / k;
        f.negative(u, 0) = kn;
        f.negative(u, 1) = kn / k;
        Rng rng(derive_seed(graph_seed, "vertex", u));
        for (std::size_t j = 2; j < feature_dim; ++j) {
            f.positive(u, static_cast<Eigen::Index>(j)) = uniform(rng, -1.0, 1.0);
        }
        for (std::size_t j = 2; j < feature_dim; ++j) {
            f.negative(u, static_cast<Eigen::Index>(j)) = uniform(rng, -1.0, 1.0);
        }
    }
    return f;
}

WsgcnWeights::WsgcnWeights(std::size_t input_dim, std::size_t dim, std::size_t layers)
    : input_dim_(input_dim), dim_(dim), layers_(layers) {
    if (input_dim == 0 || dim == 0 || layers == 0) {
        throw DomainError("WSGCN needs positive dimensions and at least one layer");
    }
    std::size_t total = 0;
    for (std::size_t t = 1; t <= layers; ++t) {
        total += 2 * 3 * layer_input(t) * dim;
    }
    total += 4 * dim * dim;
    params_.assign(total, 0.0);
}

std::size_t WsgcnWeights::layer_offset(std::size_t t, bool positive) const {
    std::size_t off = 0;
    for (std::size_t s = 1; s < t; ++s) {
        off += 2 * 3 * layer_input(s) * dim_;
    }
    return positive ? off : off + 3 * layer_input(t) * dim_;
}

std::size_t WsgcnWeights::bilinear_offset() const {
    return layer_offset(layers_ + 1, true);
}

Eigen::Map<const RowMatrix> WsgcnWeights::weight(std::size_t t, bool positive) const {
    return {params_.data() + layer_offset(t, positive), static_cast<Eigen::Index>(3 * layer_input(t)),
            static_cast<Eigen::Index>(dim_)};
}

Eigen::Map<const RowMatrix> WsgcnWeights::bilinear() const {
    const auto d2 = static_cast<Eigen::Index>(2 * dim_);
    return {params_.data() + bilinear_offset(), d2, d2};
}

void WsgcnWeights::initialize(std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t t = 1; t <= layers_; ++t) {
        const double limit = std::sqrt(6.0 / static_cast<double>(3 * layer_input(t) + dim_));
        for (const bool positive : {true, false}) {
            const std::size_t off = layer_offset(t, positive);
            for (std::size_t i = 0; i < 3 * layer_input(t) * dim_; ++i) {
                params_[off + i] = uniform(rng, -limit, limit);
            }
        }
    }
    const double limit = std::sqrt(6.0 / static_cast<double>(4 * dim_));
    for (std::size_t i = bilinear_offset(); i < params_.size(); ++i) {
        params_[i] = uniform(rng, -limit, limit);
    }
}

namespace {

// Mean of rows over the positive or negative neighbors of every vertex.
RowMatrix aggregate(const SignedGraph& g, const RowMatrix& h, Sign sign) {
    RowMatrix out = RowMatrix::Zero(h.rows(), h.cols());
    for (Vertex u = 0; u < g.order(); ++u) {
        std::size_t count = 0;
        for (const auto& nb : g.adjacent(u)) {
            if (nb.sign == sign) {
                out.row(u) += h.row(nb.vertex);
                ++count;
            }
        }
        if (count > 0) {
            out.row(u) /= static_cast<double>(count);
        }
    }
    return out;
}

// Adjoint of aggregate(): scatters each row back to the neighbors it averaged.
void aggregate_adjoint(const SignedGraph& g, const RowMatrix& d, Sign sign, RowMatrix& into) {
    for (Vertex u = 0; u < g.order(); ++u) {
        const std::size_t count = sign == Sign::positive ? g.positive_degree(u) : g.negative_degree(u);
        if (count == 0) {
            continue;
        }
        const double w = 1.0 / static_cast<double>(count);
        for (const auto& nb : g.adjacent(u)) {
            if (nb.sign == sign) {
                into.row(nb.vertex) += w * d.row(u);
            }
        }
    }
}

RowMatrix activate(RowMatrix z, Activation a) {
    if (a == Activation::tanh) {
        z = z.array().tanh().matrix();
    }
    return z;
}

void check_shapes(const AugmentedGraph& ag, const DualLayer& features, const WsgcnWeights& weights) {
    const auto n = static_cast<Eigen::Index>(ag.graph.order());
    const auto d0 = static_cast<Eigen::Index>(weights.input_dim());
    if (features.positive.rows() != n || features.negative.rows() != n || features.positive.cols() != d0 ||
        features.negative.cols() != d0) {
        throw DomainError("feature matrices do not match the augmented graph and weight shapes");
    }
}

struct LayerCache {
    RowMatrix input_pos; // [agg+ P, agg- Q, P]
    RowMatrix input_neg; // [agg+ Q, agg- P, Q]
};

DualHidden forward(const AugmentedGraph& ag, const DualLayer& features, const WsgcnWeights& weights,
                   Activation activation, std::vector<LayerCache>* caches) {
    check_shapes(ag, features, weights);
    const auto& g = ag.graph;
    const auto n = static_cast<Eigen::Index>(g.order());
    DualHidden hidden;
    hidden.layers.push_back(features);
    for (std::size_t t = 1; t <= weights.layers(); ++t) {
        const auto& prev = hidden.layers.back();
        const auto din = static_cast<Eigen::Index>(weights.layer_input(t));
        LayerCache cache{RowMatrix(n, 3 * din), RowMatrix(n, 3 * din)};
        cache.input_pos << aggregate(g, prev.positive, Sign::positive), aggregate(g, prev.negative, Sign::negative),
            prev.positive;
        cache.input_neg << aggregate(g, prev.negative, Sign::positive), aggregate(g, prev.positive, Sign::negative),
            prev.negative;
        DualLayer next{activate(cache.input_pos * weights.weight(t, true), activation),
                       activate(cache.input_neg * weights.weight(t, false), activation)};
        hidden.layers.push_back(std::move(next));
        if (caches != nullptr) {
            caches->push_back(std::move(cache));
        }
    }
    return hidden;
}

double softplus(double x) {
    return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double logistic(double x) {
    return 1.0 / (1.0 + std::exp(-x));
}

// Loss of one sample and its derivative with respect to the score.
std::pair<double, double> link_term(double score, LinkKind kind, double margin) {
    switch (kind) {
    case LinkKind::positive:
        return {softplus(-score), logistic(score) - 1.0};
    case LinkKind::negative:
        return {softplus(score), logistic(score)};
    case LinkKind::none:
        return {softplus(score - margin) + softplus(-score - margin), logistic(score - margin) - logistic(-score - margin)};
    }
    return {0.0, 0.0};
}

} // namespace

DualHidden sgcn_forward(const AugmentedGraph& ag, const DualLayer& features, const WsgcnWeights& weights,
                        Activation activation) {
    return forward(ag, features, weights, activation, nullptr);
}

DualHidden sgcn_forward_reference(const AugmentedGraph& ag, const DualLayer& features, const WsgcnWeights& weights,
                                  Activation activation) {
    check_shapes(ag, features, weights);
    const auto& g = ag.graph;
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd pos_adj = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd neg_adj = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        auto& a = e.sign == Sign::positive ? pos_adj : neg_adj;
        a(e.u, e.v) = 1.0;
        a(e.v, e.u) = 1.0;
    }
    for (Eigen::Index u = 0; u < n; ++u) {
        const double kp = pos_adj.row(u).sum();
        const double kn = neg_adj.row(u).sum();
        if (kp > 0) {
            pos_adj.row(u) /= kp;
        }
        if (kn > 0) {
            neg_adj.row(u) /= kn;
        }
    }
    DualHidden hidden;
    hidden.layers.push_back(features);
    for (std::size_t t = 1; t <= weights.layers(); ++t) {
        const Eigen::MatrixXd p = hidden.layers.back().positive;
        const Eigen::MatrixXd q = hidden.layers.back().negative;
        const Eigen::MatrixXd wp = weights.weight(t, true);
        const Eigen::MatrixXd wn = weights.weight(t, false);
        const auto din = p.cols();
        // Split W into the three blocks instead of concatenating the inputs.
        Eigen::MatrixXd zp = pos_adj * p * wp.topRows(din) + neg_adj * q * wp.middleRows(din, din) + p * wp.bottomRows(din);
        Eigen::MatrixXd zq = pos_adj * q * wn.topRows(din) + neg_adj * p * wn.middleRows(din, din) + q * wn.bottomRows(din);
        if (activation == Activation::tanh) {
            zp = zp.array().tanh().matrix();
            zq = zq.array().tanh().matrix();
        }
        hidden.layers.push_back({zp, zq});
    }
    return hidden;
}

double wsgcn_loss(const AugmentedGraph& ag, const DualLayer& features, const WsgcnWeights& weights,
                  std::span<const LinkSample> samples, double neutral_margin, double l2, Activation activation,
                  std::span<double> grad) {
    const bool want_grad = !grad.empty();
    const auto params = weights.parameters();
    if (want_grad && grad.size() != params.size()) {
        throw DomainError("gradient buffer has the wrong size");
    }
    std::vector<LayerCache> caches;
    const DualHidden hidden = forward(ag, features, weights, activation, want_grad ? &caches : nullptr);
    const auto& last = hidden.layers.back();
    const auto d = static_cast<Eigen::Index>(weights.dim());
    const auto n = static_cast<Eigen::Index>(ag.graph.order());
    RowMatrix z(n, 2 * d);
    z << last.positive, last.negative;
    const auto bilinear = weights.bilinear();

    // Scores z_u' B z_v for all samples come from ZB = Z B; the gradients
    // collect per-sample coefficients into a sparse-as-dense n x n matrix.
    const RowMatrix zb = z * bilinear;
    RowMatrix coeff;
    if (want_grad) {
        coeff = RowMatrix::Zero(n, n);
    }
    double loss = 0.0;
    const double scale = samples.empty() ? 0.0 : 1.0 / static_cast<double>(samples.size());
    for (const auto& s : samples) {
        const double score = zb.row(s.u).dot(z.row(s.v));
        const auto [l, dl] = link_term(score, s.kind, neutral_margin);
        loss += scale * l;
        if (want_grad) {
            coeff(s.u, s.v) += scale * dl;
        }
    }
    double sq = 0.0;
    for (const double w : params) {
        sq += w * w;
    }
    loss += 0.5 * l2 * sq;
    if (!want_grad) {
        return loss;
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        grad[i] += l2 * params[i];
    }
    Eigen::Map<RowMatrix>(grad.data() + weights.bilinear_offset(), 2 * d, 2 * d) += z.transpose() * coeff * z;
    const RowMatrix dz = coeff * (z * bilinear.transpose()) + coeff.transpose() * zb;

    const auto& g = ag.graph;
    RowMatrix dp = dz.leftCols(d);
    RowMatrix dq = dz.rightCols(d);
    for (std::size_t t = weights.layers(); t >= 1; --t) {
        const auto& out = hidden.layers[t];
        const auto& cache = caches[t - 1];
        RowMatrix gp = dp;
        RowMatrix gq = dq;
        if (activation == Activation::tanh) {
            gp = (dp.array() * (1.0 - out.positive.array().square())).matrix();
            gq = (dq.array() * (1.0 - out.negative.array().square())).matrix();
        }
        const auto din = static_cast<Eigen::Index>(weights.layer_input(t));
        Eigen::Map<RowMatrix>(grad.data() + weights.layer_offset(t, true), 3 * din, d) += cache.input_pos.transpose() * gp;
        Eigen::Map<RowMatrix>(grad.data() + weights.layer_offset(t, false), 3 * din, d) += cache.input_neg.transpose() * gq;
        if (t == 1) {
            break; // features are fixed
        }
        const RowMatrix dxp = gp * weights.weight(t, true).transpose();
        const RowMatrix dxq = gq * weights.weight(t, false).transpose();
        RowMatrix next_dp = dxp.rightCols(din);
        RowMatrix next_dq = dxq.rightCols(din);
        aggregate_adjoint(g, dxp.leftCols(din), Sign::positive, next_dp);
        aggregate_adjoint(g, dxq.middleCols(din, din), Sign::negative, next_dp);
        aggregate_adjoint(g, dxq.leftCols(din), Sign::positive, next_dq);
        aggregate_adjoint(g, dxp.middleCols(din, din), Sign::negative, next_dq);
        dp = std::move(next_dp);
        dq = std::move(next_dq);
    }
    return loss;
}

std::vector<LinkSample> link_samples(const SignedGraph& base, Rng& rng) {
    std::vector<LinkSample> out;
    for (const auto& e : base.edges()) {
        out.push_back({e.u, e.v, e.sign == Sign::positive ? LinkKind::positive : LinkKind::negative});
    }
    const std::size_t n = base.order();
    const std::size_t possible = n * (n - 1) / 2;
    if (n < 2 || base.size() >= possible) {
        return out;
    }
    const std::size_t wanted = std::min(base.size(), possible - base.size());
    std::size_t attempts = 0;
    std::size_t added = 0;
    while (added < wanted && attempts < 20 * wanted + 100) {
        ++attempts;
        const auto u = static_cast<Vertex>(uniform_index(rng, n));
        const auto v = static_cast<Vertex>(uniform_index(rng, n));
        if (u == v || base.find_edge(u, v) != nullptr) {
            continue;
        }
        out.push_back({std::min(u, v), std::max(u, v), LinkKind::none});
        ++added;
    }
    return out;
}

TrainedWsgcn train_wsgcn(const AugmentedGraph& ag, const WsgcnOptions& options, std::uint64_t graph_key) {
    if (ag.base.size() == 0) {
        throw DomainError("WSGCN training needs at least one edge");
    }
    TrainedWsgcn out;
    out.weights = WsgcnWeights(options.feature_dim, options.dim, options.layers);
    out.weights.initialize(derive_seed(options.seed, "wsgcn-weights"));
    out.features = init_features(ag, options.feature_dim, options.seed, graph_key);
    Rng rng = make_rng(options.seed, "wsgcn-nonedges", graph_key);
    Adam adam(out.weights.parameters().size(), options.learning_rate);
    std::vector<double> grad(out.weights.parameters().size());
    for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
        const auto samples = link_samples(ag.base, rng);
        std::fill(grad.begin(), grad.end(), 0.0);
        const double loss = wsgcn_loss(ag, out.features, out.weights, samples, options.neutral_margin, options.l2,
                                       options.activation, grad);
        out.epoch_loss.push_back(loss);
        adam.step(out.weights.parameters(), grad);
    }
    out.hidden = sgcn_forward(ag, out.features, out.weights, options.activation);
    return out;
}

double edge_sign_accuracy(const AugmentedGraph& ag, const DualHidden& hidden, const WsgcnWeights& weights) {
    const auto bilinear = weights.bilinear();
    std::size_t right = 0;
    for (const auto& e : ag.base.edges()) {
        const double score = hidden.representation(e.u).dot(bilinear * hidden.representation(e.v));
        if ((score > 0) == (e.sign == Sign::positive)) {
            ++right;
        }
    }
    return ag.base.size() == 0 ? 0.0 : static_cast<double>(right) / static_cast<double>(ag.base.size());
}

Eigen::VectorXd graph_representation(const AugmentedGraph& ag, const DualHidden& hidden, RepresentationMode mode,
                                     Aggregation fallback) {
    if (hidden.layers.size() < 2) {
        throw DomainError("graph representation needs at least one trained layer");
    }
    const auto n_total = static_cast<Eigen::Index>(ag.graph.order());
    for (const auto& layer : hidden.layers) {
        if (layer.positive.rows() != n_total) {
            throw DomainError("hidden states do not belong to this augmented graph");
        }
    }
    const auto width = hidden.layers.back().positive.cols();
    if (mode == RepresentationMode::sum_layers) {
        for (std::size_t t = 1; t < hidden.layers.size(); ++t) {
            if (hidden.layers[t].positive.cols() != width) {
                throw DomainError("sum_layers needs equal layer widths");
            }
        }
    }
    auto vertex_vector = [&](Vertex u) {
        Eigen::VectorXd z = Eigen::VectorXd::Zero(2 * width);
        const std::size_t first = mode == RepresentationMode::last_layer ? hidden.layers.size() - 1 : 1;
        for (std::size_t t = first; t < hidden.layers.size(); ++t) {
            z.head(width) += hidden.layers[t].positive.row(u).transpose();
            z.tail(width) += hidden.layers[t].negative.row(u).transpose();
        }
        return z;
    };
    Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * width);
    if (ag.masters.empty()) {
        const std::size_t n = ag.base.order();
        for (Vertex u = 0; u < n; ++u) {
            out += vertex_vector(u);
        }
        if (fallback == Aggregation::average && n > 0) {
            out /= static_cast<double>(n);
        }
        return out;
    }
    for (const Vertex m : ag.masters) {
        out += vertex_vector(m);
    }
    return out;
}

WsgcnEmbeddings embed_wsgcn(const GraphCollection& collection, const WsgcnOptions& options, int threads) {
    const std::size_t count = collection.size();
    WsgcnEmbeddings out{EmbeddingMatrix(count, 2 * options.dim, options.seed), std::vector<WsgcnGraphMeta>(count)};
    parallel_for(count, threads, [&](std::size_t i) {
        const auto& g = collection.graphs[i];
        const std::uint64_t key = graph_key(collection.ids[i]);
        const auto ag = attach_master_nodes(g, options.scheme, nullptr, derive_seed(options.seed, "balance", key),
                                            options.balance_restarts);
        auto& meta = out.meta[i];
        meta.scheme = options.scheme;
        meta.masters = ag.masters.size();
        if (ag.partition) {
            meta.clusters = ag.partition->cluster_count();
            meta.partition_checksum = ag.partition->checksum();
            meta.partition_frustration = ag.partition_frustration;
            meta.partition_exact = ag.partition_exact;
        }
        Eigen::VectorXd rep;
        if (g.size() == 0) {
            // Nothing to train on: representation of the untrained forward pass.
            WsgcnWeights w(options.feature_dim, options.dim, options.layers);
            w.initialize(derive_seed(options.seed, "wsgcn-weights"));
            const auto hidden = sgcn_forward(ag, init_features(ag, options.feature_dim, options.seed, key), w,
                                             options.activation);
            rep = graph_representation(ag, hidden, options.mode, options.fallback);
        } else {
            const auto trained = train_wsgcn(ag, options, key);
            rep = graph_representation(ag, trained.hidden, options.mode, options.fallback);
        }
        std::copy(rep.data(), rep.data() + rep.size(), out.matrix.row(i).begin());
    });
    return out;
}

} // namespace swge
