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

#include "swge/sine.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "swge/error.hpp"
#include "swge/optim.hpp"
#include "swge/parallel.hpp"
#include "swge/rng.hpp"

namespace swge {

std::vector<Triad> extract_triads(const SignedGraph& g) {
    std::vector<Triad> out;
    for (Vertex c = 0; c < g.order(); ++c) {
        const auto pos = g.neighborhood(c, NeighborFilter::positive);
        const auto neg = g.neighborhood(c, NeighborFilter::negative);
        if (neg.empty()) {
            for (const Vertex p : pos) {
                out.push_back({c, p, dummy_vertex});
            }
            continue;
        }
        for (const Vertex n : neg) {
            for (const Vertex p : pos) {
                out.push_back({c, p, n});
            }
        }
    }
    return out;
}

namespace {

using Vec = Eigen::VectorXd;
using ConstMat = Eigen::Map<const Eigen::MatrixXd>;
using MutMat = Eigen::Map<Eigen::MatrixXd>;
using ConstVecMap = Eigen::Map<const Eigen::VectorXd>;
using MutVecMap = Eigen::Map<Eigen::VectorXd>;

std::size_t tower_size(std::size_t dim, std::size_t layers) {
    return (layers - 1) * (dim * dim + dim) + dim + 1;
}

} // namespace

SineModel::SineModel(std::size_t vertices, std::size_t dim, std::size_t layers)
    : vertices_(vertices), dim_(dim), layers_(layers) {
    if (dim == 0 || layers == 0) {
        throw DomainError("SiNE needs dim >= 1 and layers >= 1");
    }
    const std::size_t shared = dim * 2 * dim + dim;
    params_.assign((vertices + 1) * dim + shared + 2 * tower_size(dim, layers), 0.0);
}

std::size_t SineModel::vertex_offset(Vertex v) const {
    if (v == dummy_vertex) {
        return vertices_ * dim_;
    }
    if (v >= vertices_) {
        throw DomainError("vertex " + std::to_string(v) + " out of range for SiNE model");
    }
    return static_cast<std::size_t>(v) * dim_;
}

std::size_t SineModel::tower_offset(bool positive_tower) const {
    const std::size_t base = (vertices_ + 1) * dim_ + dim_ * 2 * dim_ + dim_;
    return positive_tower ? base : base + tower_size(dim_, layers_);
}

std::span<const double> SineModel::vertex_vector(Vertex v) const {
    return std::span<const double>(params_).subspan(vertex_offset(v), dim_);
}

double SineModel::similarity(bool positive_tower, Vertex center, Vertex other) const {
    const std::size_t d = dim_;
    const double* p = params_.data();
    Vec x(2 * d);
    x.head(d) = ConstVecMap(p + vertex_offset(center), static_cast<Eigen::Index>(d));
    x.tail(d) = ConstVecMap(p + vertex_offset(other), static_cast<Eigen::Index>(d));
    std::size_t off = (vertices_ + 1) * d;
    Vec h = (ConstMat(p + off, d, 2 * d) * x + ConstVecMap(p + off + 2 * d * d, d)).array().tanh().matrix();
    off = tower_offset(positive_tower);
    for (std::size_t l = 1; l < layers_; ++l) {
        h = (ConstMat(p + off, d, d) * h + ConstVecMap(p + off + d * d, d)).array().tanh().matrix();
        off += d * d + d;
    }
    return ConstVecMap(p + off, d).dot(h) + p[off + d];
}

void SineModel::similarity_backward(bool positive_tower, Vertex center, Vertex other, double upstream,
                                    std::span<double> grad) const {
    const std::size_t d = dim_;
    const double* p = params_.data();
    double* g = grad.data();
    const std::size_t shared_off = (vertices_ + 1) * d;
    const std::size_t tower_off = tower_offset(positive_tower);

    std::vector<Vec> acts;
    Vec x(2 * d);
    x.head(d) = ConstVecMap(p + vertex_offset(center), d);
    x.tail(d) = ConstVecMap(p + vertex_offset(other), d);
    acts.push_back((ConstMat(p + shared_off, d, 2 * d) * x + ConstVecMap(p + shared_off + 2 * d * d, d))
                       .array()
                       .tanh()
                       .matrix());
    std::size_t off = tower_off;
    for (std::size_t l = 1; l < layers_; ++l) {
        acts.push_back((ConstMat(p + off, d, d) * acts.back() + ConstVecMap(p + off + d * d, d))
                           .array()
                           .tanh()
                           .matrix());
        off += d * d + d;
    }
    // Output layer: score = w . h + c
    MutVecMap(g + off, d) += upstream * acts.back();
    g[off + d] += upstream;
    Vec dh = upstream * ConstVecMap(p + off, d);
    for (std::size_t l = layers_ - 1; l >= 1; --l) {
        off -= d * d + d;
        const Vec dz = dh.array() * (1.0 - acts[l].array().square());
        MutMat(g + off, d, d) += dz * acts[l - 1].transpose();
        MutVecMap(g + off + d * d, d) += dz;
        dh = ConstMat(p + off, d, d).transpose() * dz;
    }
    const Vec dz = dh.array() * (1.0 - acts[0].array().square());
    MutMat(g + shared_off, d, 2 * d) += dz * x.transpose();
    MutVecMap(g + shared_off + 2 * d * d, d) += dz;
    const Vec dx = ConstMat(p + shared_off, d, 2 * d).transpose() * dz;
    MutVecMap(g + vertex_offset(center), d) += dx.head(d);
    MutVecMap(g + vertex_offset(other), d) += dx.tail(d);
}

void SineModel::initialize(std::uint64_t weight_seed, std::uint64_t vertex_seed) {
    const std::size_t d = dim_;
    Rng vrng(vertex_seed);
    const double vscale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < (vertices_ + 1) * d; ++i) {
        params_[i] = uniform(vrng, -vscale, vscale);
    }
    Rng wrng(weight_seed);
    auto fill = [&](std::size_t off, std::size_t rows, std::size_t cols) {
        const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
        for (std::size_t i = 0; i < rows * cols; ++i) {
            params_[off + i] = uniform(wrng, -limit, limit);
        }
    };
    const std::size_t shared_off = (vertices_ + 1) * d;
    fill(shared_off, d, 2 * d);
    for (const bool tower : {true, false}) {
        std::size_t off = tower_offset(tower);
        for (std::size_t l = 1; l < layers_; ++l) {
            fill(off, d, d);
            off += d * d + d;
        }
        fill(off, 1, d);
    }
}

SineLoss sine_loss(const SineModel& model, std::span<const Triad> triads, double margin, double l2,
                   std::span<double> grad) {
    SineLoss loss;
    const auto params = model.parameters();
    const bool want_grad = !grad.empty();
    if (want_grad && grad.size() != params.size()) {
        throw DomainError("gradient buffer has the wrong size");
    }
    const double scale = triads.empty() ? 0.0 : 1.0 / static_cast<double>(triads.size());
    for (const auto& t : triads) {
        const double s_pos = model.similarity(true, t.center, t.positive_neighbor);
        const double s_neg = model.similarity(false, t.center, t.negative_neighbor);
        const double h = s_neg + margin - s_pos;
        if (h > 0.0) {
            loss.hinge += h * scale;
            if (want_grad) {
                model.similarity_backward(false, t.center, t.negative_neighbor, scale, grad);
                model.similarity_backward(true, t.center, t.positive_neighbor, -scale, grad);
            }
        }
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        sq += params[i] * params[i];
        if (want_grad) {
            grad[i] += l2 * params[i];
        }
    }
    loss.regularization = 0.5 * l2 * sq;
    return loss;
}

SineModel train_sine(const SignedGraph& g, std::span<const Triad> triads, const SineOptions& options,
                     std::uint64_t graph_key, SineTrainingLog* log) {
    SineModel model(g.order(), options.dim, options.layers);
    if (triads.empty()) {
        model.no_triads = true;
        return model;
    }
    model.initialize(derive_seed(options.seed, "sine-weights"), derive_seed(options.seed, "sine-vertices", graph_key));
    Rng rng = make_rng(options.seed, "sine-order", graph_key);

    // Triads grouped by center for the per-vertex sampling cap.
    std::vector<std::vector<std::size_t>> by_center(g.order());
    for (std::size_t i = 0; i < triads.size(); ++i) {
        by_center[triads[i].center].push_back(i);
    }

    Adam adam(model.parameters().size(), options.learning_rate);
    std::vector<double> grad(model.parameters().size());
    std::vector<Triad> epoch_triads;
    std::vector<Triad> batch;
    const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);
    for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
        epoch_triads.clear();
        for (auto& group : by_center) {
            if (options.triads_per_vertex > 0 && group.size() > options.triads_per_vertex) {
                shuffle(group, rng);
                for (std::size_t j = 0; j < options.triads_per_vertex; ++j) {
                    epoch_triads.push_back(triads[group[j]]);
                }
            } else {
                for (const auto i : group) {
                    epoch_triads.push_back(triads[i]);
                }
            }
        }
        shuffle(epoch_triads, rng);
        double hinge_sum = 0.0;
        for (std::size_t start = 0; start < epoch_triads.size(); start += batch_size) {
            const std::size_t end = std::min(epoch_triads.size(), start + batch_size);
            std::fill(grad.begin(), grad.end(), 0.0);
            const auto loss = sine_loss(model, std::span<const Triad>(epoch_triads).subspan(start, end - start),
                                        options.margin, options.l2, grad);
            hinge_sum += loss.hinge * static_cast<double>(end - start);
            adam.step(model.parameters(), grad);
        }
        if (log != nullptr) {
            log->epoch_hinge.push_back(hinge_sum / static_cast<double>(epoch_triads.size()));
        }
    }
    return model;
}

std::vector<double> aggregate_vertices(const SineModel& model, Aggregation mode) {
    std::vector<double> out(model.dim(), 0.0);
    const std::size_t n = model.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        const auto row = model.vertex_vector(v);
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] += row[k];
        }
    }
    if (mode == Aggregation::average && n > 0) {
        for (auto& x : out) {
            x /= static_cast<double>(n);
        }
    }
    return out;
}

SineEmbeddings embed_sine(const GraphCollection& collection, const SineOptions& options, int threads) {
    const std::size_t count = collection.size();
    SineEmbeddings out{EmbeddingMatrix(count, options.dim, options.seed),
                       EmbeddingMatrix(count, options.dim, options.seed), 0};
    std::vector<char> empty(count, 0);
    parallel_for(count, threads, [&](std::size_t i) {
        const auto& g = collection.graphs[i];
        const auto triads = extract_triads(g);
        const auto model = train_sine(g, triads, options, graph_key(collection.ids[i]));
        empty[i] = model.no_triads ? 1 : 0;
        const auto s = aggregate_vertices(model, Aggregation::sum);
        const auto a = aggregate_vertices(model, Aggregation::average);
        std::copy(s.begin(), s.end(), out.sum.row(i).begin());
        std::copy(a.begin(), a.end(), out.average.row(i).begin());
    });
    out.graphs_without_triads = static_cast<std::size_t>(std::count(empty.begin(), empty.end(), 1));
    return out;
}

} // namespace swge
