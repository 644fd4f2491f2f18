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

#ifndef SWGE_SG2V_HPP
#define SWGE_SG2V_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "swge/collection.hpp"
#include "swge/wl.hpp"

namespace swge {

/// Graphs as documents whose words are rooted-subgraph labels.
struct Corpus {
    WlVariant variant = WlVariant::unsigned_wl;
    std::size_t iterations = 0;
    // (iteration, label) -> token id, ids issued in first-seen order.
    std::map<std::pair<std::size_t, Label>, std::uint32_t> vocabulary;
    std::vector<std::uint64_t> token_counts;
    std::vector<std::vector<std::uint32_t>> documents;
    // Stable per-document keys that seed per-document random streams.
    std::vector<std::uint64_t> document_keys;

    [[nodiscard]] std::size_t vocabulary_size() const { return token_counts.size(); }
};

struct CorpusOptions {
    bool include_initial_labels = true;
    int threads = 1;
};

/// Relabels every graph with one shared dictionary and emits the label of
/// every vertex at every iteration (from 0, or from 1 without initial labels).
/// Throws DomainError on an empty collection or iterations == 0.
Corpus build_corpus(std::span<const SignedGraph> graphs, WlVariant variant, std::size_t iterations,
                    const CorpusOptions& options = {}, std::span<const std::uint64_t> document_keys = {});

struct PvDbowOptions {
    std::size_t dim = 128;
    std::size_t epochs = 50;
    std::size_t negatives = 5;
    double initial_rate = 0.025;
    double final_rate = 0.0001;
    std::uint64_t seed = 1;
    // Lock-free parallel updates across documents. Not reproducible; the
    // default single-writer mode is.
    bool hogwild = false;
    int threads = 1;
};

/// One term of the negative-sampling objective: the true token (positive)
/// or a sampled noise token.
struct SampledToken {
    std::uint32_t token = 0;
    bool positive = false;
};

/// Row-major matrix view of the output (token) vectors.
struct TokenVectors {
    std::span<double> values;
    std::size_t dim = 0;

    [[nodiscard]] std::span<double> row(std::uint32_t t) const { return values.subspan(t * dim, dim); }
};

/// -log s(h.v_t) - sum over noise tokens of log s(-h.v_n), where s is the logistic function.
double negative_sampling_loss(std::span<const double> doc, const TokenVectors& tokens,
                              std::span<const SampledToken> terms);

/// Gradient of negative_sampling_loss, accumulated into grad_doc and
/// grad_tokens (same shape as tokens). Returns the loss.
double negative_sampling_backward(std::span<const double> doc, const TokenVectors& tokens,
                                  std::span<const SampledToken> terms, std::span<double> grad_doc,
                                  const TokenVectors& grad_tokens);

struct TrainingCurve {
    std::vector<double> epoch_loss; // mean loss per (document, token) pair
};

/// Distributed bag-of-words paragraph vectors with negative sampling from
/// the unigram distribution raised to 3/4. Returns one row per document.
EmbeddingMatrix train_pvdbow(const Corpus& corpus, const PvDbowOptions& options, TrainingCurve* curve = nullptr);

} // namespace swge

#endif // SWGE_SG2V_HPP
