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

#include "swge/sg2v.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>

#include "swge/error.hpp"
#include "swge/parallel.hpp"
#include "swge/rng.hpp"

namespace swge {

std::uint64_t graph_key(std::string_view id) {
    return derive_seed(0, id, 0);
}

Corpus build_corpus(std::span<const SignedGraph> graphs, WlVariant variant, std::size_t iterations,
                    const CorpusOptions& options, std::span<const std::uint64_t> document_keys) {
    if (graphs.empty()) {
        throw DomainError("cannot build a corpus from an empty collection");
    }
    if (iterations == 0) {
        throw DomainError("relabeling needs at least one iteration");
    }
    if (!document_keys.empty() && document_keys.size() != graphs.size()) {
        throw DomainError("document key count does not match graph count");
    }
    LabelDictionary dict;
    const auto traces = relabel_collection(graphs, variant, iterations, dict, options.threads);

    Corpus corpus;
    corpus.variant = variant;
    corpus.iterations = iterations;
    corpus.documents.resize(graphs.size());
    const std::size_t first = options.include_initial_labels ? 0 : 1;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto& doc = corpus.documents[i];
        doc.reserve(graphs[i].order() * (iterations + 1 - first));
        for (std::size_t t = first; t <= iterations; ++t) {
            for (const Label label : traces[i].steps[t].labels) {
                auto [it, inserted] =
                    corpus.vocabulary.try_emplace({t, label}, static_cast<std::uint32_t>(corpus.token_counts.size()));
                if (inserted) {
                    corpus.token_counts.push_back(0);
                }
                ++corpus.token_counts[it->second];
                doc.push_back(it->second);
            }
        }
    }
    if (document_keys.empty()) {
        corpus.document_keys.resize(graphs.size());
        std::iota(corpus.document_keys.begin(), corpus.document_keys.end(), std::uint64_t{0});
    } else {
        corpus.document_keys.assign(document_keys.begin(), document_keys.end());
    }
    return corpus;
}

namespace {

double logistic(double x) {
    return 1.0 / (1.0 + std::exp(-x));
}

// -log s(x), stable for large |x|.
double softplus_neg(double x) {
    return x > 0 ? std::log1p(std::exp(-x)) : -x + std::log1p(std::exp(x));
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// d loss / d (h.v) of one term, and the term's loss.
std::pair<double, double> term_coefficient(double score, bool positive) {
    if (positive) {
        return {logistic(score) - 1.0, softplus_neg(score)};
    }
    return {logistic(score), softplus_neg(-score)};
}

} // namespace

double negative_sampling_loss(std::span<const double> doc, const TokenVectors& tokens,
                              std::span<const SampledToken> terms) {
    double loss = 0.0;
    for (const auto& term : terms) {
        loss += term_coefficient(dot(doc, tokens.row(term.token)), term.positive).second;
    }
    return loss;
}

double negative_sampling_backward(std::span<const double> doc, const TokenVectors& tokens,
                                  std::span<const SampledToken> terms, std::span<double> grad_doc,
                                  const TokenVectors& grad_tokens) {
    double loss = 0.0;
    const std::size_t d = doc.size();
    for (const auto& term : terms) {
        const auto v = tokens.row(term.token);
        const auto [g, l] = term_coefficient(dot(doc, v), term.positive);
        loss += l;
        auto gv = grad_tokens.row(term.token);
        for (std::size_t k = 0; k < d; ++k) {
            grad_doc[k] += g * v[k];
            gv[k] += g * doc[k];
        }
    }
    return loss;
}

namespace {

class NoiseDistribution {
public:
    explicit NoiseDistribution(std::span<const std::uint64_t> counts) : cdf_(counts.size()) {
        double total = 0.0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            total += std::pow(static_cast<double>(counts[i]), 0.75);
            cdf_[i] = total;
        }
    }

    std::uint32_t sample(Rng& rng) const {
        const double x = uniform01(rng) * cdf_.back();
        const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), x);
        return static_cast<std::uint32_t>(std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1));
    }

private:
    std::vector<double> cdf_;
};

// One document pass. Gradients are taken at the current point, then the
// document vector and touched token vectors are moved against them.
template <bool Atomic>
double load(const double& x) {
    if constexpr (Atomic) {
        return std::atomic_ref<const double>(x).load(std::memory_order_relaxed);
    } else {
        return x;
    }
}

template <bool Atomic>
void add(double& x, double delta) {
    if constexpr (Atomic) {
        std::atomic_ref<double> ref(x);
        ref.store(ref.load(std::memory_order_relaxed) + delta, std::memory_order_relaxed);
    } else {
        x += delta;
    }
}

struct DocumentScratch {
    std::vector<SampledToken> terms;
    std::vector<double> coefficients;
    std::vector<double> grad_doc;
};

template <bool Atomic>
double train_document(std::span<double> doc, std::span<double> token_values, std::size_t dim,
                      std::span<const std::uint32_t> words, const NoiseDistribution& noise, std::size_t negatives,
                      Rng& rng, double rate, double rate_step, DocumentScratch& scratch) {
    auto& terms = scratch.terms;
    auto& coefficients = scratch.coefficients;
    auto& grad_doc = scratch.grad_doc;
    grad_doc.resize(dim);
    double loss = 0.0;
    for (const auto word : words) {
        terms.clear();
        terms.push_back({word, true});
        for (std::size_t j = 0; j < negatives; ++j) {
            const auto t = noise.sample(rng);
            if (t != word) {
                terms.push_back({t, false});
            }
        }
        coefficients.resize(terms.size());
        std::fill(grad_doc.begin(), grad_doc.end(), 0.0);
        for (std::size_t j = 0; j < terms.size(); ++j) {
            const double* v = token_values.data() + terms[j].token * dim;
            double score = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                score += load<Atomic>(v[k]) * doc[k];
            }
            const auto [g, l] = term_coefficient(score, terms[j].positive);
            coefficients[j] = g;
            loss += l;
            for (std::size_t k = 0; k < dim; ++k) {
                grad_doc[k] += g * load<Atomic>(v[k]);
            }
        }
        for (std::size_t j = 0; j < terms.size(); ++j) {
            double* v = token_values.data() + terms[j].token * dim;
            for (std::size_t k = 0; k < dim; ++k) {
                add<Atomic>(v[k], -rate * coefficients[j] * doc[k]);
            }
        }
        for (std::size_t k = 0; k < dim; ++k) {
            doc[k] -= rate * grad_doc[k];
        }
        rate -= rate_step;
    }
    return loss;
}

} // namespace

EmbeddingMatrix train_pvdbow(const Corpus& corpus, const PvDbowOptions& options, TrainingCurve* curve) {
    if (options.dim == 0 || options.epochs == 0) {
        throw DomainError("PV-DBOW needs dim >= 1 and epochs >= 1");
    }
    if (corpus.vocabulary_size() < options.negatives + 1) {
        throw DomainError("vocabulary of " + std::to_string(corpus.vocabulary_size()) + " tokens is too small for " +
                          std::to_string(options.negatives) + " negative samples");
    }
    const std::size_t dim = options.dim;
    const std::size_t docs = corpus.documents.size();
    EmbeddingMatrix out(docs, dim, options.seed);
    std::vector<double> token_values(corpus.vocabulary_size() * dim, 0.0);

    for (std::size_t i = 0; i < docs; ++i) {
        Rng rng = make_rng(options.seed, "pvdbow-init", corpus.document_keys[i]);
        for (auto& x : out.row(i)) {
            x = (uniform01(rng) - 0.5) / static_cast<double>(dim);
        }
    }

    const NoiseDistribution noise(corpus.token_counts);
    std::vector<std::size_t> offsets(docs + 1, 0);
    for (std::size_t i = 0; i < docs; ++i) {
        offsets[i + 1] = offsets[i] + corpus.documents[i].size();
    }
    const double total_words = static_cast<double>(offsets[docs]) * static_cast<double>(options.epochs);
    const double rate_step = (options.initial_rate - options.final_rate) / std::max(1.0, total_words);

    std::vector<double> doc_losses(docs, 0.0);
    for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
        const double epoch_words = static_cast<double>(epoch) * static_cast<double>(offsets[docs]);
        auto run = [&](std::size_t i, auto atomic_tag) {
            constexpr bool atomic = decltype(atomic_tag)::value;
            Rng rng = make_rng(options.seed, "pvdbow-noise", splitmix64(corpus.document_keys[i]) ^ epoch);
            DocumentScratch scratch;
            const double start = options.initial_rate - rate_step * (epoch_words + static_cast<double>(offsets[i]));
            doc_losses[i] = train_document<atomic>(out.row(i), token_values, dim, corpus.documents[i], noise,
                                                   options.negatives, rng, start, rate_step, scratch);
        };
        if (options.hogwild) {
            parallel_for(docs, options.threads, [&](std::size_t i) { run(i, std::true_type{}); });
        } else {
            for (std::size_t i = 0; i < docs; ++i) {
                run(i, std::false_type{});
            }
        }
        if (curve != nullptr) {
            const double sum = std::accumulate(doc_losses.begin(), doc_losses.end(), 0.0);
            curve->epoch_loss.push_back(sum / std::max<std::size_t>(1, offsets[docs]));
        }
    }
    return out;
}

} // namespace swge
