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

#include "swge/wl.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "swge/error.hpp"
#include "swge/parallel.hpp"

namespace swge {

std::string LabelDictionary::key(std::size_t iteration, std::string_view composite) {
    std::string k = std::to_string(iteration);
    k += ':';
    k += composite;
    return k;
}

Label LabelDictionary::compress(std::size_t iteration, std::string_view composite) {
    auto [it, inserted] = map_.try_emplace(key(iteration, composite), next_);
    if (inserted) {
        ++next_;
    }
    return it->second;
}

std::optional<Label> LabelDictionary::find(std::size_t iteration, std::string_view composite) const {
    const auto it = map_.find(key(iteration, composite));
    if (it == map_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const char* to_string(WlVariant v) {
    switch (v) {
    case WlVariant::unsigned_wl:
        return "g2v";
    case WlVariant::signed_neutral:
        return "sg2vn";
    case WlVariant::signed_balanced:
        return "sg2vsb";
    }
    return "?";
}

namespace {

void check_cover(const SignedGraph& g, std::span<const Label> labels) {
    if (labels.size() != g.order()) {
        throw DomainError("label vector covers " + std::to_string(labels.size()) + " vertices, graph has " +
                          std::to_string(g.order()));
    }
}

void append_block(std::string& out, std::vector<Label>& block) {
    std::sort(block.begin(), block.end());
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) {
            out += '.';
        }
        out += std::to_string(block[i]);
    }
}

LabelStep compress_all(std::vector<std::string> composites, LabelDictionary& dict, std::size_t iteration) {
    LabelStep step;
    step.labels.reserve(composites.size());
    for (const auto& c : composites) {
        step.labels.push_back(dict.compress(iteration, c));
    }
    step.composites = std::move(composites);
    return step;
}

LabelStep raw_counts(const SignedGraph& g, std::size_t (SignedGraph::*count)(Vertex) const) {
    LabelStep step;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto k = static_cast<Label>((g.*count)(u));
        step.labels.push_back(k);
        step.composites.push_back(std::to_string(k));
    }
    return step;
}

} // namespace

LabelStep wl_init_unsigned(const SignedGraph& g) {
    return raw_counts(g, &SignedGraph::degree);
}

std::vector<std::string> wl_composites_unsigned(const SignedGraph& g, std::span<const Label> prev) {
    check_cover(g, prev);
    std::vector<std::string> out(g.order());
    std::vector<Label> block;
    for (Vertex u = 0; u < g.order(); ++u) {
        block.clear();
        for (const auto& nb : g.adjacent(u)) {
            block.push_back(prev[nb.vertex]);
        }
        out[u] = std::to_string(prev[u]) + ',';
        append_block(out[u], block);
    }
    return out;
}

LabelStep wl_iterate_unsigned(const SignedGraph& g, std::span<const Label> prev, LabelDictionary& dict,
                              std::size_t iteration) {
    return compress_all(wl_composites_unsigned(g, prev), dict, iteration);
}

std::vector<std::string> sg2vn_init_composites(const SignedGraph& g) {
    std::vector<std::string> out;
    out.reserve(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        out.push_back('(' + std::to_string(g.negative_degree(u)) + ';' + std::to_string(g.positive_degree(u)) + ')');
    }
    return out;
}

LabelStep sg2vn_init(const SignedGraph& g, LabelDictionary& dict) {
    return compress_all(sg2vn_init_composites(g), dict, 0);
}

std::vector<std::string> sg2vn_composites(const SignedGraph& g, std::span<const Label> prev) {
    check_cover(g, prev);
    std::vector<std::string> out(g.order());
    std::vector<std::pair<Label, int>> tokens; // (label, 0 for '+', 1 for '-')
    for (Vertex u = 0; u < g.order(); ++u) {
        tokens.clear();
        for (const auto& nb : g.adjacent(u)) {
            tokens.emplace_back(prev[nb.vertex], nb.sign == Sign::positive ? 0 : 1);
        }
        std::sort(tokens.begin(), tokens.end());
        std::string& s = out[u];
        s = std::to_string(prev[u]) + ',';
        for (const auto& [label, neg] : tokens) {
            s += neg ? '-' : '+';
            s += std::to_string(label);
        }
    }
    return out;
}

LabelStep sg2vn_iterate(const SignedGraph& g, std::span<const Label> prev, LabelDictionary& dict,
                        std::size_t iteration) {
    return compress_all(sg2vn_composites(g, prev), dict, iteration);
}

DualStep sg2vsb_init(const SignedGraph& g) {
    return {raw_counts(g, &SignedGraph::positive_degree), raw_counts(g, &SignedGraph::negative_degree)};
}

std::vector<std::string> sg2vsb_composites(const SignedGraph& g, std::span<const Label> own,
                                           std::span<const Label> other) {
    check_cover(g, own);
    check_cover(g, other);
    std::vector<std::string> out(g.order());
    std::vector<Label> friends;
    std::vector<Label> enemies;
    for (Vertex u = 0; u < g.order(); ++u) {
        friends.clear();
        enemies.clear();
        for (const auto& nb : g.adjacent(u)) {
            if (nb.sign == Sign::positive) {
                friends.push_back(own[nb.vertex]);
            } else {
                enemies.push_back(other[nb.vertex]);
            }
        }
        std::string& s = out[u];
        s = std::to_string(own[u]) + ',';
        append_block(s, friends);
        s += '|';
        append_block(s, enemies);
    }
    return out;
}

DualStep sg2vsb_iterate(const SignedGraph& g, const DualStep& prev, LabelDictionary& dict, std::size_t iteration) {
    auto pos = sg2vsb_composites(g, prev.positive.labels, prev.negative.labels);
    auto neg = sg2vsb_composites(g, prev.negative.labels, prev.positive.labels);
    DualStep out;
    out.positive = compress_all(std::move(pos), dict, iteration);
    out.negative = compress_all(std::move(neg), dict, iteration);
    return out;
}

namespace {

std::vector<std::string> fused_composites(const DualStep& dual) {
    const auto& p = dual.positive.labels;
    const auto& n = dual.negative.labels;
    if (p.size() != n.size()) {
        throw DomainError("dual labels have mismatched lengths");
    }
    std::vector<std::string> out(p.size());
    for (std::size_t u = 0; u < p.size(); ++u) {
        out[u] = '(' + std::to_string(p[u]) + ',' + std::to_string(n[u]) + ')';
    }
    return out;
}

} // namespace

LabelStep sg2vsb_finalize(const DualStep& dual, LabelDictionary& dict, std::size_t iteration) {
    return compress_all(fused_composites(dual), dict, iteration);
}

std::vector<LabelTrace> relabel_collection(std::span<const SignedGraph> graphs, WlVariant variant,
                                           std::size_t iterations, LabelDictionary& dict, int threads) {
    const std::size_t count = graphs.size();
    std::vector<LabelTrace> traces(count);
    for (auto& t : traces) {
        t.variant = variant;
    }

    // Iteration 0.
    std::vector<std::vector<std::string>> pending(count);
    switch (variant) {
    case WlVariant::unsigned_wl:
        parallel_for(count, threads, [&](std::size_t i) { traces[i].steps.push_back(wl_init_unsigned(graphs[i])); });
        break;
    case WlVariant::signed_neutral:
        parallel_for(count, threads, [&](std::size_t i) { pending[i] = sg2vn_init_composites(graphs[i]); });
        for (std::size_t i = 0; i < count; ++i) {
            traces[i].steps.push_back(compress_all(std::move(pending[i]), dict, 0));
        }
        break;
    case WlVariant::signed_balanced:
        parallel_for(count, threads, [&](std::size_t i) { traces[i].dual.push_back(sg2vsb_init(graphs[i])); });
        for (std::size_t i = 0; i < count; ++i) {
            traces[i].steps.push_back(sg2vsb_finalize(traces[i].dual.back(), dict, 0));
        }
        break;
    }

    std::vector<std::vector<std::string>> pending_neg(count);
    for (std::size_t t = 1; t <= iterations; ++t) {
        switch (variant) {
        case WlVariant::unsigned_wl:
            parallel_for(count, threads, [&](std::size_t i) {
                pending[i] = wl_composites_unsigned(graphs[i], traces[i].steps.back().labels);
            });
            for (std::size_t i = 0; i < count; ++i) {
                traces[i].steps.push_back(compress_all(std::move(pending[i]), dict, t));
            }
            break;
        case WlVariant::signed_neutral:
            parallel_for(count, threads, [&](std::size_t i) {
                pending[i] = sg2vn_composites(graphs[i], traces[i].steps.back().labels);
            });
            for (std::size_t i = 0; i < count; ++i) {
                traces[i].steps.push_back(compress_all(std::move(pending[i]), dict, t));
            }
            break;
        case WlVariant::signed_balanced:
            parallel_for(count, threads, [&](std::size_t i) {
                const auto& prev = traces[i].dual.back();
                pending[i] = sg2vsb_composites(graphs[i], prev.positive.labels, prev.negative.labels);
                pending_neg[i] = sg2vsb_composites(graphs[i], prev.negative.labels, prev.positive.labels);
            });
            for (std::size_t i = 0; i < count; ++i) {
                DualStep next;
                next.positive = compress_all(std::move(pending[i]), dict, t);
                next.negative = compress_all(std::move(pending_neg[i]), dict, t);
                traces[i].dual.push_back(std::move(next));
                traces[i].steps.push_back(sg2vsb_finalize(traces[i].dual.back(), dict, t));
            }
            break;
        }
    }
    return traces;
}

LabelTrace relabel(const SignedGraph& g, WlVariant variant, std::size_t iterations, LabelDictionary& dict) {
    return std::move(relabel_collection(std::span<const SignedGraph>(&g, 1), variant, iterations, dict, 1).front());
}

void write_label_dump(std::ostream& os, std::string_view graph_id, const LabelTrace& trace) {
    auto section = [&](std::size_t t, const char* channel, const LabelStep& step) {
        os << "# graph " << graph_id << " iteration " << t << " channel " << channel << '\n';
        for (std::size_t u = 0; u < step.labels.size(); ++u) {
            os << u << '\t' << step.composites[u] << '\t' << step.labels[u] << '\n';
        }
    };
    for (std::size_t t = 0; t < trace.steps.size(); ++t) {
        if (trace.variant == WlVariant::signed_balanced) {
            section(t, "positive", trace.dual[t].positive);
            section(t, "negative", trace.dual[t].negative);
            section(t, "fused", trace.steps[t]);
        } else {
            section(t, "label", trace.steps[t]);
        }
    }
}

} // namespace swge
