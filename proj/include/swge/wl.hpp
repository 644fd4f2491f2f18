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

#ifndef SWGE_WL_HPP
#define SWGE_WL_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "swge/graph.hpp"

namespace swge {

using Label = std::uint32_t;

/// Injective compression of composite label strings into integers, issued in
/// first-seen order from `base`. The iteration index is part of the key, so
/// the same composite seen at two iterations yields two labels.
class LabelDictionary {
public:
    explicit LabelDictionary(Label base = 1) : next_(base), base_(base) {}

    Label compress(std::size_t iteration, std::string_view composite);
    [[nodiscard]] std::optional<Label> find(std::size_t iteration, std::string_view composite) const;

    [[nodiscard]] std::size_t size() const { return map_.size(); }
    [[nodiscard]] Label base() const { return base_; }
    [[nodiscard]] Label next_id() const { return next_; }

private:
    static std::string key(std::size_t iteration, std::string_view composite);

    std::unordered_map<std::string, Label> map_;
    Label next_;
    Label base_;
};

enum class WlVariant {
    unsigned_wl,      // Graph2vec relabeling, signs ignored
    signed_neutral,   // sign-prefixed neighbor tokens
    signed_balanced,  // dual positive/negative labels following balance
};

const char* to_string(WlVariant v);

/// One relabeling round: the composite each label was compressed from, and the label.
struct LabelStep {
    std::vector<std::string> composites;
    std::vector<Label> labels;
};

struct DualStep {
    LabelStep positive;
    LabelStep negative;
};

// Composite syntax: "<own>,<neighbor tokens>" with '.' between unsigned
// tokens, sign-prefixed tokens for the neutral variant ("1,+2-3+4"), and '|'
// between the positive-side and negative-side blocks of the dual variant
// ("2,1.1|2"). Initial labels are raw degrees, except the neutral variant,
// which compresses "(k-;k+)".

/// Degree of every vertex; not compressed.
LabelStep wl_init_unsigned(const SignedGraph& g);
std::vector<std::string> wl_composites_unsigned(const SignedGraph& g, std::span<const Label> prev);
LabelStep wl_iterate_unsigned(const SignedGraph& g, std::span<const Label> prev, LabelDictionary& dict,
                              std::size_t iteration);

std::vector<std::string> sg2vn_init_composites(const SignedGraph& g);
LabelStep sg2vn_init(const SignedGraph& g, LabelDictionary& dict);
std::vector<std::string> sg2vn_composites(const SignedGraph& g, std::span<const Label> prev);
LabelStep sg2vn_iterate(const SignedGraph& g, std::span<const Label> prev, LabelDictionary& dict,
                        std::size_t iteration);

/// Positive and negative degrees; not compressed.
DualStep sg2vsb_init(const SignedGraph& g);
/// One channel of the dual update: own-channel labels of positive neighbors,
/// then other-channel labels of negative neighbors. Pass (positive, negative)
/// for the positive channel and (negative, positive) for the negative one.
std::vector<std::string> sg2vsb_composites(const SignedGraph& g, std::span<const Label> own,
                                           std::span<const Label> other);
DualStep sg2vsb_iterate(const SignedGraph& g, const DualStep& prev, LabelDictionary& dict, std::size_t iteration);
/// Fused "(l+,l-)" label of every vertex.
LabelStep sg2vsb_finalize(const DualStep& dual, LabelDictionary& dict, std::size_t iteration);

/// Every iteration of one graph. `steps[t]` holds the label a vertex carries
/// into the corpus at iteration t (fused for the dual variant).
struct LabelTrace {
    WlVariant variant = WlVariant::unsigned_wl;
    std::vector<LabelStep> steps;
    std::vector<DualStep> dual; // dual variant only

    [[nodiscard]] std::size_t iterations() const { return steps.empty() ? 0 : steps.size() - 1; }
};

/// Relabels all graphs for `iterations` rounds through one shared
/// dictionary. Composites are built per graph on `threads` threads, then
/// compressed serially in graph order, so the labels do not depend on the
/// thread count.
std::vector<LabelTrace> relabel_collection(std::span<const SignedGraph> graphs, WlVariant variant,
                                           std::size_t iterations, LabelDictionary& dict, int threads = 1);

LabelTrace relabel(const SignedGraph& g, WlVariant variant, std::size_t iterations, LabelDictionary& dict);

/// Debug dump: "# graph <id> iteration <t> channel <name>" headers followed by
/// "vertex<TAB>composite<TAB>label" lines.
void write_label_dump(std::ostream& os, std::string_view graph_id, const LabelTrace& trace);

} // namespace swge

#endif // SWGE_WL_HPP
