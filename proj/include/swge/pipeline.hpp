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

#ifndef SWGE_PIPELINE_HPP
#define SWGE_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swge/collection.hpp"
#include "swge/io.hpp"
#include "swge/wsgcn.hpp"

namespace swge {

enum class Method { sine_sum, sine_avg, g2v, sg2vn, sg2vsb, sgcn, wsgcn_plus, wsgcn_minus, wsgcn_pm, wsgcn_sb, wsgcn_gb };

const std::vector<Method>& all_methods();
std::string_view method_name(Method m);

/// Accepts the names from method_name, plus "wsgcn+-" for "wsgcn±". DomainError otherwise.
Method parse_method(std::string_view name);

/// WL iterations for the Graph2vec family, layers for the convolutional one.
bool has_depth(Method m);

struct EmbedOptions {
    Method method = Method::sg2vsb;
    std::size_t depth = 3;
    std::size_t dim = 0;    // 0: method default
    std::size_t epochs = 0; // 0: method default
    std::uint64_t seed = 1;
    int threads = 1;
    bool hogwild = false; // Graph2vec family only
};

struct EmbedResult {
    EmbeddingFile file;
    std::optional<std::vector<WsgcnGraphMeta>> wsgcn_meta;
    double seconds = 0.0; // wall time of the embedding step alone
};

/// Version string of the build, recorded in provenance headers.
std::string_view build_version();

EmbedResult embed_collection(const GraphCollection& c, const EmbedOptions& options);

} // namespace swge

#endif // SWGE_PIPELINE_HPP
