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

#ifndef SWGE_PLANTED_HPP
#define SWGE_PLANTED_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "swge/balance.hpp"
#include "swge/collection.hpp"

namespace swge {

enum class ClassRule {
    cluster_count, // class = planted k
    noise_band,    // class = sign-noise level q
};

struct GeneratorConfig {
    std::string name = "planted";
    std::size_t n_graphs = 1000;
    std::size_t n_min = 16;
    std::size_t n_max = 40;
    std::size_t k_min = 2;
    std::size_t k_max = 3;
    double rho_min = 0.4;
    double rho_max = 1.0;
    std::vector<double> q_values{0.05, 0.15};
    ClassRule class_rule = ClassRule::cluster_count;
    std::uint64_t seed = 1;

    /// ConfigError on empty ranges, rho outside (0, 1], q outside [0, 0.5) or k > n_min.
    void validate() const;
};

struct PlantedCollection {
    GraphCollection collection;
    std::vector<Partition> planted;
    std::vector<double> density; // the edge probability drawn for each graph
    std::vector<double> noise;   // q drawn for each graph
    std::vector<std::size_t> flipped;
};

/// Each graph: n and k uniform in their ranges, near-even clusters (sizes
/// differ by at most one), each pair an edge with probability rho, positive
/// inside clusters and negative across, then each sign flipped with
/// probability q. Graph i draws from its own stream, so the output does not
/// depend on the thread count.
PlantedCollection generate_planted(const GeneratorConfig& config, int threads = 1);

} // namespace swge

#endif // SWGE_PLANTED_HPP
