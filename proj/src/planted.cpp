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

#include "swge/planted.hpp"

#include <algorithm>
#include <cstdio>

#include "swge/error.hpp"
#include "swge/parallel.hpp"
#include "swge/rng.hpp"

namespace swge {

void GeneratorConfig::validate() const {
    if (n_graphs == 0) {
        throw ConfigError("n_graphs must be positive");
    }
    if (n_min < 2 || n_min > n_max) {
        throw ConfigError("order range must satisfy 2 <= n_min <= n_max");
    }
    if (k_min < 1 || k_min > k_max) {
        throw ConfigError("cluster range must satisfy 1 <= k_min <= k_max");
    }
    if (k_max > n_min) {
        throw ConfigError("k_max cannot exceed n_min");
    }
    if (!(rho_min > 0.0) || rho_min > rho_max || rho_max > 1.0) {
        throw ConfigError("density range must satisfy 0 < rho_min <= rho_max <= 1");
    }
    if (q_values.empty()) {
        throw ConfigError("at least one noise level is required");
    }
    for (const double q : q_values) {
        if (!(q >= 0.0 && q < 0.5)) {
            throw ConfigError("noise levels must lie in [0, 0.5)");
        }
    }
}

PlantedCollection generate_planted(const GeneratorConfig& config, int threads) {
    config.validate();
    const std::size_t count = config.n_graphs;
    std::vector<double> levels = config.q_values;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    PlantedCollection out;
    out.planted.resize(count);
    out.density.resize(count);
    out.noise.resize(count);
    out.flipped.resize(count);
    std::vector<SignedGraph> graphs(count);
    std::vector<std::uint32_t> labels(count);

    parallel_for(count, threads, [&](std::size_t i) {
        Rng rng = make_rng(config.seed, "planted", i);
        const std::size_t n = config.n_min + uniform_index(rng, config.n_max - config.n_min + 1);
        const std::size_t k = config.k_min + uniform_index(rng, config.k_max - config.k_min + 1);
        const double rho = uniform(rng, config.rho_min, config.rho_max);
        const std::size_t q_index = uniform_index(rng, config.q_values.size());
        const double q = config.q_values[q_index];

        std::vector<std::uint32_t> cluster(n);
        for (std::size_t u = 0; u < n; ++u) {
            cluster[u] = static_cast<std::uint32_t>(u % k);
        }
        shuffle(cluster, rng);

        std::vector<Edge> edges;
        std::size_t flips = 0;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (uniform01(rng) >= rho) {
                    continue;
                }
                Sign s = cluster[u] == cluster[v] ? Sign::positive : Sign::negative;
                if (uniform01(rng) < q) {
                    s = flip(s);
                    ++flips;
                }
                edges.push_back({u, v, s});
            }
        }
        graphs[i] = SignedGraph(n, std::move(edges));
        out.planted[i] = Partition::canonical(cluster);
        out.density[i] = rho;
        out.noise[i] = q;
        out.flipped[i] = flips;
        if (config.class_rule == ClassRule::cluster_count) {
            labels[i] = static_cast<std::uint32_t>(k - config.k_min);
        } else {
            labels[i] = static_cast<std::uint32_t>(std::lower_bound(levels.begin(), levels.end(), q) - levels.begin());
        }
    });

    auto& c = out.collection;
    c.name = config.name;
    if (config.class_rule == ClassRule::cluster_count) {
        for (std::size_t k = config.k_min; k <= config.k_max; ++k) {
            c.class_names.push_back(std::to_string(k));
        }
    } else {
        for (const double q : levels) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", q);
            c.class_names.emplace_back(buf);
        }
    }
    const int width = static_cast<int>(std::to_string(count - 1).size());
    for (std::size_t i = 0; i < count; ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "g%0*zu", width, i);
        c.add(id, std::move(graphs[i]), labels[i]);
    }
    return out;
}

} // namespace swge
