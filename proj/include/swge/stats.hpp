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

#ifndef SWGE_STATS_HPP
#define SWGE_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swge/collection.hpp"

namespace swge {

struct Summary {
    double mean = 0.0;
    double sd = 0.0; // sample standard deviation, 0 for fewer than two values
    double min = 0.0;
    double max = 0.0;
};

Summary summarize(std::span<const double> values);

struct GraphRecord {
    std::size_t order = 0;
    double density = 0.0;
    std::size_t negative_edges = 0;
    std::size_t positive_edges = 0;
    double positive_proportion = 0.0; // percentage
    double sb_frustration = 0.0;      // frustrated edges over all edges
    double gb_frustration = 0.0;
    bool sb_exact = false;
    bool gb_exact = false;
    std::size_t gb_clusters = 0;
    std::size_t diameter = 0;
};

struct CollectionStats {
    std::string name;
    std::size_t graphs = 0;
    std::size_t classes = 0;
    double imbalance = 0.0; // Gini impurity of the class proportions
    Summary order;
    Summary density;
    Summary negative_edges;
    Summary positive_edges;
    Summary positive_proportion;
    Summary sb_frustration;
    Summary gb_frustration;
    Summary diameter;
    std::size_t exact_solves = 0;
    std::size_t heuristic_solves = 0;
    std::vector<GraphRecord> per_graph;
};

/// Frustration uses the exact solver within its size caps and local search
/// beyond them; the choice is recorded per graph.
CollectionStats collection_stats(const GraphCollection& c, std::uint64_t seed = 1, int threads = 1);

/// One row per statistic: "statistic,mean,sd,min,max".
void write_stats_csv(std::ostream& out, const CollectionStats& s);
void write_per_graph_csv(std::ostream& out, const GraphCollection& c, const CollectionStats& s);
void write_stats_table(std::ostream& out, const CollectionStats& s);

} // namespace swge

#endif // SWGE_STATS_HPP
