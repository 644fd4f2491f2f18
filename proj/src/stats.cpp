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

#include "swge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "swge/balance.hpp"
#include "swge/eval.hpp"
#include "swge/parallel.hpp"
#include "swge/rng.hpp"

namespace swge {

Summary summarize(std::span<const double> values) {
    Summary s;
    if (values.empty()) {
        return s;
    }
    const auto n = static_cast<double>(values.size());
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    for (const double v : values) {
        s.mean += v / n;
    }
    if (values.size() > 1) {
        double ss = 0.0;
        for (const double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.sd = std::sqrt(ss / (n - 1.0));
    }
    return s;
}

CollectionStats collection_stats(const GraphCollection& c, std::uint64_t seed, int threads) {
    CollectionStats s;
    s.name = c.name;
    s.graphs = c.size();
    s.per_graph.resize(c.size());
    parallel_for(c.size(), threads, [&](std::size_t i) {
        const auto& g = c.graphs[i];
        const auto st = graph_stats(g);
        auto& r = s.per_graph[i];
        r.order = st.order;
        r.density = st.density;
        r.negative_edges = st.negative_edge_count;
        r.positive_edges = st.positive_edge_count;
        r.positive_proportion = st.positive_edge_proportion;
        const std::uint64_t key = graph_key(c.ids[i]);
        const auto sb = min_frustration(g, BalanceMode::bisection, derive_seed(seed, "balance", key));
        const auto gb = min_frustration(g, BalanceMode::free_k, derive_seed(seed, "balance", key));
        r.sb_frustration = sb.frustration_ratio;
        r.gb_frustration = gb.frustration_ratio;
        r.sb_exact = sb.exact;
        r.gb_exact = gb.exact;
        r.gb_clusters = gb.partition.cluster_count();
        r.diameter = diameter(g);
    });
    auto column = [&](auto field) {
        std::vector<double> v;
        v.reserve(s.per_graph.size());
        for (const auto& r : s.per_graph) {
            v.push_back(static_cast<double>(field(r)));
        }
        return summarize(v);
    };
    s.order = column([](const GraphRecord& r) { return r.order; });
    s.density = column([](const GraphRecord& r) { return r.density; });
    s.negative_edges = column([](const GraphRecord& r) { return r.negative_edges; });
    s.positive_edges = column([](const GraphRecord& r) { return r.positive_edges; });
    s.positive_proportion = column([](const GraphRecord& r) { return r.positive_proportion; });
    s.sb_frustration = column([](const GraphRecord& r) { return r.sb_frustration; });
    s.gb_frustration = column([](const GraphRecord& r) { return r.gb_frustration; });
    s.diameter = column([](const GraphRecord& r) { return r.diameter; });
    for (const auto& r : s.per_graph) {
        s.exact_solves += (r.sb_exact ? 1 : 0) + (r.gb_exact ? 1 : 0);
        s.heuristic_solves += (r.sb_exact ? 0 : 1) + (r.gb_exact ? 0 : 1);
    }
    if (!c.labels.empty()) {
        s.classes = *std::max_element(c.labels.begin(), c.labels.end()) + 1;
        s.imbalance = class_imbalance_index(c.labels);
    }
    return s;
}

namespace {

struct NamedSummary {
    const char* name;
    const Summary* value;
};

std::vector<NamedSummary> summaries(const CollectionStats& s) {
    return {{"order", &s.order},
            {"density", &s.density},
            {"negative_edges", &s.negative_edges},
            {"positive_edges", &s.positive_edges},
            {"positive_proportion", &s.positive_proportion},
            {"sb_frustration", &s.sb_frustration},
            {"gb_frustration", &s.gb_frustration},
            {"diameter", &s.diameter}};
}

} // namespace

void write_stats_csv(std::ostream& out, const CollectionStats& s) {
    out << "statistic,mean,sd,min,max\n";
    out << std::fixed << std::setprecision(4);
    out << "graphs," << s.graphs << ",,,\n";
    out << "classes," << s.classes << ",,,\n";
    out << "gini_impurity," << s.imbalance << ",,,\n";
    for (const auto& [name, v] : summaries(s)) {
        out << name << ',' << v->mean << ',' << v->sd << ',' << v->min << ',' << v->max << '\n';
    }
    out << "exact_solves," << s.exact_solves << ",,,\n";
    out << "heuristic_solves," << s.heuristic_solves << ",,,\n";
}

void write_per_graph_csv(std::ostream& out, const GraphCollection& c, const CollectionStats& s) {
    out << "graph_id,order,density,negative_edges,positive_edges,positive_proportion,sb_frustration,sb_solver,"
           "gb_frustration,gb_solver,gb_clusters,diameter\n";
    out << std::fixed << std::setprecision(4);
    for (std::size_t i = 0; i < s.per_graph.size(); ++i) {
        const auto& r = s.per_graph[i];
        out << c.ids[i] << ',' << r.order << ',' << r.density << ',' << r.negative_edges << ',' << r.positive_edges
            << ',' << r.positive_proportion << ',' << r.sb_frustration << ',' << (r.sb_exact ? "exact" : "local")
            << ',' << r.gb_frustration << ',' << (r.gb_exact ? "exact" : "local") << ',' << r.gb_clusters << ','
            << r.diameter << '\n';
    }
}

void write_stats_table(std::ostream& out, const CollectionStats& s) {
    out << s.name << ": " << s.graphs << " graphs, " << s.classes << " classes, Gini impurity " << std::fixed
        << std::setprecision(2) << s.imbalance << '\n';
    for (const auto& [name, v] : summaries(s)) {
        out << "  " << std::left << std::setw(20) << name << std::right << std::setw(9) << v->mean << " +- "
            << std::setw(7) << v->sd << "  [" << v->min << "; " << v->max << "]\n";
    }
    out << "  frustration solves: " << s.exact_solves << " exact, " << s.heuristic_solves << " local search\n";
}

} // namespace swge
