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

#include "swge/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "swge/error.hpp"
#include "swge/pipeline.hpp"

namespace swge {

namespace {

std::size_t method_rank(const std::string& name) {
    try {
        const Method m = parse_method(name);
        const auto& all = all_methods();
        return static_cast<std::size_t>(std::find(all.begin(), all.end(), m) - all.begin());
    } catch (const DomainError&) {
        return all_methods().size();
    }
}

void mark_column_maxima(std::vector<ReportRow*>& rows, ReportCell& (*cell)(ReportRow&, std::size_t), std::size_t col) {
    std::optional<double> top;
    for (auto* r : rows) {
        const auto& v = cell(*r, col).value;
        if (v && (!top || *v > *top)) {
            top = v;
        }
    }
    for (auto* r : rows) {
        auto& c = cell(*r, col);
        c.bold = c.value && top && *c.value == *top;
    }
}

} // namespace

Report build_report(std::span<const ScoreRow> scores) {
    Report report;
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    std::vector<std::size_t> seen_order;
    std::vector<std::size_t> runs;
    for (const auto& s : scores) {
        report.max_depth = std::max(report.max_depth, s.depth);
    }
    for (const auto& s : scores) {
        const auto key = std::make_pair(s.dataset, s.method);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, report.rows.size()).first;
            ReportRow row;
            row.dataset = s.dataset;
            row.method = s.method;
            row.by_depth.resize(report.max_depth);
            report.rows.push_back(std::move(row));
            runs.push_back(0);
        }
        auto& row = report.rows[it->second];
        if (s.depth == 0) {
            row.flat.value = s.report.macro_f;
        } else {
            row.by_depth[s.depth - 1].value = s.report.macro_f;
        }
        row.seconds_per_graph += s.seconds_per_graph;
        ++runs[it->second];
    }
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        auto& row = report.rows[i];
        row.seconds_per_graph /= static_cast<double>(runs[i]);
        row.best = row.flat;
        for (const auto& c : row.by_depth) {
            if (c.value && (!row.best.value || *c.value > *row.best.value)) {
                row.best.value = c.value;
            }
        }
    }
    // Keep datasets in first-seen order, methods in canonical order within each.
    std::vector<std::string> datasets;
    for (const auto& r : report.rows) {
        if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end()) {
            datasets.push_back(r.dataset);
        }
    }
    std::stable_sort(report.rows.begin(), report.rows.end(), [&](const ReportRow& a, const ReportRow& b) {
        const auto da = std::find(datasets.begin(), datasets.end(), a.dataset) - datasets.begin();
        const auto db = std::find(datasets.begin(), datasets.end(), b.dataset) - datasets.begin();
        if (da != db) {
            return da < db;
        }
        return method_rank(a.method) < method_rank(b.method);
    });
    for (const auto& d : datasets) {
        std::vector<ReportRow*> group;
        for (auto& r : report.rows) {
            if (r.dataset == d) {
                group.push_back(&r);
            }
        }
        for (std::size_t col = 0; col < report.max_depth; ++col) {
            mark_column_maxima(group, [](ReportRow& r, std::size_t c) -> ReportCell& { return r.by_depth[c]; }, col);
        }
        mark_column_maxima(group, [](ReportRow& r, std::size_t) -> ReportCell& { return r.flat; }, 0);
        mark_column_maxima(group, [](ReportRow& r, std::size_t) -> ReportCell& { return r.best; }, 0);
    }
    return report;
}

namespace {

std::string format_cell(const ReportCell& c, bool markdown) {
    if (!c.value) {
        return {};
    }
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(2) << *c.value;
    if (markdown && c.bold) {
        return "**" + ss.str() + "**";
    }
    return ss.str();
}

} // namespace

void write_report_markdown(std::ostream& out, const Report& report) {
    out << "| dataset | method |";
    for (std::size_t d = 1; d <= report.max_depth; ++d) {
        out << ' ' << d << (d == 1 ? " it. |" : " its. |");
    }
    out << " flat | best | s/graph |\n|---|---|";
    for (std::size_t d = 0; d < report.max_depth; ++d) {
        out << "---:|";
    }
    out << "---:|---:|---:|\n";
    for (const auto& r : report.rows) {
        out << "| " << r.dataset << " | " << r.method << " |";
        for (const auto& c : r.by_depth) {
            out << ' ' << format_cell(c, true) << " |";
        }
        std::ostringstream t;
        t << std::setprecision(4) << r.seconds_per_graph;
        out << ' ' << format_cell(r.flat, true) << " | " << format_cell(r.best, true) << " | " << t.str() << " |\n";
    }
}

void write_report_csv(std::ostream& out, const Report& report) {
    out << "dataset,method";
    for (std::size_t d = 1; d <= report.max_depth; ++d) {
        out << ",depth" << d << ",depth" << d << "_bold";
    }
    out << ",flat,flat_bold,best,best_bold,seconds_per_graph\n";
    for (const auto& r : report.rows) {
        out << r.dataset << ',' << r.method;
        for (const auto& c : r.by_depth) {
            out << ',' << format_cell(c, false) << ',' << (c.bold ? 1 : 0);
        }
        out << ',' << format_cell(r.flat, false) << ',' << (r.flat.bold ? 1 : 0) << ',' << format_cell(r.best, false)
            << ',' << (r.best.bold ? 1 : 0) << ',' << std::setprecision(6) << r.seconds_per_graph << '\n';
    }
}

} // namespace swge
