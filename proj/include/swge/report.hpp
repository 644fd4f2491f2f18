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

#ifndef SWGE_REPORT_HPP
#define SWGE_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swge/eval.hpp"

namespace swge {

struct ReportCell {
    std::optional<double> value;
    bool bold = false; // column maximum within the dataset
};

struct ReportRow {
    std::string dataset;
    std::string method;
    std::vector<ReportCell> by_depth; // index 0 is depth 1
    ReportCell flat;                  // methods without a depth parameter
    ReportCell best;
    double seconds_per_graph = 0.0;   // mean over the merged runs
};

struct Report {
    std::size_t max_depth = 0;
    std::vector<ReportRow> rows;
};

/// Pivots score rows into one row per (dataset, method) with one column per
/// depth. Repeated cells keep the last value seen. Methods appear in the
/// canonical method order, unknown names after them in input order.
Report build_report(std::span<const ScoreRow> scores);

void write_report_markdown(std::ostream& out, const Report& report);
void write_report_csv(std::ostream& out, const Report& report);

} // namespace swge

#endif // SWGE_REPORT_HPP
