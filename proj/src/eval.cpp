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

#include "swge/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "swge/error.hpp"
#include "swge/parallel.hpp"
#include "swge/rng.hpp"

namespace swge {

void LabeledEmbeddings::validate() const {
    if (matrix.rows != labels.size()) {
        throw DomainError("embedding rows and labels differ in count");
    }
    std::vector<std::size_t> seen(classes, 0);
    for (const ClassId c : labels) {
        if (c >= classes) {
            throw DomainError("class id out of range");
        }
        ++seen[c];
    }
    for (std::size_t c = 0; c < classes; ++c) {
        if (seen[c] == 0) {
            throw DomainError("class " + std::to_string(c) + " has no members");
        }
    }
}

std::vector<std::size_t> FoldAssignment::members(std::size_t f) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold.size(); ++i) {
        if (fold[i] == f) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> FoldAssignment::complement(std::size_t f) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold.size(); ++i) {
        if (fold[i] != f) {
            out.push_back(i);
        }
    }
    return out;
}

FoldAssignment stratified_kfold(std::span<const ClassId> labels, std::size_t k, std::uint64_t seed) {
    if (k < 2) {
        throw DomainError("cross-validation needs at least 2 folds");
    }
    const std::size_t classes = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<std::size_t>> by_class(classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[labels[i]].push_back(i);
    }
    FoldAssignment out;
    std::size_t smallest = std::numeric_limits<std::size_t>::max();
    for (const auto& members : by_class) {
        if (!members.empty()) {
            smallest = std::min(smallest, members.size());
        }
    }
    out.k = k;
    if (smallest < k) {
        if (smallest < 2) {
            throw DomainError("a class has fewer than 2 members; cannot build folds");
        }
        out.k = smallest;
        out.warning = "smallest class has " + std::to_string(smallest) + " members; using " + std::to_string(smallest) +
                      " folds instead of " + std::to_string(k);
    }
    out.fold.assign(labels.size(), 0);
    // Continuing the round robin across classes keeps fold sizes within one of each other overall.
    std::size_t next = 0;
    for (std::size_t c = 0; c < classes; ++c) {
        auto members = by_class[c];
        Rng rng = make_rng(seed, "folds", c);
        shuffle(members, rng);
        for (const std::size_t i : members) {
            out.fold[i] = next;
            next = (next + 1) % out.k;
        }
    }
    return out;
}

std::vector<double> LinearClassifier::decision(std::span<const double> x) const {
    if (x.size() != dim()) {
        throw DomainError("input dimension does not match the classifier");
    }
    std::vector<double> z(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        z[j] = (x[j] - mean_[j]) * scale_[j];
    }
    std::vector<double> out(classes());
    for (std::size_t c = 0; c < classes(); ++c) {
        const auto& w = weights_[c];
        double s = w.back();
        for (std::size_t j = 0; j < z.size(); ++j) {
            s += w[j] * z[j];
        }
        out[c] = s;
    }
    return out;
}

ClassId LinearClassifier::predict(std::span<const double> x) const {
    const auto d = decision(x);
    std::size_t best = 0;
    for (std::size_t c = 1; c < d.size(); ++c) {
        if (d[c] > d[best]) {
            best = c;
        }
    }
    return static_cast<ClassId>(best);
}

namespace {

constexpr std::size_t max_solver_sweeps = 1000;
constexpr double solver_tolerance = 0.01;

// Dual coordinate descent for the L2-regularized hinge loss, bias as an extra unit feature.
std::vector<double> solve_binary(const std::vector<std::vector<double>>& z, const std::vector<int>& y, double c,
                                 std::uint64_t order_seed) {
    const std::size_t m = z.size();
    const std::size_t d = m == 0 ? 0 : z[0].size();
    std::vector<double> w(d + 1, 0.0);
    std::vector<double> alpha(m, 0.0);
    std::vector<double> qdiag(m);
    for (std::size_t i = 0; i < m; ++i) {
        qdiag[i] = 1.0 + std::inner_product(z[i].begin(), z[i].end(), z[i].begin(), 0.0);
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(order_seed);
    for (std::size_t sweep = 0; sweep < max_solver_sweeps; ++sweep) {
        shuffle(order, rng);
        double pg_max = -std::numeric_limits<double>::infinity();
        double pg_min = std::numeric_limits<double>::infinity();
        for (const std::size_t i : order) {
            const auto& x = z[i];
            double margin = w[d];
            for (std::size_t j = 0; j < d; ++j) {
                margin += w[j] * x[j];
            }
            const double g = y[i] * margin - 1.0;
            double pg = g;
            if (alpha[i] == 0.0) {
                pg = std::min(g, 0.0);
            } else if (alpha[i] == c) {
                pg = std::max(g, 0.0);
            }
            pg_max = std::max(pg_max, pg);
            pg_min = std::min(pg_min, pg);
            if (std::abs(pg) > 1e-12) {
                const double old = alpha[i];
                alpha[i] = std::clamp(old - g / qdiag[i], 0.0, c);
                const double step = (alpha[i] - old) * y[i];
                for (std::size_t j = 0; j < d; ++j) {
                    w[j] += step * x[j];
                }
                w[d] += step;
            }
        }
        if (pg_max - pg_min < solver_tolerance) {
            break;
        }
    }
    return w;
}

} // namespace

LinearClassifier train_linear_classifier(const EmbeddingMatrix& x, std::span<const std::size_t> rows,
                                         std::span<const ClassId> labels, std::size_t classes, double c) {
    if (c <= 0.0) {
        throw DomainError("regularization constant must be positive");
    }
    if (labels.size() != x.rows) {
        throw DomainError("labels and embedding rows differ in count");
    }
    std::vector<std::size_t> present(classes, 0);
    for (const std::size_t r : rows) {
        if (labels[r] >= classes) {
            throw DomainError("class id out of range");
        }
        ++present[labels[r]];
    }
    if (std::count_if(present.begin(), present.end(), [](std::size_t n) { return n > 0; }) < 2) {
        throw DomainError("training fold contains a single class");
    }
    const std::size_t d = x.dim;
    const auto m = static_cast<double>(rows.size());
    LinearClassifier model;
    model.mean_.assign(d, 0.0);
    model.scale_.assign(d, 0.0);
    for (const std::size_t r : rows) {
        const auto v = x.row(r);
        for (std::size_t j = 0; j < d; ++j) {
            model.mean_[j] += v[j] / m;
        }
    }
    for (const std::size_t r : rows) {
        const auto v = x.row(r);
        for (std::size_t j = 0; j < d; ++j) {
            const double delta = v[j] - model.mean_[j];
            model.scale_[j] += delta * delta / m;
        }
    }
    for (auto& s : model.scale_) {
        const double sd = std::sqrt(s);
        s = sd > 1e-12 ? 1.0 / sd : 0.0; // constant columns carry no information
    }
    std::vector<std::vector<double>> z(rows.size(), std::vector<double>(d));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto v = x.row(rows[i]);
        for (std::size_t j = 0; j < d; ++j) {
            z[i][j] = (v[j] - model.mean_[j]) * model.scale_[j];
        }
    }
    model.weights_.resize(classes);
    std::vector<int> y(rows.size());
    for (std::size_t cls = 0; cls < classes; ++cls) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            y[i] = labels[rows[i]] == cls ? 1 : -1;
        }
        if (present[cls] == 0) {
            // Never seen in training: push it below every other class.
            model.weights_[cls].assign(d + 1, 0.0);
            model.weights_[cls][d] = -std::numeric_limits<double>::max();
            continue;
        }
        model.weights_[cls] = solve_binary(z, y, c, derive_seed(0, "svm-order", cls));
    }
    return model;
}

ScoreReport macro_scores(std::span<const ClassId> predictions, std::span<const ClassId> truth, std::size_t classes) {
    if (predictions.size() != truth.size()) {
        throw DomainError("predictions and truth differ in length");
    }
    std::vector<std::size_t> tp(classes, 0);
    std::vector<std::size_t> fp(classes, 0);
    std::vector<std::size_t> fn(classes, 0);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const ClassId p = predictions[i];
        const ClassId t = truth[i];
        if (p >= classes || t >= classes) {
            throw DomainError("class id out of range");
        }
        if (p == t) {
            ++tp[t];
            ++correct;
        } else {
            ++fp[p];
            ++fn[t];
        }
    }
    ScoreReport r;
    r.per_class.resize(classes);
    std::size_t majority = 0;
    for (std::size_t c = 0; c < classes; ++c) {
        auto& s = r.per_class[c];
        s.support = tp[c] + fn[c];
        majority = std::max(majority, s.support);
        s.precision = tp[c] + fp[c] == 0 ? 0.0 : 100.0 * static_cast<double>(tp[c]) / static_cast<double>(tp[c] + fp[c]);
        s.recall = tp[c] + fn[c] == 0 ? 0.0 : 100.0 * static_cast<double>(tp[c]) / static_cast<double>(tp[c] + fn[c]);
        s.f = s.precision + s.recall == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / (s.precision + s.recall);
        r.macro_precision += s.precision / static_cast<double>(classes);
        r.macro_recall += s.recall / static_cast<double>(classes);
        r.macro_f += s.f / static_cast<double>(classes);
    }
    if (!truth.empty()) {
        const auto n = static_cast<double>(truth.size());
        r.accuracy = 100.0 * static_cast<double>(correct) / n;
        r.majority_share = 100.0 * static_cast<double>(majority) / n;
        r.degenerate = std::all_of(predictions.begin(), predictions.end(),
                                   [&](ClassId p) { return p == predictions.front(); });
    }
    return r;
}

double class_imbalance_index(std::span<const ClassId> labels) {
    if (labels.empty()) {
        throw DomainError("class imbalance of an empty label set");
    }
    const std::size_t classes = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::size_t> counts(classes, 0);
    for (const ClassId c : labels) {
        ++counts[c];
    }
    double sum = 0.0;
    for (const std::size_t n : counts) {
        const double p = static_cast<double>(n) / static_cast<double>(labels.size());
        sum += p * p;
    }
    return 1.0 - sum;
}

namespace {

// Macro F of C on an inner split of `rows`, or -1 when the inner split is impossible.
double inner_score(const LabeledEmbeddings& data, const std::vector<std::size_t>& rows, double c,
                   const CvOptions& options, std::uint64_t seed) {
    std::vector<ClassId> sub(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        sub[i] = data.labels[rows[i]];
    }
    const FoldAssignment folds = stratified_kfold(sub, options.inner_folds, seed);
    std::vector<ClassId> predicted(rows.size());
    for (std::size_t f = 0; f < folds.k; ++f) {
        std::vector<std::size_t> train;
        for (const std::size_t i : folds.complement(f)) {
            train.push_back(rows[i]);
        }
        const auto model = train_linear_classifier(data.matrix, train, data.labels, data.classes, c);
        for (const std::size_t i : folds.members(f)) {
            predicted[i] = model.predict(data.matrix.row(rows[i]));
        }
    }
    return macro_scores(predicted, sub, data.classes).macro_f;
}

double select_c(const LabeledEmbeddings& data, const std::vector<std::size_t>& rows, const CvOptions& options,
                std::uint64_t seed) {
    if (options.c_grid.size() <= 1) {
        return options.c_grid.empty() ? options.default_c : options.c_grid.front();
    }
    std::vector<std::size_t> counts(data.classes, 0);
    for (const std::size_t r : rows) {
        ++counts[data.labels[r]];
    }
    for (const std::size_t n : counts) {
        if (n > 0 && n < 2) {
            return options.default_c;
        }
    }
    double best_c = options.default_c;
    double best = -1.0;
    for (const double c : options.c_grid) {
        const double score = inner_score(data, rows, c, options, seed);
        if (score > best) {
            best = score;
            best_c = c;
        }
    }
    return best_c;
}

} // namespace

ScoreReport cross_validate(const LabeledEmbeddings& data, const CvOptions& options) {
    data.validate();
    const FoldAssignment folds = stratified_kfold(data.labels, options.folds, options.seed);
    std::vector<ClassId> predicted(data.labels.size());
    std::vector<double> fold_f(folds.k);
    std::vector<double> chosen(folds.k);
    parallel_for(folds.k, options.threads, [&](std::size_t f) {
        const auto train = folds.complement(f);
        const double c = select_c(data, train, options, derive_seed(options.seed, "inner-folds", f));
        chosen[f] = c;
        const auto model = train_linear_classifier(data.matrix, train, data.labels, data.classes, c);
        const auto test = folds.members(f);
        std::vector<ClassId> p(test.size());
        std::vector<ClassId> t(test.size());
        for (std::size_t i = 0; i < test.size(); ++i) {
            p[i] = model.predict(data.matrix.row(test[i]));
            t[i] = data.labels[test[i]];
            predicted[test[i]] = p[i];
        }
        fold_f[f] = macro_scores(p, t, data.classes).macro_f;
    });
    ScoreReport r = macro_scores(predicted, data.labels, data.classes);
    r.per_fold_f = std::move(fold_f);
    r.chosen_c = std::move(chosen);
    return r;
}

namespace {

double fold_sd(const std::vector<double>& v) {
    if (v.size() < 2) {
        return 0.0;
    }
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double ss = 0.0;
    for (const double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

const char* const csv_header =
    "method,dataset,depth,macro_f,macro_precision,macro_recall,fold_f_sd,accuracy,majority_share,degenerate,"
    "seconds_per_graph";

} // namespace

void write_score_csv(std::ostream& out, std::span<const ScoreRow> rows) {
    out << csv_header << '\n';
    out << std::fixed;
    for (const auto& row : rows) {
        const auto& r = row.report;
        out << row.method << ',' << row.dataset << ',' << row.depth << ',' << std::setprecision(2) << r.macro_f << ','
            << r.macro_precision << ',' << r.macro_recall << ',' << fold_sd(r.per_fold_f) << ',' << r.accuracy << ','
            << r.majority_share << ',' << (r.degenerate ? 1 : 0) << ',' << std::setprecision(6)
            << row.seconds_per_graph << '\n';
    }
}

std::vector<ScoreRow> read_score_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line) || line != csv_header) {
        throw LoadError(source + ":1: not a score file (unexpected header)");
    }
    std::vector<ScoreRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 11) {
            throw LoadError(source + ":" + std::to_string(line_no) + ": expected 11 fields");
        }
        try {
            ScoreRow row;
            row.method = cells[0];
            row.dataset = cells[1];
            row.depth = std::stoul(cells[2]);
            row.report.macro_f = std::stod(cells[3]);
            row.report.macro_precision = std::stod(cells[4]);
            row.report.macro_recall = std::stod(cells[5]);
            row.report.accuracy = std::stod(cells[7]);
            row.report.majority_share = std::stod(cells[8]);
            row.report.degenerate = cells[9] == "1";
            row.seconds_per_graph = std::stod(cells[10]);
            rows.push_back(std::move(row));
        } catch (const std::logic_error&) {
            throw LoadError(source + ":" + std::to_string(line_no) + ": malformed number");
        }
    }
    return rows;
}

void write_score_table(std::ostream& out, std::span<const ScoreRow> rows) {
    std::size_t width = 6;
    for (const auto& row : rows) {
        width = std::max(width, row.method.size());
    }
    out << std::left << std::setw(static_cast<int>(width)) << "method" << std::right << std::setw(7) << "depth"
        << std::setw(9) << "F" << std::setw(9) << "P" << std::setw(9) << "R" << std::setw(8) << "sd" << std::setw(9)
        << "acc" << '\n';
    out << std::fixed << std::setprecision(2);
    for (const auto& row : rows) {
        const auto& r = row.report;
        out << std::left << std::setw(static_cast<int>(width)) << row.method << std::right << std::setw(7) << row.depth
            << std::setw(9) << r.macro_f << std::setw(9) << r.macro_precision << std::setw(9) << r.macro_recall
            << std::setw(8) << fold_sd(r.per_fold_f) << std::setw(9) << r.accuracy
            << (r.degenerate ? "  (majority vote)" : "") << '\n';
    }
}

} // namespace swge
