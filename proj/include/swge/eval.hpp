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

#ifndef SWGE_EVAL_HPP
#define SWGE_EVAL_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swge/collection.hpp"

namespace swge {

using ClassId = std::uint32_t;

struct LabeledEmbeddings {
    EmbeddingMatrix matrix;
    std::vector<ClassId> labels;
    std::size_t classes = 0;

    /// Row count matches the labels, ids are below `classes`, and every class has a member.
    void validate() const;
};

struct FoldAssignment {
    std::vector<std::size_t> fold; // fold index per item
    std::size_t k = 0;
    std::string warning; // set when k had to be lowered

    [[nodiscard]] std::vector<std::size_t> members(std::size_t f) const;
    [[nodiscard]] std::vector<std::size_t> complement(std::size_t f) const;
};

/// Per-class round robin over a seeded shuffle. If the smallest class has
/// fewer than k members, k drops to that size.
FoldAssignment stratified_kfold(std::span<const ClassId> labels, std::size_t k, std::uint64_t seed);

/// One-vs-rest linear SVM (hinge loss, L2 penalty, bias as a constant feature)
/// on standardized inputs.
class LinearClassifier {
public:
    [[nodiscard]] std::size_t classes() const { return weights_.size(); }
    [[nodiscard]] std::size_t dim() const { return mean_.size(); }

    [[nodiscard]] std::vector<double> decision(std::span<const double> x) const;
    /// Highest decision value; ties go to the lower class id.
    [[nodiscard]] ClassId predict(std::span<const double> x) const;

    friend LinearClassifier train_linear_classifier(const EmbeddingMatrix&, std::span<const std::size_t>,
                                                    std::span<const ClassId>, std::size_t, double);

private:
    std::vector<double> mean_;
    std::vector<double> scale_;
    std::vector<std::vector<double>> weights_; // per class, dim + 1 (bias last)
};

/// Trains on the rows listed in `rows`. Dual coordinate descent with a fixed
/// visiting order, so the result is deterministic.
LinearClassifier train_linear_classifier(const EmbeddingMatrix& x, std::span<const std::size_t> rows,
                                         std::span<const ClassId> labels, std::size_t classes, double c);

struct ClassScore {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
    std::size_t support = 0;
};

struct ScoreReport {
    // Percentages.
    double macro_f = 0.0;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double accuracy = 0.0;
    double majority_share = 0.0; // largest true class proportion
    bool degenerate = false;     // every prediction is the same class
    std::vector<ClassScore> per_class;
    std::vector<double> per_fold_f;
    std::vector<double> chosen_c;
};

ScoreReport macro_scores(std::span<const ClassId> predictions, std::span<const ClassId> truth, std::size_t classes);

/// Gini impurity 1 - sum p_c^2 of the class proportions.
double class_imbalance_index(std::span<const ClassId> labels);

struct CvOptions {
    std::size_t folds = 10;
    std::size_t inner_folds = 3;
    std::vector<double> c_grid{0.1, 1.0, 10.0};
    double default_c = 1.0;
    std::uint64_t seed = 1;
    int threads = 1;
};

/// Outer stratified k-fold with C picked by inner cross-validation on each
/// training fold. Macro scores are over the pooled out-of-fold predictions;
/// per_fold_f holds each fold's own macro F.
ScoreReport cross_validate(const LabeledEmbeddings& data, const CvOptions& options);

struct ScoreRow {
    std::string method;
    std::string dataset;
    std::size_t depth = 0; // 0 when the method has no depth parameter
    ScoreReport report;
    double seconds_per_graph = 0.0;
};

void write_score_csv(std::ostream& out, std::span<const ScoreRow> rows);
std::vector<ScoreRow> read_score_csv(std::istream& in, const std::string& source);
void write_score_table(std::ostream& out, std::span<const ScoreRow> rows);

} // namespace swge

#endif // SWGE_EVAL_HPP
