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

#ifndef SWGE_BALANCE_HPP
#define SWGE_BALANCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swge/graph.hpp"

namespace swge {

/// Assignment of vertices to clusters 0..k-1, every id in use.
class Partition {
public:
    Partition() = default;

    /// Validates that the ids are exactly 0..k-1 (DomainError otherwise).
    explicit Partition(std::vector<std::uint32_t> assignment);

    /// Relabels cluster ids by order of first appearance, so that equivalent
    /// partitions compare equal.
    static Partition canonical(std::span<const std::uint32_t> assignment);

    [[nodiscard]] const std::vector<std::uint32_t>& assignment() const { return assignment_; }
    [[nodiscard]] std::uint32_t cluster(Vertex u) const { return assignment_[u]; }
    [[nodiscard]] std::size_t size() const { return assignment_.size(); }
    [[nodiscard]] std::size_t cluster_count() const { return k_; }

    [[nodiscard]] std::vector<std::vector<Vertex>> clusters() const;

    /// FNV-1a over the assignment, used to tag outputs with the partition they came from.
    [[nodiscard]] std::uint64_t checksum() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> assignment_;
    std::size_t k_ = 0;
};

enum class BalanceMode {
    bisection, // strict structural balance, at most two clusters
    free_k,    // generalized balance, any number of clusters
};

struct FrustrationResult {
    std::size_t frustrated_edge_count = 0;
    double frustration_ratio = 0.0;
    Partition partition;
    bool exact = false;
};

/// Positive edges between clusters plus negative edges inside clusters.
std::size_t frustration_of_partition(const SignedGraph& g, const Partition& p);

inline constexpr std::size_t max_exact_bisection_order = 20;
inline constexpr std::size_t max_exact_free_k_order = 12;

/// Exhaustive minimum over all bisections or all set partitions. Components
/// are solved independently; each one's partition is the lexicographically
/// smallest optimal assignment, and free_k components get disjoint cluster
/// ranges in order of their smallest vertex. Throws CapacityError beyond
/// max_exact_*_order.
FrustrationResult exact_min_frustration(const SignedGraph& g, BalanceMode mode);

/// Best of `restarts` runs of steepest-descent single-vertex moves (free_k
/// also tries moves to a new singleton cluster and pairwise merges). Restarts
/// use independent seeded streams and may run on `threads` threads; the
/// result only depends on the seed.
FrustrationResult local_search_min_frustration(const SignedGraph& g, BalanceMode mode, std::size_t restarts,
                                               std::uint64_t seed, int threads = 1);

/// Exact solver within the size caps, otherwise local search with the given restarts.
FrustrationResult min_frustration(const SignedGraph& g, BalanceMode mode, std::uint64_t seed,
                                  std::size_t restarts = 20);

enum class BalanceKind { strict, generalized };

bool is_balanced(const SignedGraph& g, BalanceKind kind);

} // namespace swge

#endif // SWGE_BALANCE_HPP
