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

#include "swge/balance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "swge/error.hpp"
#include "swge/parallel.hpp"
#include "swge/rng.hpp"

namespace swge {

Partition::Partition(std::vector<std::uint32_t> assignment) : assignment_(std::move(assignment)) {
    if (assignment_.empty()) {
        return;
    }
    const std::uint32_t max_id = *std::max_element(assignment_.begin(), assignment_.end());
    std::vector<bool> used(static_cast<std::size_t>(max_id) + 1, false);
    for (const auto c : assignment_) {
        used[c] = true;
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
        throw DomainError("partition cluster ids must be contiguous from 0");
    }
    k_ = used.size();
}

Partition Partition::canonical(std::span<const std::uint32_t> assignment) {
    std::vector<std::uint32_t> relabel;
    std::vector<std::uint32_t> out(assignment.size());
    std::vector<std::uint32_t> seen_as;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const auto c = assignment[i];
        if (c >= seen_as.size()) {
            seen_as.resize(static_cast<std::size_t>(c) + 1, UINT32_MAX);
        }
        if (seen_as[c] == UINT32_MAX) {
            seen_as[c] = static_cast<std::uint32_t>(relabel.size());
            relabel.push_back(c);
        }
        out[i] = seen_as[c];
    }
    return Partition(std::move(out));
}

std::vector<std::vector<Vertex>> Partition::clusters() const {
    std::vector<std::vector<Vertex>> out(k_);
    for (Vertex u = 0; u < assignment_.size(); ++u) {
        out[assignment_[u]].push_back(u);
    }
    return out;
}

std::uint64_t Partition::checksum() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto c : assignment_) {
        for (int b = 0; b < 4; ++b) {
            h ^= (c >> (8 * b)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

std::size_t frustration_of_partition(const SignedGraph& g, const Partition& p) {
    if (p.size() != g.order()) {
        throw DomainError("partition covers " + std::to_string(p.size()) + " vertices, graph has " +
                          std::to_string(g.order()));
    }
    std::size_t count = 0;
    for (const auto& e : g.edges()) {
        const bool same = p.cluster(e.u) == p.cluster(e.v);
        if ((e.sign == Sign::positive) != same) {
            ++count;
        }
    }
    return count;
}

namespace {

double ratio(std::size_t count, std::size_t m) {
    return m == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(m);
}

// Depth-first enumeration of restricted growth strings over one component.
// Clusters are tried in increasing order, so the first optimum found is the
// lexicographically smallest; a branch whose partial cost already reaches the
// incumbent cannot yield a strictly better or lexicographically earlier one.
class ComponentEnumerator {
public:
    ComponentEnumerator(const SignedGraph& g, std::span<const Vertex> vertices, std::uint32_t max_clusters)
        : max_clusters_(max_clusters), earlier_(vertices.size()) {
        std::vector<std::uint32_t> local(g.order(), UINT32_MAX);
        for (std::uint32_t i = 0; i < vertices.size(); ++i) {
            local[vertices[i]] = i;
        }
        for (std::uint32_t i = 0; i < vertices.size(); ++i) {
            for (const auto& nb : g.adjacent(vertices[i])) {
                const auto j = local[nb.vertex];
                if (j < i) {
                    earlier_[i].push_back({j, nb.sign});
                }
            }
        }
        current_.assign(vertices.size(), 0);
    }

    void run() {
        if (earlier_.empty()) {
            return;
        }
        current_[0] = 0;
        visit(1, 0, 1);
    }

    [[nodiscard]] std::size_t best_cost() const { return best_cost_; }
    [[nodiscard]] const std::vector<std::uint32_t>& best() const { return best_; }

private:
    struct Back {
        std::uint32_t vertex;
        Sign sign;
    };

    void visit(std::size_t i, std::size_t cost, std::uint32_t used) {
        if (found_ && cost >= best_cost_) {
            return;
        }
        if (i == current_.size()) {
            best_cost_ = cost;
            best_ = current_;
            found_ = true;
            return;
        }
        const std::uint32_t limit = std::min(used + 1, max_clusters_);
        for (std::uint32_t c = 0; c < limit; ++c) {
            std::size_t added = 0;
            for (const auto& b : earlier_[i]) {
                const bool same = current_[b.vertex] == c;
                if ((b.sign == Sign::positive) != same) {
                    ++added;
                }
            }
            current_[i] = c;
            visit(i + 1, cost + added, std::max(used, c + 1));
        }
    }

    std::uint32_t max_clusters_;
    std::vector<std::vector<Back>> earlier_;
    std::vector<std::uint32_t> current_;
    std::vector<std::uint32_t> best_;
    std::size_t best_cost_ = 0;
    bool found_ = false;
};

struct SearchState {
    std::vector<std::uint32_t> assignment;
    std::size_t cost = 0;
};

bool better(const SearchState& a, const SearchState& b) {
    if (a.cost != b.cost) {
        return a.cost < b.cost;
    }
    return a.assignment < b.assignment;
}

SearchState hill_climb(const SignedGraph& g, BalanceMode mode, Rng& rng) {
    const std::size_t n = g.order();
    std::size_t slots;
    std::vector<std::uint32_t> assign(n);
    if (mode == BalanceMode::bisection) {
        slots = 2;
        for (auto& c : assign) {
            c = static_cast<std::uint32_t>(uniform_index(rng, 2));
        }
    } else {
        const std::size_t k0 = 1 + uniform_index(rng, std::min<std::size_t>(n, 8));
        for (auto& c : assign) {
            c = static_cast<std::uint32_t>(uniform_index(rng, k0));
        }
        // Room for every vertex to become a singleton.
        slots = n + 1;
    }
    std::vector<std::size_t> cluster_size(slots, 0);
    for (const auto c : assign) {
        ++cluster_size[c];
    }
    std::vector<long> pos_to(slots, 0);
    std::vector<long> neg_to(slots, 0);
    std::vector<long> between; // slots x slots, free_k only: (neg - pos) across the pair

    while (true) {
        long best_delta = 0;
        int best_kind = -1; // 0: vertex move, 1: merge
        std::size_t best_a = 0;
        std::size_t best_b = 0;

        for (Vertex v = 0; v < n; ++v) {
            const auto cur = assign[v];
            for (const auto& nb : g.adjacent(v)) {
                auto& slot = nb.sign == Sign::positive ? pos_to : neg_to;
                ++slot[assign[nb.vertex]];
            }
            auto consider = [&](std::size_t dest) {
                const long delta = (pos_to[cur] - pos_to[dest]) + (neg_to[dest] - neg_to[cur]);
                if (delta < best_delta) {
                    best_delta = delta;
                    best_kind = 0;
                    best_a = v;
                    best_b = dest;
                }
            };
            std::size_t first_empty = slots;
            for (std::size_t c = 0; c < slots; ++c) {
                if (c == cur) {
                    continue;
                }
                if (mode == BalanceMode::bisection || cluster_size[c] > 0) {
                    consider(c);
                } else if (first_empty == slots) {
                    first_empty = c;
                }
            }
            if (mode == BalanceMode::free_k && cluster_size[cur] > 1 && first_empty < slots) {
                consider(first_empty);
            }
            for (const auto& nb : g.adjacent(v)) {
                pos_to[assign[nb.vertex]] = 0;
                neg_to[assign[nb.vertex]] = 0;
            }
        }

        if (mode == BalanceMode::free_k) {
            between.assign(slots * slots, 0);
            for (const auto& e : g.edges()) {
                const auto a = assign[e.u];
                const auto b = assign[e.v];
                if (a != b) {
                    const long w = e.sign == Sign::negative ? 1 : -1;
                    between[a * slots + b] += w;
                    between[b * slots + a] += w;
                }
            }
            for (std::size_t a = 0; a < slots; ++a) {
                if (cluster_size[a] == 0) {
                    continue;
                }
                for (std::size_t b = a + 1; b < slots; ++b) {
                    if (cluster_size[b] == 0) {
                        continue;
                    }
                    const long delta = between[a * slots + b];
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_kind = 1;
                        best_a = a;
                        best_b = b;
                    }
                }
            }
        }

        if (best_kind < 0) {
            break;
        }
        if (best_kind == 0) {
            --cluster_size[assign[best_a]];
            assign[best_a] = static_cast<std::uint32_t>(best_b);
            ++cluster_size[best_b];
        } else {
            for (auto& c : assign) {
                if (c == best_b) {
                    c = static_cast<std::uint32_t>(best_a);
                }
            }
            cluster_size[best_a] += cluster_size[best_b];
            cluster_size[best_b] = 0;
        }
    }

    SearchState out;
    out.assignment = Partition::canonical(assign).assignment();
    out.cost = frustration_of_partition(g, Partition(out.assignment));
    return out;
}

} // namespace

FrustrationResult exact_min_frustration(const SignedGraph& g, BalanceMode mode) {
    const std::size_t n = g.order();
    const std::size_t cap = mode == BalanceMode::bisection ? max_exact_bisection_order : max_exact_free_k_order;
    if (n > cap) {
        throw CapacityError("exact frustration is capped at " + std::to_string(cap) + " vertices (graph has " +
                            std::to_string(n) + "); use local_search_min_frustration");
    }
    std::vector<std::uint32_t> assignment(n, 0);
    std::size_t total = 0;
    std::uint32_t offset = 0;
    const std::uint32_t max_clusters = mode == BalanceMode::bisection ? 2 : static_cast<std::uint32_t>(n);
    for (const auto& comp : connected_components(g)) {
        ComponentEnumerator search(g, comp, max_clusters);
        search.run();
        total += search.best_cost();
        std::uint32_t used = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const auto c = search.best()[i];
            used = std::max(used, c + 1);
            assignment[comp[i]] = mode == BalanceMode::bisection ? c : c + offset;
        }
        offset += used;
    }
    FrustrationResult out;
    out.frustrated_edge_count = total;
    out.frustration_ratio = ratio(total, g.size());
    out.partition = Partition(std::move(assignment));
    out.exact = true;
    return out;
}

FrustrationResult local_search_min_frustration(const SignedGraph& g, BalanceMode mode, std::size_t restarts,
                                               std::uint64_t seed, int threads) {
    if (restarts == 0) {
        throw DomainError("local search needs at least one restart");
    }
    FrustrationResult out;
    if (g.order() == 0) {
        return out;
    }
    std::vector<SearchState> runs(restarts);
    parallel_for(restarts, threads, [&](std::size_t r) {
        Rng rng = make_rng(seed, "local-search", r);
        runs[r] = hill_climb(g, mode, rng);
    });
    const SearchState* best = &runs[0];
    for (const auto& run : runs) {
        if (better(run, *best)) {
            best = &run;
        }
    }
    out.frustrated_edge_count = best->cost;
    out.frustration_ratio = ratio(best->cost, g.size());
    out.partition = Partition(best->assignment);
    out.exact = false;
    return out;
}

FrustrationResult min_frustration(const SignedGraph& g, BalanceMode mode, std::uint64_t seed, std::size_t restarts) {
    const std::size_t cap = mode == BalanceMode::bisection ? max_exact_bisection_order : max_exact_free_k_order;
    if (g.order() <= cap) {
        return exact_min_frustration(g, mode);
    }
    return local_search_min_frustration(g, mode, restarts, seed);
}

bool is_balanced(const SignedGraph& g, BalanceKind kind) {
    const std::size_t n = g.order();
    if (kind == BalanceKind::strict) {
        std::vector<int> color(n, -1);
        for (Vertex s = 0; s < n; ++s) {
            if (color[s] != -1) {
                continue;
            }
            color[s] = 0;
            std::vector<Vertex> stack{s};
            while (!stack.empty()) {
                const Vertex x = stack.back();
                stack.pop_back();
                for (const auto& nb : g.adjacent(x)) {
                    const int want = nb.sign == Sign::positive ? color[x] : 1 - color[x];
                    if (color[nb.vertex] == -1) {
                        color[nb.vertex] = want;
                        stack.push_back(nb.vertex);
                    } else if (color[nb.vertex] != want) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : g.edges()) {
        if (e.sign == Sign::positive) {
            parent[find(e.u)] = find(e.v);
        }
    }
    for (const auto& e : g.edges()) {
        if (e.sign == Sign::negative && find(e.u) == find(e.v)) {
            return false;
        }
    }
    return true;
}

} // namespace swge
