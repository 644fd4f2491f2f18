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

// Serial reference vs OpenMP timings for the data-parallel kernels. Every
// parallel run is compared against the serial one; only hogwild training is
// allowed to differ.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "swge/balance.hpp"
#include "swge/eval.hpp"
#include "swge/parallel.hpp"
#include "swge/planted.hpp"
#include "swge/sg2v.hpp"
#include "swge/sine.hpp"
#include "swge/wl.hpp"
#include "swge/wsgcn.hpp"

using namespace swge;

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

struct Row {
    std::string kernel;
    double serial = 0.0;
    double parallel = 0.0;
    std::string check;
};

void print(const std::vector<Row>& rows, int threads) {
    std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "serial s" << std::setw(12)
              << ("omp x" + std::to_string(threads) + " s") << std::setw(10) << "speedup"
              << "  result\n";
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(28) << r.kernel << std::right << std::fixed << std::setprecision(4)
                  << std::setw(12) << r.serial << std::setw(12) << r.parallel << std::setprecision(2)
                  << std::setw(10) << r.serial / r.parallel << "  " << r.check << '\n';
    }
}

const char* verdict(bool same) {
    return same ? "identical" : "DIFFERS";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs OpenMP kernel timings"};
    std::size_t graphs = 200;
    int threads = 0;
    int repeats = 3;
    app.add_option("--graphs", graphs, "Planted graphs to generate")->capture_default_str();
    app.add_option("--threads", threads, "Parallel thread count (0: SWGE_THREADS or all cores)");
    app.add_option("--repeats", repeats, "Best of this many runs")->capture_default_str();
    CLI11_PARSE(app, argc, argv);
    threads = resolve_threads(threads);

    GeneratorConfig config;
    config.n_graphs = graphs;
    const auto c = generate_planted(config, 1).collection;
    std::vector<Row> rows;

    {
        std::vector<LabelTrace> a;
        std::vector<LabelTrace> b;
        Row r{"wl relabel (sg2vsb, T=3)", 0.0, 0.0, ""};
        r.serial = best_of(repeats, [&] {
            LabelDictionary d;
            a = relabel_collection(c.graphs, WlVariant::signed_balanced, 3, d, 1);
        });
        r.parallel = best_of(repeats, [&] {
            LabelDictionary d;
            b = relabel_collection(c.graphs, WlVariant::signed_balanced, 3, d, threads);
        });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i) {
            for (std::size_t t = 0; same && t < a[i].steps.size(); ++t) {
                same = a[i].steps[t].labels == b[i].steps[t].labels;
            }
        }
        r.check = verdict(same);
        rows.push_back(r);
    }

    const auto corpus = build_corpus(c.graphs, WlVariant::signed_balanced, 3);
    {
        PvDbowOptions o;
        o.dim = 64;
        o.epochs = 10;
        EmbeddingMatrix a;
        EmbeddingMatrix b;
        Row r{"pv-dbow single writer", 0.0, 0.0, ""};
        r.serial = best_of(repeats, [&] { a = train_pvdbow(corpus, o); });
        o.threads = threads;
        r.parallel = best_of(repeats, [&] { b = train_pvdbow(corpus, o); });
        r.check = verdict(a.values == b.values);
        rows.push_back(r);

        Row h{"pv-dbow hogwild", 0.0, 0.0, ""};
        h.serial = r.serial;
        o.hogwild = true;
        h.parallel = best_of(repeats, [&] { b = train_pvdbow(corpus, o); });
        h.check = "not reproducible by design";
        rows.push_back(h);
    }

    {
        SineOptions o;
        o.dim = 16;
        o.epochs = 10;
        o.triads_per_vertex = 5;
        SineEmbeddings a;
        SineEmbeddings b;
        Row r{"sine per graph", 0.0, 0.0, ""};
        r.serial = best_of(repeats, [&] { a = embed_sine(c, o, 1); });
        r.parallel = best_of(repeats, [&] { b = embed_sine(c, o, threads); });
        r.check = verdict(a.sum.values == b.sum.values);
        rows.push_back(r);
    }

    {
        WsgcnOptions o;
        o.epochs = 10;
        WsgcnEmbeddings a;
        WsgcnEmbeddings b;
        Row r{"wsgcn-gb per graph", 0.0, 0.0, ""};
        r.serial = best_of(repeats, [&] { a = embed_wsgcn(c, o, 1); });
        r.parallel = best_of(repeats, [&] { b = embed_wsgcn(c, o, threads); });
        r.check = verdict(a.matrix.values == b.matrix.values);
        rows.push_back(r);
    }

    {
        // Largest graph, beyond the exact cap for free k.
        std::size_t largest = 0;
        for (std::size_t i = 1; i < c.size(); ++i) {
            largest = c.graphs[i].order() > c.graphs[largest].order() ? i : largest;
        }
        FrustrationResult a;
        FrustrationResult b;
        Row r{"local search, 64 restarts", 0.0, 0.0, ""};
        r.serial = best_of(repeats, [&] {
            a = local_search_min_frustration(c.graphs[largest], BalanceMode::free_k, 64, 1, 1);
        });
        r.parallel = best_of(repeats, [&] {
            b = local_search_min_frustration(c.graphs[largest], BalanceMode::free_k, 64, 1, threads);
        });
        r.check = verdict(a.partition == b.partition);
        rows.push_back(r);
    }

    {
        PvDbowOptions o;
        o.dim = 32;
        o.epochs = 5;
        LabeledEmbeddings data;
        data.matrix = train_pvdbow(corpus, o);
        data.labels = c.labels;
        data.classes = c.class_names.size();
        CvOptions cv;
        ScoreReport a;
        ScoreReport b;
        Row r{"10-fold cross-validation", 0.0, 0.0, ""};
        cv.threads = 1;
        r.serial = best_of(repeats, [&] { a = cross_validate(data, cv); });
        cv.threads = threads;
        r.parallel = best_of(repeats, [&] { b = cross_validate(data, cv); });
        r.check = verdict(a.per_fold_f == b.per_fold_f);
        rows.push_back(r);
    }

    std::cout << graphs << " planted graphs, " << threads << " thread(s)\n";
    print(rows, threads);
    return 0;
}
