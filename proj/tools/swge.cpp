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

// swge: generate, describe, embed and classify collections of signed graphs.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "swge/error.hpp"
#include "swge/eval.hpp"
#include "swge/io.hpp"
#include "swge/pipeline.hpp"
#include "swge/planted.hpp"
#include "swge/report.hpp"
#include "swge/stats.hpp"
#include "swge/wl.hpp"

namespace fs = std::filesystem;
using namespace swge;

namespace {

enum Exit { ok = 0, usage = 2, data = 3, capacity = 4 };

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw LoadError(path.string() + ": cannot open for writing");
    }
    return out;
}

std::ifstream open_in(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LoadError(path.string() + ": cannot open");
    }
    return in;
}

struct GenerateArgs {
    fs::path out;
    GeneratorConfig config;
    std::string class_rule = "cluster_count";
    int threads = 0;
};

int run_generate(const GenerateArgs& a) {
    GeneratorConfig config = a.config;
    if (a.class_rule == "cluster_count") {
        config.class_rule = ClassRule::cluster_count;
    } else if (a.class_rule == "noise_band") {
        config.class_rule = ClassRule::noise_band;
    } else {
        throw ConfigError("class rule must be cluster_count or noise_band");
    }
    config.validate();
    const auto planted = generate_planted(config, a.threads);
    const auto manifest = save_collection(planted.collection, a.out);
    auto truth = open_out(a.out / "planted.csv");
    truth << "graph_id,clusters,density,noise,flipped,partition\n";
    for (std::size_t i = 0; i < planted.planted.size(); ++i) {
        const auto& p = planted.planted[i];
        truth << planted.collection.ids[i] << ',' << p.cluster_count() << ',' << planted.density[i] << ','
              << planted.noise[i] << ',' << planted.flipped[i] << ',';
        for (std::size_t u = 0; u < p.size(); ++u) {
            truth << (u ? " " : "") << p.cluster(static_cast<Vertex>(u));
        }
        truth << '\n';
    }
    std::cout << "wrote " << planted.collection.size() << " graphs to " << manifest.string() << '\n';
    return ok;
}

struct StatsArgs {
    fs::path collection;
    fs::path out;
    fs::path per_graph;
    std::uint64_t seed = 1;
    int threads = 0;
};

int run_stats(const StatsArgs& a) {
    const auto c = load_collection(a.collection, a.threads);
    const auto s = collection_stats(c, a.seed, a.threads);
    write_stats_table(std::cout, s);
    if (!a.out.empty()) {
        auto out = open_out(a.out);
        write_stats_csv(out, s);
    }
    if (!a.per_graph.empty()) {
        auto out = open_out(a.per_graph);
        write_per_graph_csv(out, c, s);
    }
    return ok;
}

struct EmbedArgs {
    fs::path collection;
    fs::path out;
    std::string method = "sg2vsb";
    std::size_t depth = 3;
    std::size_t dim = 0;
    std::size_t epochs = 0;
    std::uint64_t seed = 1;
    int threads = 0;
    bool hogwild = false;
};

int run_embed(const EmbedArgs& a) {
    EmbedOptions o;
    try {
        o.method = parse_method(a.method);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (has_depth(o.method) && (a.depth < 1 || a.depth > 5)) {
        throw ConfigError("--depth must lie in 1..5");
    }
    o.depth = a.depth;
    o.dim = a.dim;
    o.epochs = a.epochs;
    o.seed = a.seed;
    o.threads = a.threads;
    o.hogwild = a.hogwild;
    const auto c = load_collection(a.collection, a.threads);
    const auto result = embed_collection(c, o);
    {
        auto out = open_out(a.out);
        write_embeddings(out, result.file);
    }
    if (result.wsgcn_meta) {
        auto meta = open_out(a.out.string() + ".meta.csv");
        write_wsgcn_meta(meta, c.ids, *result.wsgcn_meta);
    }
    {
        // Kept apart from the embedding file, which must be reproducible byte for byte.
        auto timing = open_out(a.out.string() + ".timing");
        timing << "seconds_per_graph=" << result.seconds / static_cast<double>(c.size()) << '\n';
    }
    std::cout << "embedded " << c.size() << " graphs with " << method_name(o.method) << " in " << result.seconds
              << " s\n";
    return ok;
}

double read_timing(const fs::path& embeddings) {
    std::ifstream in(embeddings.string() + ".timing");
    std::string line;
    if (in && std::getline(in, line) && line.rfind("seconds_per_graph=", 0) == 0) {
        return std::stod(line.substr(18));
    }
    return 0.0;
}

struct ClassifyArgs {
    fs::path collection;
    std::vector<fs::path> embeddings;
    fs::path out;
    std::size_t folds = 10;
    std::uint64_t seed = 1;
    int threads = 0;
};

int run_classify(const ClassifyArgs& a) {
    const auto c = load_collection(a.collection, a.threads);
    std::vector<ScoreRow> rows;
    for (const auto& path : a.embeddings) {
        auto in = open_in(path);
        auto file = read_embeddings(in, path.string());
        std::map<std::string, std::size_t> position;
        for (std::size_t i = 0; i < file.ids.size(); ++i) {
            position[file.ids[i]] = i;
        }
        std::vector<std::string> missing;
        std::set<std::string> expected(c.ids.begin(), c.ids.end());
        for (const auto& id : c.ids) {
            if (!position.count(id)) {
                missing.push_back(id);
            }
        }
        std::vector<std::string> extra;
        for (const auto& id : file.ids) {
            if (!expected.count(id)) {
                extra.push_back(id);
            }
        }
        if (!missing.empty() || !extra.empty()) {
            std::ostringstream msg;
            msg << path.string() << ": graph ids do not match the collection;";
            for (const auto& id : missing) {
                msg << " missing " << id;
            }
            for (const auto& id : extra) {
                msg << " unknown " << id;
            }
            throw LoadError(msg.str());
        }
        LabeledEmbeddings data;
        data.matrix = EmbeddingMatrix(c.size(), file.matrix.dim, file.matrix.seed);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto src = file.matrix.row(position[c.ids[i]]);
            std::copy(src.begin(), src.end(), data.matrix.row(i).begin());
        }
        data.labels = c.labels;
        data.classes = std::max<std::size_t>(c.class_names.size(),
                                             *std::max_element(c.labels.begin(), c.labels.end()) + 1);
        CvOptions cv;
        cv.folds = a.folds;
        cv.seed = a.seed;
        cv.threads = a.threads;
        ScoreRow row;
        row.dataset = c.name;
        row.method = path.stem().string();
        for (const auto& [key, value] : file.provenance) {
            if (key == "method") {
                row.method = value;
            } else if (key == "depth") {
                row.depth = std::stoul(value);
            }
        }
        const auto folds = stratified_kfold(data.labels, cv.folds, cv.seed);
        if (!folds.warning.empty()) {
            std::cerr << "warning: " << folds.warning << '\n';
        }
        row.report = cross_validate(data, cv);
        row.seconds_per_graph = read_timing(path);
        rows.push_back(std::move(row));
    }
    write_score_table(std::cout, rows);
    if (!a.out.empty()) {
        auto out = open_out(a.out);
        write_score_csv(out, rows);
    }
    return ok;
}

struct ReportArgs {
    std::vector<fs::path> inputs;
    fs::path out;
    fs::path csv;
};

int run_report(const ReportArgs& a) {
    std::vector<ScoreRow> rows;
    for (const auto& path : a.inputs) {
        auto in = open_in(path);
        auto part = read_score_csv(in, path.string());
        rows.insert(rows.end(), part.begin(), part.end());
    }
    const auto report = build_report(rows);
    write_report_markdown(std::cout, report);
    if (!a.out.empty()) {
        auto out = open_out(a.out);
        write_report_markdown(out, report);
    }
    if (!a.csv.empty()) {
        auto out = open_out(a.csv);
        write_report_csv(out, report);
    }
    return ok;
}

struct LabelsArgs {
    fs::path graph;
    fs::path collection;
    std::string graph_id;
    std::string variant = "sg2vsb";
    std::size_t depth = 1;
};

int run_labels(const LabelsArgs& a) {
    WlVariant variant;
    if (a.variant == "g2v") {
        variant = WlVariant::unsigned_wl;
    } else if (a.variant == "sg2vn") {
        variant = WlVariant::signed_neutral;
    } else if (a.variant == "sg2vsb") {
        variant = WlVariant::signed_balanced;
    } else {
        throw ConfigError("--variant must be g2v, sg2vn or sg2vsb");
    }
    std::vector<std::pair<std::string, SignedGraph>> graphs;
    if (!a.graph.empty()) {
        auto in = open_in(a.graph);
        try {
            graphs.emplace_back(a.graph.stem().string(), read_signed_graph(in, a.graph.string()).graph);
        } catch (const DomainError& e) {
            throw LoadError(a.graph.string() + ": " + e.what());
        }
    } else if (!a.collection.empty()) {
        const auto c = load_collection(a.collection);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (a.graph_id.empty() || c.ids[i] == a.graph_id) {
                graphs.emplace_back(c.ids[i], c.graphs[i]);
            }
        }
        if (graphs.empty()) {
            throw LoadError("graph " + a.graph_id + " is not in the collection");
        }
    } else {
        throw ConfigError("give --graph or --collection");
    }
    LabelDictionary dict;
    for (const auto& [id, g] : graphs) {
        write_label_dump(std::cout, id, relabel(g, variant, a.depth, dict));
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Whole-graph embeddings for signed networks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(build_version()));
    int result = ok;

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a planted-partition collection");
    g->set_config("--config", "", "key=value file; command-line flags take precedence");
    g->add_option("--out", gen.out, "Output directory")->required();
    g->add_option("--graphs", gen.config.n_graphs, "Number of graphs")->capture_default_str();
    g->add_option("--n-min", gen.config.n_min)->capture_default_str();
    g->add_option("--n-max", gen.config.n_max)->capture_default_str();
    g->add_option("--k-min", gen.config.k_min)->capture_default_str();
    g->add_option("--k-max", gen.config.k_max)->capture_default_str();
    g->add_option("--rho-min", gen.config.rho_min)->capture_default_str();
    g->add_option("--rho-max", gen.config.rho_max)->capture_default_str();
    g->add_option("--q", gen.config.q_values, "Sign-noise levels, one drawn per graph")->capture_default_str();
    g->add_option("--class-rule", gen.class_rule, "cluster_count or noise_band")->capture_default_str();
    g->add_option("--name", gen.config.name)->capture_default_str();
    g->add_option("--seed", gen.config.seed)->capture_default_str();
    g->add_option("--threads", gen.threads, "0: SWGE_THREADS or all cores");
    g->callback([&] { result = run_generate(gen); });

    StatsArgs st;
    auto* s = app.add_subcommand("stats", "Describe a collection");
    s->set_config("--config", "", "key=value file; command-line flags take precedence");
    s->add_option("--collection", st.collection, "Manifest CSV")->required();
    s->add_option("--out", st.out, "Summary CSV");
    s->add_option("--per-graph", st.per_graph, "Per-graph CSV");
    s->add_option("--seed", st.seed)->capture_default_str();
    s->add_option("--threads", st.threads);
    s->callback([&] { result = run_stats(st); });

    EmbedArgs em;
    auto* e = app.add_subcommand("embed", "Embed every graph of a collection");
    e->set_config("--config", "", "key=value file; command-line flags take precedence");
    e->add_option("--collection", em.collection, "Manifest CSV")->required();
    e->add_option("--out", em.out, "Embedding file")->required();
    e->add_option("--method", em.method,
                  "sine-sum, sine-avg, g2v, sg2vn, sg2vsb, sgcn, wsgcn+, wsgcn-, wsgcn± (or wsgcn+-), wsgcn-sb, "
                  "wsgcn-gb")
        ->capture_default_str();
    e->add_option("--depth", em.depth, "WL iterations or convolution layers")->capture_default_str();
    e->add_option("--dim", em.dim, "0: method default");
    e->add_option("--epochs", em.epochs, "0: method default");
    e->add_option("--seed", em.seed)->capture_default_str();
    e->add_option("--threads", em.threads);
    e->add_flag("--hogwild", em.hogwild, "Lock-free document training (not reproducible)");
    e->callback([&] { result = run_embed(em); });

    ClassifyArgs cl;
    auto* c = app.add_subcommand("classify", "Cross-validate a linear classifier on embeddings");
    c->set_config("--config", "", "key=value file; command-line flags take precedence");
    c->add_option("--collection", cl.collection, "Manifest CSV")->required();
    c->add_option("--embeddings", cl.embeddings, "Embedding files")->required();
    c->add_option("--out", cl.out, "Score CSV");
    c->add_option("--folds", cl.folds)->capture_default_str();
    c->add_option("--seed", cl.seed)->capture_default_str();
    c->add_option("--threads", cl.threads);
    c->callback([&] { result = run_classify(cl); });

    ReportArgs rp;
    auto* r = app.add_subcommand("report", "Merge score files into a comparison table");
    r->add_option("inputs", rp.inputs, "Score CSVs")->required();
    r->add_option("--out", rp.out, "Markdown table");
    r->add_option("--csv", rp.csv, "CSV table");
    r->callback([&] { result = run_report(rp); });

    LabelsArgs lb;
    auto* l = app.add_subcommand("labels", "Dump WL relabeling traces");
    l->add_option("--graph", lb.graph, "Edge file");
    l->add_option("--collection", lb.collection, "Manifest CSV");
    l->add_option("--id", lb.graph_id, "Graph id within the collection");
    l->add_option("--variant", lb.variant, "g2v, sg2vn or sg2vsb")->capture_default_str();
    l->add_option("--depth", lb.depth)->capture_default_str();
    l->callback([&] { result = run_labels(lb); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& h) {
        return app.exit(h);
    } catch (const CLI::CallForAllHelp& h) {
        return app.exit(h);
    } catch (const CLI::CallForVersion& h) {
        return app.exit(h);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return usage;
    } catch (const ConfigError& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return usage;
    } catch (const DomainError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return usage;
    } catch (const LoadError& err) {
        std::cerr << "data error: " << err.what() << '\n';
        return data;
    } catch (const CapacityError& err) {
        std::cerr << "capacity error: " << err.what() << '\n';
        return capacity;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return result;
}
