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

#include "swge/pipeline.hpp"

#include <chrono>

#include "swge/error.hpp"
#include "swge/sg2v.hpp"
#include "swge/sine.hpp"

#ifndef SWGE_GIT_DESCRIBE
#define SWGE_GIT_DESCRIBE "unknown"
#endif

namespace swge {

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods{Method::sine_sum,   Method::sine_avg,    Method::g2v,
                                             Method::sg2vn,      Method::sg2vsb,      Method::sgcn,
                                             Method::wsgcn_plus, Method::wsgcn_minus, Method::wsgcn_pm,
                                             Method::wsgcn_sb,   Method::wsgcn_gb};
    return methods;
}

std::string_view method_name(Method m) {
    switch (m) {
    case Method::sine_sum:
        return "sine-sum";
    case Method::sine_avg:
        return "sine-avg";
    case Method::g2v:
        return "g2v";
    case Method::sg2vn:
        return "sg2vn";
    case Method::sg2vsb:
        return "sg2vsb";
    case Method::sgcn:
        return "sgcn";
    case Method::wsgcn_plus:
        return "wsgcn+";
    case Method::wsgcn_minus:
        return "wsgcn-";
    case Method::wsgcn_pm:
        return "wsgcn±";
    case Method::wsgcn_sb:
        return "wsgcn-sb";
    case Method::wsgcn_gb:
        return "wsgcn-gb";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    if (name == "wsgcn+-") {
        return Method::wsgcn_pm;
    }
    for (const Method m : all_methods()) {
        if (method_name(m) == name) {
            return m;
        }
    }
    throw DomainError("unknown method '" + std::string(name) + "'");
}

bool has_depth(Method m) {
    return m != Method::sine_sum && m != Method::sine_avg;
}

std::string_view build_version() {
    return SWGE_GIT_DESCRIBE;
}

namespace {

MasterScheme scheme_of(Method m) {
    switch (m) {
    case Method::wsgcn_plus:
        return MasterScheme::plus;
    case Method::wsgcn_minus:
        return MasterScheme::minus;
    case Method::wsgcn_pm:
        return MasterScheme::plusminus;
    case Method::wsgcn_sb:
        return MasterScheme::sb;
    case Method::wsgcn_gb:
        return MasterScheme::gb;
    default:
        return MasterScheme::none;
    }
}

WlVariant variant_of(Method m) {
    switch (m) {
    case Method::sg2vn:
        return WlVariant::signed_neutral;
    case Method::sg2vsb:
        return WlVariant::signed_balanced;
    default:
        return WlVariant::unsigned_wl;
    }
}

} // namespace

EmbedResult embed_collection(const GraphCollection& c, const EmbedOptions& options) {
    if (c.size() == 0) {
        throw DomainError("cannot embed an empty collection");
    }
    if (has_depth(options.method) && options.depth == 0) {
        throw DomainError("depth must be at least 1");
    }
    EmbedResult result;
    result.file.ids = c.ids;
    std::size_t dim = 0;
    std::size_t epochs = 0;
    const auto start = std::chrono::steady_clock::now();
    switch (options.method) {
    case Method::sine_sum:
    case Method::sine_avg: {
        SineOptions o;
        o.dim = options.dim > 0 ? options.dim : o.dim;
        o.epochs = options.epochs > 0 ? options.epochs : o.epochs;
        o.triads_per_vertex = 5;
        o.seed = options.seed;
        dim = o.dim;
        epochs = o.epochs;
        auto both = embed_sine(c, o, options.threads);
        result.file.matrix = options.method == Method::sine_sum ? std::move(both.sum) : std::move(both.average);
        result.file.provenance.emplace_back("graphs_without_triads", std::to_string(both.graphs_without_triads));
        break;
    }
    case Method::g2v:
    case Method::sg2vn:
    case Method::sg2vsb: {
        std::vector<std::uint64_t> keys;
        for (const auto& id : c.ids) {
            keys.push_back(graph_key(id));
        }
        CorpusOptions co;
        co.threads = options.threads;
        const Corpus corpus = build_corpus(c.graphs, variant_of(options.method), options.depth, co, keys);
        PvDbowOptions o;
        o.dim = options.dim > 0 ? options.dim : o.dim;
        o.epochs = options.epochs > 0 ? options.epochs : o.epochs;
        o.seed = options.seed;
        o.hogwild = options.hogwild;
        o.threads = options.threads;
        dim = o.dim;
        epochs = o.epochs;
        result.file.matrix = train_pvdbow(corpus, o);
        result.file.provenance.emplace_back("vocabulary", std::to_string(corpus.vocabulary_size()));
        break;
    }
    default: {
        WsgcnOptions o;
        o.scheme = scheme_of(options.method);
        o.dim = options.dim > 0 ? options.dim : o.dim;
        o.epochs = options.epochs > 0 ? options.epochs : o.epochs;
        o.layers = options.depth;
        o.seed = options.seed;
        dim = o.dim;
        epochs = o.epochs;
        auto emb = embed_wsgcn(c, o, options.threads);
        result.file.matrix = std::move(emb.matrix);
        result.wsgcn_meta = std::move(emb.meta);
        break;
    }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Provenance head{{"method", std::string(method_name(options.method))},
                    {"depth", has_depth(options.method) ? std::to_string(options.depth) : "0"},
                    {"dim", std::to_string(dim)},
                    {"epochs", std::to_string(epochs)},
                    {"seed", std::to_string(options.seed)},
                    {"build", std::string(build_version())}};
    head.insert(head.end(), result.file.provenance.begin(), result.file.provenance.end());
    result.file.provenance = std::move(head);
    return result;
}

} // namespace swge
