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

#ifndef SWGE_IO_HPP
#define SWGE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swge/collection.hpp"
#include "swge/wsgcn.hpp"

namespace swge {

struct ParsedGraph {
    SignedGraph graph;
    std::vector<std::string> vertex_names; // empty when ids were used as given
};

/// One edge per line, "u v s" with s in {+1, -1}. Lines starting with '#'
/// are comments, except "# order N" which fixes the vertex count and makes
/// integer ids literal. Without it, vertices are renumbered densely (by
/// numeric value when all ids are integers, else by first appearance).
ParsedGraph read_signed_graph(std::istream& in, const std::string& source);

/// Canonical form: "# order N" then edges sorted by (u, v).
void write_signed_graph(std::ostream& out, const SignedGraph& g);

/// Reads a "graph_id,path,label" manifest; paths are relative to the manifest.
/// Class ids follow the sorted label names (numerically when all are numbers).
GraphCollection load_collection(const std::filesystem::path& manifest, int threads = 1);

/// Writes <dir>/manifest.csv and <dir>/graphs/<id>.edges. Returns the manifest path.
std::filesystem::path save_collection(const GraphCollection& c, const std::filesystem::path& dir);

std::string class_name(const GraphCollection& c, std::uint32_t label);

using Provenance = std::vector<std::pair<std::string, std::string>>;

struct EmbeddingFile {
    Provenance provenance;
    std::vector<std::string> ids;
    EmbeddingMatrix matrix;
};

/// "# key=value" provenance lines, then "rows dim seed", then one
/// "id v1 ... vd" line per graph with shortest round-trip numbers.
void write_embeddings(std::ostream& out, const EmbeddingFile& file);
EmbeddingFile read_embeddings(std::istream& in, const std::string& source);

void write_wsgcn_meta(std::ostream& out, const std::vector<std::string>& ids, const std::vector<WsgcnGraphMeta>& meta);

/// Parsed "graph_id,scheme,masters,clusters,..." sidecar, keyed by graph id.
std::map<std::string, WsgcnGraphMeta> read_wsgcn_meta(std::istream& in, const std::string& source);

} // namespace swge

#endif // SWGE_IO_HPP
