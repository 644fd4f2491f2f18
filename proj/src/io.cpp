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

#include "swge/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "swge/error.hpp"
#include "swge/parallel.hpp"

namespace swge {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') {
        s.pop_back();
    }
    return s;
}

bool parse_uint(const std::string& s, std::uint64_t& value) {
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    return ec == std::errc() && ptr == end;
}

std::string where(const std::string& source, std::size_t line) {
    return source + ":" + std::to_string(line) + ": ";
}

struct RawEdge {
    std::string u;
    std::string v;
    Sign sign;
    std::size_t line;
};

} // namespace

ParsedGraph read_signed_graph(std::istream& in, const std::string& source) {
    std::vector<RawEdge> raw;
    std::optional<std::uint64_t> declared;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        if (line[first] == '#') {
            const auto tokens = split_ws(line.substr(first + 1));
            if (tokens.size() == 2 && tokens[0] == "order") {
                std::uint64_t n = 0;
                if (!parse_uint(tokens[1], n) || declared) {
                    throw LoadError(where(source, line_no) + "bad order directive");
                }
                declared = n;
            }
            continue;
        }
        const auto tokens = split_ws(line);
        if (tokens.size() != 3) {
            throw LoadError(where(source, line_no) + "expected \"u v s\"");
        }
        Sign sign;
        if (tokens[2] == "+1" || tokens[2] == "1") {
            sign = Sign::positive;
        } else if (tokens[2] == "-1") {
            sign = Sign::negative;
        } else {
            throw LoadError(where(source, line_no) + "unknown sign token '" + tokens[2] + "'");
        }
        if (tokens[0] == tokens[1]) {
            throw LoadError(where(source, line_no) + "self-loop on vertex " + tokens[0]);
        }
        const auto key = std::minmax(tokens[0], tokens[1]);
        if (!seen.insert({key.first, key.second}).second) {
            throw LoadError(where(source, line_no) + "duplicate edge " + tokens[0] + " " + tokens[1]);
        }
        raw.push_back({tokens[0], tokens[1], sign, line_no});
    }

    ParsedGraph out;
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    if (declared) {
        for (const auto& e : raw) {
            std::uint64_t u = 0;
            std::uint64_t v = 0;
            if (!parse_uint(e.u, u) || !parse_uint(e.v, v) || u >= *declared || v >= *declared) {
                throw LoadError(where(source, e.line) + "vertex id outside the declared order");
            }
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), e.sign});
        }
        out.graph = SignedGraph(static_cast<std::size_t>(*declared), std::move(edges));
        return out;
    }

    std::vector<std::string> names;
    bool numeric = true;
    std::set<std::string> unique;
    for (const auto& e : raw) {
        for (const auto* name : {&e.u, &e.v}) {
            std::uint64_t value = 0;
            numeric = numeric && parse_uint(*name, value);
            if (unique.insert(*name).second) {
                names.push_back(*name);
            }
        }
    }
    if (numeric) {
        std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
            return std::stoull(a) < std::stoull(b);
        });
    }
    std::unordered_map<std::string, Vertex> index;
    bool identity = numeric;
    for (std::size_t i = 0; i < names.size(); ++i) {
        index.emplace(names[i], static_cast<Vertex>(i));
        identity = identity && std::stoull(names[i]) == i;
    }
    for (const auto& e : raw) {
        edges.push_back({index.at(e.u), index.at(e.v), e.sign});
    }
    out.graph = SignedGraph(names.size(), std::move(edges));
    if (!identity) {
        out.vertex_names = std::move(names);
    }
    return out;
}

void write_signed_graph(std::ostream& out, const SignedGraph& g) {
    out << "# order " << g.order() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << (e.sign == Sign::positive ? "+1" : "-1") << '\n';
    }
}

GraphCollection load_collection(const std::filesystem::path& manifest, int threads) {
    std::ifstream in(manifest);
    if (!in) {
        throw LoadError(manifest.string() + ": cannot open manifest");
    }
    const std::string source = manifest.string();
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "graph_id,path,label") {
        throw LoadError(where(source, 1) + "expected header \"graph_id,path,label\"");
    }
    struct Row {
        std::string id;
        std::filesystem::path path;
        std::string label;
    };
    std::vector<Row> rows;
    std::set<std::string> ids;
    std::size_t line_no = 1;
    const auto base = manifest.parent_path();
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() != 3) {
            throw LoadError(where(source, line_no) + "expected 3 fields");
        }
        if (cells[0].empty()) {
            throw LoadError(where(source, line_no) + "empty graph id");
        }
        if (cells[2].empty()) {
            throw LoadError(where(source, line_no) + "graph " + cells[0] + " has no label");
        }
        if (!ids.insert(cells[0]).second) {
            throw LoadError(where(source, line_no) + "duplicate graph id " + cells[0]);
        }
        auto path = std::filesystem::path(cells[1]);
        if (path.is_relative()) {
            path = base / path;
        }
        if (!std::filesystem::exists(path)) {
            throw LoadError(where(source, line_no) + "missing graph file " + path.string());
        }
        rows.push_back({cells[0], path, cells[2]});
    }

    std::vector<std::string> names;
    for (const auto& r : rows) {
        names.push_back(r.label);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    const bool numeric = std::all_of(names.begin(), names.end(), [](const std::string& s) {
        char* end = nullptr;
        std::strtod(s.c_str(), &end);
        return !s.empty() && *end == '\0';
    });
    if (numeric) {
        std::stable_sort(names.begin(), names.end(),
                         [](const std::string& a, const std::string& b) { return std::stod(a) < std::stod(b); });
    }

    std::vector<ParsedGraph> parsed(rows.size());
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        std::ifstream file(rows[i].path);
        if (!file) {
            throw LoadError(rows[i].path.string() + ": cannot open");
        }
        try {
            parsed[i] = read_signed_graph(file, rows[i].path.string());
        } catch (const DomainError& e) {
            throw LoadError(rows[i].path.string() + ": " + e.what());
        }
    });

    GraphCollection c;
    c.name = manifest.parent_path().filename().string();
    c.class_names = names;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto label = std::lower_bound(names.begin(), names.end(), rows[i].label,
                                            [&](const std::string& a, const std::string& b) {
                                                return numeric ? std::stod(a) < std::stod(b) : a < b;
                                            }) -
                           names.begin();
        c.add(rows[i].id, std::move(parsed[i].graph), static_cast<std::uint32_t>(label));
        c.vertex_names.back() = std::move(parsed[i].vertex_names);
    }
    return c;
}

std::string class_name(const GraphCollection& c, std::uint32_t label) {
    return label < c.class_names.size() ? c.class_names[label] : std::to_string(label);
}

std::filesystem::path save_collection(const GraphCollection& c, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir / "graphs");
    const auto manifest = dir / "manifest.csv";
    std::ofstream out(manifest, std::ios::binary);
    out << "graph_id,path,label\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& id = c.ids[i];
        if (id.empty() || id.find_first_of(",/\\ \t\n") != std::string::npos) {
            throw DomainError("graph id '" + id + "' cannot be used as a file name");
        }
        const std::string rel = "graphs/" + id + ".edges";
        std::ofstream file(dir / rel, std::ios::binary);
        write_signed_graph(file, c.graphs[i]);
        if (!file) {
            throw LoadError((dir / rel).string() + ": write failed");
        }
        out << id << ',' << rel << ',' << class_name(c, c.labels[i]) << '\n';
    }
    if (!out) {
        throw LoadError(manifest.string() + ": write failed");
    }
    return manifest;
}

namespace {

void write_number(std::ostream& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, res.ptr - buf);
}

} // namespace

void write_embeddings(std::ostream& out, const EmbeddingFile& file) {
    const auto& m = file.matrix;
    if (file.ids.size() != m.rows) {
        throw DomainError("embedding ids and rows differ in count");
    }
    for (const auto& [key, value] : file.provenance) {
        out << "# " << key << '=' << value << '\n';
    }
    out << m.rows << ' ' << m.dim << ' ' << m.seed << '\n';
    for (std::size_t i = 0; i < m.rows; ++i) {
        out << file.ids[i];
        for (const double v : m.row(i)) {
            out << ' ';
            write_number(out, v);
        }
        out << '\n';
    }
}

EmbeddingFile read_embeddings(std::istream& in, const std::string& source) {
    EmbeddingFile file;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos && line.size() > 2) {
                file.provenance.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            }
            continue;
        }
        const auto tokens = split_ws(line);
        if (!have_header) {
            std::uint64_t n = 0;
            std::uint64_t d = 0;
            std::uint64_t seed = 0;
            if (tokens.size() != 3 || !parse_uint(tokens[0], n) || !parse_uint(tokens[1], d) ||
                !parse_uint(tokens[2], seed)) {
                throw LoadError(where(source, line_no) + "expected \"rows dim seed\"");
            }
            file.matrix = EmbeddingMatrix(n, d, seed);
            have_header = true;
            continue;
        }
        if (rows >= file.matrix.rows) {
            throw LoadError(where(source, line_no) + "more rows than declared");
        }
        if (tokens.size() != file.matrix.dim + 1) {
            throw LoadError(where(source, line_no) + "expected id and " + std::to_string(file.matrix.dim) + " values");
        }
        auto row = file.matrix.row(rows);
        for (std::size_t j = 0; j < file.matrix.dim; ++j) {
            const auto& t = tokens[j + 1];
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), row[j]);
            if (ec != std::errc() || ptr != t.data() + t.size()) {
                throw LoadError(where(source, line_no) + "bad number '" + t + "'");
            }
        }
        file.ids.push_back(tokens[0]);
        ++rows;
    }
    if (!have_header) {
        throw LoadError(source + ": missing \"rows dim seed\" header");
    }
    if (rows != file.matrix.rows) {
        throw LoadError(source + ": declared " + std::to_string(file.matrix.rows) + " rows, found " +
                        std::to_string(rows));
    }
    return file;
}

void write_wsgcn_meta(std::ostream& out, const std::vector<std::string>& ids, const std::vector<WsgcnGraphMeta>& meta) {
    out << "graph_id,scheme,masters,clusters,partition_checksum,partition_frustration,partition_exact\n";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto& m = meta[i];
        out << ids[i] << ',' << to_string(m.scheme) << ',' << m.masters << ',' << m.clusters << ','
            << m.partition_checksum << ',' << m.partition_frustration << ',' << (m.partition_exact ? 1 : 0) << '\n';
    }
}

std::map<std::string, WsgcnGraphMeta> read_wsgcn_meta(std::istream& in, const std::string& source) {
    std::map<std::string, WsgcnGraphMeta> out;
    std::string line;
    std::getline(in, line);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const auto cells = split_csv(line);
        std::uint64_t masters = 0;
        std::uint64_t clusters = 0;
        std::uint64_t checksum = 0;
        std::uint64_t frustration = 0;
        if (cells.size() != 7 || !parse_uint(cells[2], masters) || !parse_uint(cells[3], clusters) ||
            !parse_uint(cells[4], checksum) || !parse_uint(cells[5], frustration)) {
            throw LoadError(where(source, line_no) + "malformed metadata row");
        }
        WsgcnGraphMeta m;
        try {
            m.scheme = master_scheme_from_string(cells[1]);
        } catch (const DomainError& e) {
            throw LoadError(where(source, line_no) + e.what());
        }
        m.masters = masters;
        m.clusters = clusters;
        m.partition_checksum = checksum;
        m.partition_frustration = frustration;
        m.partition_exact = cells[6] == "1";
        out[cells[0]] = m;
    }
    return out;
}

} // namespace swge
