// Copyright 2026 The gsroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gsr/graph_io.h"

#include <fstream>
#include <sstream>

#include "gsr/errors.h"
#include "gsr/transcript.h"
#include "json.hpp"

namespace gsr {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Vertex parse_label(const std::string &tok, size_t line_no) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return static_cast<Vertex>(v);
    } catch (const std::exception &) {
        throw DomainError("edge list line " + std::to_string(line_no) + ": bad vertex label '" + tok + "'");
    }
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
    if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "dot") return GraphFormat::Dot;
    if (name == "json") return GraphFormat::Json;
    throw DomainError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_from_path(std::string_view path) {
    auto ends_with = [&](std::string_view suf) {
        return path.size() >= suf.size() && path.substr(path.size() - suf.size()) == suf;
    };
    if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::Graph6;
    if (ends_with(".dot") || ends_with(".gv")) return GraphFormat::Dot;
    if (ends_with(".json")) return GraphFormat::Json;
    return GraphFormat::EdgeList;
}

LabeledGraph parse_edge_list(std::string_view text) {
    VertexSet vertices;
    std::vector<Edge> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> toks;
        for (std::string t; fields >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        if (toks.size() > 2) {
            throw DomainError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        }
        Vertex a = parse_label(toks[0], line_no);
        vertices.insert(a);
        if (toks.size() == 2) {
            Vertex b = parse_label(toks[1], line_no);
            if (a == b) {
                throw DomainError("edge list line " + std::to_string(line_no) + ": self-loop");
            }
            vertices.insert(b);
            edges.push_back(make_edge(a, b));
        }
    }
    return LabeledGraph(std::vector<Vertex>(vertices.begin(), vertices.end()), edges);
}

std::string write_edge_list(const LabeledGraph &g) {
    std::ostringstream out;
    std::vector<bool> touched(g.size(), false);
    for (const Edge &e : g.edge_list()) {
        touched[g.index_of(e.u)] = true;
        touched[g.index_of(e.v)] = true;
    }
    for (size_t i = 0; i < g.size(); i++) {
        if (!touched[i]) {
            out << g.label(i) << '\n';
        }
    }
    for (const Edge &e : g.edge_list()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

LabeledGraph parse_graph6(std::string_view text, Vertex base) {
    std::string_view s = trim(text);
    if (s.starts_with(">>graph6<<")) {
        s.remove_prefix(10);
    }
    auto byte_at = [&](size_t i) -> int {
        if (i >= s.size()) {
            throw DomainError("graph6: truncated input");
        }
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) {
            throw DomainError("graph6: byte out of range");
        }
        return c - 63;
    };
    size_t pos = 0;
    size_t n = 0;
    if (s.empty()) {
        throw DomainError("graph6: empty input");
    }
    if (static_cast<unsigned char>(s[0]) != 126) {
        n = static_cast<size_t>(byte_at(0));
        pos = 1;
    } else if (s.size() > 1 && static_cast<unsigned char>(s[1]) != 126) {
        n = (static_cast<size_t>(byte_at(1)) << 12) | (static_cast<size_t>(byte_at(2)) << 6) |
            static_cast<size_t>(byte_at(3));
        pos = 4;
    } else {
        for (size_t k = 2; k < 8; k++) {
            n = (n << 6) | static_cast<size_t>(byte_at(k));
        }
        pos = 8;
    }
    size_t nbits = n * (n > 0 ? n - 1 : 0) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (s.size() != pos + nbytes) {
        throw DomainError("graph6: expected " + std::to_string(nbytes) + " data bytes for n=" + std::to_string(n));
    }
    std::vector<Vertex> labels(n);
    for (size_t i = 0; i < n; i++) {
        labels[i] = base + static_cast<Vertex>(i);
    }
    LabeledGraph g(labels);
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            int chunk = byte_at(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) {
                g.set_bit(i, j, true);
            }
        }
    }
    // Padding bits must be zero.
    if (nbits % 6 != 0) {
        int last = byte_at(pos + nbytes - 1);
        if (last & ((1 << (6 - nbits % 6)) - 1)) {
            throw DomainError("graph6: nonzero padding bits");
        }
    }
    return g;
}

std::string write_graph6(const LabeledGraph &g) {
    size_t n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }
    }
    int acc = 0;
    int filled = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++) {
            acc = (acc << 1) | (g.bit(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    }
    return out;
}

std::string write_dot(const LabeledGraph &g, const DotStyle &style) {
    std::ostringstream out;
    out << "graph G {\n";
    if (!style.title.empty()) {
        out << "  label=\"" << style.title << "\";\n";
    }
    for (Vertex v : g.vertices()) {
        out << "  " << v;
        if (style.highlight.count(v)) {
            out << " [style=filled, fillcolor=lightblue]";
        }
        out << ";\n";
    }
    for (const Edge &e : g.edge_list()) {
        out << "  " << e.u << " -- " << e.v << ";\n";
    }
    out << "}\n";
    return out.str();
}

LabeledGraph read_graph_file(const std::string &path, GraphFormat format, Vertex graph6_base) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open graph file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    switch (format) {
        case GraphFormat::EdgeList:
            return parse_edge_list(buf.str());
        case GraphFormat::Graph6: {
            std::string first;
            std::getline(buf, first);
            return parse_graph6(first, graph6_base);
        }
        case GraphFormat::Json:
            try {
                return graph_from_json(nlohmann::json::parse(buf.str()));
            } catch (const nlohmann::json::exception &e) {
                throw DomainError(std::string("bad graph JSON: ") + e.what());
            }
        case GraphFormat::Dot:
            throw DomainError("DOT is an export-only format");
    }
    throw DomainError("unsupported format");
}

LabeledGraph read_graph_file(const std::string &path, Vertex graph6_base) {
    return read_graph_file(path, format_from_path(path), graph6_base);
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write '" + path + "'");
    }
    out << content;
}

}  // namespace gsr
