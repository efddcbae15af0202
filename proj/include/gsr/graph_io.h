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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gsr/graph.h"

namespace gsr {

enum class GraphFormat { EdgeList, Graph6, Dot, Json };

GraphFormat parse_format(std::string_view name);
/// Guesses from a file extension: .g6 -> graph6, .dot/.gv -> dot, .json -> json, otherwise edge list.
GraphFormat format_from_path(std::string_view path);

/// Edge-list text: one "u v" pair per line, a lone label declares a (possibly isolated) vertex,
/// '#' starts a comment.
LabeledGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const LabeledGraph &g);

/// graph6 encoding of the upper triangle. Positions follow the sorted labels; parsing assigns
/// labels base, base+1, ...
LabeledGraph parse_graph6(std::string_view text, Vertex base = 0);
std::string write_graph6(const LabeledGraph &g);

struct DotStyle {
    std::string title;
    VertexSet highlight;
};
std::string write_dot(const LabeledGraph &g, const DotStyle &style = {});

LabeledGraph read_graph_file(const std::string &path, GraphFormat format, Vertex graph6_base = 0);
LabeledGraph read_graph_file(const std::string &path, Vertex graph6_base = 0);
void write_text_file(const std::string &path, const std::string &content);

}  // namespace gsr
