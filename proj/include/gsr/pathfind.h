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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gsr/graph.h"

namespace gsr {

/// Ordered vertex list (v_1, ..., v_k); consecutive vertices are adjacent in the graph it came from.
struct VertexPath {
    std::vector<Vertex> vertices;

    size_t length() const { return vertices.size(); }
    Vertex source() const { return vertices.front(); }
    Vertex sink() const { return vertices.back(); }
    std::span<const Vertex> interior() const {
        return vertices.size() < 2 ? std::span<const Vertex>{} : std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
    }

    bool operator==(const VertexPath &) const = default;
    auto operator<=>(const VertexPath &) const = default;
};

struct PathQuery {
    Vertex source;
    Vertex sink;
    VertexSet forbidden;
};

struct PathOptions {
    /// Above this many shortest paths the minimum-neighborhood search falls back to a greedy walk.
    size_t enumeration_cap = 100000;
};

struct PathChoice {
    VertexPath path;
    size_t combined_size = 0;
    size_t shortest_path_count = 0;  // saturates at enumeration_cap + 1
    bool exact = true;
};

/// BFS hop distance, or nullopt if disconnected.
std::optional<size_t> distance(const LabeledGraph &g, Vertex a, Vertex b);

/// A minimum-length path; among those, the lexicographically smallest vertex sequence.
std::optional<VertexPath> shortest_path(const LabeledGraph &g, Vertex a, Vertex b);
std::optional<VertexPath> shortest_path(const LabeledGraph &g, const PathQuery &query);

/// Number of shortest a-b paths, saturating at `cap + 1`.
size_t count_shortest_paths(const LabeledGraph &g, const PathQuery &query, size_t cap);

/// Every shortest path in lexicographic order. Throws SizeBoundError if there are more than `cap`.
std::vector<VertexPath> all_shortest_paths(const LabeledGraph &g, const PathQuery &query, size_t cap);

/// Shortest path whose combined neighborhood is smallest (exact below the cap), ties lexicographic.
/// Throws DomainError if a and b are disconnected.
PathChoice min_neighborhood_shortest_path(const LabeledGraph &g, Vertex a, Vertex b, const PathOptions &opts = {});
PathChoice min_neighborhood_shortest_path(const LabeledGraph &g, const PathQuery &query, const PathOptions &opts = {});

struct PathCandidates {
    std::vector<VertexPath> paths;
    size_t combined_size = 0;
    bool exact = true;
};

/// All shortest paths attaining the minimum combined neighborhood, lexicographic order.
/// Above the cap: the single greedy choice, exact = false.
PathCandidates min_neighborhood_candidates(const LabeledGraph &g, Vertex a, Vertex b, const PathOptions &opts = {});

/// All shortest paths attaining the minimum combined neighborhood, lexicographic order.
/// Falls back to the single greedy choice above the cap.
std::vector<VertexPath> min_neighborhood_shortest_paths(const LabeledGraph &g, Vertex a, Vertex b,
                                                        const PathOptions &opts = {});

bool is_path(const LabeledGraph &g, std::span<const Vertex> path);

/// The path graph v_1 - v_2 - ... - v_k on exactly the listed vertices.
LabeledGraph path_graph(std::span<const Vertex> vertices);
bool is_shortest_path(const LabeledGraph &g, std::span<const Vertex> path);

}  // namespace gsr
