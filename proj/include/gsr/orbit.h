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

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gsr/graph.h"
#include "gsr/pathfind.h"
#include "gsr/transcript.h"

namespace gsr {

struct OrbitOptions {
    size_t max_vertices = 10;
    /// Hard cap on graphs visited by orbit and vertex-minor searches.
    size_t max_states = 20000000;
    /// Induced-path enumeration for repeater lines runs up to this many vertices.
    size_t line_search_max_vertices = 24;
};

/// LC orbit of a seed graph, stored as adjacency keys in BFS order with a spanning tree of LC moves.
class OrbitRecord {
   public:
    const std::vector<Vertex> &vertices() const { return vertices_; }
    size_t size() const { return keys_.size(); }
    const GraphKey &key(size_t i) const { return keys_[i]; }
    LabeledGraph member(size_t i) const { return LabeledGraph::from_key(vertices_, keys_[i]); }
    const LabeledGraph &seed() const { return seed_; }

    /// Lexicographically smallest key over the orbit (graph6 bit order).
    const GraphKey &canonical_key() const { return keys_[canonical_]; }
    LabeledGraph canonical() const { return member(canonical_); }

    std::optional<size_t> find(const LabeledGraph &g) const;
    std::optional<size_t> find(const GraphKey &k) const;
    bool contains(const LabeledGraph &g) const { return find(g).has_value(); }

    /// LC sequence taking the seed to member i.
    std::vector<Vertex> witness(size_t i) const;
    /// LC sequence taking member i to member j.
    std::vector<Vertex> witness(size_t i, size_t j) const;

   private:
    friend OrbitRecord lc_orbit(const LabeledGraph &g, const OrbitOptions &opts);

    LabeledGraph seed_;
    std::vector<Vertex> vertices_;
    std::vector<GraphKey> keys_;
    std::vector<size_t> parent_;
    std::vector<Vertex> via_;
    std::unordered_map<GraphKey, size_t, GraphKeyHash> index_;
    size_t canonical_ = 0;
};

OrbitRecord lc_orbit(const LabeledGraph &g, const OrbitOptions &opts = {});

struct Equivalence {
    bool equivalent = false;
    std::vector<Vertex> witness;
};

/// Decides h in orbit(g). Throws DomainError if the vertex sets differ.
Equivalence lc_equivalent(const LabeledGraph &g, const LabeledGraph &h, const OrbitOptions &opts = {});

struct VertexMinorResult {
    bool found = false;
    std::vector<Step> witness;  // LCs and Z-deletions
    size_t states = 0;
};

/// Decides whether h arises from g by LCs and deletions of the vertices outside h.
VertexMinorResult vertex_minor(const LabeledGraph &g, const LabeledGraph &h, const OrbitOptions &opts = {});

/// Repeater lines through four targets: the targets include both ends and at least one non-target
/// sits between the second and third. Induced paths of g come first, cheapest isolation first;
/// for graphs within the vertex-minor bound, five-vertex vertex-minor lines follow.
std::vector<VertexPath> repeater_line_candidates(const LabeledGraph &g, const std::array<Vertex, 4> &targets,
                                                 const OrbitOptions &opts = {});
std::optional<VertexPath> find_repeater_line(const LabeledGraph &g, const std::array<Vertex, 4> &targets,
                                             const OrbitOptions &opts = {});

}  // namespace gsr
