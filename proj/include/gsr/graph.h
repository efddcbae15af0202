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

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gsr {

using Vertex = int;
using VertexSet = std::set<Vertex>;

/// Unordered vertex pair, stored with the smaller label first.
struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge &) const = default;
};

/// Builds the canonical form of {a, b}. Throws DomainError when a == b.
Edge make_edge(Vertex a, Vertex b);

using EdgeSet = std::set<Edge>;

enum class Basis { X, Y, Z };

char basis_name(Basis b);
Basis parse_basis(char c);

/// One Pauli measurement. The neighbor is the pivot w of an X-measurement.
struct MeasurementStep {
    Vertex vertex;
    Basis basis;
    std::optional<Vertex> neighbor;

    bool operator==(const MeasurementStep &) const = default;
};

/// Packed upper triangle of an adjacency matrix, graph6 bit order, first bit in the MSB of word 0.
/// Comparing keys compares the bit strings lexicographically.
struct GraphKey {
    std::vector<uint64_t> words;

    auto operator<=>(const GraphKey &) const = default;
    bool operator==(const GraphKey &) const = default;
};

struct GraphKeyHash {
    size_t operator()(const GraphKey &k) const noexcept;
};

/// Simple undirected graph over integer vertex labels.
///
/// Vertices are kept sorted by label; row i of the adjacency matrix is a bitset over positions.
/// Graphs are values: every rewrite returns a new graph and leaves the input untouched.
class LabeledGraph {
   public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::vector<Vertex> vertices);
    LabeledGraph(std::vector<Vertex> vertices, const std::vector<Edge> &edges);

    /// Graph whose vertex set is the set of edge endpoints.
    static LabeledGraph from_edges(const std::vector<Edge> &edges);

    size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<Vertex> &vertices() const { return labels_; }
    VertexSet vertex_set() const { return VertexSet(labels_.begin(), labels_.end()); }

    bool contains(Vertex v) const;
    std::optional<size_t> find_index(Vertex v) const;
    /// Position of a label; throws DomainError for unknown vertices.
    size_t index_of(Vertex v) const;
    Vertex label(size_t i) const { return labels_[i]; }

    bool adjacent(Vertex a, Vertex b) const;
    size_t degree(Vertex v) const;
    VertexSet neighborhood(Vertex v) const;
    EdgeSet edges() const;
    std::vector<Edge> edge_list() const;
    size_t edge_count() const;

    size_t words() const { return words_; }
    std::span<const uint64_t> row(size_t i) const { return {bits_.data() + i * words_, words_}; }
    bool bit(size_t i, size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1; }

    LabeledGraph with_edge(Vertex a, Vertex b, bool present) const;
    LabeledGraph without_vertex(Vertex v) const;
    LabeledGraph without_vertices(const VertexSet &vs) const;
    LabeledGraph induced(const VertexSet &keep) const;
    LabeledGraph relabeled(const std::map<Vertex, Vertex> &mapping) const;

    GraphKey key() const;
    /// Inverse of key() for a fixed vertex list.
    static LabeledGraph from_key(std::vector<Vertex> vertices, const GraphKey &key);

    bool operator==(const LabeledGraph &) const = default;

    // Position-level mutation, for algorithms that build graphs in place before handing them out.
    void set_bit(size_t i, size_t j, bool on);
    void flip_bit(size_t i, size_t j);
    std::span<uint64_t> mutable_row(size_t i) { return {bits_.data() + i * words_, words_}; }

   private:
    std::vector<Vertex> labels_;
    size_t words_ = 0;
    std::vector<uint64_t> bits_;
};

std::ostream &operator<<(std::ostream &out, const LabeledGraph &g);
std::ostream &operator<<(std::ostream &out, const Edge &e);

// ---- rewrite calculus --------------------------------------------------------------------------

/// tau_a: toggles every pair inside the neighborhood of a.
LabeledGraph local_complement(const LabeledGraph &g, Vertex a);
LabeledGraph local_complement(const LabeledGraph &g, std::span<const Vertex> sequence);

/// Z-measurement: deletes v and its incident edges.
LabeledGraph measure_z(const LabeledGraph &g, Vertex v);

/// Y-measurement: local complement at v, then delete v.
LabeledGraph measure_y(const LabeledGraph &g, Vertex v);

/// X-measurement with pivot w in N_v, via the symmetric-difference edge update
///   (E ^ E(N_w,N_v) ^ E(N_w&N_v, N_w&N_v) ^ E({w}, N_v\{w})) minus edges at v.
/// An isolated v is simply deleted. Throws DomainError if w is not a neighbor of v.
LabeledGraph measure_x(const LabeledGraph &g, Vertex v, std::optional<Vertex> w);

/// Same result as measure_x, computed as tau_w(measure_z(tau_v(tau_w(g)), v)).
LabeledGraph measure_x_decomposed(const LabeledGraph &g, Vertex v, std::optional<Vertex> w);

LabeledGraph apply_measurement(const LabeledGraph &g, const MeasurementStep &step);

// ---- neighborhoods and edge-set algebra --------------------------------------------------------

VertexSet neighborhood(const LabeledGraph &g, Vertex a);
/// Union of the neighborhoods of the path vertices.
VertexSet combined_neighborhood(const LabeledGraph &g, std::span<const Vertex> path);

/// E(A,B): all pairs {a,b} with a in A, b in B, a != b.
EdgeSet edge_set_between(const VertexSet &a, const VertexSet &b);
EdgeSet symmetric_difference(const EdgeSet &e, const EdgeSet &f);
/// E restricted to edges with at least one endpoint in W.
EdgeSet restrict_incident(const EdgeSet &e, const VertexSet &w);
EdgeSet set_minus(const EdgeSet &e, const EdgeSet &f);

// ---- structure queries --------------------------------------------------------------------------

VertexSet component_of(const LabeledGraph &g, Vertex v);
bool is_connected(const LabeledGraph &g);
/// Checks symmetry, zero diagonal and padding bits. Used by tests and replay validation.
bool satisfies_invariants(const LabeledGraph &g);

}  // namespace gsr
