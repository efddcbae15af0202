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
#include <string>
#include <vector>

#include "gsr/graph.h"
#include "gsr/pathfind.h"
#include "gsr/transcript.h"

namespace gsr {

struct ProtocolOptions {
    PathOptions path;
    /// x_protocol simulates at most this many minimum-neighborhood paths when choosing one.
    size_t candidate_cap = 256;
    bool keep_snapshots = true;
};

/// Outcome of an EPR protocol. `residual` is the final graph with a and b removed.
struct EprResult {
    ProtocolTranscript transcript;
    VertexPath path;
    Edge pair;
    LabeledGraph residual;
};

/// Z-measures the path's outer neighborhood, then X-measures the interior with pivot v_1.
EprResult repeater_protocol(const LabeledGraph &g, Vertex a, Vertex b, const ProtocolOptions &opts = {});
EprResult repeater_protocol(const LabeledGraph &g, const VertexPath &path, const ProtocolOptions &opts = {});

/// X-measures the interior with pivot v_1, then Z-measures the leftover neighbors of a and b.
/// Path choice: among minimum-neighborhood shortest paths, the one needing fewest measurements,
/// then the lexicographically smallest.
EprResult x_protocol(const LabeledGraph &g, Vertex a, Vertex b, const ProtocolOptions &opts = {});
EprResult x_protocol(const LabeledGraph &g, const VertexPath &path, const ProtocolOptions &opts = {});

/// Measurement count of the X-protocol on a fixed path, without building a transcript.
size_t x_protocol_count(const LabeledGraph &g, const VertexPath &path);
/// |combined neighborhood| - 2: measurement count of the repeater protocol on a path.
size_t repeater_count(const LabeledGraph &g, const VertexPath &path);

/// Counts and neighborhood-evolution checks for one run of the X-protocol along `path`.
struct XProtocolAudit {
    size_t x_count = 0;
    size_t repeater_count = 0;
    bool count_inequality = true;
    bool subset_claim = true;       // final N_a u N_b strictly inside the initial combined neighborhood
    bool interior_excluded = true;  // interior in N^(0) but not in the final N_a u N_b
    bool pivot_recursion = true;    // N^(t)_{v1} = N^(t-1)_{v_{t+1}} \ {v1}
    bool far_untouched = true;      // N^(t)_{v_{t+3}} = N^(0)_{v_{t+3}}
    bool ok() const { return count_inequality && subset_claim && interior_excluded && pivot_recursion && far_untouched; }
};

XProtocolAudit audit_x_protocol(const LabeledGraph &g, const VertexPath &path);

/// LC sequence and Z list reproducing sequential X-measurements of a shortest path's interior.
struct LcZForm {
    std::vector<Vertex> local_complements;
    std::vector<Vertex> z_measurements;
};

LcZForm lemma1_decompose(const LabeledGraph &g, const VertexPath &path);
LabeledGraph apply_lc_z_form(const LabeledGraph &g, const LcZForm &form);
/// Sequential X-measurements of the interior, pivot v_1.
LabeledGraph measure_path_interior(const LabeledGraph &g, const VertexPath &path);

/// Three-party GHZ extraction. Never throws for connected targets; success is reported on the transcript.
ProtocolTranscript ghz3_extract(const LabeledGraph &g, Vertex a, Vertex b, Vertex c, const ProtocolOptions &opts = {});

/// True if `g` restricted to `vs` is connected and no edge leaves `vs`.
bool is_isolated_component(const LabeledGraph &g, const VertexSet &vs);
/// True if g is a 4-vertex star or K4, the LC orbit of the 4-star.
bool is_ghz4_graph(const LabeledGraph &g);

struct Ghz4Options {
    ProtocolOptions protocol;
    /// Lines with chords are checked by vertex-minor search up to this many vertices, trusted above.
    size_t vertex_minor_bound = 10;
    /// Cap on isolation orders tried before giving up on a line.
    size_t isolation_cap = 200000;
};

/// Four-party GHZ extraction from a repeater line through the targets.
/// Throws HypothesisError naming the unmet condition.
ProtocolTranscript ghz4_extract(const LabeledGraph &g, const std::array<Vertex, 4> &targets,
                                const std::optional<VertexPath> &line, const Ghz4Options &opts = {});

/// Applies the two-pair witness sequence (default LC 1, LC 3, LC 4, Z 3, Z 4) and reports success.
ProtocolTranscript butterfly_route(const LabeledGraph &g, const std::array<Edge, 2> &pairs,
                                   const std::vector<Step> &sequence = {});
std::vector<Step> butterfly_sequence();
/// Final graph restricted to the four terminals is exactly the two pairs, with no other edge on them.
bool two_pairs_established(const LabeledGraph &g, const std::array<Edge, 2> &pairs);

}  // namespace gsr
