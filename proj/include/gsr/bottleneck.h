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

#include <cstdint>
#include <string>
#include <vector>

#include "gsr/graph.h"
#include "gsr/transcript.h"
#include "json.hpp"

namespace gsr {

/// Two terminal pairs on one graph; every other vertex may be measured.
struct TwoPairInstance {
    LabeledGraph graph;
    Edge pair1;
    Edge pair2;

    VertexSet terminals() const { return {pair1.u, pair1.v, pair2.u, pair2.v}; }
    std::vector<Vertex> measurable() const;
    /// The goal graph: exactly the two pair edges on the four terminals.
    LabeledGraph target() const;
    /// Throws DomainError unless the four terminals are distinct graph vertices.
    void validate() const;
};

inline constexpr const char *kBottleneckDefinition =
    "bottleneck: no two edge-disjoint paths exist, one joining each terminal pair";

/// True iff no pair of edge-disjoint paths joins the two pairs. Graphs up to 11 vertices.
bool has_bottleneck(const TwoPairInstance &inst);

struct Solvability {
    bool solvable = false;
    std::vector<Step> witness;  // LCs and Z-measurements
};

/// Whether LCs and Pauli measurements of the measurable vertices leave exactly the two pairs.
/// `prune` rejects instances with a disconnected terminal pair before searching.
Solvability solvable(const TwoPairInstance &inst, size_t max_measurements, bool prune = true);

/// Replays the witness and checks the result is exactly the target graph.
bool witness_valid(const TwoPairInstance &inst, const std::vector<Step> &witness);

/// Labeled graph on 1..n whose bit k (least significant first) is the k-th pair in graph6 column order.
LabeledGraph indexed_graph(size_t n, uint64_t index);
uint64_t graph_index(const LabeledGraph &g);

struct Designation {
    Edge pair1;
    Edge pair2;
    bool operator==(const Designation &) const = default;
};

/// Every split of four of the n labels into two pairs.
std::vector<Designation> all_designations(size_t n);

struct SearchReport {
    TwoPairInstance instance;
    uint64_t graph_index = 0;
    size_t designation = 0;
    bool has_bottleneck = false;
    bool solvable = false;
    std::vector<Step> witness;
};

struct ScanOptions {
    size_t n = 6;
    /// Empty: every designation for n = 5 (or with all_pairings), {1,6},{2,5} for n = 6.
    std::vector<Designation> designations;
    bool all_pairings = false;
    size_t workers = 1;
    bool prune = true;
};

struct ScanSummary {
    size_t n = 0;
    std::vector<Designation> designations;
    uint64_t graphs_scanned = 0;
    uint64_t instances = 0;
    uint64_t bottlenecks = 0;
    uint64_t pruned = 0;
    std::vector<SearchReport> hits;  // ordered by designation, then graph index
    std::vector<uint64_t> hits_per_designation;
    uint64_t distinct_hit_graphs = 0;
    double seconds = 0;
};

ScanSummary scan_all(const ScanOptions &opts);

nlohmann::json scan_to_json(const ScanSummary &s, bool include_timing = false);

}  // namespace gsr
