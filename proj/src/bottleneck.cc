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

#include "gsr/bottleneck.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "gsr/errors.h"
#include "gsr/graph_io.h"
#include "gsr/orbit.h"
#include "gsr/parallel.h"
#include "gsr/pathfind.h"
#include "gsr/protocols.h"

namespace gsr {

std::vector<Vertex> TwoPairInstance::measurable() const {
    VertexSet t = terminals();
    std::vector<Vertex> out;
    for (Vertex v : graph.vertices()) {
        if (!t.count(v)) out.push_back(v);
    }
    return out;
}

LabeledGraph TwoPairInstance::target() const {
    VertexSet t = terminals();
    return LabeledGraph(std::vector<Vertex>(t.begin(), t.end()), {pair1, pair2});
}

void TwoPairInstance::validate() const {
    VertexSet t = terminals();
    if (t.size() != 4) throw DomainError("the four terminals must be distinct");
    for (Vertex v : t) {
        if (!graph.contains(v)) throw DomainError("terminal " + std::to_string(v) + " is not in the graph");
    }
}

namespace {

// Edge masks of all simple s-t paths; edges numbered by graph6 column order.
std::vector<uint64_t> path_edge_masks(const LabeledGraph &g, size_t s, size_t t) {
    const size_t n = g.size();
    auto eid = [](size_t i, size_t j) {
        if (i > j) std::swap(i, j);
        return j * (j - 1) / 2 + i;
    };
    std::vector<uint64_t> out;
    std::vector<bool> on(n, false);
    std::function<void(size_t, uint64_t)> dfs = [&](size_t x, uint64_t mask) {
        if (x == t) {
            out.push_back(mask);
            return;
        }
        on[x] = true;
        for (size_t y = 0; y < n; y++) {
            if (!on[y] && g.bit(x, y)) dfs(y, mask | uint64_t{1} << eid(x, y));
        }
        on[x] = false;
    };
    dfs(s, 0);
    return out;
}

}  // namespace

bool has_bottleneck(const TwoPairInstance &inst) {
    inst.validate();
    const LabeledGraph &g = inst.graph;
    if (g.size() > 11) throw SizeBoundError("bottleneck check supports at most 11 vertices");
    auto p1 = path_edge_masks(g, g.index_of(inst.pair1.u), g.index_of(inst.pair1.v));
    auto p2 = path_edge_masks(g, g.index_of(inst.pair2.u), g.index_of(inst.pair2.v));
    for (uint64_t a : p1) {
        for (uint64_t b : p2) {
            if ((a & b) == 0) return false;
        }
    }
    return true;
}

Solvability solvable(const TwoPairInstance &inst, size_t max_measurements, bool prune) {
    inst.validate();
    if (inst.measurable().size() != max_measurements) {
        throw DomainError("instance has " + std::to_string(inst.measurable().size()) +
                          " measurable vertices, expected " + std::to_string(max_measurements));
    }
    Solvability out;
    if (prune && (!distance(inst.graph, inst.pair1.u, inst.pair1.v) || !distance(inst.graph, inst.pair2.u, inst.pair2.v))) {
        return out;
    }
    VertexMinorResult vm = vertex_minor(inst.graph, inst.target());
    out.solvable = vm.found;
    out.witness = std::move(vm.witness);
    return out;
}

bool witness_valid(const TwoPairInstance &inst, const std::vector<Step> &witness) {
    try {
        LabeledGraph f = replay(inst.graph, witness);
        return f.vertex_set() == inst.terminals() && two_pairs_established(f, {inst.pair1, inst.pair2});
    } catch (const DomainError &) {
        return false;
    }
}

LabeledGraph indexed_graph(size_t n, uint64_t index) {
    if (n > 11) throw SizeBoundError("indexed graphs support at most 11 vertices");
    std::vector<Vertex> labels(n);
    for (size_t i = 0; i < n; i++) labels[i] = static_cast<Vertex>(i + 1);
    LabeledGraph g(labels);
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            if ((index >> k) & 1) g.set_bit(i, j, true);
        }
    }
    return g;
}

uint64_t graph_index(const LabeledGraph &g) {
    if (g.size() > 11) throw SizeBoundError("indexed graphs support at most 11 vertices");
    uint64_t out = 0;
    size_t k = 0;
    for (size_t j = 1; j < g.size(); j++) {
        for (size_t i = 0; i < j; i++, k++) {
            if (g.bit(i, j)) out |= uint64_t{1} << k;
        }
    }
    return out;
}

std::vector<Designation> all_designations(size_t n) {
    std::vector<Designation> out;
    for (Vertex a = 1; a <= static_cast<Vertex>(n); a++) {
        for (Vertex b = a + 1; b <= static_cast<Vertex>(n); b++) {
            for (Vertex c = a + 1; c <= static_cast<Vertex>(n); c++) {
                if (c == b) continue;
                for (Vertex d = c + 1; d <= static_cast<Vertex>(n); d++) {
                    if (d == b) continue;
                    out.push_back({make_edge(a, b), make_edge(c, d)});
                }
            }
        }
    }
    return out;
}

ScanSummary scan_all(const ScanOptions &opts) {
    if (opts.n < 4 || opts.n > 7) throw SizeBoundError("scan supports 4 to 7 vertices");
    auto start = std::chrono::steady_clock::now();
    ScanSummary s;
    s.n = opts.n;
    s.designations = opts.designations;
    if (s.designations.empty()) {
        if (opts.n == 6 && !opts.all_pairings) {
            s.designations = {{make_edge(1, 6), make_edge(2, 5)}};
        } else {
            s.designations = all_designations(opts.n);
        }
    }
    for (const auto &d : s.designations) {
        TwoPairInstance{indexed_graph(opts.n, 0), d.pair1, d.pair2}.validate();
    }
    const size_t m = opts.n * (opts.n - 1) / 2;
    const uint64_t total = uint64_t{1} << m;
    const size_t measurements = opts.n - 4;

    struct Local {
        std::vector<SearchReport> hits;
        uint64_t bottlenecks = 0, pruned = 0;
    };
    size_t workers = std::max<size_t>(1, opts.workers);
    std::vector<Local> locals(workers);
    parallel_for(total, workers, [&](size_t lo, size_t hi, size_t w) {
        Local &L = locals[w];
        for (uint64_t idx = lo; idx < hi; idx++) {
            LabeledGraph g = indexed_graph(opts.n, idx);
            for (size_t di = 0; di < s.designations.size(); di++) {
                TwoPairInstance inst{g, s.designations[di].pair1, s.designations[di].pair2};
                if (!has_bottleneck(inst)) continue;
                L.bottlenecks++;
                if (opts.prune &&
                    (!distance(g, inst.pair1.u, inst.pair1.v) || !distance(g, inst.pair2.u, inst.pair2.v))) {
                    L.pruned++;
                    continue;
                }
                Solvability r = solvable(inst, measurements, false);
                if (!r.solvable) continue;
                L.hits.push_back({inst, idx, di, true, true, std::move(r.witness)});
            }
        }
    });

    s.graphs_scanned = total;
    s.instances = total * s.designations.size();
    s.hits_per_designation.assign(s.designations.size(), 0);
    std::set<uint64_t> distinct;
    for (Local &L : locals) {
        s.bottlenecks += L.bottlenecks;
        s.pruned += L.pruned;
        for (SearchReport &r : L.hits) {
            s.hits_per_designation[r.designation]++;
            distinct.insert(r.graph_index);
            s.hits.push_back(std::move(r));
        }
    }
    std::sort(s.hits.begin(), s.hits.end(), [](const SearchReport &a, const SearchReport &b) {
        return std::tie(a.designation, a.graph_index) < std::tie(b.designation, b.graph_index);
    });
    s.distinct_hit_graphs = distinct.size();
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

nlohmann::json scan_to_json(const ScanSummary &s, bool include_timing) {
    nlohmann::json j;
    j["definition"] = kBottleneckDefinition;
    j["n"] = s.n;
    nlohmann::json ds = nlohmann::json::array();
    for (const auto &d : s.designations) {
        ds.push_back({{d.pair1.u, d.pair1.v}, {d.pair2.u, d.pair2.v}});
    }
    j["designations"] = ds;
    j["graphs_scanned"] = s.graphs_scanned;
    j["instances"] = s.instances;
    j["bottlenecks"] = s.bottlenecks;
    j["pruned"] = s.pruned;
    j["hits_per_designation"] = s.hits_per_designation;
    j["total_hits"] = s.hits.size();
    j["distinct_hit_graphs"] = s.distinct_hit_graphs;
    nlohmann::json hits = nlohmann::json::array();
    for (const SearchReport &r : s.hits) {
        nlohmann::json h;
        h["graph_index"] = r.graph_index;
        h["graph6"] = write_graph6(r.instance.graph);
        h["graph"] = graph_to_json(r.instance.graph);
        h["pairs"] = {{r.instance.pair1.u, r.instance.pair1.v}, {r.instance.pair2.u, r.instance.pair2.v}};
        h["has_bottleneck"] = r.has_bottleneck;
        h["solvable"] = r.solvable;
        h["witness"] = steps_to_json(r.witness);
        hits.push_back(h);
    }
    j["hits"] = hits;
    if (include_timing) j["seconds"] = s.seconds;
    return j;
}

}  // namespace gsr
