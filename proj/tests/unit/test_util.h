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

// Test-side helpers and independent reference implementations.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "gsr/graph.h"

namespace gsr::tsupport {

inline LabeledGraph graph(std::vector<Vertex> vs, std::vector<std::pair<Vertex, Vertex>> es) {
    std::vector<Edge> edges;
    for (auto [a, b] : es) edges.push_back(make_edge(a, b));
    return LabeledGraph(std::move(vs), edges);
}

inline std::vector<std::pair<Vertex, Vertex>> pairs(const LabeledGraph &g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge &e : g.edge_list()) out.emplace_back(e.u, e.v);
    return out;
}

// Adjacency as a set of ordered label pairs (u < v); deliberately not using the bit rows.
using PairSet = std::set<std::pair<Vertex, Vertex>>;

inline PairSet pair_set(const LabeledGraph &g) {
    PairSet out;
    for (Vertex u : g.vertices()) {
        for (Vertex v : g.vertices()) {
            if (u < v && g.adjacent(u, v)) out.insert({u, v});
        }
    }
    return out;
}

inline std::set<Vertex> nbrs(const PairSet &e, Vertex a) {
    std::set<Vertex> out;
    for (auto [u, v] : e) {
        if (u == a) out.insert(v);
        if (v == a) out.insert(u);
    }
    return out;
}

inline PairSet ref_lc(PairSet e, Vertex a) {
    std::set<Vertex> n = nbrs(e, a);
    for (Vertex u : n) {
        for (Vertex v : n) {
            if (u < v) {
                auto p = std::make_pair(u, v);
                if (e.count(p)) e.erase(p);
                else e.insert(p);
            }
        }
    }
    return e;
}

inline PairSet ref_delete(PairSet e, Vertex a) {
    PairSet out;
    for (auto p : e) {
        if (p.first != a && p.second != a) out.insert(p);
    }
    return out;
}

inline std::vector<Vertex> without(std::vector<Vertex> vs, Vertex a) {
    vs.erase(std::remove(vs.begin(), vs.end(), a), vs.end());
    return vs;
}

inline LabeledGraph from_pairs(const std::vector<Vertex> &vs, const PairSet &e) {
    std::vector<Edge> edges;
    for (auto [u, v] : e) edges.push_back(make_edge(u, v));
    return LabeledGraph(vs, edges);
}

/// All labeled graphs on 1..n (n <= 6) via a callback.
template <class F>
void for_each_graph(int n, F &&f) {
    std::vector<std::pair<int, int>> slots;
    for (int j = 2; j <= n; j++) {
        for (int i = 1; i < j; i++) slots.emplace_back(i, j);
    }
    std::vector<Vertex> vs;
    for (int i = 1; i <= n; i++) vs.push_back(i);
    for (uint64_t code = 0; code < (uint64_t{1} << slots.size()); code++) {
        std::vector<Edge> edges;
        for (size_t k = 0; k < slots.size(); k++) {
            if ((code >> k) & 1) edges.push_back(make_edge(slots[k].first, slots[k].second));
        }
        f(LabeledGraph(vs, edges));
    }
}

}  // namespace gsr::tsupport
