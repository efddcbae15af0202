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

#include "gsr/pathfind.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "gsr/errors.h"

namespace gsr {

namespace {

constexpr size_t kUnreached = std::numeric_limits<size_t>::max();

struct Layers {
    std::vector<size_t> to_sink;  // BFS distance to the sink, kUnreached if cut off
    std::vector<bool> blocked;
    size_t source;
    size_t sink;
};

Layers bfs_to_sink(const LabeledGraph &g, const PathQuery &q) {
    if (q.source == q.sink) {
        throw DomainError("path query needs distinct endpoints");
    }
    Layers L;
    L.source = g.index_of(q.source);
    L.sink = g.index_of(q.sink);
    L.blocked.assign(g.size(), false);
    for (Vertex f : q.forbidden) {
        if (auto i = g.find_index(f)) {
            L.blocked[*i] = true;
        }
    }
    L.blocked[L.source] = false;
    L.blocked[L.sink] = false;
    L.to_sink.assign(g.size(), kUnreached);
    L.to_sink[L.sink] = 0;
    std::deque<size_t> queue{L.sink};
    while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        for (size_t y = 0; y < g.size(); y++) {
            if (g.bit(x, y) && !L.blocked[y] && L.to_sink[y] == kUnreached) {
                L.to_sink[y] = L.to_sink[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return L;
}

// Successor test on the layer DAG: y is one step closer to the sink than x.
bool next_layer(const LabeledGraph &g, const Layers &L, size_t x, size_t y) {
    return g.bit(x, y) && !L.blocked[y] && L.to_sink[y] != kUnreached && L.to_sink[y] + 1 == L.to_sink[x];
}

VertexPath to_path(const LabeledGraph &g, const std::vector<size_t> &idx) {
    VertexPath p;
    p.vertices.reserve(idx.size());
    for (size_t i : idx) {
        p.vertices.push_back(g.label(i));
    }
    return p;
}

size_t popcount(const std::vector<uint64_t> &w) {
    size_t c = 0;
    for (uint64_t x : w) {
        c += std::popcount(x);
    }
    return c;
}

void or_row(std::vector<uint64_t> &acc, std::span<const uint64_t> row) {
    for (size_t k = 0; k < acc.size(); k++) {
        acc[k] |= row[k];
    }
}

// Depth-first walk over the layer DAG in lexicographic order.
template <typename Visit>
void enumerate(const LabeledGraph &g, const Layers &L, Visit &&visit) {
    std::vector<size_t> stack{L.source};
    auto rec = [&](auto &&self) -> bool {
        size_t x = stack.back();
        if (x == L.sink) {
            return visit(stack);
        }
        for (size_t y = 0; y < g.size(); y++) {
            if (next_layer(g, L, x, y)) {
                stack.push_back(y);
                bool go_on = self(self);
                stack.pop_back();
                if (!go_on) {
                    return false;
                }
            }
        }
        return true;
    };
    rec(rec);
}

size_t count_paths(const LabeledGraph &g, const Layers &L, size_t cap) {
    size_t n = g.size();
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return L.to_sink[a] < L.to_sink[b]; });
    std::vector<size_t> ways(n, 0);
    ways[L.sink] = 1;
    for (size_t x : order) {
        if (L.to_sink[x] == kUnreached || x == L.sink || L.blocked[x]) continue;
        size_t total = 0;
        for (size_t y = 0; y < n; y++) {
            if (next_layer(g, L, x, y)) {
                total = std::min(cap + 1, total + ways[y]);
            }
        }
        ways[x] = total;
    }
    return ways[L.source];
}

}  // namespace

std::optional<size_t> distance(const LabeledGraph &g, Vertex a, Vertex b) {
    if (a == b) {
        g.index_of(a);
        return 0;
    }
    Layers L = bfs_to_sink(g, {a, b, {}});
    if (L.to_sink[L.source] == kUnreached) return std::nullopt;
    return L.to_sink[L.source];
}

std::optional<VertexPath> shortest_path(const LabeledGraph &g, Vertex a, Vertex b) {
    return shortest_path(g, PathQuery{a, b, {}});
}

std::optional<VertexPath> shortest_path(const LabeledGraph &g, const PathQuery &query) {
    Layers L = bfs_to_sink(g, query);
    if (L.to_sink[L.source] == kUnreached) {
        return std::nullopt;
    }
    std::vector<size_t> idx{L.source};
    while (idx.back() != L.sink) {
        size_t x = idx.back();
        for (size_t y = 0; y < g.size(); y++) {
            if (next_layer(g, L, x, y)) {
                idx.push_back(y);
                break;
            }
        }
    }
    return to_path(g, idx);
}

size_t count_shortest_paths(const LabeledGraph &g, const PathQuery &query, size_t cap) {
    Layers L = bfs_to_sink(g, query);
    if (L.to_sink[L.source] == kUnreached) return 0;
    return count_paths(g, L, cap);
}

std::vector<VertexPath> all_shortest_paths(const LabeledGraph &g, const PathQuery &query, size_t cap) {
    Layers L = bfs_to_sink(g, query);
    std::vector<VertexPath> out;
    if (L.to_sink[L.source] == kUnreached) return out;
    if (count_paths(g, L, cap) > cap) {
        throw SizeBoundError("more than " + std::to_string(cap) + " shortest paths");
    }
    enumerate(g, L, [&](const std::vector<size_t> &stack) {
        out.push_back(to_path(g, stack));
        return true;
    });
    return out;
}

namespace {

struct Minimizers {
    std::vector<VertexPath> paths;
    size_t best = kUnreached;
    size_t count = 0;
    bool exact = true;
};

Minimizers find_minimizers(const LabeledGraph &g, const PathQuery &query, const PathOptions &opts, bool keep_all) {
    Layers L = bfs_to_sink(g, query);
    if (L.to_sink[L.source] == kUnreached) {
        throw DomainError("vertices " + std::to_string(query.source) + " and " + std::to_string(query.sink) +
                          " are not connected");
    }
    Minimizers m;
    m.count = count_paths(g, L, opts.enumeration_cap);
    size_t w = g.words();
    if (m.count <= opts.enumeration_cap) {
        std::vector<std::vector<uint64_t>> acc(L.to_sink[L.source] + 2, std::vector<uint64_t>(w, 0));
        // Prefix unions are rebuilt per DFS level.
        std::vector<size_t> stack{L.source};
        acc[1].assign(g.row(L.source).begin(), g.row(L.source).end());
        auto rec = [&](auto &&self) -> void {
            size_t x = stack.back();
            size_t depth = stack.size();
            if (x == L.sink) {
                size_t c = popcount(acc[depth]);
                if (c < m.best) {
                    m.best = c;
                    m.paths.clear();
                    m.paths.push_back(to_path(g, stack));
                } else if (c == m.best && keep_all) {
                    m.paths.push_back(to_path(g, stack));
                }
                return;
            }
            for (size_t y = 0; y < g.size(); y++) {
                if (next_layer(g, L, x, y)) {
                    acc[depth + 1] = acc[depth];
                    or_row(acc[depth + 1], g.row(y));
                    stack.push_back(y);
                    self(self);
                    stack.pop_back();
                }
            }
        };
        rec(rec);
        return m;
    }
    // Greedy walk: extend by the successor that grows the combined neighborhood least.
    m.exact = false;
    std::vector<size_t> idx{L.source};
    std::vector<uint64_t> acc(g.row(L.source).begin(), g.row(L.source).end());
    while (idx.back() != L.sink) {
        size_t x = idx.back();
        size_t pick = kUnreached;
        size_t pick_size = kUnreached;
        for (size_t y = 0; y < g.size(); y++) {
            if (!next_layer(g, L, x, y)) continue;
            std::vector<uint64_t> trial = acc;
            or_row(trial, g.row(y));
            size_t c = popcount(trial);
            if (c < pick_size) {
                pick = y;
                pick_size = c;
            }
        }
        idx.push_back(pick);
        or_row(acc, g.row(pick));
    }
    m.best = popcount(acc);
    m.paths.push_back(to_path(g, idx));
    return m;
}

}  // namespace

PathChoice min_neighborhood_shortest_path(const LabeledGraph &g, Vertex a, Vertex b, const PathOptions &opts) {
    return min_neighborhood_shortest_path(g, PathQuery{a, b, {}}, opts);
}

PathChoice min_neighborhood_shortest_path(const LabeledGraph &g, const PathQuery &query, const PathOptions &opts) {
    Minimizers m = find_minimizers(g, query, opts, false);
    return PathChoice{m.paths.front(), m.best, m.count, m.exact};
}

PathCandidates min_neighborhood_candidates(const LabeledGraph &g, Vertex a, Vertex b, const PathOptions &opts) {
    Minimizers m = find_minimizers(g, PathQuery{a, b, {}}, opts, true);
    return PathCandidates{std::move(m.paths), m.best, m.exact};
}

std::vector<VertexPath> min_neighborhood_shortest_paths(const LabeledGraph &g, Vertex a, Vertex b,
                                                        const PathOptions &opts) {
    return find_minimizers(g, PathQuery{a, b, {}}, opts, true).paths;
}

bool is_path(const LabeledGraph &g, std::span<const Vertex> path) {
    if (path.empty()) return false;
    VertexSet seen;
    for (size_t i = 0; i < path.size(); i++) {
        if (!g.contains(path[i]) || !seen.insert(path[i]).second) return false;
        if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
    }
    return true;
}

bool is_shortest_path(const LabeledGraph &g, std::span<const Vertex> path) {
    if (!is_path(g, path) || path.size() < 2) return false;
    auto d = distance(g, path.front(), path.back());
    return d && *d + 1 == path.size();
}

LabeledGraph path_graph(std::span<const Vertex> vertices) {
    std::vector<Edge> edges;
    for (size_t i = 1; i < vertices.size(); i++) {
        edges.push_back(make_edge(vertices[i - 1], vertices[i]));
    }
    return LabeledGraph(std::vector<Vertex>(vertices.begin(), vertices.end()), edges);
}

}  // namespace gsr
