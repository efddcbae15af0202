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

#include "gsr/orbit.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <tuple>
#include <unordered_set>

#include "gsr/errors.h"
#include "small_graph.h"

namespace gsr {

using detail::PackedKey;
using detail::PackedKeyHash;
using detail::SmallGraph;

namespace {

void check_bound(const LabeledGraph &g, size_t bound, const char *what) {
    if (g.size() > bound || g.size() > detail::kSmallMax) {
        throw SizeBoundError(std::string(what) + ": graph has " + std::to_string(g.size()) +
                             " vertices, bound is " + std::to_string(std::min(bound, detail::kSmallMax)));
    }
}

}  // namespace

std::optional<size_t> OrbitRecord::find(const GraphKey &k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<size_t> OrbitRecord::find(const LabeledGraph &g) const {
    if (g.vertices() != vertices_) return std::nullopt;
    return find(g.key());
}

std::vector<Vertex> OrbitRecord::witness(size_t i) const {
    std::vector<Vertex> out;
    for (; i != 0; i = parent_[i]) out.push_back(via_[i]);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Vertex> OrbitRecord::witness(size_t i, size_t j) const {
    std::vector<Vertex> wi = witness(i);
    std::vector<Vertex> fwd = witness(j);
    // Drop the shared prefix of the two tree paths.
    size_t common = 0;
    while (common < wi.size() && common < fwd.size() && wi[common] == fwd[common]) common++;
    std::vector<Vertex> out(wi.rbegin(), wi.rend() - common);
    out.insert(out.end(), fwd.begin() + common, fwd.end());
    return out;
}

OrbitRecord lc_orbit(const LabeledGraph &g, const OrbitOptions &opts) {
    check_bound(g, opts.max_vertices, "LC orbit");
    OrbitRecord rec;
    rec.seed_ = g;
    rec.vertices_ = g.vertices();
    const uint32_t n = static_cast<uint32_t>(g.size());

    std::vector<PackedKey> keys;
    std::unordered_map<PackedKey, size_t, PackedKeyHash> index;
    SmallGraph s = SmallGraph::from(g);
    keys.push_back(s.key());
    index.emplace(keys[0], 0);
    rec.parent_.push_back(0);
    rec.via_.push_back(0);
    for (size_t head = 0; head < keys.size(); head++) {
        SmallGraph cur = SmallGraph::from_key(n, keys[head]);
        for (uint32_t a = 0; a < n; a++) {
            if (cur.rows[a] == 0) continue;
            SmallGraph nxt = cur;
            nxt.lc(a);
            PackedKey k = nxt.key();
            if (index.emplace(k, keys.size()).second) {
                keys.push_back(k);
                rec.parent_.push_back(head);
                rec.via_.push_back(rec.vertices_[a]);
                if (keys.size() > opts.max_states) {
                    throw SizeBoundError("LC orbit exceeds " + std::to_string(opts.max_states) + " members");
                }
            }
        }
    }
    rec.keys_.reserve(keys.size());
    for (size_t i = 0; i < keys.size(); i++) {
        rec.keys_.push_back(detail::to_graph_key(keys[i], n));
        rec.index_.emplace(rec.keys_.back(), i);
        if (keys[i] < keys[rec.canonical_]) rec.canonical_ = i;
    }
    return rec;
}

Equivalence lc_equivalent(const LabeledGraph &g, const LabeledGraph &h, const OrbitOptions &opts) {
    if (g.vertices() != h.vertices()) {
        throw DomainError("LC equivalence needs identical vertex sets");
    }
    OrbitRecord rec = lc_orbit(g, opts);
    Equivalence out;
    if (auto i = rec.find(h)) {
        out.equivalent = true;
        out.witness = rec.witness(*i);
    }
    return out;
}

// Deleting v from any member of an orbit lands in one of three orbits, reached by Z, by LC v then Z,
// and by the pivot on v and a neighbor then Z. The search branches over those three per deleted vertex
// and tests the final graph against the orbit of h.
VertexMinorResult vertex_minor(const LabeledGraph &g, const LabeledGraph &h, const OrbitOptions &opts) {
    check_bound(g, opts.max_vertices, "vertex-minor search");
    for (Vertex v : h.vertices()) {
        if (!g.contains(v)) throw DomainError("target vertex " + std::to_string(v) + " is not in the graph");
    }
    std::vector<Vertex> drop;
    for (Vertex v : g.vertices()) {
        if (!h.contains(v)) drop.push_back(v);
    }
    OrbitRecord target = lc_orbit(h, opts);

    VertexMinorResult out;
    std::vector<std::unordered_set<PackedKey, PackedKeyHash>> seen(drop.size() + 1);
    std::vector<Step> acc;

    std::function<bool(const SmallGraph &, std::vector<Vertex> &, size_t)> dfs =
        [&](const SmallGraph &cur, std::vector<Vertex> &labels, size_t k) -> bool {
        PackedKey key = cur.key();
        if (!seen[k].insert(key).second) return false;
        if (++out.states > opts.max_states) {
            throw SizeBoundError("vertex-minor search exceeds " + std::to_string(opts.max_states) + " states");
        }
        if (k == drop.size()) {
            auto idx = target.find(detail::to_graph_key(key, cur.n));
            if (!idx) return false;
            std::vector<Vertex> back = target.witness(*idx);
            for (auto it = back.rbegin(); it != back.rend(); ++it) acc.push_back(Step::lc(*it));
            return true;
        }
        Vertex v = drop[k];
        uint32_t vi = static_cast<uint32_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
        std::vector<Vertex> next_labels = labels;
        next_labels.erase(next_labels.begin() + vi);

        auto branch = [&](SmallGraph pre, std::vector<Step> steps, std::optional<uint32_t> post_lc) -> bool {
            SmallGraph nxt = pre.removed(vi);
            if (post_lc) {
                uint32_t w = *post_lc;
                nxt.lc(w > vi ? w - 1 : w);
                steps.push_back(Step::lc(labels[w]));
            }
            size_t mark = acc.size();
            acc.insert(acc.end(), steps.begin(), steps.end());
            if (dfs(nxt, next_labels, k + 1)) return true;
            acc.resize(mark);
            return false;
        };

        if (branch(cur, {Step::measure(v, Basis::Z)}, std::nullopt)) return true;
        if (cur.rows[vi] == 0) return false;
        SmallGraph y = cur;
        y.lc(vi);
        if (branch(y, {Step::lc(v), Step::measure(v, Basis::Z)}, std::nullopt)) return true;
        uint32_t wi = std::countr_zero(cur.rows[vi]);
        SmallGraph x = cur;
        x.lc(wi);
        x.lc(vi);
        Vertex w = labels[wi];
        return branch(x, {Step::lc(w), Step::lc(v), Step::measure(v, Basis::Z)}, wi);
    };

    std::vector<Vertex> labels = g.vertices();
    out.found = dfs(SmallGraph::from(g), labels, 0);
    if (out.found) out.witness = acc;
    return out;
}

// ---- repeater lines ----

namespace {

struct LineCandidate {
    size_t cost;
    std::vector<Vertex> line;
    bool operator<(const LineCandidate &o) const { return std::tie(cost, line) < std::tie(o.cost, o.line); }
};

bool gap_ok(const std::vector<Vertex> &line, const VertexSet &targets) {
    std::vector<size_t> pos;
    for (size_t i = 0; i < line.size(); i++) {
        if (targets.count(line[i])) pos.push_back(i);
    }
    return pos.size() == 4 && pos[0] == 0 && pos[3] + 1 == line.size() && pos[2] - pos[1] >= 2;
}

}  // namespace

std::vector<VertexPath> repeater_line_candidates(const LabeledGraph &g, const std::array<Vertex, 4> &targets,
                                                 const OrbitOptions &opts) {
    VertexSet tset(targets.begin(), targets.end());
    for (Vertex t : targets) {
        if (!g.contains(t)) throw DomainError("unknown target " + std::to_string(t));
    }
    if (tset.size() != 4) throw DomainError("need four distinct targets");
    if (g.size() > opts.line_search_max_vertices || g.size() > 64) {
        throw SizeBoundError("repeater line search: graph has " + std::to_string(g.size()) + " vertices, bound is " +
                             std::to_string(opts.line_search_max_vertices));
    }
    const size_t n = g.size();
    std::vector<uint64_t> adj(n, 0);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (g.bit(i, j)) adj[i] |= uint64_t{1} << j;
        }
    }
    uint64_t tmask = 0;
    for (Vertex t : targets) tmask |= uint64_t{1} << g.index_of(t);

    std::vector<LineCandidate> found;
    std::vector<size_t> path;
    size_t visited = 0;
    std::function<void(uint64_t)> extend = [&](uint64_t mask) {
        if (++visited > opts.max_states) {
            throw SizeBoundError("repeater line search exceeds " + std::to_string(opts.max_states) + " states");
        }
        size_t last = path.back();
        if ((mask & tmask) == tmask) {
            if (!(tmask >> last & 1) || last < path.front()) return;
            std::vector<Vertex> line;
            uint64_t nb = 0;
            for (size_t i : path) {
                line.push_back(g.label(i));
                nb |= adj[i];
            }
            if (gap_ok(line, tset)) {
                size_t outer = std::popcount(nb & ~mask);
                found.push_back({outer + line.size() - 5, line});
            }
            return;
        }
        uint64_t earlier = mask & ~(uint64_t{1} << last);
        for (uint64_t r = adj[last] & ~mask; r; r &= r - 1) {
            size_t y = std::countr_zero(r);
            if (adj[y] & earlier) continue;
            path.push_back(y);
            extend(mask | uint64_t{1} << y);
            path.pop_back();
        }
    };
    for (Vertex t : targets) {
        path.assign(1, g.index_of(t));
        extend(uint64_t{1} << path[0]);
    }
    std::sort(found.begin(), found.end());

    std::vector<VertexPath> out;
    for (auto &c : found) out.push_back(VertexPath{std::move(c.line)});
    if (!out.empty() || g.size() > opts.max_vertices) return out;

    // No induced line: look for five-vertex lines hidden as vertex-minors.
    std::array<Vertex, 4> perm = targets;
    std::sort(perm.begin(), perm.end());
    do {
        if (perm[0] > perm[3]) continue;
        for (Vertex c : g.vertices()) {
            if (tset.count(c)) continue;
            std::vector<Vertex> line{perm[0], perm[1], c, perm[2], perm[3]};
            if (vertex_minor(g, path_graph(line), opts).found) out.push_back(VertexPath{line});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::optional<VertexPath> find_repeater_line(const LabeledGraph &g, const std::array<Vertex, 4> &targets,
                                             const OrbitOptions &opts) {
    auto c = repeater_line_candidates(g, targets, opts);
    if (c.empty()) return std::nullopt;
    return c.front();
}

}  // namespace gsr
