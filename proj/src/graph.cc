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

#include "gsr/graph.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <ostream>

#include "gsr/errors.h"

namespace gsr {

namespace {

size_t words_for(size_t n) { return (n + 63) / 64; }

bool test(std::span<const uint64_t> w, size_t j) { return (w[j / 64] >> (j % 64)) & 1; }

// Removes bit p from a little-endian multiword bitset, shifting higher bits down by one.
void remove_bit(std::span<uint64_t> w, size_t p) {
    size_t wi = p / 64;
    size_t bi = p % 64;
    uint64_t low = bi == 0 ? 0 : (w[wi] & ((uint64_t{1} << bi) - 1));
    uint64_t high = bi == 63 ? 0 : (w[wi] >> (bi + 1)) << bi;
    w[wi] = low | high;
    for (size_t k = wi + 1; k < w.size(); k++) {
        w[k - 1] |= (w[k] & 1) << 63;
        w[k] >>= 1;
    }
}

std::string vertex_msg(const char *what, Vertex v) { return std::string(what) + " " + std::to_string(v); }

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) {
        throw DomainError(vertex_msg("self-loop on vertex", a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

char basis_name(Basis b) {
    switch (b) {
        case Basis::X:
            return 'X';
        case Basis::Y:
            return 'Y';
        case Basis::Z:
            return 'Z';
    }
    return '?';
}

Basis parse_basis(char c) {
    switch (c) {
        case 'X':
        case 'x':
            return Basis::X;
        case 'Y':
        case 'y':
            return Basis::Y;
        case 'Z':
        case 'z':
            return Basis::Z;
        default:
            throw DomainError(std::string("unknown Pauli basis '") + c + "'");
    }
}

size_t GraphKeyHash::operator()(const GraphKey &k) const noexcept {
    uint64_t h = 0x9E3779B97F4A7C15ull ^ k.words.size();
    for (uint64_t w : k.words) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

LabeledGraph::LabeledGraph(std::vector<Vertex> vertices) : labels_(std::move(vertices)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw DomainError("duplicate vertex label");
    }
    words_ = words_for(labels_.size());
    bits_.assign(labels_.size() * words_, 0);
}

LabeledGraph::LabeledGraph(std::vector<Vertex> vertices, const std::vector<Edge> &edges)
    : LabeledGraph(std::move(vertices)) {
    for (const Edge &e : edges) {
        size_t i = index_of(e.u);
        size_t j = index_of(e.v);
        if (i == j) {
            throw DomainError(vertex_msg("self-loop on vertex", e.u));
        }
        set_bit(i, j, true);
    }
}

LabeledGraph LabeledGraph::from_edges(const std::vector<Edge> &edges) {
    VertexSet vs;
    for (const Edge &e : edges) {
        vs.insert(e.u);
        vs.insert(e.v);
    }
    return LabeledGraph(std::vector<Vertex>(vs.begin(), vs.end()), edges);
}

std::optional<size_t> LabeledGraph::find_index(Vertex v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - labels_.begin());
}

bool LabeledGraph::contains(Vertex v) const { return find_index(v).has_value(); }

size_t LabeledGraph::index_of(Vertex v) const {
    auto i = find_index(v);
    if (!i) {
        throw DomainError(vertex_msg("unknown vertex", v));
    }
    return *i;
}

bool LabeledGraph::adjacent(Vertex a, Vertex b) const { return bit(index_of(a), index_of(b)); }

size_t LabeledGraph::degree(Vertex v) const {
    size_t d = 0;
    for (uint64_t w : row(index_of(v))) {
        d += std::popcount(w);
    }
    return d;
}

VertexSet LabeledGraph::neighborhood(Vertex v) const {
    size_t i = index_of(v);
    VertexSet out;
    for (size_t j = 0; j < size(); j++) {
        if (bit(i, j)) {
            out.insert(labels_[j]);
        }
    }
    return out;
}

std::vector<Edge> LabeledGraph::edge_list() const {
    std::vector<Edge> out;
    for (size_t i = 0; i < size(); i++) {
        for (size_t j = i + 1; j < size(); j++) {
            if (bit(i, j)) {
                out.push_back({labels_[i], labels_[j]});
            }
        }
    }
    return out;
}

EdgeSet LabeledGraph::edges() const {
    auto list = edge_list();
    return EdgeSet(list.begin(), list.end());
}

size_t LabeledGraph::edge_count() const {
    size_t total = 0;
    for (uint64_t w : bits_) {
        total += std::popcount(w);
    }
    return total / 2;
}

void LabeledGraph::set_bit(size_t i, size_t j, bool on) {
    uint64_t mi = uint64_t{1} << (j % 64);
    uint64_t mj = uint64_t{1} << (i % 64);
    if (on) {
        bits_[i * words_ + j / 64] |= mi;
        bits_[j * words_ + i / 64] |= mj;
    } else {
        bits_[i * words_ + j / 64] &= ~mi;
        bits_[j * words_ + i / 64] &= ~mj;
    }
}

void LabeledGraph::flip_bit(size_t i, size_t j) {
    bits_[i * words_ + j / 64] ^= uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] ^= uint64_t{1} << (i % 64);
}

LabeledGraph LabeledGraph::with_edge(Vertex a, Vertex b, bool present) const {
    size_t i = index_of(a);
    size_t j = index_of(b);
    if (i == j) {
        throw DomainError(vertex_msg("self-loop on vertex", a));
    }
    LabeledGraph out = *this;
    out.set_bit(i, j, present);
    return out;
}

LabeledGraph LabeledGraph::without_vertex(Vertex v) const {
    size_t p = index_of(v);
    size_t n = size();
    size_t new_words = words_for(n - 1);
    LabeledGraph out;
    out.labels_ = labels_;
    out.labels_.erase(out.labels_.begin() + static_cast<ptrdiff_t>(p));
    out.words_ = new_words;
    out.bits_.assign((n - 1) * new_words, 0);
    std::vector<uint64_t> scratch(words_);
    size_t r = 0;
    for (size_t i = 0; i < n; i++) {
        if (i == p) {
            continue;
        }
        auto src = row(i);
        std::copy(src.begin(), src.end(), scratch.begin());
        remove_bit(scratch, p);
        std::copy_n(scratch.begin(), new_words, out.bits_.begin() + static_cast<ptrdiff_t>(r * new_words));
        r++;
    }
    return out;
}

LabeledGraph LabeledGraph::without_vertices(const VertexSet &vs) const {
    VertexSet keep;
    for (Vertex v : labels_) {
        if (!vs.count(v)) {
            keep.insert(v);
        }
    }
    for (Vertex v : vs) {
        index_of(v);
    }
    return induced(keep);
}

LabeledGraph LabeledGraph::induced(const VertexSet &keep) const {
    std::vector<size_t> pos;
    pos.reserve(keep.size());
    for (Vertex v : keep) {
        pos.push_back(index_of(v));
    }
    LabeledGraph out{std::vector<Vertex>(keep.begin(), keep.end())};
    for (size_t a = 0; a < pos.size(); a++) {
        for (size_t b = a + 1; b < pos.size(); b++) {
            if (bit(pos[a], pos[b])) {
                out.set_bit(a, b, true);
            }
        }
    }
    return out;
}

LabeledGraph LabeledGraph::relabeled(const std::map<Vertex, Vertex> &mapping) const {
    std::vector<Vertex> labels;
    labels.reserve(size());
    for (Vertex v : labels_) {
        auto it = mapping.find(v);
        labels.push_back(it == mapping.end() ? v : it->second);
    }
    std::vector<Edge> es;
    for (const Edge &e : edge_list()) {
        es.push_back(make_edge(labels[index_of(e.u)], labels[index_of(e.v)]));
    }
    return LabeledGraph(labels, es);
}

GraphKey LabeledGraph::key() const {
    size_t n = size();
    size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    GraphKey k;
    k.words.assign(std::max<size_t>(1, (nbits + 63) / 64), 0);
    size_t idx = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, idx++) {
            if (bit(i, j)) {
                k.words[idx / 64] |= uint64_t{1} << (63 - idx % 64);
            }
        }
    }
    return k;
}

LabeledGraph LabeledGraph::from_key(std::vector<Vertex> vertices, const GraphKey &key) {
    LabeledGraph out(std::move(vertices));
    size_t n = out.size();
    size_t idx = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, idx++) {
            if ((key.words[idx / 64] >> (63 - idx % 64)) & 1) {
                out.set_bit(i, j, true);
            }
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const Edge &e) { return out << '(' << e.u << ',' << e.v << ')'; }

std::ostream &operator<<(std::ostream &out, const LabeledGraph &g) {
    out << "V={";
    for (size_t i = 0; i < g.size(); i++) {
        out << (i ? "," : "") << g.label(i);
    }
    out << "} E={";
    bool first = true;
    for (const Edge &e : g.edge_list()) {
        out << (first ? "" : ",") << e;
        first = false;
    }
    return out << '}';
}

LabeledGraph local_complement(const LabeledGraph &g, Vertex a) {
    size_t ia = g.index_of(a);
    size_t w = g.words();
    std::vector<uint64_t> nbhd(g.row(ia).begin(), g.row(ia).end());
    LabeledGraph out = g;
    for (size_t x = 0; x < g.size(); x++) {
        if (!test(nbhd, x)) {
            continue;
        }
        auto r = out.mutable_row(x);
        for (size_t k = 0; k < w; k++) {
            r[k] ^= nbhd[k];
        }
        r[x / 64] ^= uint64_t{1} << (x % 64);  // undo the self toggle
    }
    return out;
}

LabeledGraph local_complement(const LabeledGraph &g, std::span<const Vertex> sequence) {
    LabeledGraph out = g;
    for (Vertex a : sequence) {
        out = local_complement(out, a);
    }
    return out;
}

LabeledGraph measure_z(const LabeledGraph &g, Vertex v) { return g.without_vertex(v); }

LabeledGraph measure_y(const LabeledGraph &g, Vertex v) { return measure_z(local_complement(g, v), v); }

LabeledGraph measure_x(const LabeledGraph &g, Vertex v, std::optional<Vertex> w) {
    size_t iv = g.index_of(v);
    if (g.degree(v) == 0) {
        return g.without_vertex(v);
    }
    if (!w || !g.contains(*w) || !g.adjacent(v, *w)) {
        throw DomainError("X-measurement of " + std::to_string(v) + " needs a neighbor as pivot" +
                          (w ? ", got " + std::to_string(*w) : std::string()));
    }
    size_t iw = g.index_of(*w);
    size_t nw = g.words();
    std::vector<uint64_t> nv(g.row(iv).begin(), g.row(iv).end());
    std::vector<uint64_t> nwset(g.row(iw).begin(), g.row(iw).end());
    std::vector<uint64_t> both(nw), nv_minus_w = nv;
    for (size_t k = 0; k < nw; k++) {
        both[k] = nv[k] & nwset[k];
    }
    nv_minus_w[iw / 64] &= ~(uint64_t{1} << (iw % 64));

    LabeledGraph out = g;
    for (size_t x = 0; x < g.size(); x++) {
        bool in_nw = test(nwset, x);
        bool in_nv = test(nv, x);
        bool in_both = test(both, x);
        bool in_d = test(nv_minus_w, x);
        auto r = out.mutable_row(x);
        for (size_t k = 0; k < nw; k++) {
            // E(N_w, N_v) as a set of unordered pairs: x pairs with N_v if x in N_w, with N_w if x in N_v.
            uint64_t m = (in_nw ? nv[k] : 0) | (in_nv ? nwset[k] : 0);
            m ^= in_both ? both[k] : 0;
            m ^= (x == iw ? nv_minus_w[k] : 0) | (in_d && k == iw / 64 ? uint64_t{1} << (iw % 64) : 0);
            if (k == x / 64) {
                m &= ~(uint64_t{1} << (x % 64));
            }
            r[k] ^= m;
        }
    }
    return out.without_vertex(v);
}

LabeledGraph measure_x_decomposed(const LabeledGraph &g, Vertex v, std::optional<Vertex> w) {
    if (g.degree(v) == 0) {
        return g.without_vertex(v);
    }
    if (!w || !g.contains(*w) || !g.adjacent(v, *w)) {
        throw DomainError("X-measurement of " + std::to_string(v) + " needs a neighbor as pivot");
    }
    LabeledGraph h = local_complement(local_complement(g, *w), v);
    return local_complement(measure_z(h, v), *w);
}

LabeledGraph apply_measurement(const LabeledGraph &g, const MeasurementStep &step) {
    switch (step.basis) {
        case Basis::X:
            return measure_x(g, step.vertex, step.neighbor);
        case Basis::Y:
            return measure_y(g, step.vertex);
        case Basis::Z:
            return measure_z(g, step.vertex);
    }
    throw DomainError("bad basis");
}

VertexSet neighborhood(const LabeledGraph &g, Vertex a) { return g.neighborhood(a); }

VertexSet combined_neighborhood(const LabeledGraph &g, std::span<const Vertex> path) {
    VertexSet out;
    for (Vertex v : path) {
        auto n = g.neighborhood(v);
        out.insert(n.begin(), n.end());
    }
    return out;
}

EdgeSet edge_set_between(const VertexSet &a, const VertexSet &b) {
    EdgeSet out;
    for (Vertex x : a) {
        for (Vertex y : b) {
            if (x != y) {
                out.insert(make_edge(x, y));
            }
        }
    }
    return out;
}

EdgeSet symmetric_difference(const EdgeSet &e, const EdgeSet &f) {
    EdgeSet out;
    std::set_symmetric_difference(e.begin(), e.end(), f.begin(), f.end(), std::inserter(out, out.end()));
    return out;
}

EdgeSet restrict_incident(const EdgeSet &e, const VertexSet &w) {
    EdgeSet out;
    for (const Edge &x : e) {
        if (w.count(x.u) || w.count(x.v)) {
            out.insert(x);
        }
    }
    return out;
}

EdgeSet set_minus(const EdgeSet &e, const EdgeSet &f) {
    EdgeSet out;
    std::set_difference(e.begin(), e.end(), f.begin(), f.end(), std::inserter(out, out.end()));
    return out;
}

VertexSet component_of(const LabeledGraph &g, Vertex v) {
    size_t start = g.index_of(v);
    std::vector<bool> seen(g.size(), false);
    std::deque<size_t> queue{start};
    seen[start] = true;
    VertexSet out;
    while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        out.insert(g.label(x));
        for (size_t y = 0; y < g.size(); y++) {
            if (!seen[y] && g.bit(x, y)) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    return out;
}

bool is_connected(const LabeledGraph &g) { return g.empty() || component_of(g, g.label(0)).size() == g.size(); }

bool satisfies_invariants(const LabeledGraph &g) {
    size_t n = g.size();
    for (size_t i = 0; i < n; i++) {
        if (g.bit(i, i)) {
            return false;
        }
        for (size_t j = 0; j < n; j++) {
            if (g.bit(i, j) != g.bit(j, i)) {
                return false;
            }
        }
        auto r = g.row(i);
        if (n % 64 != 0 && !r.empty() && (r.back() >> (n % 64)) != 0) {
            return false;
        }
    }
    return std::is_sorted(g.vertices().begin(), g.vertices().end()) &&
           std::adjacent_find(g.vertices().begin(), g.vertices().end()) == g.vertices().end();
}

}  // namespace gsr
