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

#include "gsr/protocols.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <set>

#include "gsr/errors.h"
#include "gsr/orbit.h"

namespace gsr {

namespace {

std::string vstr(Vertex v) { return std::to_string(v); }

void require_pair(const LabeledGraph &g, Vertex a, Vertex b) {
    if (!g.contains(a) || !g.contains(b)) {
        throw DomainError("unknown terminal " + vstr(g.contains(a) ? b : a));
    }
    if (a == b) {
        throw DomainError("terminals must differ");
    }
}

VertexSet outer_neighbors(const LabeledGraph &g, std::initializer_list<Vertex> keep) {
    VertexSet out;
    for (Vertex k : keep) {
        for (Vertex u : g.neighborhood(k)) out.insert(u);
    }
    for (Vertex k : keep) out.erase(k);
    return out;
}

EprResult finish_epr(TranscriptBuilder &tb, const VertexPath &path) {
    Vertex a = path.source(), b = path.sink();
    const LabeledGraph &f = tb.current();
    if (f.neighborhood(a) != VertexSet{b} || f.neighborhood(b) != VertexSet{a}) {
        throw std::logic_error("EPR protocol did not isolate the pair " + vstr(a) + "," + vstr(b));
    }
    EprResult r;
    r.transcript = tb.finish(true);
    r.path = path;
    r.pair = make_edge(a, b);
    r.residual = r.transcript.final_graph.without_vertices(VertexSet{a, b});
    return r;
}

void require_shortest(const LabeledGraph &g, const VertexPath &path) {
    if (!is_shortest_path(g, path.vertices)) {
        throw DomainError("path is not a shortest path of the graph");
    }
}

}  // namespace

size_t repeater_count(const LabeledGraph &g, const VertexPath &path) {
    return combined_neighborhood(g, path.vertices).size() - 2;
}

LabeledGraph measure_path_interior(const LabeledGraph &g, const VertexPath &path) {
    LabeledGraph h = g;
    for (Vertex v : path.interior()) {
        h = measure_x(h, v, path.source());
    }
    return h;
}

size_t x_protocol_count(const LabeledGraph &g, const VertexPath &path) {
    LabeledGraph h = measure_path_interior(g, path);
    return path.interior().size() + outer_neighbors(h, {path.source(), path.sink()}).size();
}

EprResult repeater_protocol(const LabeledGraph &g, const VertexPath &path, const ProtocolOptions &opts) {
    require_shortest(g, path);
    Vertex a = path.source(), b = path.sink();
    TranscriptBuilder tb("repeater", g, {a, b}, opts.keep_snapshots);
    VertexSet on_path(path.vertices.begin(), path.vertices.end());
    for (Vertex u : combined_neighborhood(g, path.vertices)) {
        if (!on_path.count(u)) tb.measure(u, Basis::Z);
    }
    for (Vertex v : path.interior()) {
        tb.measure(v, Basis::X, a);
    }
    return finish_epr(tb, path);
}

EprResult repeater_protocol(const LabeledGraph &g, Vertex a, Vertex b, const ProtocolOptions &opts) {
    require_pair(g, a, b);
    PathChoice choice = min_neighborhood_shortest_path(g, a, b, opts.path);
    EprResult r = repeater_protocol(g, choice.path, opts);
    if (!choice.exact) {
        r.transcript.notes.push_back("path chosen greedily: shortest-path count above enumeration cap");
    }
    return r;
}

namespace {

EprResult run_x_protocol(const LabeledGraph &g, const VertexPath &path, const ProtocolOptions &opts) {
    Vertex a = path.source(), b = path.sink();
    TranscriptBuilder tb("x", g, {a, b}, opts.keep_snapshots);
    for (Vertex v : path.interior()) {
        tb.measure(v, Basis::X, a);
    }
    for (Vertex u : outer_neighbors(tb.current(), {a, b})) {
        tb.measure(u, Basis::Z);
    }
    return finish_epr(tb, path);
}

}  // namespace

EprResult x_protocol(const LabeledGraph &g, const VertexPath &path, const ProtocolOptions &opts) {
    require_shortest(g, path);
    return run_x_protocol(g, path, opts);
}

EprResult x_protocol(const LabeledGraph &g, Vertex a, Vertex b, const ProtocolOptions &opts) {
    require_pair(g, a, b);
    PathCandidates cands = min_neighborhood_candidates(g, a, b, opts.path);
    bool truncated = cands.paths.size() > opts.candidate_cap;
    if (truncated) cands.paths.resize(opts.candidate_cap);
    size_t best = 0, best_count = SIZE_MAX;
    for (size_t i = 0; i < cands.paths.size() && cands.paths.size() > 1; i++) {
        size_t c = x_protocol_count(g, cands.paths[i]);
        if (c < best_count) {
            best = i;
            best_count = c;
        }
    }
    EprResult r = run_x_protocol(g, cands.paths[best], opts);
    if (!cands.exact) r.transcript.notes.push_back("path chosen greedily: shortest-path count above enumeration cap");
    if (truncated) r.transcript.notes.push_back("path candidates truncated to " + std::to_string(opts.candidate_cap));
    return r;
}

XProtocolAudit audit_x_protocol(const LabeledGraph &g, const VertexPath &path) {
    require_shortest(g, path);
    XProtocolAudit out;
    const auto &p = path.vertices;
    const size_t l = p.size();
    Vertex a = p.front(), b = p.back();
    VertexSet comb0 = combined_neighborhood(g, p);

    LabeledGraph prev = g;
    for (size_t t = 1; t + 1 < l; t++) {
        LabeledGraph cur = measure_x(prev, p[t], a);
        VertexSet expect = prev.neighborhood(p[t]);
        expect.erase(a);
        if (cur.neighborhood(a) != expect) out.pivot_recursion = false;
        if (t + 2 < l && cur.neighborhood(p[t + 2]) != g.neighborhood(p[t + 2])) out.far_untouched = false;
        prev = std::move(cur);
    }
    VertexSet fin = prev.neighborhood(a);
    for (Vertex u : prev.neighborhood(b)) fin.insert(u);
    for (Vertex v : path.interior()) {
        if (!comb0.count(v) || fin.count(v)) out.interior_excluded = false;
    }
    bool subset = std::includes(comb0.begin(), comb0.end(), fin.begin(), fin.end());
    out.subset_claim = subset && (l < 3 || fin.size() < comb0.size());

    fin.erase(a);
    fin.erase(b);
    out.x_count = (l - 2) + fin.size();
    out.repeater_count = comb0.size() - 2;
    out.count_inequality = out.x_count <= out.repeater_count;
    return out;
}

LcZForm lemma1_decompose(const LabeledGraph &g, const VertexPath &path) {
    require_shortest(g, path);
    LcZForm f;
    if (path.length() <= 2) return f;
    const auto &p = path.vertices;
    f.local_complements.assign(p.begin(), p.end() - 1);
    f.local_complements.push_back(p.front());
    f.z_measurements.assign(path.interior().begin(), path.interior().end());
    return f;
}

LabeledGraph apply_lc_z_form(const LabeledGraph &g, const LcZForm &form) {
    LabeledGraph h = local_complement(g, form.local_complements);
    for (Vertex v : form.z_measurements) h = measure_z(h, v);
    return h;
}

bool is_isolated_component(const LabeledGraph &g, const VertexSet &vs) {
    if (vs.empty() || !g.contains(*vs.begin())) return false;
    return component_of(g, *vs.begin()) == vs;
}

bool is_ghz4_graph(const LabeledGraph &g) {
    if (g.size() != 4) return false;
    size_t m = g.edge_count();
    if (m == 6) return true;
    if (m != 3) return false;
    for (Vertex v : g.vertices()) {
        if (g.degree(v) == 3) return true;
    }
    return false;
}

// ---- GHZ3 ----

namespace {

enum class Ghz3Case { OnPath, Neighborhood, Outside };

// One pass of the case analysis with roles (a,b,c). Variants 1-4 force the leg step of case (iii)
// and vary its leg and the pre-clean; they only run when variant 0 failed.
std::optional<ProtocolTranscript> ghz3_attempt(const LabeledGraph &g, Vertex a, Vertex b, Vertex c, int variant,
                                               const std::vector<Vertex> &targets, const ProtocolOptions &opts) {
    TranscriptBuilder tb("ghz3", g, targets, opts.keep_snapshots);
    try {
        std::vector<VertexPath> through;
        try {
            for (VertexPath &p : all_shortest_paths(g, PathQuery{a, b, {}}, opts.path.enumeration_cap)) {
                if (std::find(p.vertices.begin(), p.vertices.end(), c) != p.vertices.end()) {
                    through.push_back(std::move(p));
                }
            }
        } catch (const SizeBoundError &) {
            VertexPath p = min_neighborhood_shortest_path(g, a, b, opts.path).path;
            if (std::find(p.vertices.begin(), p.vertices.end(), c) != p.vertices.end()) through.push_back(p);
            tb.note("path chosen greedily: shortest-path count above enumeration cap");
        }
        if (!through.empty()) {
            if (variant != 0) return std::nullopt;
            const VertexPath *best = &through.front();
            size_t best_size = SIZE_MAX;
            for (const VertexPath &p : through) {
                size_t s = combined_neighborhood(g, p.vertices).size();
                if (s < best_size) {
                    best = &p;
                    best_size = s;
                }
            }
            const auto &p = best->vertices;
            size_t i = std::find(p.begin(), p.end(), c) - p.begin();
            for (size_t k = 1; k < i; k++) tb.measure(p[k], Basis::X, a);
            for (size_t k = p.size() - 2; k > i; k--) tb.measure(p[k], Basis::X, b);
        } else {
            PathChoice choice = min_neighborhood_shortest_path(g, a, b, opts.path);
            VertexSet comb = combined_neighborhood(g, choice.path.vertices);
            if (!choice.exact) tb.note("path chosen greedily: shortest-path count above enumeration cap");
            if (variant == 1 && !comb.count(c)) return std::nullopt;
            for (Vertex v : choice.path.interior()) tb.measure(v, Basis::X, a);
            if (!(comb.count(c) && variant == 0)) {
                auto da = distance(tb.current(), a, c), db = distance(tb.current(), b, c);
                bool toward_b = db && (!da || *db <= *da);
                Vertex p = toward_b ? b : a, q = toward_b ? a : b;
                if (variant == 2 || variant == 4) std::swap(p, q);
                if (variant <= 2) {
                    for (Vertex u : tb.current().neighborhood(q)) {
                        if (u != p) tb.measure(u, Basis::Z);
                    }
                }
                if (!distance(tb.current(), p, c)) return std::nullopt;
                VertexPath leg = min_neighborhood_shortest_path(tb.current(), p, c, opts.path).path;
                for (Vertex v : leg.interior()) tb.measure(v, Basis::X, p);
            }
        }
        for (Vertex u : outer_neighbors(tb.current(), {a, b, c})) tb.measure(u, Basis::Z);
    } catch (const DomainError &) {
        return std::nullopt;
    }
    VertexSet want{a, b, c};
    if (!is_isolated_component(tb.current(), want)) return std::nullopt;
    return tb.finish(true);
}

bool on_some_shortest_path(const LabeledGraph &g, Vertex a, Vertex b, Vertex c) {
    auto ab = distance(g, a, b), ac = distance(g, a, c), cb = distance(g, c, b);
    return ab && ac && cb && *ac + *cb == *ab;
}

}  // namespace

ProtocolTranscript ghz3_extract(const LabeledGraph &g, Vertex a, Vertex b, Vertex c, const ProtocolOptions &opts) {
    for (Vertex v : {a, b, c}) {
        if (!g.contains(v)) throw DomainError("unknown target " + vstr(v));
    }
    if (a == b || b == c || a == c) throw DomainError("GHZ3 needs three distinct targets");
    if (!distance(g, a, b) || !distance(g, a, c)) throw DomainError("targets are not in one connected component");

    const std::vector<Vertex> targets{a, b, c};
    const std::array<std::array<Vertex, 3>, 3> roles{{{a, b, c}, {a, c, b}, {b, c, a}}};
    // Case (i) under any role assignment first, then the remaining cases.
    for (const auto &r : roles) {
        if (on_some_shortest_path(g, r[0], r[1], r[2])) {
            if (auto t = ghz3_attempt(g, r[0], r[1], r[2], 0, targets, opts)) return *t;
        }
    }
    for (int variant = 0; variant < 5; variant++) {
        for (const auto &r : roles) {
            if (on_some_shortest_path(g, r[0], r[1], r[2])) continue;
            if (auto t = ghz3_attempt(g, r[0], r[1], r[2], variant, targets, opts)) {
                if (variant != 0) t->notes.push_back("fallback variant " + std::to_string(variant));
                return *t;
            }
        }
    }
    TranscriptBuilder tb("ghz3", g, targets, opts.keep_snapshots);
    tb.note("no plan isolated the three targets");
    return tb.finish(false);
}

// ---- GHZ4 ----

namespace {

struct LineShape {
    std::vector<Vertex> line;         // trimmed to the span between the outer targets
    std::array<size_t, 4> positions;  // target positions along `line`
};

LineShape shape_line(const LabeledGraph &g, const std::array<Vertex, 4> &targets, const VertexPath &given) {
    VertexSet seen;
    for (Vertex v : given.vertices) {
        if (!g.contains(v)) throw HypothesisError("line vertex " + vstr(v) + " is not in the graph");
        if (!seen.insert(v).second) throw HypothesisError("line repeats vertex " + vstr(v));
    }
    std::vector<size_t> pos;
    for (Vertex t : targets) {
        auto it = std::find(given.vertices.begin(), given.vertices.end(), t);
        if (it == given.vertices.end()) throw HypothesisError("line misses target " + vstr(t));
        pos.push_back(it - given.vertices.begin());
    }
    std::sort(pos.begin(), pos.end());
    LineShape s;
    s.line.assign(given.vertices.begin() + pos[0], given.vertices.begin() + pos[3] + 1);
    for (size_t i = 0; i < 4; i++) s.positions[i] = pos[i] - pos[0];
    if (s.positions[2] - s.positions[1] < 2) {
        throw HypothesisError("no extra line node between the second and third targets");
    }
    return s;
}

bool is_exact_line(const LabeledGraph &g, const std::vector<Vertex> &line) {
    VertexSet vs(line.begin(), line.end());
    return is_isolated_component(g, vs) && g.induced(vs) == path_graph(line);
}

// Finds X-measurements of `drop` (with pivots) leaving exactly `line5` as a component.
class IsolationSearch {
   public:
    IsolationSearch(std::vector<Vertex> line5, size_t cap) : line5_(std::move(line5)), cap_(cap) {}

    std::optional<std::vector<Step>> run(const LabeledGraph &g, std::vector<Vertex> drop) {
        seen_.clear();
        leaves_ = 0;
        std::vector<Step> acc;
        if (dfs(g, drop, acc)) return acc;
        return std::nullopt;
    }

   private:
    bool dfs(const LabeledGraph &g, std::vector<Vertex> &drop, std::vector<Step> &acc) {
        if (drop.empty()) {
            leaves_++;
            return is_exact_line(g, line5_);
        }
        if (leaves_ >= cap_) return false;
        if (!seen_.insert({g.vertices(), g.key().words}).second) return false;
        for (size_t i = 0; i < drop.size(); i++) {
            Vertex v = drop[i];
            VertexSet nv = g.neighborhood(v);
            if (nv.empty()) continue;
            drop.erase(drop.begin() + i);
            for (Vertex w : nv) {
                acc.push_back(Step::measure(v, Basis::X, w));
                if (dfs(measure_x(g, v, w), drop, acc)) return true;
                acc.pop_back();
            }
            drop.insert(drop.begin() + i, v);
        }
        return false;
    }

    std::vector<Vertex> line5_;
    size_t cap_;
    size_t leaves_ = 0;
    std::set<std::pair<std::vector<Vertex>, std::vector<uint64_t>>> seen_;
};

// Ends-inward X plan: outer runs contract toward their end target, inner runs toward their left keeper.
std::vector<Step> canonical_isolation(const std::vector<Vertex> &line, const VertexSet &keep) {
    std::vector<size_t> kp;
    for (size_t i = 0; i < line.size(); i++) {
        if (keep.count(line[i])) kp.push_back(i);
    }
    std::vector<Step> out;
    for (size_t s = 0; s + 1 < kp.size(); s++) {
        size_t lo = kp[s], hi = kp[s + 1];
        if (s + 2 == kp.size() && s != 0) {
            for (size_t i = hi - 1; i > lo; i--) out.push_back(Step::measure(line[i], Basis::X, line[hi]));
        } else {
            for (size_t i = lo + 1; i < hi; i++) out.push_back(Step::measure(line[i], Basis::X, line[lo]));
        }
    }
    return out;
}

std::optional<std::vector<Step>> try_steps(const LabeledGraph &g, const std::vector<Step> &steps,
                                           const std::vector<Vertex> &line5) {
    try {
        if (is_exact_line(replay(g, steps), line5)) return steps;
    } catch (const DomainError &) {
    }
    return std::nullopt;
}

ProtocolTranscript ghz4_on_line(const LabeledGraph &g, const std::array<Vertex, 4> &targets, const VertexPath &given,
                                const Ghz4Options &opts) {
    LineShape s = shape_line(g, targets, given);
    const auto &L = s.line;
    TranscriptBuilder tb("ghz4", g, std::vector<Vertex>(targets.begin(), targets.end()), opts.protocol.keep_snapshots);
    VertexSet lv(L.begin(), L.end());

    if (is_path(g, L)) {
        bool chords = g.induced(lv).edge_count() + 1 != L.size();
        if (chords) {
            if (g.size() > opts.vertex_minor_bound) {
                tb.note("line has chords; trusted without vertex-minor check");
            } else {
                OrbitOptions oo;
                oo.max_vertices = opts.vertex_minor_bound;
                if (!vertex_minor(g, path_graph(L), oo).found) {
                    throw HypothesisError("the given line is not a vertex-minor of the graph");
                }
                tb.note("line with chords validated by vertex-minor search");
            }
        }
        for (Vertex u : combined_neighborhood(g, L)) {
            if (!lv.count(u)) tb.measure(u, Basis::Z);
        }
    } else {
        if (g.size() > opts.vertex_minor_bound) {
            throw HypothesisError("line is not a path of the graph and the graph exceeds the vertex-minor bound");
        }
        OrbitOptions oo;
        oo.max_vertices = opts.vertex_minor_bound;
        VertexMinorResult vm = vertex_minor(g, path_graph(L), oo);
        if (!vm.found) throw HypothesisError("the given line is not a vertex-minor of the graph");
        for (const Step &st : vm.witness) tb.apply(st);
        tb.note("line extracted by vertex-minor search");
    }

    // Reduce the isolated line to (t1, t2, center, t3, t4).
    const LabeledGraph isolated = tb.current();
    std::optional<std::vector<Step>> plan;
    Vertex center = 0;
    for (size_t i = s.positions[1] + 1; i < s.positions[2] && !plan; i++) {
        center = L[i];
        std::vector<Vertex> line5{L[s.positions[0]], L[s.positions[1]], center, L[s.positions[2]], L[s.positions[3]]};
        VertexSet keep(line5.begin(), line5.end());
        std::vector<Vertex> drop;
        for (Vertex v : L) {
            if (!keep.count(v)) drop.push_back(v);
        }
        plan = try_steps(isolated, canonical_isolation(L, keep), line5);
        if (!plan) plan = IsolationSearch(line5, opts.isolation_cap).run(isolated, drop);
        if (!plan && isolated.size() <= opts.vertex_minor_bound) {
            OrbitOptions oo;
            oo.max_vertices = opts.vertex_minor_bound;
            VertexMinorResult vm = vertex_minor(isolated.induced(lv), path_graph(line5), oo);
            if (vm.found) plan = vm.witness;
        }
    }
    if (!plan) throw HypothesisError("could not reduce the line to the four targets around an extra node");
    for (const Step &st : *plan) tb.apply(st);

    tb.lc(L[s.positions[1]]);
    tb.lc(center);
    tb.lc(L[s.positions[2]]);
    tb.measure(center, Basis::Z);

    VertexSet tset(targets.begin(), targets.end());
    bool ok = is_isolated_component(tb.current(), tset) && is_ghz4_graph(tb.current().induced(tset));
    if (!ok) throw std::logic_error("GHZ4 extraction ended outside the star orbit");
    return tb.finish(true);
}

}  // namespace

ProtocolTranscript ghz4_extract(const LabeledGraph &g, const std::array<Vertex, 4> &targets,
                                const std::optional<VertexPath> &line, const Ghz4Options &opts) {
    VertexSet tset;
    for (Vertex t : targets) {
        if (!g.contains(t)) throw DomainError("unknown target " + vstr(t));
        tset.insert(t);
    }
    if (tset.size() != 4) throw DomainError("GHZ4 needs four distinct targets");

    if (is_isolated_component(g, tset) && is_ghz4_graph(g.induced(tset))) {
        TranscriptBuilder tb("ghz4", g, std::vector<Vertex>(targets.begin(), targets.end()),
                             opts.protocol.keep_snapshots);
        tb.note("targets already form a GHZ4 component");
        return tb.finish(true);
    }
    if (line) return ghz4_on_line(g, targets, *line, opts);

    OrbitOptions oo;
    oo.max_vertices = opts.vertex_minor_bound;
    std::vector<VertexPath> cands = repeater_line_candidates(g, targets, oo);
    if (cands.empty()) {
        throw HypothesisError("no repeater line through the targets with an extra node between the target pairs");
    }
    for (const VertexPath &c : cands) {
        try {
            return ghz4_on_line(g, targets, c, opts);
        } catch (const HypothesisError &) {
        }
    }
    throw HypothesisError("no candidate repeater line could be isolated");
}

// ---- two pairs ----

std::vector<Step> butterfly_sequence() {
    return {Step::lc(1), Step::lc(3), Step::lc(4), Step::measure(3, Basis::Z), Step::measure(4, Basis::Z)};
}

bool two_pairs_established(const LabeledGraph &g, const std::array<Edge, 2> &pairs) {
    for (const Edge &e : pairs) {
        if (!g.contains(e.u) || !g.contains(e.v)) return false;
        if (g.neighborhood(e.u) != VertexSet{e.v} || g.neighborhood(e.v) != VertexSet{e.u}) return false;
    }
    return true;
}

ProtocolTranscript butterfly_route(const LabeledGraph &g, const std::array<Edge, 2> &pairs,
                                   const std::vector<Step> &sequence) {
    std::vector<Step> seq = sequence.empty() ? butterfly_sequence() : sequence;
    std::vector<Vertex> terms{pairs[0].u, pairs[0].v, pairs[1].u, pairs[1].v};
    TranscriptBuilder tb("two-pair", g, terms);
    try {
        for (const Step &s : seq) tb.apply(s);
    } catch (const DomainError &e) {
        tb.note(std::string("sequence not applicable: ") + e.what());
        return tb.finish(false);
    }
    return tb.finish(two_pairs_established(tb.current(), pairs));
}

}  // namespace gsr
