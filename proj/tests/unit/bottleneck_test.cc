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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gsr/errors.h"
#include "gsr/fixtures.h"
#include "gsr/graph_io.h"
#include "gsr/orbit.h"
#include "test_util.h"

using namespace gsr;
using namespace gsr::tsupport;

namespace {

using Path = std::vector<Vertex>;

void simple_paths(const PairSet &e, Vertex cur, Vertex goal, Path &stack, std::vector<Path> &out) {
    if (cur == goal) {
        out.push_back(stack);
        return;
    }
    for (Vertex n : nbrs(e, cur)) {
        if (std::find(stack.begin(), stack.end(), n) != stack.end()) continue;
        stack.push_back(n);
        simple_paths(e, n, goal, stack, out);
        stack.pop_back();
    }
}

std::set<std::pair<Vertex, Vertex>> path_edges(const Path &p) {
    std::set<std::pair<Vertex, Vertex>> out;
    for (size_t i = 0; i + 1 < p.size(); i++) out.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
    return out;
}

// Brute force over pairs of simple paths.
bool oracle_bottleneck(const LabeledGraph &g, Edge p1, Edge p2) {
    PairSet e = pair_set(g);
    std::vector<Path> a, b;
    Path s1{p1.u}, s2{p2.u};
    simple_paths(e, p1.u, p1.v, s1, a);
    simple_paths(e, p2.u, p2.v, s2, b);
    for (const Path &x : a) {
        auto ex = path_edges(x);
        for (const Path &y : b) {
            bool clash = false;
            for (auto pe : path_edges(y)) clash = clash || ex.count(pe);
            if (!clash) return false;
        }
    }
    return true;
}

bool oracle_solvable(const TwoPairInstance &inst) {
    OrbitRecord orbit = lc_orbit(inst.graph);
    GraphKey want = inst.target().key();
    for (size_t i = 0; i < orbit.size(); i++) {
        if (orbit.member(i).induced(inst.terminals()).key() == want) return true;
    }
    return false;
}

TwoPairInstance inst(LabeledGraph g, Vertex a, Vertex b, Vertex c, Vertex d) {
    return {std::move(g), make_edge(a, b), make_edge(c, d)};
}

}  // namespace

TEST(Bottleneck, Examples) {
    EXPECT_FALSE(has_bottleneck(inst(graph({1, 2, 3, 4}, {{1, 2}, {3, 4}}), 1, 2, 3, 4)));
    EXPECT_TRUE(has_bottleneck(inst(fixtures::butterfly(), 1, 6, 2, 5)));
    // C6: pairs on two disjoint arcs are fine, interleaved pairs always share an edge.
    EXPECT_FALSE(has_bottleneck(inst(fixtures::cycle(6), 1, 3, 4, 6)));
    EXPECT_TRUE(has_bottleneck(inst(fixtures::cycle(6), 1, 4, 2, 5)));
    // Two pairs forced through one edge.
    EXPECT_TRUE(has_bottleneck(inst(fixtures::path(4), 1, 4, 2, 3)));
    EXPECT_TRUE(has_bottleneck(inst(graph({1, 2, 3, 4}, {{1, 2}}), 1, 2, 3, 4)));
}

TEST(Bottleneck, AgreesWithPathPairOracle) {
    std::mt19937_64 rng(77);
    auto des = all_designations(6);
    for (int trial = 0; trial < 400; trial++) {
        LabeledGraph g = indexed_graph(6, rng() % (uint64_t{1} << 15));
        const Designation &d = des[rng() % des.size()];
        ASSERT_EQ(has_bottleneck({g, d.pair1, d.pair2}), oracle_bottleneck(g, d.pair1, d.pair2)) << g;
    }
}

TEST(Bottleneck, Validation) {
    EXPECT_THROW(inst(fixtures::path(4), 1, 2, 2, 3).validate(), DomainError);
    EXPECT_THROW(inst(fixtures::path(4), 1, 2, 3, 9).validate(), DomainError);
    TwoPairInstance ok = inst(fixtures::path(6), 1, 6, 2, 5);
    EXPECT_EQ(ok.measurable(), (std::vector<Vertex>{3, 4}));
    EXPECT_EQ(ok.target(), graph({1, 2, 5, 6}, {{1, 6}, {2, 5}}));
    EXPECT_THROW(solvable(ok, 3), DomainError);
}

TEST(Solvable, Examples) {
    TwoPairInstance bf = inst(fixtures::butterfly(), 1, 6, 2, 5);
    Solvability s = solvable(bf, 2);
    ASSERT_TRUE(s.solvable);
    EXPECT_TRUE(witness_valid(bf, s.witness));

    // Already two disjoint edges: nothing to do.
    TwoPairInstance done = inst(graph({1, 2, 3, 4}, {{1, 2}, {3, 4}}), 1, 2, 3, 4);
    Solvability d = solvable(done, 0);
    EXPECT_TRUE(d.solvable);
    EXPECT_TRUE(d.witness.empty());

    // Connected with nothing to measure: LCs alone never split it.
    EXPECT_FALSE(solvable(inst(fixtures::path(4), 1, 4, 2, 3), 0).solvable);
    EXPECT_FALSE(witness_valid(bf, {}));
}

TEST(Solvable, AgreesWithInducedOrbitOracle) {
    std::mt19937_64 rng(5);
    auto des = all_designations(6);
    for (int trial = 0; trial < 300; trial++) {
        LabeledGraph g = indexed_graph(6, rng() % (uint64_t{1} << 15));
        const Designation &d = des[rng() % des.size()];
        TwoPairInstance in{g, d.pair1, d.pair2};
        Solvability s = solvable(in, 2, false);
        ASSERT_EQ(s.solvable, oracle_solvable(in)) << g;
    for (uint64_t i = 0; i < (uint64_t{1} << 10); i += 37) {
        EXPECT_EQ(graph_index(indexed_graph(5, i)), i);
    }
    }
}

TEST(Solvable, PruneDoesNotChangeAnswers) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; trial++) {
        LabeledGraph g = indexed_graph(6, rng() % (uint64_t{1} << 15));
        TwoPairInstance in = inst(g, 1, 6, 2, 5);
        ASSERT_EQ(solvable(in, 2, true).solvable, solvable(in, 2, false).solvable) << g;
    }
}

TEST(GraphIndex, RoundTripAndOrder) {
    EXPECT_EQ(indexed_graph(4, 1), graph({1, 2, 3, 4}, {{1, 2}}));
    EXPECT_EQ(indexed_graph(4, 2), graph({1, 2, 3, 4}, {{1, 3}}));
    EXPECT_EQ(indexed_graph(4, 4), graph({1, 2, 3, 4}, {{2, 3}}));
    for (uint64_t i = 0; i < (uint64_t{1} << 10); i += 37) EXPECT_EQ(graph_index(indexed_graph(5, i)), i);
    EXPECT_EQ(write_graph6(indexed_graph(6, 10854)), "EXdO");
    EXPECT_EQ(indexed_graph(6, 10854), fixtures::butterfly());
    EXPECT_THROW(indexed_graph(12, 0), SizeBoundError);
}

TEST(Designations, Counts) {
    EXPECT_EQ(all_designations(4).size(), 3u);
    EXPECT_EQ(all_designations(5).size(), 15u);
    EXPECT_EQ(all_designations(6).size(), 45u);
    std::set<std::pair<Edge, Edge>> seen;
    for (const Designation &d : all_designations(6)) {
        EXPECT_LT(d.pair1, d.pair2);
        EXPECT_TRUE(seen.insert({d.pair1, d.pair2}).second);
    }
}

TEST(Scan, FiveVerticesHasNoHits) {
    ScanOptions opts;
    opts.n = 5;
    ScanSummary s = scan_all(opts);
    EXPECT_EQ(s.designations.size(), 15u);
    EXPECT_EQ(s.graphs_scanned, 1024u);
    EXPECT_EQ(s.instances, 15u * 1024u);
    EXPECT_TRUE(s.hits.empty());
}

TEST(Scan, SixVerticesDefaultPairs) {
    ScanOptions opts;
    opts.n = 6;
    ScanSummary s = scan_all(opts);
    ASSERT_EQ(s.hits.size(), 4u);
    std::vector<uint64_t> idx;
    for (const SearchReport &r : s.hits) {
        idx.push_back(r.graph_index);
        EXPECT_TRUE(r.has_bottleneck);
        EXPECT_TRUE(witness_valid(r.instance, r.witness));
        EXPECT_TRUE(oracle_solvable(r.instance));
        EXPECT_TRUE(oracle_bottleneck(r.instance.graph, r.instance.pair1, r.instance.pair2));
    }
    EXPECT_EQ(idx, (std::vector<uint64_t>{6520, 10854, 21037, 24883}));
    nlohmann::json j = scan_to_json(s);
    EXPECT_FALSE(j.contains("seconds"));
    EXPECT_EQ(j["total_hits"], 4);
    EXPECT_EQ(j["hits"][1]["graph6"], "EXdO");
    EXPECT_TRUE(scan_to_json(s, true).contains("seconds"));
}

TEST(Scan, WorkersGiveSameResult) {
    ScanOptions a;
    a.n = 5;
    a.all_pairings = true;
    ScanOptions b = a;
    b.workers = 3;
    EXPECT_EQ(scan_to_json(scan_all(a)).dump(), scan_to_json(scan_all(b)).dump());
}
