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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gsr/errors.h"
#include "gsr/fixtures.h"
#include "test_util.h"

using namespace gsr;
using namespace gsr::tsupport;

namespace {

// Vertex-minors are exactly induced subgraphs of LC-equivalent graphs.
std::set<GraphKey> induced_over_orbit(const OrbitRecord &orbit, const VertexSet &keep) {
    std::set<GraphKey> out;
    for (size_t i = 0; i < orbit.size(); i++) out.insert(orbit.member(i).induced(keep).key());
    return out;
}

}  // namespace

TEST(Orbit, SmallSizes) {
    EXPECT_EQ(lc_orbit(graph({1, 2}, {{1, 2}})).size(), 1u);
    OrbitRecord tri = lc_orbit(fixtures::complete(3));
    EXPECT_EQ(tri.size(), 4u);
    EXPECT_TRUE(tri.contains(graph({1, 2, 3}, {{1, 2}, {1, 3}})));
    EXPECT_TRUE(tri.contains(graph({1, 2, 3}, {{2, 1}, {2, 3}})));
    EXPECT_EQ(lc_orbit(fixtures::star(3)).size(), 5u);
}

TEST(Orbit, ClosureAndWitnesses) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; trial++) {
        LabeledGraph g = fixtures::random_graph(3 + trial % 5, 0.5, rng);
        OrbitRecord orbit = lc_orbit(g);
        for (size_t i = 0; i < orbit.size(); i++) {
            LabeledGraph m = orbit.member(i);
            std::vector<Vertex> w = orbit.witness(i);
            ASSERT_EQ(local_complement(g, w), m);
            for (Vertex a : g.vertices()) ASSERT_TRUE(orbit.contains(local_complement(m, a)));
        }
        size_t i = rng() % orbit.size(), j = rng() % orbit.size();
        ASSERT_EQ(local_complement(orbit.member(i), orbit.witness(i, j)), orbit.member(j));
        ASSERT_LE(orbit.canonical_key(), orbit.key(i));
    }
}

TEST(Orbit, ButterflySequenceStaysInOrbit) {
    LabeledGraph g = fixtures::butterfly();
    OrbitRecord orbit = lc_orbit(g);
    std::vector<Vertex> seq{1, 3, 4};
    EXPECT_TRUE(orbit.contains(local_complement(g, seq)));
}

TEST(Orbit, SizeBound) {
    EXPECT_THROW(lc_orbit(fixtures::path(11)), SizeBoundError);
    OrbitOptions opts;
    opts.max_vertices = 11;
    EXPECT_NO_THROW(lc_orbit(fixtures::path(11), opts));
}

TEST(LcEquivalent, Examples) {
    LabeledGraph g = fixtures::grid(2, 3);
    Equivalence self = lc_equivalent(g, g);
    EXPECT_TRUE(self.equivalent);
    EXPECT_TRUE(self.witness.empty());

    EXPECT_FALSE(lc_equivalent(fixtures::star(3), fixtures::path(4)).equivalent);

    Equivalence one = lc_equivalent(g, local_complement(g, 2));
    EXPECT_TRUE(one.equivalent);
    EXPECT_EQ(one.witness, std::vector<Vertex>{2});

    EXPECT_THROW(lc_equivalent(fixtures::path(3), fixtures::path(4)), DomainError);
}

TEST(LcEquivalent, IsAnEquivalence) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; trial++) {
        LabeledGraph g = fixtures::random_graph(6, 0.5, rng);
        std::vector<Vertex> s1, s2;
        for (int k = 0; k < 4; k++) s1.push_back(1 + rng() % 6);
        for (int k = 0; k < 4; k++) s2.push_back(1 + rng() % 6);
        LabeledGraph h = local_complement(g, s1);
        LabeledGraph k = local_complement(h, s2);
        Equivalence gh = lc_equivalent(g, h), hg = lc_equivalent(h, g), hk = lc_equivalent(h, k);
        ASSERT_TRUE(gh.equivalent && hg.equivalent && hk.equivalent);
        std::vector<Vertex> back(gh.witness.rbegin(), gh.witness.rend());
        ASSERT_EQ(local_complement(h, back), g);
        std::vector<Vertex> chain = gh.witness;
        chain.insert(chain.end(), hk.witness.begin(), hk.witness.end());
        ASSERT_EQ(local_complement(g, chain), k);
    }
}

TEST(VertexMinor, Examples) {
    LabeledGraph g = fixtures::grid(2, 3);
    VertexMinorResult same = vertex_minor(g, g);
    EXPECT_TRUE(same.found);
    EXPECT_TRUE(same.witness.empty());

    LabeledGraph pair = graph({1, 9}, {{1, 9}});
    VertexMinorResult grid = vertex_minor(fixtures::grid3x3(), pair);
    ASSERT_TRUE(grid.found);
    EXPECT_EQ(replay(fixtures::grid3x3(), grid.witness), pair);

    EXPECT_FALSE(vertex_minor(fixtures::path(4), fixtures::star(3)).found);
    EXPECT_THROW(vertex_minor(fixtures::path(3), graph({1, 7}, {})), DomainError);
    EXPECT_THROW(vertex_minor(fixtures::path(11), graph({1, 2}, {})), SizeBoundError);
}

TEST(VertexMinor, AgreesWithInducedOrbitOracle) {
    std::vector<VertexSet> keeps{{1, 2, 3}, {1, 3, 5}, {1, 2, 4, 5}, {2, 3, 4, 5}};
    size_t yes = 0, no = 0;
    for_each_graph(5, [&](const LabeledGraph &g) {
        OrbitRecord orbit = lc_orbit(g);
        for (const VertexSet &keep : keeps) {
            std::set<GraphKey> oracle = induced_over_orbit(orbit, keep);
            std::vector<Vertex> kv(keep.begin(), keep.end());
            for_each_graph(static_cast<int>(keep.size()), [&](const LabeledGraph &h0) {
                std::map<Vertex, Vertex> relabel;
                for (size_t i = 0; i < kv.size(); i++) relabel[static_cast<Vertex>(i + 1)] = kv[i];
                LabeledGraph h = h0.relabeled(relabel);
                VertexMinorResult r = vertex_minor(g, h);
                ASSERT_EQ(r.found, oracle.count(h.key()) > 0) << g << " / " << h;
                if (r.found) {
                    ASSERT_EQ(replay(g, r.witness), h);
                    yes++;
                } else {
                    no++;
                }
            });
        }
    });
    EXPECT_GT(yes, 0u);
    EXPECT_GT(no, 0u);
}

TEST(VertexMinor, SixVertexSample) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 150; trial++) {
        LabeledGraph g = fixtures::random_graph(6, 0.5, rng);
        VertexSet keep{1, 3, 4, 6};
        std::set<GraphKey> oracle = induced_over_orbit(lc_orbit(g), keep);
        LabeledGraph h = fixtures::random_graph(4, 0.5, rng).relabeled({{1, 1}, {2, 3}, {3, 4}, {4, 6}});
        ASSERT_EQ(vertex_minor(g, h).found, oracle.count(h.key()) > 0);
    }
}

TEST(RepeaterLine, Examples) {
    auto line = find_repeater_line(fixtures::cluster12(), {1, 2, 4, 5});
    ASSERT_TRUE(line);
    EXPECT_EQ(line->vertices, fixtures::cluster12_line().vertices);

    EXPECT_FALSE(find_repeater_line(fixtures::star(3), {1, 2, 3, 4}));

    auto five = find_repeater_line(fixtures::path(5), {1, 2, 4, 5});
    ASSERT_TRUE(five);
    EXPECT_EQ(five->vertices, (std::vector<Vertex>{1, 2, 3, 4, 5}));
}

TEST(RepeaterLine, VertexMinorFallback) {
    // Triangle 2-3-c plus pendant targets: no induced line has the middle gap, a vertex-minor one does.
    LabeledGraph g = graph({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 4}});
    auto cands = repeater_line_candidates(g, {1, 2, 4, 5});
    ASSERT_FALSE(cands.empty());
    for (const VertexPath &p : cands) {
        VertexMinorResult r = vertex_minor(g, path_graph(p.vertices));
        EXPECT_TRUE(r.found);
    }
}
