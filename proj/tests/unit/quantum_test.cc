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

#include "gsr/quantum.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gsr/errors.h"
#include "gsr/fixtures.h"
#include "test_util.h"

using namespace gsr;
using namespace gsr::tsupport;

namespace {

constexpr double kTol = 1e-10;

const Mat2 kZ{1, 0, 0, -1};

int edges_inside(const LabeledGraph &g, uint64_t x) {
    int count = 0;
    for (const Edge &e : g.edge_list()) {
        if (((x >> g.index_of(e.u)) & 1) && ((x >> g.index_of(e.v)) & 1)) count++;
    }
    return count;
}

QuantumState corrected(QuantumState s, const std::map<Vertex, int> &assignment) {
    for (auto [v, c] : assignment) s.apply(s.qubit_of(v), single_qubit_cliffords()[c]);
    return s;
}

}  // namespace

TEST(GraphState, Amplitudes) {
    QuantumState one = prepare_graph_state(graph({1}, {}));
    EXPECT_NEAR(std::abs(one.amplitudes()[0] - 1 / std::sqrt(2.0)), 0, kTol);
    EXPECT_NEAR(std::abs(one.amplitudes()[1] - 1 / std::sqrt(2.0)), 0, kTol);

    QuantumState edge = prepare_graph_state(graph({1, 2}, {{1, 2}}));
    std::vector<double> want{0.5, 0.5, 0.5, -0.5};
    for (size_t i = 0; i < 4; i++) EXPECT_NEAR(std::abs(edge.amplitudes()[i] - want[i]), 0, kTol);

    std::mt19937_64 rng(4);
    for (LabeledGraph g : {fixtures::complete(3), fixtures::random_graph(7, 0.5, rng)}) {
        QuantumState s = prepare_graph_state(g);
        double mag = std::pow(2.0, -0.5 * static_cast<double>(g.size()));
        for (uint64_t x = 0; x < s.amplitudes().size(); x++) {
            double sign = edges_inside(g, x) % 2 ? -1 : 1;
            ASSERT_NEAR(std::abs(s.amplitudes()[x] - sign * mag), 0, kTol);
        }
        EXPECT_NEAR(s.norm(), 1, kTol);
    }
    EXPECT_THROW(prepare_graph_state(fixtures::path(15)), SizeBoundError);
}

TEST(LcUnitary, MatchesLocalComplement) {
    LabeledGraph lone = graph({1, 2}, {});
    EXPECT_NEAR(fidelity(apply_lc_unitary(prepare_graph_state(lone), lone, 1), prepare_graph_state(lone)), 1, kTol);

    LabeledGraph tri = fixtures::complete(3);
    QuantumState t = apply_lc_unitary(prepare_graph_state(tri), tri, 1);
    EXPECT_NEAR(fidelity(t, prepare_graph_state(graph({1, 2, 3}, {{1, 2}, {1, 3}}))), 1, kTol);

    std::mt19937_64 rng(8);
    LabeledGraph g = fixtures::random_graph(8, 0.5, rng);
    QuantumState s = prepare_graph_state(g);
    for (Vertex a : g.vertices()) {
        QuantumState u = apply_lc_unitary(s, g, a);
        EXPECT_NEAR(u.norm(), 1, kTol);
        EXPECT_NEAR(fidelity(u, prepare_graph_state(local_complement(g, a))), 1, kTol);
        // Involution: LC at a of tau_a(g) undoes it.
        QuantumState back = apply_lc_unitary(u, local_complement(g, a), a);
        EXPECT_NEAR(fidelity(back, s), 1, kTol);
    }
}

TEST(Measure, Examples) {
    MeasurementOutcome z = measure_pauli(prepare_graph_state(graph({1}, {})), 1, Basis::Z, 1);
    EXPECT_NEAR(z.probability, 0.5, kTol);
    EXPECT_EQ(z.state.qubits(), 0u);

    MeasurementOutcome e = measure_pauli(prepare_graph_state(graph({1, 2}, {{1, 2}})), 1, Basis::Z, 1);
    EXPECT_NEAR(e.probability, 0.5, kTol);
    EXPECT_NEAR(fidelity(e.state, prepare_graph_state(graph({2}, {}))), 1, kTol);
    EXPECT_NEAR(e.state.norm(), 1, kTol);

    // Isolated qubit in X: +1 is certain, -1 impossible.
    QuantumState plus = prepare_graph_state(graph({1, 2}, {}));
    EXPECT_NEAR(measure_pauli(plus, 1, Basis::X, 1).probability, 1, kTol);
    EXPECT_THROW(measure_pauli(plus, 1, Basis::X, -1), DomainError);
    EXPECT_THROW(measure_pauli(plus, 1, Basis::X, 0), DomainError);
}

TEST(Measure, XOnLineMiddleGivesEpr) {
    LabeledGraph line = fixtures::path(3);
    LabeledGraph target = measure_x(line, 2, 1);
    EXPECT_EQ(target, graph({1, 3}, {{1, 3}}));
    for (int outcome : {1, -1}) {
        MeasurementOutcome m = measure_pauli(prepare_graph_state(line), 2, Basis::X, outcome);
        EXPECT_NEAR(m.probability, 0.5, kTol);
        auto c = find_local_correction(m.state, target, {1, 3});
        ASSERT_TRUE(c);
        EXPECT_NEAR(fidelity(corrected(m.state, *c), prepare_graph_state(target)), 1, 1e-9);
    }
}

TEST(Correction, IdentityAndZFlip) {
    LabeledGraph g = fixtures::cycle(5);
    auto id = find_local_correction(prepare_graph_state(g), g, {1, 2});
    ASSERT_TRUE(id);
    for (auto [v, c] : *id) EXPECT_EQ(c, 0) << v;

    MeasurementOutcome m = measure_pauli(prepare_graph_state(g), 1, Basis::Z, -1);
    LabeledGraph target = measure_z(g, 1);
    QuantumState fixed = m.state;
    for (Vertex n : g.neighborhood(1)) fixed.apply(fixed.qubit_of(n), kZ);
    EXPECT_NEAR(fidelity(fixed, prepare_graph_state(target)), 1, 1e-9);
    auto found = find_local_correction(m.state, target, g.neighborhood(1));
    ASSERT_TRUE(found);
    EXPECT_NEAR(fidelity(corrected(m.state, *found), prepare_graph_state(target)), 1, 1e-9);

    // A state outside the LC class has no correction.
    EXPECT_FALSE(find_local_correction(prepare_graph_state(fixtures::path(4)), fixtures::star(3), {1, 2, 3, 4}));
    EXPECT_THROW(find_local_correction(prepare_graph_state(fixtures::path(8)), fixtures::path(8),
                                       {1, 2, 3, 4, 5, 6, 7}),
                 SizeBoundError);
}

TEST(Cliffords, TwentyFourDistinct) {
    const auto &cl = single_qubit_cliffords();
    ASSERT_EQ(cl.size(), 24u);
    ASSERT_EQ(clifford_names().size(), 24u);
    for (size_t i = 0; i < cl.size(); i++) {
        // Unitary.
        const Mat2 &u = cl[i];
        Amplitude d0 = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2];
        Amplitude off = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
        EXPECT_NEAR(std::abs(d0 - 1.0), 0, kTol);
        EXPECT_NEAR(std::abs(off), 0, kTol);
        for (size_t j = 0; j < i; j++) {
            // Distinct modulo phase: |tr(A^dag B)| < 2.
            Amplitude tr = 0;
            for (int k = 0; k < 4; k++) tr += std::conj(cl[j][k]) * u[k];
            EXPECT_LT(std::abs(tr), 2 - 1e-6) << i << " " << j;
        }
    }
}

TEST(Oracle, AllFourVertexGraphs) {
    for_each_graph(4, [](const LabeledGraph &g) {
        OracleCheck c = check_graph_against_oracle(g);
        ASSERT_TRUE(c.ok()) << g << (c.failures.empty() ? "" : c.failures.front());
        ASSERT_GT(c.branch_checks, 0u);
    });
}
