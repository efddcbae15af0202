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

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsr/graph.h"

namespace gsr {

using Amplitude = std::complex<double>;
using Mat2 = std::array<Amplitude, 4>;  // row major

/// Dense state vector. Qubit i is the i-th smallest label and bit i of the basis index.
class QuantumState {
   public:
    static constexpr size_t kMaxQubits = 14;

    QuantumState() = default;
    /// |0...0> on the given labels.
    explicit QuantumState(std::vector<Vertex> labels);

    size_t qubits() const { return labels_.size(); }
    const std::vector<Vertex> &labels() const { return labels_; }
    size_t qubit_of(Vertex v) const;

    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }

    double norm() const;
    void normalize();

    void apply(size_t q, const Mat2 &u);
    void apply_cz(size_t q1, size_t q2);
    /// Expectation of X_x Z_z for bitmasks over qubit positions (x has exactly one bit here).
    Amplitude expect_xz(uint64_t xmask, uint64_t zmask) const;

   private:
    std::vector<Vertex> labels_;
    std::vector<Amplitude> amps_;
};

Amplitude inner(const QuantumState &a, const QuantumState &b);
/// |<a|b>|, requires identical labels.
double fidelity(const QuantumState &a, const QuantumState &b);

QuantumState prepare_graph_state(const LabeledGraph &g);

/// Applies (iX)^{1/2} on a and (-iZ)^{1/2} on each neighbor of a in g.
QuantumState apply_lc_unitary(const QuantumState &state, const LabeledGraph &g, Vertex a);

struct MeasurementOutcome {
    QuantumState state;  // measured qubit removed, renormalized
    double probability = 0;
};

/// Projects `qubit` onto the `outcome` (+1/-1) eigenspace of the basis. Throws DomainError on a
/// zero-probability branch.
MeasurementOutcome measure_pauli(const QuantumState &state, Vertex qubit, Basis basis, int outcome);

/// The 24 single-qubit Cliffords modulo phase, identity first, each with a word in H and S.
const std::vector<Mat2> &single_qubit_cliffords();
const std::vector<std::string> &clifford_names();

struct CorrectionOptions {
    size_t max_affected = 6;
    double tolerance = 1e-9;
};

/// Clifford index per affected qubit taking post_state to the graph state of target up to phase.
/// Throws SizeBoundError if more than max_affected qubits are affected.
std::optional<std::map<Vertex, int>> find_local_correction(const QuantumState &post_state, const LabeledGraph &target,
                                                           const VertexSet &affected,
                                                           const CorrectionOptions &opts = {});

/// Outcome of checking one graph against the oracle.
struct OracleCheck {
    size_t lc_checks = 0;
    size_t lc_failures = 0;
    size_t branch_checks = 0;
    size_t branch_failures = 0;
    size_t probability_failures = 0;
    std::vector<std::string> failures;

    void merge(const OracleCheck &o);
    bool ok() const { return lc_failures == 0 && branch_failures == 0 && probability_failures == 0; }
};

/// For every vertex: the LC unitary check and, for every basis (X with every neighbor) and both outcomes,
/// a local correction onto the predicted graph.
OracleCheck check_graph_against_oracle(const LabeledGraph &g, double tolerance = 1e-9);

}  // namespace gsr
