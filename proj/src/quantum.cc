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

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "gsr/errors.h"

namespace gsr {

namespace {

constexpr double kNormTolerance = 1e-10;
const Amplitude kI{0, 1};
const double kInvSqrt2 = 1 / std::sqrt(2.0);

Mat2 mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// Removes the global phase: first entry of non-negligible size becomes real positive.
Mat2 dephase(const Mat2 &m) {
    for (const Amplitude &z : m) {
        if (std::abs(z) > 1e-9) {
            Amplitude ph = std::conj(z) / std::abs(z);
            return {m[0] * ph, m[1] * ph, m[2] * ph, m[3] * ph};
        }
    }
    return m;
}

std::string mat_key(const Mat2 &m) {
    std::ostringstream out;
    for (const Amplitude &z : m) {
        out << std::lround(z.real() * 1e6) << ',' << std::lround(z.imag() * 1e6) << ';';
    }
    return out.str();
}

void check_norm(const QuantumState &s, const char *where) {
    if (std::abs(s.norm() - 1) > kNormTolerance) {
        throw std::logic_error(std::string(where) + ": state norm drifted to " + std::to_string(s.norm()));
    }
}

}  // namespace

QuantumState::QuantumState(std::vector<Vertex> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw DomainError("duplicate qubit label");
    }
    if (labels_.size() > kMaxQubits) {
        throw SizeBoundError("state vector limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    amps_.assign(size_t{1} << labels_.size(), 0);
    amps_[0] = 1;
}

size_t QuantumState::qubit_of(Vertex v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) throw DomainError("unknown qubit " + std::to_string(v));
    return it - labels_.begin();
}

double QuantumState::norm() const {
    double s = 0;
    for (const Amplitude &a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void QuantumState::normalize() {
    double n = norm();
    for (Amplitude &a : amps_) a /= n;
}

void QuantumState::apply(size_t q, const Mat2 &u) {
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) continue;
        Amplitude a0 = amps_[i], a1 = amps_[i | bit];
        amps_[i] = u[0] * a0 + u[1] * a1;
        amps_[i | bit] = u[2] * a0 + u[3] * a1;
    }
}

void QuantumState::apply_cz(size_t q1, size_t q2) {
    const size_t m = (size_t{1} << q1) | (size_t{1} << q2);
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & m) == m) amps_[i] = -amps_[i];
    }
}

Amplitude QuantumState::expect_xz(uint64_t xmask, uint64_t zmask) const {
    Amplitude s = 0;
    for (size_t x = 0; x < amps_.size(); x++) {
        // X_x Z_z |x> = (-1)^{|x & z|} |x ^ xmask>
        double sign = (std::popcount(x & zmask) & 1) ? -1.0 : 1.0;
        s += std::conj(amps_[x ^ xmask]) * sign * amps_[x];
    }
    return s;
}

Amplitude inner(const QuantumState &a, const QuantumState &b) {
    if (a.labels() != b.labels()) throw DomainError("states live on different qubits");
    Amplitude s = 0;
    auto x = a.amplitudes(), y = b.amplitudes();
    for (size_t i = 0; i < x.size(); i++) s += std::conj(x[i]) * y[i];
    return s;
}

double fidelity(const QuantumState &a, const QuantumState &b) { return std::abs(inner(a, b)); }

QuantumState prepare_graph_state(const LabeledGraph &g) {
    QuantumState s(g.vertices());
    const Mat2 h{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    for (size_t q = 0; q < s.qubits(); q++) s.apply(q, h);
    for (const Edge &e : g.edge_list()) s.apply_cz(s.qubit_of(e.u), s.qubit_of(e.v));
    check_norm(s, "prepare_graph_state");
    return s;
}

QuantumState apply_lc_unitary(const QuantumState &state, const LabeledGraph &g, Vertex a) {
    if (state.labels() != g.vertices()) throw DomainError("state and graph disagree on vertices");
    QuantumState out = state;
    const Mat2 sqrt_ix{kInvSqrt2, kI * kInvSqrt2, kI * kInvSqrt2, kInvSqrt2};
    const Mat2 sqrt_miz{(1.0 - kI) * kInvSqrt2, 0, 0, (1.0 + kI) * kInvSqrt2};
    out.apply(out.qubit_of(a), sqrt_ix);
    for (Vertex u : g.neighborhood(a)) out.apply(out.qubit_of(u), sqrt_miz);
    check_norm(out, "apply_lc_unitary");
    return out;
}

MeasurementOutcome measure_pauli(const QuantumState &state, Vertex qubit, Basis basis, int outcome) {
    if (outcome != 1 && outcome != -1) throw DomainError("outcome must be +1 or -1");
    const size_t q = state.qubit_of(qubit);
    std::array<Amplitude, 2> e;
    switch (basis) {
        case Basis::Z:
            e = outcome == 1 ? std::array<Amplitude, 2>{1, 0} : std::array<Amplitude, 2>{0, 1};
            break;
        case Basis::X:
            e = {kInvSqrt2, outcome * kInvSqrt2};
            break;
        case Basis::Y:
            e = {kInvSqrt2, kI * (outcome * kInvSqrt2)};
            break;
    }
    std::vector<Vertex> rest = state.labels();
    rest.erase(rest.begin() + q);
    MeasurementOutcome out{QuantumState(rest), 0};
    auto src = state.amplitudes();
    auto dst = out.state.amplitudes();
    const size_t low = (size_t{1} << q) - 1;
    for (size_t y = 0; y < dst.size(); y++) {
        size_t x0 = (y & low) | ((y & ~low) << 1);
        size_t x1 = x0 | (size_t{1} << q);
        dst[y] = std::conj(e[0]) * src[x0] + std::conj(e[1]) * src[x1];
    }
    double n = out.state.norm();
    out.probability = n * n;
    if (out.probability < 1e-12) throw DomainError("measurement branch has zero probability");
    out.state.normalize();
    check_norm(out.state, "measure_pauli");
    return out;
}

namespace {

struct CliffordTable {
    std::vector<Mat2> mats;
    std::vector<std::string> names;
};

// Breadth-first closure of {H, S} modulo phase; words read right to left as applied.
const CliffordTable &clifford_table() {
    static const CliffordTable table = [] {
        CliffordTable t;
        const Mat2 id{1, 0, 0, 1};
        const Mat2 h{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        const Mat2 s{1, 0, 0, kI};
        std::map<std::string, size_t> seen{{mat_key(id), 0}};
        t.mats.push_back(id);
        t.names.push_back("I");
        for (size_t head = 0; head < t.mats.size(); head++) {
            for (int gen = 0; gen < 2; gen++) {
                Mat2 m = dephase(mul(gen == 0 ? h : s, t.mats[head]));
                if (!seen.emplace(mat_key(m), t.mats.size()).second) continue;
                t.mats.push_back(m);
                std::string word = gen == 0 ? "H" : "S";
                t.names.push_back(t.names[head] == "I" ? word : word + t.names[head]);
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<Mat2> &single_qubit_cliffords() { return clifford_table().mats; }

const std::vector<std::string> &clifford_names() { return clifford_table().names; }

std::optional<std::map<Vertex, int>> find_local_correction(const QuantumState &post_state, const LabeledGraph &target,
                                                           const VertexSet &affected,
                                                           const CorrectionOptions &opts) {
    if (post_state.labels() != target.vertices()) throw DomainError("state and target graph disagree on vertices");
    if (affected.size() > opts.max_affected) {
        throw SizeBoundError("correction search limited to " + std::to_string(opts.max_affected) + " qubits");
    }
    std::vector<size_t> order;
    for (Vertex v : affected) order.push_back(post_state.qubit_of(v));
    std::sort(order.begin(), order.end());

    // Stabilizer generator K_v = X_v Z_{N_v} of the target; checked once its last affected qubit is set.
    struct Gen {
        uint64_t x, z;
    };
    std::vector<std::vector<Gen>> at_depth(order.size() + 1);
    for (size_t i = 0; i < target.size(); i++) {
        Gen gen{uint64_t{1} << i, 0};
        uint64_t support = gen.x;
        for (Vertex u : target.neighborhood(target.label(i))) {
            gen.z |= uint64_t{1} << target.index_of(u);
        }
        support |= gen.z;
        size_t depth = 0;
        for (size_t d = 0; d < order.size(); d++) {
            if ((support >> order[d]) & 1) depth = d + 1;
        }
        at_depth[depth].push_back(gen);
    }
    auto holds = [&](const QuantumState &s, const Gen &g) {
        Amplitude e = s.expect_xz(g.x, g.z);
        return e.real() >= 1 - opts.tolerance;
    };
    for (const Gen &g : at_depth[0]) {
        if (!holds(post_state, g)) return std::nullopt;
    }
    const auto &cliffords = single_qubit_cliffords();
    const QuantumState want = prepare_graph_state(target);
    std::vector<int> choice(order.size(), 0);
    std::function<bool(const QuantumState &, size_t)> search = [&](const QuantumState &s, size_t d) -> bool {
        if (d == order.size()) return fidelity(s, want) >= 1 - opts.tolerance;
        for (size_t c = 0; c < cliffords.size(); c++) {
            QuantumState next = s;
            next.apply(order[d], cliffords[c]);
            bool ok = true;
            for (const Gen &g : at_depth[d + 1]) {
                if (!holds(next, g)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            choice[d] = static_cast<int>(c);
            if (search(next, d + 1)) return true;
        }
        return false;
    };
    if (!search(post_state, 0)) return std::nullopt;
    std::map<Vertex, int> out;
    for (size_t d = 0; d < order.size(); d++) out[post_state.labels()[order[d]]] = choice[d];
    return out;
}

void OracleCheck::merge(const OracleCheck &o) {
    lc_checks += o.lc_checks;
    lc_failures += o.lc_failures;
    branch_checks += o.branch_checks;
    branch_failures += o.branch_failures;
    probability_failures += o.probability_failures;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

OracleCheck check_graph_against_oracle(const LabeledGraph &g, double tolerance) {
    OracleCheck out;
    const QuantumState psi = prepare_graph_state(g);
    std::ostringstream name;
    name << g;

    for (Vertex a : g.vertices()) {
        out.lc_checks++;
        double f = fidelity(apply_lc_unitary(psi, g, a), prepare_graph_state(local_complement(g, a)));
        if (f < 1 - tolerance) {
            out.lc_failures++;
            out.failures.push_back("LC " + std::to_string(a) + " on " + name.str());
        }
    }

    CorrectionOptions copts;
    copts.tolerance = tolerance;
    for (Vertex v : g.vertices()) {
        VertexSet nv = g.neighborhood(v);
        std::vector<MeasurementStep> steps{{v, Basis::Z, std::nullopt}, {v, Basis::Y, std::nullopt}};
        if (nv.empty()) steps.push_back({v, Basis::X, std::nullopt});
        for (Vertex w : nv) steps.push_back({v, Basis::X, w});
        for (const MeasurementStep &m : steps) {
            LabeledGraph predicted = apply_measurement(g, m);
            VertexSet affected = nv;
            if (m.neighbor) {
                for (Vertex u : g.neighborhood(*m.neighbor)) affected.insert(u);
                affected.erase(v);
            }
            bool deterministic = nv.empty() && m.basis == Basis::X;
            for (int outcome : {1, -1}) {
                if (deterministic && outcome == -1) continue;
                out.branch_checks++;
                std::string tag = std::string(1, basis_name(m.basis)) + " " + std::to_string(v) +
                                  (m.neighbor ? ";" + std::to_string(*m.neighbor) : "") +
                                  (outcome == 1 ? " +" : " -") + " on " + name.str();
                MeasurementOutcome r;
                try {
                    r = measure_pauli(psi, v, m.basis, outcome);
                } catch (const DomainError &) {
                    out.probability_failures++;
                    out.failures.push_back("zero-probability branch " + tag);
                    continue;
                }
                double expected = deterministic ? 1.0 : 0.5;
                if (std::abs(r.probability - expected) > tolerance) {
                    out.probability_failures++;
                    out.failures.push_back("probability " + std::to_string(r.probability) + " for " + tag);
                }
                if (!find_local_correction(r.state, predicted, affected, copts)) {
                    out.branch_failures++;
                    out.failures.push_back("no correction for " + tag);
                }
            }
        }
    }
    return out;
}

}  // namespace gsr
