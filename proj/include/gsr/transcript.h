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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsr/graph.h"
#include "json.hpp"

namespace gsr {

/// A local complementation or a Pauli measurement, as recorded in transcripts and witnesses.
struct Step {
    enum class Kind { LocalComplement, Measure };

    Kind kind = Kind::LocalComplement;
    Vertex vertex = 0;
    Basis basis = Basis::Z;
    std::optional<Vertex> neighbor;

    static Step lc(Vertex v) { return {Kind::LocalComplement, v, Basis::Z, std::nullopt}; }
    static Step measure(Vertex v, Basis b, std::optional<Vertex> w = std::nullopt) { return {Kind::Measure, v, b, w}; }
    static Step measure(const MeasurementStep &m) { return {Kind::Measure, m.vertex, m.basis, m.neighbor}; }

    bool is_measurement() const { return kind == Kind::Measure; }
    bool operator==(const Step &) const = default;
};

std::string to_string(const Step &s);

LabeledGraph apply_step(const LabeledGraph &g, const Step &s);
LabeledGraph replay(const LabeledGraph &g, std::span<const Step> steps);

struct StepCounts {
    size_t measurements = 0;
    size_t x = 0;
    size_t y = 0;
    size_t z = 0;
    size_t local_complements = 0;
};

StepCounts count_steps(std::span<const Step> steps);

/// Ordered record of a protocol run. snapshots[t] is the graph after steps[t].
struct ProtocolTranscript {
    std::string protocol;
    std::vector<Vertex> targets;
    LabeledGraph initial;
    std::vector<Step> steps;
    std::vector<LabeledGraph> snapshots;
    LabeledGraph final_graph;
    bool success = false;
    std::vector<std::string> notes;

    size_t measurement_count() const { return count_steps(steps).measurements; }
    StepCounts counts() const { return count_steps(steps); }
    std::vector<MeasurementStep> measurements() const;
    std::vector<Vertex> local_complements() const;
};

/// Appends steps to a transcript while tracking the current graph.
class TranscriptBuilder {
   public:
    TranscriptBuilder(std::string protocol, const LabeledGraph &initial, std::vector<Vertex> targets,
                      bool keep_snapshots = true);

    const LabeledGraph &current() const { return current_; }
    void lc(Vertex v);
    void measure(Vertex v, Basis b, std::optional<Vertex> w = std::nullopt);
    void apply(const Step &s);
    void note(std::string text) { t_.notes.push_back(std::move(text)); }
    ProtocolTranscript finish(bool success);

   private:
    ProtocolTranscript t_;
    LabeledGraph current_;
    bool keep_snapshots_;
};

/// Checks that the snapshots chain (if present) and the final graph follow from replaying the steps.
bool validate(const ProtocolTranscript &t);

nlohmann::json graph_to_json(const LabeledGraph &g);
LabeledGraph graph_from_json(const nlohmann::json &j);
nlohmann::json step_to_json(const Step &s);
Step step_from_json(const nlohmann::json &j);
nlohmann::json steps_to_json(std::span<const Step> steps);
std::vector<Step> steps_from_json(const nlohmann::json &j);
nlohmann::json counts_to_json(const StepCounts &c);
nlohmann::json transcript_to_json(const ProtocolTranscript &t, bool include_snapshots);
ProtocolTranscript transcript_from_json(const nlohmann::json &j);

}  // namespace gsr
