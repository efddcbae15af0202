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

#include "gsr/transcript.h"

#include "gsr/errors.h"

namespace gsr {

std::string to_string(const Step &s) {
    if (!s.is_measurement()) {
        return "LC(" + std::to_string(s.vertex) + ")";
    }
    std::string out = std::string(1, basis_name(s.basis)) + "(" + std::to_string(s.vertex);
    if (s.neighbor) {
        out += ";" + std::to_string(*s.neighbor);
    }
    return out + ")";
}

LabeledGraph apply_step(const LabeledGraph &g, const Step &s) {
    if (!s.is_measurement()) {
        return local_complement(g, s.vertex);
    }
    return apply_measurement(g, MeasurementStep{s.vertex, s.basis, s.neighbor});
}

LabeledGraph replay(const LabeledGraph &g, std::span<const Step> steps) {
    LabeledGraph out = g;
    for (const Step &s : steps) {
        out = apply_step(out, s);
    }
    return out;
}

StepCounts count_steps(std::span<const Step> steps) {
    StepCounts c;
    for (const Step &s : steps) {
        if (!s.is_measurement()) {
            c.local_complements++;
            continue;
        }
        c.measurements++;
        switch (s.basis) {
            case Basis::X:
                c.x++;
                break;
            case Basis::Y:
                c.y++;
                break;
            case Basis::Z:
                c.z++;
                break;
        }
    }
    return c;
}

std::vector<MeasurementStep> ProtocolTranscript::measurements() const {
    std::vector<MeasurementStep> out;
    for (const Step &s : steps) {
        if (s.is_measurement()) {
            out.push_back({s.vertex, s.basis, s.neighbor});
        }
    }
    return out;
}

std::vector<Vertex> ProtocolTranscript::local_complements() const {
    std::vector<Vertex> out;
    for (const Step &s : steps) {
        if (!s.is_measurement()) {
            out.push_back(s.vertex);
        }
    }
    return out;
}

TranscriptBuilder::TranscriptBuilder(std::string protocol, const LabeledGraph &initial, std::vector<Vertex> targets,
                                     bool keep_snapshots)
    : current_(initial), keep_snapshots_(keep_snapshots) {
    t_.protocol = std::move(protocol);
    t_.targets = std::move(targets);
    t_.initial = initial;
}

void TranscriptBuilder::apply(const Step &s) {
    current_ = apply_step(current_, s);
    t_.steps.push_back(s);
    if (keep_snapshots_) {
        t_.snapshots.push_back(current_);
    }
}

void TranscriptBuilder::lc(Vertex v) { apply(Step::lc(v)); }

void TranscriptBuilder::measure(Vertex v, Basis b, std::optional<Vertex> w) { apply(Step::measure(v, b, w)); }

ProtocolTranscript TranscriptBuilder::finish(bool success) {
    t_.final_graph = current_;
    t_.success = success;
    return t_;
}

bool validate(const ProtocolTranscript &t) {
    if (!t.snapshots.empty() && t.snapshots.size() != t.steps.size()) {
        return false;
    }
    LabeledGraph g = t.initial;
    try {
        for (size_t i = 0; i < t.steps.size(); i++) {
            g = apply_step(g, t.steps[i]);
            if (!satisfies_invariants(g)) {
                return false;
            }
            if (!t.snapshots.empty() && !(t.snapshots[i] == g)) {
                return false;
            }
        }
    } catch (const DomainError &) {
        return false;
    }
    return g == t.final_graph;
}

nlohmann::json graph_to_json(const LabeledGraph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge &e : g.edge_list()) {
        edges.push_back({e.u, e.v});
    }
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

LabeledGraph graph_from_json(const nlohmann::json &j) {
    std::vector<Vertex> vs = j.at("vertices").get<std::vector<Vertex>>();
    std::vector<Edge> es;
    for (const auto &e : j.at("edges")) {
        es.push_back(make_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>()));
    }
    return LabeledGraph(vs, es);
}

nlohmann::json step_to_json(const Step &s) {
    nlohmann::json j;
    j["type"] = s.is_measurement() ? "measure" : "lc";
    j["vertex"] = s.vertex;
    if (s.is_measurement()) {
        j["basis"] = std::string(1, basis_name(s.basis));
        if (s.neighbor) {
            j["neighbor"] = *s.neighbor;
        }
    }
    return j;
}

Step step_from_json(const nlohmann::json &j) {
    std::string type = j.at("type").get<std::string>();
    Vertex v = j.at("vertex").get<Vertex>();
    if (type == "lc") {
        return Step::lc(v);
    }
    if (type != "measure") {
        throw DomainError("unknown step type '" + type + "'");
    }
    std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1) {
        throw DomainError("bad basis '" + b + "'");
    }
    std::optional<Vertex> w;
    if (j.contains("neighbor")) {
        w = j.at("neighbor").get<Vertex>();
    }
    return Step::measure(v, parse_basis(b[0]), w);
}

nlohmann::json steps_to_json(std::span<const Step> steps) {
    nlohmann::json out = nlohmann::json::array();
    for (const Step &s : steps) {
        out.push_back(step_to_json(s));
    }
    return out;
}

std::vector<Step> steps_from_json(const nlohmann::json &j) {
    std::vector<Step> out;
    for (const auto &s : j) {
        out.push_back(step_from_json(s));
    }
    return out;
}

nlohmann::json counts_to_json(const StepCounts &c) {
    return {{"measurements", c.measurements}, {"x", c.x}, {"y", c.y}, {"z", c.z}, {"lc", c.local_complements}};
}

nlohmann::json transcript_to_json(const ProtocolTranscript &t, bool include_snapshots) {
    nlohmann::json j;
    j["protocol"] = t.protocol;
    j["targets"] = t.targets;
    j["initial"] = graph_to_json(t.initial);
    j["steps"] = steps_to_json(t.steps);
    if (include_snapshots) {
        nlohmann::json snaps = nlohmann::json::array();
        for (const auto &g : t.snapshots) {
            snaps.push_back(graph_to_json(g));
        }
        j["snapshots"] = snaps;
    }
    j["final"] = graph_to_json(t.final_graph);
    j["counts"] = counts_to_json(t.counts());
    j["success"] = t.success;
    j["notes"] = t.notes;
    return j;
}

ProtocolTranscript transcript_from_json(const nlohmann::json &j) {
    ProtocolTranscript t;
    t.protocol = j.value("protocol", "");
    t.targets = j.value("targets", std::vector<Vertex>{});
    t.initial = graph_from_json(j.at("initial"));
    t.steps = steps_from_json(j.at("steps"));
    if (j.contains("snapshots")) {
        for (const auto &g : j.at("snapshots")) {
            t.snapshots.push_back(graph_from_json(g));
        }
    }
    t.final_graph = graph_from_json(j.at("final"));
    t.success = j.value("success", false);
    t.notes = j.value("notes", std::vector<std::string>{});
    return t;
}

}  // namespace gsr
