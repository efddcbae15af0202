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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gsr/bottleneck.h"
#include "gsr/errors.h"
#include "gsr/fixtures.h"
#include "gsr/graph_io.h"
#include "gsr/orbit.h"
#include "gsr/parallel.h"
#include "gsr/protocols.h"
#include "gsr/quantum.h"
#include "gsr/transcript.h"

namespace gsr::cli {
namespace {

using nlohmann::json;

struct Input {
    std::string path;
    std::string format;
    Vertex g6_base = 1;

    LabeledGraph load() const {
        if (format.empty()) return read_graph_file(path, g6_base);
        return read_graph_file(path, parse_format(format), g6_base);
    }
};

void add_input(CLI::App *cmd, Input &in, const std::string &name = "graph") {
    cmd->add_option(name, in.path, "Graph file")->required();
    cmd->add_option("--format", in.format, "edgelist, graph6 or json (default: from extension)");
    cmd->add_option("--g6-base", in.g6_base, "First label assigned when reading graph6")->capture_default_str();
}

struct Output {
    std::string path;

    void emit(const json &j, std::ostream &out) const {
        std::string text = j.dump(2) + "\n";
        if (path.empty()) {
            out << text;
        } else {
            write_text_file(path, text);
        }
    }
};

std::vector<Vertex> parse_list(const std::string &text) {
    std::vector<Vertex> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error &) {
            throw DomainError("bad vertex label '" + item + "'");
        }
    }
    return out;
}

// "1:6,2:5"
Designation parse_pairs(const std::string &text) {
    std::string flat = text;
    std::replace(flat.begin(), flat.end(), ':', ',');
    std::vector<Vertex> v = parse_list(flat);
    if (v.size() != 4) throw DomainError("--pairs wants two pairs like 1:6,2:5");
    Edge p = make_edge(v[0], v[1]), q = make_edge(v[2], v[3]);
    if (q < p) std::swap(p, q);
    return {p, q};
}

json edge_json(const Edge &e) { return json::array({e.u, e.v}); }

void write_frames(const ProtocolTranscript &t, const std::string &dir) {
    std::filesystem::create_directories(dir);
    VertexSet targets(t.targets.begin(), t.targets.end());
    auto frame = [&](size_t i, const LabeledGraph &g, const std::string &title) {
        std::ostringstream name;
        name << dir << "/frame_" << std::setw(3) << std::setfill('0') << i << ".dot";
        write_text_file(name.str(), write_dot(g, {title, targets}));
    };
    frame(0, t.initial, "initial");
    LabeledGraph g = t.initial;
    for (size_t i = 0; i < t.steps.size(); i++) {
        g = apply_step(g, t.steps[i]);
        frame(i + 1, g, to_string(t.steps[i]));
    }
}

void check_replay(const ProtocolTranscript &t) {
    if (!validate(t)) throw std::logic_error("transcript does not replay to its final graph");
}

// ---- epr ----------------------------------------------------------------------------------------

struct EprArgs {
    Input in;
    Output out;
    Vertex a = 0, b = 0;
    std::string method = "x";
    std::string frames;
    bool snapshots = false;
    size_t path_cap = 0;
};

int cmd_epr(const EprArgs &args, std::ostream &out) {
    LabeledGraph g = args.in.load();
    ProtocolOptions opts;
    if (args.path_cap) opts.path.enumeration_cap = args.path_cap;
    EprResult r = args.method == "x" ? x_protocol(g, args.a, args.b, opts) : repeater_protocol(g, args.a, args.b, opts);
    check_replay(r.transcript);
    if (!args.frames.empty()) write_frames(r.transcript, args.frames);
    json j;
    j["command"] = "epr";
    j["method"] = args.method;
    j["path"] = r.path.vertices;
    j["pair"] = edge_json(r.pair);
    j["residual"] = graph_to_json(r.residual);
    j["transcript"] = transcript_to_json(r.transcript, args.snapshots);
    args.out.emit(j, out);
    return r.transcript.success ? kOk : kUnmet;
}

// ---- ghz ----------------------------------------------------------------------------------------

struct GhzArgs {
    Input in;
    Output out;
    std::string targets;
    std::string line;
    bool snapshots = false;
    std::string frames;
    size_t vm_bound = 10;
};

int cmd_ghz(const GhzArgs &args, std::ostream &out, std::ostream &err) {
    LabeledGraph g = args.in.load();
    std::vector<Vertex> t = parse_list(args.targets);
    json j;
    j["command"] = "ghz";
    j["targets"] = t;
    ProtocolTranscript tr;
    if (t.size() == 3) {
        if (!args.line.empty()) throw DomainError("--line only applies to four targets");
        tr = ghz3_extract(g, t[0], t[1], t[2]);
    } else if (t.size() == 4) {
        std::optional<VertexPath> line;
        if (!args.line.empty()) line = VertexPath{parse_list(args.line)};
        Ghz4Options opts;
        opts.vertex_minor_bound = args.vm_bound;
        try {
            tr = ghz4_extract(g, {t[0], t[1], t[2], t[3]}, line, opts);
        } catch (const HypothesisError &e) {
            j["success"] = false;
            j["hypothesis_unmet"] = e.what();
            args.out.emit(j, out);
            err << "hypothesis unmet: " << e.what() << "\n";
            return kUnmet;
        }
    } else {
        throw DomainError("ghz wants three or four targets");
    }
    check_replay(tr);
    if (!args.frames.empty()) write_frames(tr, args.frames);
    j["success"] = tr.success;
    j["transcript"] = transcript_to_json(tr, args.snapshots);
    args.out.emit(j, out);
    return tr.success ? kOk : kUnmet;
}

// ---- scan ---------------------------------------------------------------------------------------

struct ScanArgs {
    Output out;
    size_t n = 6;
    std::vector<std::string> pairs;
    bool all_pairings = false;
    bool timing = false;
    bool no_prune = false;
    size_t workers = 0;
    std::string hits_dir;
};

int cmd_scan(const ScanArgs &args, std::ostream &out) {
    ScanOptions opts;
    opts.n = args.n;
    opts.all_pairings = args.all_pairings;
    opts.prune = !args.no_prune;
    opts.workers = args.workers ? args.workers : worker_count();
    for (const std::string &p : args.pairs) opts.designations.push_back(parse_pairs(p));
    ScanSummary s = scan_all(opts);
    if (!args.hits_dir.empty()) {
        std::filesystem::create_directories(args.hits_dir);
        for (const SearchReport &r : s.hits) {
            const TwoPairInstance &in = r.instance;
            std::ostringstream text;
            text << "# " << write_graph6(in.graph) << " pairs " << in.pair1.u << ":" << in.pair1.v << ","
                 << in.pair2.u << ":" << in.pair2.v << "\n"
                 << write_edge_list(in.graph);
            write_text_file(args.hits_dir + "/hit_" + std::to_string(r.designation) + "_" +
                                std::to_string(r.graph_index) + ".txt",
                            text.str());
        }
    }
    json j = scan_to_json(s, args.timing);
    j["command"] = "scan";
    args.out.emit(j, out);
    return kOk;
}

// ---- orbit / vminor -----------------------------------------------------------------------------

struct OrbitArgs {
    Input in;
    Output out;
    size_t max_vertices = 10;
    bool members = true;
};

int cmd_orbit(const OrbitArgs &args, std::ostream &out) {
    LabeledGraph g = args.in.load();
    OrbitOptions opts;
    opts.max_vertices = args.max_vertices;
    OrbitRecord orbit = lc_orbit(g, opts);
    json j;
    j["command"] = "orbit";
    j["vertices"] = orbit.vertices();
    j["size"] = orbit.size();
    j["canonical_graph6"] = write_graph6(orbit.canonical());
    if (args.members) {
        json list = json::array();
        for (size_t i = 0; i < orbit.size(); i++) {
            list.push_back({{"graph6", write_graph6(orbit.member(i))}, {"witness", orbit.witness(i)}});
        }
        j["members"] = std::move(list);
    }
    args.out.emit(j, out);
    return kOk;
}

struct VminorArgs {
    Input in;
    Input target;
    Output out;
    size_t max_vertices = 10;
};

int cmd_vminor(const VminorArgs &args, std::ostream &out) {
    LabeledGraph g = args.in.load();
    LabeledGraph h = args.target.load();
    OrbitOptions opts;
    opts.max_vertices = args.max_vertices;
    VertexMinorResult r = vertex_minor(g, h, opts);
    if (r.found && replay(g, r.witness) != h) throw std::logic_error("vertex-minor witness does not replay");
    json j;
    j["command"] = "vminor";
    j["found"] = r.found;
    j["witness"] = steps_to_json(r.witness);
    j["states"] = r.states;
    args.out.emit(j, out);
    return r.found ? kOk : kUnmet;
}

// ---- verify -------------------------------------------------------------------------------------

struct VerifyArgs {
    std::string graph;
    Input in;
    Output out;
    size_t max_n = 5;
    size_t sample = 0;
    uint64_t seed = 1;
    size_t workers = 0;
};

std::vector<LabeledGraph> verify_graphs(const VerifyArgs &args) {
    std::vector<LabeledGraph> out;
    if (!args.in.path.empty()) {
        out.push_back(args.in.load());
        return out;
    }
    if (args.max_n > 8) throw SizeBoundError("verify sweeps support at most 8 vertices");
    std::mt19937_64 rng(args.seed);
    for (size_t n = 1; n <= args.max_n; n++) {
        size_t slots = n * (n - 1) / 2;
        if (args.sample && n == args.max_n) {
            for (size_t k = 0; k < args.sample; k++) out.push_back(indexed_graph(n, rng() & ((uint64_t{1} << slots) - 1)));
        } else {
            for (uint64_t i = 0; i < (uint64_t{1} << slots); i++) out.push_back(indexed_graph(n, i));
        }
    }
    return out;
}

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    std::vector<LabeledGraph> graphs = verify_graphs(args);
    size_t workers = args.workers ? args.workers : worker_count();
    std::vector<OracleCheck> parts(workers);
    parallel_for(graphs.size(), workers, [&](size_t begin, size_t end, size_t w) {
        for (size_t i = begin; i < end; i++) parts[w].merge(check_graph_against_oracle(graphs[i]));
    });
    OracleCheck total;
    for (const OracleCheck &p : parts) total.merge(p);
    json j;
    j["command"] = "verify";
    j["graphs"] = graphs.size();
    j["lc_checks"] = total.lc_checks;
    j["lc_failures"] = total.lc_failures;
    j["branch_checks"] = total.branch_checks;
    j["branch_failures"] = total.branch_failures;
    j["probability_failures"] = total.probability_failures;
    std::vector<std::string> shown(total.failures.begin(),
                                   total.failures.begin() + std::min<size_t>(total.failures.size(), 20));
    j["failures"] = shown;
    j["ok"] = total.ok();
    args.out.emit(j, out);
    return total.ok() ? kOk : kInternal;
}

// ---- convert ------------------------------------------------------------------------------------

struct ConvertArgs {
    Input in;
    std::string to = "edgelist";
    std::string out;
};

int cmd_convert(const ConvertArgs &args, std::ostream &out) {
    LabeledGraph g = args.in.load();
    std::string text;
    switch (parse_format(args.to)) {
        case GraphFormat::EdgeList:
            text = write_edge_list(g);
            break;
        case GraphFormat::Graph6:
            text = write_graph6(g) + "\n";
            break;
        case GraphFormat::Dot:
            text = write_dot(g);
            break;
        case GraphFormat::Json:
            text = graph_to_json(g).dump(2) + "\n";
            break;
    }
    if (args.out.empty()) {
        out << text;
    } else {
        write_text_file(args.out, text);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Graph-state routing by local complementation and Pauli measurements"};
    app.require_subcommand(1);

    EprArgs epr;
    auto *c_epr = app.add_subcommand("epr", "Extract an EPR pair between two vertices");
    add_input(c_epr, epr.in);
    c_epr->add_option("a", epr.a)->required();
    c_epr->add_option("b", epr.b)->required();
    c_epr->add_option("--method", epr.method)->check(CLI::IsMember({"x", "repeater"}))->capture_default_str();
    c_epr->add_option("--frames", epr.frames, "Directory for per-step DOT frames");
    c_epr->add_flag("--snapshots", epr.snapshots, "Include per-step graphs in the transcript");
    c_epr->add_option("--path-cap", epr.path_cap, "Shortest-path enumeration cap")->check(CLI::PositiveNumber);
    c_epr->add_option("--out", epr.out.path);

    GhzArgs ghz;
    auto *c_ghz = app.add_subcommand("ghz", "Extract a GHZ state on three or four targets");
    add_input(c_ghz, ghz.in);
    c_ghz->add_option("targets", ghz.targets, "Comma-separated targets")->required();
    c_ghz->add_option("--line", ghz.line, "Repeater line through four targets, comma-separated");
    c_ghz->add_option("--vm-bound", ghz.vm_bound, "Vertex-minor check bound for chorded lines")->capture_default_str();
    c_ghz->add_option("--frames", ghz.frames);
    c_ghz->add_flag("--snapshots", ghz.snapshots);
    c_ghz->add_option("--out", ghz.out.path);

    ScanArgs scan;
    auto *c_scan = app.add_subcommand("scan", "Search small graphs for solvable bottleneck instances");
    c_scan->add_option("--n", scan.n)->capture_default_str();
    c_scan->add_option("--pairs", scan.pairs, "Terminal pairs like 1:6,2:5 (repeatable)");
    c_scan->add_flag("--all-pairings", scan.all_pairings);
    c_scan->add_flag("--timing", scan.timing, "Include wall time (output no longer reproducible)");
    c_scan->add_flag("--no-prune", scan.no_prune);
    c_scan->add_option("--workers", scan.workers, "Worker threads (default: GSR_THREADS or all cores)");
    c_scan->add_option("--hits-dir", scan.hits_dir, "Write every hit as an edge-list file");
    c_scan->add_option("--out", scan.out.path);

    OrbitArgs orbit;
    auto *c_orbit = app.add_subcommand("orbit", "Enumerate the LC orbit");
    add_input(c_orbit, orbit.in);
    c_orbit->add_option("--max-vertices", orbit.max_vertices)->capture_default_str();
    c_orbit->add_flag("!--no-members", orbit.members);
    c_orbit->add_option("--out", orbit.out.path);

    VminorArgs vminor;
    auto *c_vminor = app.add_subcommand("vminor", "Decide whether a target graph is a vertex-minor");
    add_input(c_vminor, vminor.in);
    c_vminor->add_option("target", vminor.target.path, "Target graph file")->required();
    c_vminor->add_option("--max-vertices", vminor.max_vertices)->capture_default_str();
    c_vminor->add_option("--out", vminor.out.path);

    VerifyArgs verify;
    auto *c_verify = app.add_subcommand("verify", "Check the graph rules against the state-vector oracle");
    c_verify->add_option("graph", verify.in.path, "Single graph to check (default: sweep)");
    c_verify->add_option("--format", verify.in.format);
    c_verify->add_option("--max-n", verify.max_n)->capture_default_str();
    c_verify->add_option("--sample", verify.sample, "Random graphs at the largest size instead of all");
    c_verify->add_option("--seed", verify.seed)->capture_default_str();
    c_verify->add_option("--workers", verify.workers);
    c_verify->add_option("--out", verify.out.path);

    ConvertArgs convert;
    auto *c_convert = app.add_subcommand("convert", "Convert between graph formats");
    add_input(c_convert, convert.in);
    c_convert->add_option("--to", convert.to)->capture_default_str();
    c_convert->add_option("--out", convert.out);

    std::vector<const char *> argv;
    for (const std::string &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUnmet;
    }

    try {
        if (*c_epr) return cmd_epr(epr, out);
        if (*c_ghz) return cmd_ghz(ghz, out, err);
        if (*c_scan) return cmd_scan(scan, out);
        if (*c_orbit) return cmd_orbit(orbit, out);
        if (*c_vminor) {
            vminor.target.format = vminor.in.format;
            vminor.target.g6_base = vminor.in.g6_base;
            return cmd_vminor(vminor, out);
        }
        if (*c_verify) return cmd_verify(verify, out);
        if (*c_convert) return cmd_convert(convert, out);
    } catch (const SizeBoundError &e) {
        err << "size bound exceeded: " << e.what() << "\n";
        return kSizeBound;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kUnmet;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

}  // namespace gsr::cli
