// Copyright 2026 The mbqc-gflow Authors
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

#include "mbqc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "mbqc/cone.hpp"
#include "mbqc/ent_bounds.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/fixtures.hpp"
#include "mbqc/io.hpp"
#include "mbqc/statevec.hpp"
#include "mbqc/symbolic_sim.hpp"

namespace mbqc {

namespace {

struct Budgets {
    std::size_t dense = kDefaultDenseLimit;
    std::size_t cuts = kDefaultCutBudget;
    std::size_t order = kDefaultOrderBudget;
    std::size_t tree = kDefaultTreeBudget;
    std::size_t branches = kDefaultBranchBudget;
    std::size_t wire_order = kDefaultWireOrderBudget;
};

// Graph, gFlow and pattern sources shared by most subcommands.
struct Sources {
    std::string graph_path;
    std::string fixture;
    std::string gflow_path;
    std::string pattern_path;
    std::uint64_t angle_seed = 0;
    bool random_angles = false;
};

class DomainNegative : public std::runtime_error {
   public:
    DomainNegative(Json report, const std::string &what) : std::runtime_error(what), report_(std::move(report)) {}
    const Json &report() const { return report_; }

   private:
    Json report_;
};

Json envelope() { return Json{{"schema_version", kSchemaVersion}}; }

void add_graph_options(CLI::App *cmd, Sources &src) {
    cmd->add_option("--graph", src.graph_path, "open graph JSON file");
    cmd->add_option("--fixture", src.fixture, "named fixture instead of --graph (see `fixtures list`)");
}

void add_gflow_option(CLI::App *cmd, Sources &src) {
    cmd->add_option("--gflow", src.gflow_path, "gflow JSON file; found automatically when omitted");
}

void add_pattern_options(CLI::App *cmd, Sources &src) {
    cmd->add_option("--pattern", src.pattern_path, "pattern JSON file; all-zero XY angles when omitted");
    cmd->add_option("--angle-seed", src.angle_seed, "draw uniform random XY angles from this seed")
        ->each([&src](const std::string &) { src.random_angles = true; });
}

OpenGraph load_graph(const Sources &src) {
    if (!src.fixture.empty()) {
        if (!src.graph_path.empty()) {
            throw ParseError("give either --graph or --fixture, not both");
        }
        try {
            return fixture_by_name(src.fixture).graph;
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), "--fixture");
        }
    }
    if (src.graph_path.empty()) {
        throw ParseError("an open graph is required (--graph or --fixture)");
    }
    return graph_from_json(load_json_file(src.graph_path));
}

std::optional<GFlow> declared_gflow(const Sources &src) {
    if (!src.gflow_path.empty()) {
        return gflow_from_json(load_json_file(src.gflow_path));
    }
    if (!src.fixture.empty()) {
        return fixture_by_name(src.fixture).gflow;
    }
    return std::nullopt;
}

GFlow require_gflow(const OpenGraph &graph, const Sources &src) {
    if (auto declared = declared_gflow(src)) {
        return *declared;
    }
    if (auto found = find_gflow(graph)) {
        return *found;
    }
    Json report = envelope();
    report["gflow"] = nullptr;
    report["reason"] = "no gflow";
    throw DomainNegative(report, "the open graph has no gflow");
}

MeasurementPattern load_pattern(const OpenGraph &graph, const Sources &src) {
    if (!src.pattern_path.empty()) {
        return pattern_from_json(load_json_file(src.pattern_path));
    }
    std::map<Vertex, double> angles;
    if (src.random_angles) {
        std::mt19937_64 rng(src.angle_seed);
        std::uniform_real_distribution<double> uniform(0.0, 2 * std::numbers::pi);
        for (auto v : graph.measured()) {
            angles[v] = uniform(rng);
        }
    }
    return MeasurementPattern::xy(graph, angles);
}

Json vertex_sets(const std::vector<VertexSet> &sets) {
    Json out = Json::array();
    for (const auto &s : sets) {
        out.push_back(s);
    }
    return out;
}

Json logical_to_json(const LogicalOperator &op) {
    Json terms = Json::array();
    for (const auto &[word, c] : op.terms()) {
        terms.push_back({{"word", word.str()}, {"coefficient", {c.real(), c.imag()}}});
    }
    return terms;
}

}  // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Flow, cone, simulation and entanglement analysis of open graph states", "mbqc"};
    app.fallthrough();
    app.require_subcommand(1);
    Budgets budgets;
    app.add_option("--budget-dense", budgets.dense, "largest vertex count for dense states")->capture_default_str();
    app.add_option("--budget-cuts", budgets.cuts, "largest number of cuts enumerated by the D-Happy check")
        ->capture_default_str();
    app.add_option("--budget-order", budgets.order, "largest vertex count for the exact ordering search")
        ->capture_default_str();
    app.add_option("--budget-tree", budgets.tree, "largest vertex count for the exact tree search")
        ->capture_default_str();
    app.add_option("--budget-branches", budgets.branches, "largest number of branches in a determinism check")
        ->capture_default_str();
    app.add_option("--budget-wire-order", budgets.wire_order, "largest wire count whose order is optimised")
        ->capture_default_str();

    Sources src;
    bool dot = false;
    bool causal = false;
    bool d_happy = false;
    bool report_terms = false;
    std::optional<Vertex> vertex;
    std::string branch_bits;
    std::uint64_t input_seed = 1;
    std::size_t random_n = 0;
    double edge_probability = 0.5;
    std::size_t random_inputs = 1, random_outputs = 1;
    std::uint64_t graph_seed = 0;

    auto *graph_cmd = app.add_subcommand("graph", "build, show or draw open graphs")->require_subcommand(1);
    auto *gen = graph_cmd->add_subcommand("gen", "emit a fixture or random open graph");
    gen->add_option("--fixture", src.fixture, "fixture name");
    gen->add_option("--random", random_n, "vertex count of a random graph");
    gen->add_option("--edge-probability", edge_probability, "edge probability of a random graph");
    gen->add_option("--inputs", random_inputs, "input count of a random graph");
    gen->add_option("--outputs", random_outputs, "output count of a random graph");
    gen->add_option("--seed", graph_seed, "seed of a random graph");
    auto *show = graph_cmd->add_subcommand("show", "canonical form and summary of an open graph");
    add_graph_options(show, src);
    show->add_flag("--d-happy", d_happy, "also run the D-Happy check");
    auto *graph_dot = graph_cmd->add_subcommand("dot", "Graphviz rendering");
    add_graph_options(graph_dot, src);
    add_gflow_option(graph_dot, src);

    auto *flow_cmd = app.add_subcommand("flow", "find, verify or report gflows")->require_subcommand(1);
    auto *find = flow_cmd->add_subcommand("find", "find a maximally delayed gflow");
    add_graph_options(find, src);
    find->add_flag("--causal", causal, "look for a causal flow instead");
    auto *verify = flow_cmd->add_subcommand("verify", "check a gflow against its conditions");
    add_graph_options(verify, src);
    add_gflow_option(verify, src);
    auto *report = flow_cmd->add_subcommand("report", "rounds, corrections and wires of a gflow");
    add_graph_options(report, src);
    add_gflow_option(report, src);

    auto *cone = app.add_subcommand("cone", "forward cones");
    add_graph_options(cone, src);
    add_gflow_option(cone, src);
    cone->add_option("--vertex", vertex, "cone of this vertex; the largest input cone when omitted");
    cone->add_flag("--dot", dot, "emit DOT with the cone shaded");

    auto *simulate = app.add_subcommand("simulate", "symbolic logical-operator simulation");
    add_graph_options(simulate, src);
    add_gflow_option(simulate, src);
    add_pattern_options(simulate, src);
    simulate->add_flag("--report-terms", report_terms, "include the output logical operators");

    auto *oracle_cmd = app.add_subcommand("oracle", "dense state-vector ground truth")->require_subcommand(1);
    auto *run = oracle_cmd->add_subcommand("run", "run one branch");
    auto *determinism = oracle_cmd->add_subcommand("determinism", "compare every branch with branch 0");
    auto *unitary = oracle_cmd->add_subcommand("unitary", "unitary implemented by branch 0");
    for (auto *cmd : {run, determinism, unitary}) {
        add_graph_options(cmd, src);
        add_gflow_option(cmd, src);
        add_pattern_options(cmd, src);
    }
    run->add_option("--branch", branch_bits, "outcome bits in measurement order, e.g. 0110 (default all 0)");
    run->add_option("--input-seed", input_seed, "seed of the random input state")->capture_default_str();
    determinism->add_option("--input-seed", input_seed, "seed of the random input state")->capture_default_str();

    auto *bounds = app.add_subcommand("bounds", "exact entanglement measures and the flow-wire bound");
    add_graph_options(bounds, src);
    add_gflow_option(bounds, src);

    auto *fixtures_cmd = app.add_subcommand("fixtures", "fixture catalog")->require_subcommand(1);
    auto *list = fixtures_cmd->add_subcommand("list", "list the named fixtures");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Json doc = envelope();
    auto emit = [&](const Json &j) { out << j.dump(2) << "\n"; };
    try {
        if (gen->parsed()) {
            if (!src.fixture.empty()) {
                auto fixture = fixture_by_name(src.fixture);
                doc["name"] = fixture.name;
                doc["graph"] = graph_to_json(fixture.graph);
                doc["gflow"] = fixture.gflow ? gflow_to_json(*fixture.gflow) : Json(nullptr);
            } else if (random_n > 0) {
                doc["graph"] =
                    graph_to_json(random_open_graph(random_n, edge_probability, random_inputs, random_outputs, graph_seed));
            } else {
                throw ParseError("graph gen needs --fixture or --random");
            }
            emit(doc);
            return kExitOk;
        }
        if (list->parsed()) {
            Json entries = Json::array();
            for (const auto &name : fixture_names()) {
                entries.push_back(name);
            }
            doc["fixtures"] = entries;
            Json instances = Json::array();
            for (const auto &f : standard_fixtures()) {
                instances.push_back({{"name", f.name}, {"description", f.description}, {"has_gflow", f.gflow.has_value()}});
            }
            doc["examples"] = instances;
            emit(doc);
            return kExitOk;
        }

        OpenGraph graph = load_graph(src);
        if (show->parsed()) {
            doc["graph"] = graph_to_json(graph);
            doc["edge_count"] = graph.edges().size();
            doc["measured"] = graph.measured();
            if (d_happy) {
                auto result = is_d_happy(graph, budgets.cuts);
                doc["d_happy"] = result.happy;
                doc["witness"] = result.witness ? Json(*result.witness) : Json(nullptr);
                doc["witness_rank"] = result.witness ? Json(result.witness_rank) : Json(nullptr);
            }
            emit(doc);
            return kExitOk;
        }
        if (graph_dot->parsed()) {
            auto gflow = declared_gflow(src);
            out << to_dot(graph, gflow ? &*gflow : nullptr);
            return kExitOk;
        }
        if (find->parsed()) {
            if (graph.inputs().size() > graph.outputs().size()) {
                throw ParseError("more inputs than outputs");
            }
            std::optional<GFlow> found;
            if (causal) {
                if (auto flow = find_causal_flow(graph)) {
                    found = flow->as_gflow();
                }
            } else {
                found = find_gflow(graph);
            }
            if (!found) {
                doc["gflow"] = nullptr;
                doc["reason"] = causal ? "no causal flow" : "no gflow";
                emit(doc);
                return kExitNegative;
            }
            doc["gflow"] = gflow_to_json(*found);
            doc["depth"] = measurement_rounds(*found).depth;
            emit(doc);
            return kExitOk;
        }
        if (verify->parsed()) {
            auto gflow = declared_gflow(src);
            if (!gflow) {
                throw ParseError("flow verify needs --gflow or a fixture with a declared gflow");
            }
            auto result = verify_gflow(graph, *gflow);
            Json violations = Json::array();
            for (const auto &v : result.violations) {
                violations.push_back({{"vertex", v.vertex}, {"rule", v.rule}});
            }
            doc["ok"] = result.ok();
            doc["violations"] = violations;
            emit(doc);
            return result.ok() ? kExitOk : kExitNegative;
        }

        GFlow gflow = require_gflow(graph, src);
        if (report->parsed()) {
            auto rounds = measurement_rounds(gflow);
            auto deps = correction_dependencies(graph, gflow);
            doc["depth"] = rounds.depth;
            doc["rounds"] = vertex_sets(rounds.rounds);
            Json per_vertex = Json::array();
            for (Vertex j = 0; j < graph.size(); j++) {
                per_vertex.push_back({{"vertex", j}, {"x_parity", deps.x_parity[j]}, {"z_parity", deps.z_parity[j]}});
            }
            doc["corrections"] = per_vertex;
            doc["classical_cost"] = {{"x", deps.x_total}, {"z", deps.z_total}, {"total", deps.total}};
            try {
                auto wires = flow_wires(graph, gflow);
                doc["wires"] = vertex_sets(wires.wires);
                doc["uncovered"] = wires.uncovered;
            } catch (const InconsistencyError &e) {
                doc["wires"] = nullptr;
                doc["wire_error"] = e.what();
            }
            emit(doc);
            return kExitOk;
        }
        if (cone->parsed()) {
            BitVec set(graph.size());
            if (vertex) {
                if (*vertex >= graph.size()) {
                    throw ParseError("vertex out of range", "--vertex");
                }
                set = forward_cone(graph, gflow, *vertex);
                doc["vertex"] = *vertex;
            } else if (auto best = max_forward_cone(graph, gflow)) {
                set = forward_cone(graph, gflow, best->vertex);
                doc["vertex"] = best->vertex;
            } else {
                doc["vertex"] = nullptr;
            }
            if (dot) {
                out << to_dot(graph, &gflow, &set);
                return kExitOk;
            }
            doc["cone"] = set.indices();
            doc["size"] = set.count();
            emit(doc);
            return kExitOk;
        }
        if (bounds->parsed()) {
            auto exact = [&](auto &&fn) -> Json {
                try {
                    return fn();
                } catch (const BudgetExceeded &) {
                    return nullptr;
                }
            };
            doc["e_struc_exact"] = exact([&] { return structural_entanglement_exact(graph, budgets.order); });
            doc["chi_wd_exact"] = exact([&] { return entanglement_width_exact(graph, budgets.tree); });
            try {
                auto bound = flow_entanglement_bound(graph, gflow, budgets.wire_order);
                doc["c_f"] = bound.c_f;
                doc["delta"] = bound.delta;
                doc["flow_bound"] = bound.bound;
                doc["wires"] = vertex_sets(bound.wires.wires);
                doc["wire_order"] = bound.wire_order;
            } catch (const InconsistencyError &e) {
                doc["c_f"] = doc["delta"] = doc["flow_bound"] = nullptr;
                doc["wire_error"] = e.what();
            }
            emit(doc);
            return kExitOk;
        }

        MeasurementPattern pattern = load_pattern(graph, src);
        if (simulate->parsed()) {
            auto result = simulate_pattern(graph, gflow, pattern);
            doc["unitary"] = result.unitary ? matrix_to_json(*result.unitary) : Json(nullptr);
            doc["term_counts"] = result.term_high_water;
            doc["cone_sizes"] = result.cone_sizes;
            doc["cone_bound_holds"] = result.cone_bound_holds;
            if (report_terms) {
                Json logicals = Json::array();
                for (std::size_t q = 0; q < graph.inputs().size(); q++) {
                    logicals.push_back({{"input", graph.inputs()[q]},
                                        {"x", logical_to_json(result.outputs[2 * q])},
                                        {"z", logical_to_json(result.outputs[2 * q + 1])}});
                }
                doc["logicals"] = logicals;
                doc["output_order"] = graph.outputs();
            }
            emit(doc);
            return kExitOk;
        }
        if (run->parsed()) {
            std::vector<Vertex> order;
            for (const auto &round : measurement_rounds(gflow).rounds) {
                order.insert(order.end(), round.begin(), round.end());
            }
            if (!branch_bits.empty() && branch_bits.size() != order.size()) {
                throw ParseError("expected " + std::to_string(order.size()) + " outcome bits", "--branch");
            }
            std::map<Vertex, bool> outcomes;
            for (std::size_t k = 0; k < order.size(); k++) {
                char bit = branch_bits.empty() ? '0' : branch_bits[k];
                if (bit != '0' && bit != '1') {
                    throw ParseError("outcome bits must be 0 or 1", "--branch");
                }
                outcomes[order[k]] = bit == '1';
            }
            auto input = random_state(graph.inputs().size(), input_seed);
            auto record = run_branch(graph, gflow, pattern, input, outcomes, true, budgets.dense);
            Json steps = Json::array();
            for (auto [v, p] : record.step_probabilities) {
                steps.push_back({{"vertex", v}, {"outcome", int(record.outcomes.at(v))}, {"probability", p}});
            }
            Json state = Json::array();
            for (Eigen::Index k = 0; k < record.output.size(); k++) {
                state.push_back({record.output(k).real(), record.output(k).imag()});
            }
            doc["steps"] = steps;
            doc["probability"] = record.probability;
            doc["output_state"] = record.probability > 0 ? state : Json(nullptr);
            doc["output_order"] = graph.outputs();
            emit(doc);
            return kExitOk;
        }
        if (determinism->parsed()) {
            auto result = check_determinism(graph, gflow, pattern, input_seed, budgets.branches, budgets.dense);
            doc["deterministic"] = result.deterministic;
            doc["worst_fidelity"] = result.worst_fidelity;
            doc["branches"] = result.branches;
            doc["equiprobable"] = result.equiprobable;
            doc["worst_probability_deviation"] = result.worst_probability_deviation;
            doc["total_probability"] = result.total_probability;
            emit(doc);
            return result.deterministic ? kExitOk : kExitNegative;
        }
        if (unitary->parsed()) {
            doc["unitary"] = matrix_to_json(oracle_unitary(graph, gflow, pattern, budgets.dense));
            emit(doc);
            return kExitOk;
        }
        throw ParseError("no command selected");
    } catch (const DomainNegative &e) {
        emit(e.report());
        err << e.what() << "\n";
        return kExitNegative;
    } catch (const NotDeterministic &e) {
        doc = envelope();
        doc["error"] = e.what();
        doc["kind"] = "not-deterministic";
        emit(doc);
        err << e.what() << "\n";
        return kExitNegative;
    } catch (const BudgetExceeded &e) {
        doc = envelope();
        doc["error"] = e.what();
        doc["kind"] = "budget-exceeded";
        emit(doc);
        err << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception &e) {
        doc = envelope();
        doc["error"] = e.what();
        doc["kind"] = "usage";
        emit(doc);
        err << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace mbqc
