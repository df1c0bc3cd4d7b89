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

#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mbqc/cli.hpp"
#include "mbqc/cone.hpp"
#include "mbqc/ent_bounds.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/fixtures.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/statevec.hpp"
#include "mbqc/symbolic_sim.hpp"

namespace py = pybind11;
using namespace mbqc;

namespace {

BitVec side_mask(const OpenGraph &graph, const VertexSet &side) { return graph.mask(side); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Flow, cone, simulation and entanglement analysis of open graph states";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<NotDeterministic>(m, "NotDeterministic");
    py::register_exception<InconsistencyError>(m, "InconsistencyError");
    py::register_exception<InvalidState>(m, "InvalidState");
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<Plane>(m, "Plane").value("XY", Plane::XY).value("XZ", Plane::XZ).value("YZ", Plane::YZ);

    py::class_<OpenGraph>(m, "OpenGraph")
        .def(py::init<std::size_t, std::vector<Edge>, std::vector<Vertex>, std::vector<Vertex>>(), py::arg("n"),
             py::arg("edges"), py::arg("inputs"), py::arg("outputs"))
        .def_property_readonly("size", &OpenGraph::size)
        .def_property_readonly("edges", &OpenGraph::edges)
        .def_property_readonly("inputs", &OpenGraph::inputs)
        .def_property_readonly("outputs", &OpenGraph::outputs)
        .def("neighbors", [](const OpenGraph &g, Vertex v) { return g.neighbors(v).indices(); })
        .def("measured", &OpenGraph::measured)
        .def("__repr__", [](const OpenGraph &g) {
            return "OpenGraph(n=" + std::to_string(g.size()) + ", edges=" + std::to_string(g.edges().size()) + ")";
        });

    py::class_<GFlow>(m, "GFlow")
        .def(py::init<>())
        .def_readwrite("g", &GFlow::g)
        .def_readwrite("layers", &GFlow::layers)
        .def_readwrite("planes", &GFlow::planes)
        .def("is_flow", &GFlow::is_flow)
        .def("plane", &GFlow::plane)
        .def(py::self == py::self);

    py::class_<MeasurementPattern>(m, "MeasurementPattern")
        .def(py::init<>())
        .def_readwrite("angles", &MeasurementPattern::angles)
        .def_readwrite("planes", &MeasurementPattern::planes)
        .def_static("xy", &MeasurementPattern::xy, py::arg("graph"), py::arg("angles"));

    m.def("find_gflow", &find_gflow, py::arg("graph"));
    m.def(
        "find_causal_flow",
        [](const OpenGraph &g) -> std::optional<GFlow> {
            if (auto flow = find_causal_flow(g)) {
                return flow->as_gflow();
            }
            return std::nullopt;
        },
        py::arg("graph"), "Causal flow as a gFlow with singleton correcting sets, or None.");
    m.def(
        "verify_gflow",
        [](const OpenGraph &g, const GFlow &f) {
            std::vector<std::pair<Vertex, std::string>> out;
            for (const auto &v : verify_gflow(g, f).violations) {
                out.emplace_back(v.vertex, v.rule);
            }
            return out;
        },
        py::arg("graph"), py::arg("gflow"), "List of (vertex, rule) violations; empty when valid.");
    m.def("measurement_rounds", [](const GFlow &f) { return measurement_rounds(f).rounds; }, py::arg("gflow"));
    m.def(
        "correction_dependencies",
        [](const OpenGraph &g, const GFlow &f) {
            auto r = correction_dependencies(g, f);
            py::dict d;
            d["x_parity"] = r.x_parity;
            d["z_parity"] = r.z_parity;
            d["total"] = r.total;
            d["depth"] = r.depth;
            return d;
        },
        py::arg("graph"), py::arg("gflow"));
    m.def(
        "flow_wires",
        [](const OpenGraph &g, const GFlow &f) {
            auto w = flow_wires(g, f);
            return py::make_tuple(w.wires, w.uncovered);
        },
        py::arg("graph"), py::arg("gflow"));

    m.def(
        "forward_cone", [](const OpenGraph &g, const GFlow &f, Vertex v) { return forward_cone(g, f, v).indices(); },
        py::arg("graph"), py::arg("gflow"), py::arg("vertex"));
    m.def(
        "max_forward_cone",
        [](const OpenGraph &g, const GFlow &f) -> std::optional<std::pair<Vertex, std::size_t>> {
            if (auto best = max_forward_cone(g, f)) {
                return std::make_pair(best->vertex, best->size);
            }
            return std::nullopt;
        },
        py::arg("graph"), py::arg("gflow"), "(vertex, size) of the largest input cone, or None without inputs.");

    m.def(
        "cut_rank", [](const OpenGraph &g, const VertexSet &side) { return cut_rank(g, side_mask(g, side)); },
        py::arg("graph"), py::arg("side"));
    m.def(
        "is_d_happy",
        [](const OpenGraph &g, std::size_t budget) {
            auto r = is_d_happy(g, budget);
            return py::make_tuple(r.happy, r.witness);
        },
        py::arg("graph"), py::arg("budget") = kDefaultCutBudget);

    m.def(
        "simulate",
        [](const OpenGraph &g, const GFlow &f, const MeasurementPattern &p) {
            auto r = simulate_pattern(g, f, p);
            py::dict d;
            d["unitary"] = r.unitary ? py::cast(*r.unitary) : py::none();
            d["term_counts"] = r.term_high_water;
            d["cone_sizes"] = r.cone_sizes;
            d["cone_bound_holds"] = r.cone_bound_holds;
            return d;
        },
        py::arg("graph"), py::arg("gflow"), py::arg("pattern"));
    m.def(
        "oracle_unitary",
        [](const OpenGraph &g, const GFlow &f, const MeasurementPattern &p) { return oracle_unitary(g, f, p); },
        py::arg("graph"), py::arg("gflow"), py::arg("pattern"));
    m.def(
        "check_determinism",
        [](const OpenGraph &g, const GFlow &f, const MeasurementPattern &p, std::uint64_t seed) {
            auto r = check_determinism(g, f, p, seed);
            py::dict d;
            d["deterministic"] = r.deterministic;
            d["worst_fidelity"] = r.worst_fidelity;
            d["branches"] = r.branches;
            d["equiprobable"] = r.equiprobable;
            d["total_probability"] = r.total_probability;
            return d;
        },
        py::arg("graph"), py::arg("gflow"), py::arg("pattern"), py::arg("seed") = 1);

    m.def("structural_entanglement", &structural_entanglement_exact, py::arg("graph"),
          py::arg("max_vertices") = kDefaultOrderBudget);
    m.def("entanglement_width", &entanglement_width_exact, py::arg("graph"),
          py::arg("max_vertices") = kDefaultTreeBudget);
    m.def(
        "flow_entanglement_bound",
        [](const OpenGraph &g, const GFlow &f) {
            auto b = flow_entanglement_bound(g, f);
            py::dict d;
            d["c_f"] = b.c_f;
            d["delta"] = b.delta;
            d["bound"] = b.bound;
            d["wires"] = b.wires.wires;
            return d;
        },
        py::arg("graph"), py::arg("gflow"));

    m.def(
        "fixture",
        [](const std::string &name) {
            auto f = fixture_by_name(name);
            return py::make_tuple(f.graph, f.gflow);
        },
        py::arg("name"), "(graph, gflow or None) of a named fixture such as 'path-5' or 'cluster-2x3'.");
    m.def("fixture_names", [] {
        std::vector<std::string> names;
        for (const auto &f : standard_fixtures()) {
            names.push_back(f.name);
        }
        return names;
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
