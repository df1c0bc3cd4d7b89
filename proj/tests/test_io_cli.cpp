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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mbqc/cli.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/fixtures.hpp"
#include "mbqc/io.hpp"

using namespace mbqc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("mbqc_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string field_of(const std::string &text, bool graph) {
    try {
        auto doc = Json::parse(text);
        if (graph) {
            graph_from_json(doc);
        } else {
            gflow_from_json(doc);
        }
    } catch (const ParseError &e) {
        return e.field();
    }
    return "<none>";
}

}  // namespace

TEST_SUITE("io_cli") {
    TEST_CASE("JSON round trips") {
        for (const auto &f : standard_fixtures()) {
            auto graph = graph_from_json(Json::parse(graph_to_json(f.graph).dump()));
            CHECK(graph.edges() == f.graph.edges());
            CHECK(graph.inputs() == f.graph.inputs());
            CHECK(graph.outputs() == f.graph.outputs());
            if (f.gflow) {
                CHECK(gflow_from_json(Json::parse(gflow_to_json(*f.gflow).dump())) == *f.gflow);
            }
        }
        MeasurementPattern p;
        p.angles = {{0, 0.25}, {2, 3.0}};
        p.planes = {{0, Plane::XZ}, {2, Plane::YZ}};
        auto back = pattern_from_json(pattern_to_json(p));
        CHECK(back.angles == p.angles);
        CHECK(back.planes == p.planes);

        auto legacy = gflow_from_json(Json::parse(R"({"g": {"0": [1]}, "layers": [[0], [1]]})"));
        CHECK(legacy.plane(0) == Plane::XY);

        Eigen::MatrixXcd m(1, 2);
        m << Complex(1, 2), Complex(3, -4);
        CHECK(matrix_to_json(m).dump() == "[[[1.0,2.0],[3.0,-4.0]]]");
    }

    TEST_CASE("parse errors name the offending field") {
        CHECK(field_of(R"({"edges": [], "inputs": [], "outputs": []})", true) == "n");
        CHECK(field_of(R"({"n": 2, "edges": [[0]], "inputs": [], "outputs": []})", true) == "edges[0]");
        CHECK(field_of(R"({"n": 2, "edges": [[0, 1]], "inputs": [-1], "outputs": []})", true) == "inputs[0]");
        CHECK(field_of(R"({"n": 2, "edges": [[0, 0]], "inputs": [], "outputs": []})", true) == "graph");
        CHECK(field_of(R"({"g": {"x": [1]}, "layers": []})", false) == "g");
        CHECK(field_of(R"({"g": {"0": [1]}, "layers": [[0], [1]], "planes": {"0": "XX"}})", false) == "planes.0");
        CHECK_THROWS_AS(parse_json_text("{broken"), ParseError);
        CHECK_THROWS_AS(load_json_file("/nonexistent/mbqc.json"), ParseError);
    }

    TEST_CASE("dot output") {
        auto f = path_fixture(3);
        BitVec highlight = BitVec::from_indices(3, {1});
        auto dot = to_dot(f.graph, &*f.gflow, &highlight);
        CHECK(dot.find("graph") != std::string::npos);
        CHECK(dot.find("0 -- 1") != std::string::npos);
        CHECK(dot.find("dashed") != std::string::npos);
        CHECK(dot.find("orange") != std::string::npos);
    }

    TEST_CASE("exit codes") {
        CHECK(run({"fixtures", "list"}).code == kExitOk);
        CHECK(run({"flow", "find", "--fixture", "path-5"}).json()["depth"] == 4);
        auto negative = run({"flow", "find", "--fixture", "bottleneck"});
        CHECK(negative.code == kExitNegative);
        CHECK(negative.json()["gflow"].is_null());
        CHECK(negative.json()["reason"] == "no gflow");
        CHECK(run({"simulate", "--fixture", "bottleneck"}).code == kExitNegative);
        CHECK(run({"flow", "find", "--fixture", "nope"}).code == kExitUsage);
        CHECK(run({"bogus"}).code == kExitUsage);
        CHECK(run({"flow"}).code == kExitUsage);
        CHECK(run({"cone", "--fixture", "path-3", "--vertex", "9"}).code == kExitUsage);
        CHECK(run({"--help"}).code == kExitOk);
        auto budget = run({"--budget-branches", "2", "oracle", "determinism", "--fixture", "path-4"});
        CHECK(budget.code == kExitBudget);
        CHECK(budget.json()["kind"] == "budget-exceeded");
        CHECK(run({"oracle", "unitary", "--fixture", "path-4", "--budget-dense", "3"}).code == kExitBudget);

        // A wrong gflow is reported as a verification failure, and its pattern is not deterministic.
        auto bad = write_temp("bad_gflow.json", R"({"g": {"0": [2], "1": [2]}, "layers": [[0], [1], [2]]})");
        auto verify = run({"flow", "verify", "--fixture", "path-3", "--gflow", bad});
        CHECK(verify.code == kExitNegative);
        CHECK_FALSE(verify.json()["ok"].get<bool>());
        CHECK(run({"oracle", "determinism", "--fixture", "path-3", "--gflow", bad, "--angle-seed", "3"}).code ==
              kExitNegative);
    }

    TEST_CASE("graph files and generation") {
        auto gen = run({"graph", "gen", "--random", "6", "--edge-probability", "0.5", "--inputs", "1", "--outputs",
                        "2", "--seed", "4"});
        REQUIRE(gen.code == kExitOk);
        auto path = write_temp("random_graph.json", gen.json()["graph"].dump());
        auto show = run({"graph", "show", "--graph", path, "--d-happy"});
        CHECK(show.code == kExitOk);
        CHECK(show.json()["graph"] == gen.json()["graph"]);
        CHECK(show.json().contains("d_happy"));
        CHECK(run({"graph", "gen"}).code == kExitUsage);
        CHECK(run({"graph", "show", "--graph", path, "--fixture", "path-3"}).code == kExitUsage);
        auto again = run({"graph", "gen", "--random", "6", "--edge-probability", "0.5", "--inputs", "1", "--outputs",
                          "2", "--seed", "4"});
        CHECK(again.out == gen.out);
    }

    TEST_CASE("every subcommand on every fixture emits JSON") {
        const std::vector<std::vector<std::string>> commands{
            {"graph", "show"},   {"flow", "find"},        {"flow", "report"},      {"cone"},
            {"simulate"},        {"oracle", "run"},       {"oracle", "determinism"}, {"oracle", "unitary"},
            {"bounds"},          {"graph", "gen"}};
        for (const auto &fixture : standard_fixtures()) {
            const std::string &name = fixture.name;
            for (auto args : commands) {
                args.push_back("--fixture");
                args.push_back(name);
                if (args[0] == "simulate" || args[0] == "oracle") {
                    args.push_back("--angle-seed");
                    args.push_back("5");
                }
                auto result = run(args);
                INFO(name << " " << args[0]);
                CHECK(result.code != kExitUsage);
                auto doc = result.json();
                CHECK(doc["schema_version"] == kSchemaVersion);
            }
        }
        auto sim = run({"simulate", "--fixture", "path-2", "--report-terms"});
        CHECK(sim.json()["logicals"].size() == 1);
        auto branch = run({"oracle", "run", "--fixture", "path-3", "--branch", "10"});
        CHECK(branch.json()["steps"].size() == 2);
        CHECK(run({"oracle", "run", "--fixture", "path-3", "--branch", "1"}).code == kExitUsage);
        auto dot = run({"cone", "--fixture", "cluster-4x4", "--dot"});
        CHECK(dot.out.rfind("graph", 0) == 0);
    }
}
