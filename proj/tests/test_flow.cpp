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

#include <random>

#include "mbqc/errors.hpp"
#include "mbqc/fixtures.hpp"
#include "mbqc/flow.hpp"
#include "oracles.hpp"

using namespace mbqc;

TEST_SUITE("flow_engine") {
    TEST_CASE("causal flow on a path") {
        auto g = path_fixture(6).graph;
        auto flow = find_causal_flow(g);
        REQUIRE(flow);
        for (Vertex i = 0; i + 1 < 6; i++) {
            CHECK(flow->f.at(i) == i + 1);
        }
        CHECK(flow->layers == std::vector<VertexSet>{{0}, {1}, {2}, {3}, {4}, {5}});
        CHECK(verify_gflow(g, flow->as_gflow()).ok());
    }

    TEST_CASE("nothing measured") {
        OpenGraph g(3, {{0, 1}, {1, 2}}, {0, 1, 2}, {0, 1, 2});
        auto flow = find_causal_flow(g);
        REQUIRE(flow);
        CHECK(flow->f.empty());
        CHECK(flow->layers == std::vector<VertexSet>{{0, 1, 2}});
        auto gflow = find_gflow(g);
        REQUIRE(gflow);
        CHECK(gflow->g.empty());
        CHECK(measurement_rounds(*gflow).depth == 0);
        auto deps = correction_dependencies(g, *gflow);
        CHECK(deps.total == 0);
    }

    TEST_CASE("bottleneck has neither flow nor gflow") {
        auto g = bottleneck_fixture().graph;
        CHECK_FALSE(find_causal_flow(g));
        CHECK_FALSE(find_gflow(g));
    }

    TEST_CASE("gflow without causal flow") {
        auto fixture = no_flow_gflow_fixture();
        CHECK_FALSE(find_causal_flow(fixture.graph));
        CHECK_FALSE(oracle::exhaustive_causal_flow(fixture.graph));
        REQUIRE(fixture.gflow);
        CHECK(verify_gflow(fixture.graph, *fixture.gflow).ok());
        auto rounds = measurement_rounds(*fixture.gflow);
        CHECK(rounds.rounds == std::vector<VertexSet>{{0}, {1}, {2}});
        auto found = find_gflow(fixture.graph);
        REQUIRE(found);
        CHECK(verify_gflow(fixture.graph, *found).ok());
    }

    TEST_CASE("no-flow fixture is the smallest graph carrying its gflow") {
        // Among all bipartite input/output graphs on 3+3 vertices for which the fixture's gflow
        // is valid and no causal flow exists, the fixture has the fewest edges and comes first
        // in edge-bitmask order.
        auto fixture = no_flow_gflow_fixture();
        std::vector<Edge> candidates;
        for (Vertex a = 0; a < 6; a++) {
            for (Vertex b = a + 1; b < 6; b++) {
                candidates.emplace_back(a, b);
            }
        }
        std::optional<std::vector<Edge>> best;
        for (std::uint32_t mask = 0; mask < (1U << candidates.size()); mask++) {
            std::vector<Edge> edges;
            for (std::size_t k = 0; k < candidates.size(); k++) {
                if ((mask >> k) & 1U) {
                    edges.push_back(candidates[k]);
                }
            }
            if (best && edges.size() >= best->size()) {
                continue;
            }
            OpenGraph g(6, edges, {0, 1, 2}, {3, 4, 5});
            if (verify_gflow(g, *fixture.gflow).ok() && !find_causal_flow(g)) {
                best = edges;
            }
        }
        REQUIRE(best);
        CHECK(OpenGraph(6, *best, {0, 1, 2}, {3, 4, 5}) == fixture.graph);
    }

    TEST_CASE("depth tradeoff fixtures") {
        auto flow = depth_tradeoff_fixture(false);
        auto one = depth_tradeoff_fixture(true);
        CHECK(flow.graph == one.graph);
        CHECK(verify_gflow(flow.graph, *flow.gflow).ok());
        CHECK(verify_gflow(one.graph, *one.gflow).ok());
        CHECK(flow.gflow->is_flow());
        CHECK(measurement_rounds(*flow.gflow).depth == 4);
        CHECK(measurement_rounds(*one.gflow).depth == 1);
        auto found = find_gflow(one.graph);
        REQUIRE(found);
        CHECK(measurement_rounds(*found).depth == 1);
        CHECK(*found == *one.gflow);

        auto deps = correction_dependencies(one.graph, *one.gflow);
        CHECK(deps.x_parity[7] == VertexSet{0, 1, 2, 3});
        CHECK(deps.depth == 1);
        auto flow_deps = correction_dependencies(flow.graph, *flow.gflow);
        CHECK(flow_deps.depth == 4);
        CHECK(flow_deps.total < deps.total);
    }

    TEST_CASE("path correction dependencies") {
        auto fixture = path_fixture(6);
        auto deps = correction_dependencies(fixture.graph, *fixture.gflow);
        for (Vertex j = 1; j < 6; j++) {
            CHECK(deps.x_parity[j] == VertexSet{j - 1});
            if (j >= 2) {
                CHECK(deps.z_parity[j] == VertexSet{j - 2});
            } else {
                CHECK(deps.z_parity[j].empty());
            }
        }
        CHECK(measurement_rounds(*path_fixture(5).gflow).depth == 4);
    }

    TEST_CASE("verification reports each broken rule") {
        OpenGraph g(3, {{0, 1}, {1, 2}}, {0}, {2});
        GFlow bad;
        bad.g = {{0, {2}}, {1, {2}}};
        bad.planes = {{0, Plane::XY}, {1, Plane::XY}};
        bad.layers = {{0}, {1}, {2}};
        auto result = verify_gflow(g, bad);
        CHECK(std::find(result.violations.begin(), result.violations.end(), Violation{0, "g3"}) !=
              result.violations.end());

        GFlow yz = *path_fixture(3).gflow;
        yz.planes[1] = Plane::YZ;
        result = verify_gflow(path_fixture(3).graph, yz);
        CHECK(std::find(result.violations.begin(), result.violations.end(), Violation{1, "g5"}) !=
              result.violations.end());
        yz.planes[1] = Plane::XZ;
        result = verify_gflow(path_fixture(3).graph, yz);
        CHECK(std::find(result.violations.begin(), result.violations.end(), Violation{1, "g4"}) !=
              result.violations.end());

        GFlow backwards = *path_fixture(3).gflow;
        backwards.layers = {{1}, {0}, {2}};
        result = verify_gflow(path_fixture(3).graph, backwards);
        CHECK(std::find(result.violations.begin(), result.violations.end(), Violation{0, "g1"}) !=
              result.violations.end());
        GFlow late_neighbour = *path_fixture(4).gflow;
        late_neighbour.layers = {{2}, {0}, {1}, {3}};
        result = verify_gflow(path_fixture(4).graph, late_neighbour);
        CHECK(std::find(result.violations.begin(), result.violations.end(), Violation{0, "g2"}) !=
              result.violations.end());

        GFlow into_input = *path_fixture(3).gflow;
        into_input.g[1] = {0, 2};
        into_input.layers = {{1}, {0}, {2}};
        result = verify_gflow(path_fixture(3).graph, into_input);
        CHECK(std::find(result.violations.begin(), result.violations.end(), Violation{1, "codomain"}) !=
              result.violations.end());
    }

    TEST_CASE("malformed gflows are rejected") {
        auto fixture = path_fixture(3);
        GFlow missing = *fixture.gflow;
        missing.g.erase(1);
        CHECK_THROWS_AS(verify_gflow(fixture.graph, missing), std::invalid_argument);
        GFlow extra = *fixture.gflow;
        extra.g[2] = {1};
        extra.planes[2] = Plane::XY;
        CHECK_THROWS_AS(verify_gflow(fixture.graph, extra), std::invalid_argument);
        GFlow uncovered = *fixture.gflow;
        uncovered.layers = {{0}, {2}};
        CHECK_THROWS_AS(verify_gflow(fixture.graph, uncovered), std::invalid_argument);
        GFlow mixed_last = *fixture.gflow;
        mixed_last.layers = {{0}, {1, 2}};
        CHECK_THROWS_AS(verify_gflow(fixture.graph, mixed_last), std::invalid_argument);
    }

    TEST_CASE("found flows always verify") {
        std::mt19937_64 rng(3);
        int flows = 0, gflows = 0;
        for (int trial = 0; trial < 400; trial++) {
            auto g = oracle::random_flow_candidate(rng, 3 + trial % 9, 0.35);
            if (auto flow = find_causal_flow(g)) {
                flows++;
                CHECK(verify_gflow(g, flow->as_gflow()).ok());
                REQUIRE(find_gflow(g));
            }
            if (auto gflow = find_gflow(g)) {
                gflows++;
                CHECK(verify_gflow(g, *gflow).ok());
                CHECK(gflow->layers.back() == g.outputs());
            }
        }
        CHECK(flows > 30);
        CHECK(gflows > flows);
    }

    TEST_CASE("gflow finding agrees with exhaustive search and has minimum depth") {
        std::mt19937_64 rng(29);
        int agree_yes = 0, agree_no = 0;
        for (int trial = 0; trial < 250; trial++) {
            auto g = oracle::random_flow_candidate(rng, 2 + trial % 5, 0.45);
            auto expected = oracle::exhaustive_gflow(g);
            auto found = find_gflow(g);
            REQUIRE(found.has_value() == expected.exists);
            if (found) {
                agree_yes++;
                CHECK(measurement_rounds(*found).depth == expected.min_depth);
            } else {
                agree_no++;
            }
        }
        CHECK(agree_yes > 20);
        CHECK(agree_no > 20);
    }

    TEST_CASE("causal flow finding agrees with exhaustive search") {
        std::mt19937_64 rng(31);
        int yes = 0, no = 0;
        for (int trial = 0; trial < 300; trial++) {
            auto g = oracle::random_flow_candidate(rng, 2 + trial % 6, 0.4);
            bool expected = oracle::exhaustive_causal_flow(g);
            REQUIRE(find_causal_flow(g).has_value() == expected);
            (expected ? yes : no)++;
        }
        CHECK(yes > 20);
        CHECK(no > 20);
    }

    TEST_CASE("flow wires") {
        auto path = path_fixture(5);
        auto wires = flow_wires(path.graph, *path.gflow);
        CHECK(wires.wires == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}});
        CHECK(wires.uncovered.empty());

        auto cluster = cluster_fixture(3, 4);
        wires = flow_wires(cluster.graph, *cluster.gflow);
        REQUIRE(wires.wires.size() == 3);
        for (std::size_t r = 0; r < 3; r++) {
            CHECK(wires.wires[r] == std::vector<Vertex>{4 * r, 4 * r + 1, 4 * r + 2, 4 * r + 3});
        }
        CHECK(wires.uncovered.empty());

        GFlow fake;
        fake.g = {{0, {3}}, {1, {4}}, {2, {3}}};
        fake.planes = {{0, Plane::XY}, {1, Plane::XY}, {2, Plane::XY}};
        fake.layers = {{0, 1}, {2}, {3, 4}};
        CHECK_THROWS_AS(flow_wires(bottleneck_fixture().graph, fake), InconsistencyError);

        auto tradeoff = depth_tradeoff_fixture(true);
        wires = flow_wires(tradeoff.graph, *tradeoff.gflow);
        CHECK(wires.wires.size() == 4);
        CHECK(wires.uncovered.empty());
    }

    TEST_CASE("wires are disjoint induced paths from inputs to outputs") {
        std::mt19937_64 rng(37);
        int checked = 0;
        for (int trial = 0; trial < 300; trial++) {
            auto g = oracle::random_flow_candidate(rng, 3 + trial % 8, 0.4);
            auto gflow = find_gflow(g);
            if (!gflow) {
                continue;
            }
            checked++;
            auto flow = find_causal_flow(g);
            auto wires = flow_wires(g, flow ? flow->as_gflow() : *gflow);
            REQUIRE(wires.wires.size() == g.inputs().size());
            BitVec seen(g.size());
            for (std::size_t w = 0; w < wires.wires.size(); w++) {
                const auto &wire = wires.wires[w];
                CHECK(wire.front() == g.inputs()[w]);
                CHECK(g.is_output(wire.back()));
                for (std::size_t a = 0; a < wire.size(); a++) {
                    CHECK_FALSE(seen.get(wire[a]));
                    seen.set(wire[a]);
                    if (a + 1 < wire.size()) {
                        CHECK(g.adjacent(wire[a], wire[a + 1]));
                        CHECK_FALSE(g.is_output(wire[a]));
                    }
                    for (std::size_t b = a + 2; b < wire.size(); b++) {
                        CHECK_FALSE(g.adjacent(wire[a], wire[b]));
                    }
                }
            }
            for (auto v : wires.uncovered) {
                CHECK_FALSE(seen.get(v));
                CHECK_FALSE(g.is_output(v));
            }
            if (flow && g.inputs().size() == g.outputs().size()) {
                CHECK(wires.uncovered.empty());
            }
        }
        CHECK(checked > 50);
    }
}
