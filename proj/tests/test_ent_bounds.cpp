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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mbqc/ent_bounds.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/fixtures.hpp"
#include "oracles.hpp"

using namespace mbqc;

namespace {

OpenGraph relabel(const OpenGraph &g, const std::vector<Vertex> &perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(perm[u], perm[v]);
    }
    VertexSet inputs, outputs;
    for (auto v : g.inputs()) {
        inputs.push_back(perm[v]);
    }
    for (auto v : g.outputs()) {
        outputs.push_back(perm[v]);
    }
    return OpenGraph(g.size(), edges, inputs, outputs);
}

}  // namespace

TEST_SUITE("ent_bounds") {
    TEST_CASE("structural entanglement on examples") {
        CHECK(structural_entanglement_exact(path_fixture(6).graph) == 1);
        CHECK(structural_entanglement_exact(cluster_fixture(2, 2).graph) == 1);
        CHECK(structural_entanglement_exact(OpenGraph(1, {}, {0}, {0})) == 0);
        CHECK(structural_entanglement_exact(OpenGraph(3, {}, {}, {0})) == 0);
        std::vector<Edge> complete;
        for (Vertex u = 0; u < 5; u++) {
            for (Vertex v = u + 1; v < 5; v++) {
                complete.emplace_back(u, v);
            }
        }
        CHECK(structural_entanglement_exact(OpenGraph(5, complete, {}, {0})) == 1);
        CHECK_THROWS_AS(structural_entanglement_exact(cluster_fixture(3, 3).graph), BudgetExceeded);
        CHECK(structural_entanglement_exact(cluster_fixture(3, 3).graph, 9) ==
              oracle::permutation_structural_entanglement(cluster_fixture(3, 3).graph));
    }

    TEST_CASE("ordering search agrees with permutations") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 80; trial++) {
            auto g = oracle::random_graph(rng, 1 + rng() % 7, 0.5, 0, 1);
            CHECK(structural_entanglement_exact(g) == oracle::permutation_structural_entanglement(g));
        }
    }

    TEST_CASE("cubic tree enumeration") {
        std::size_t expected = 1;
        for (std::size_t n = 3; n <= 7; n++) {
            if (n > 3) {
                expected *= 2 * n - 5;
            }
            auto trees = cubic_trees(n);
            CHECK(trees.size() == expected);
            std::set<std::set<std::vector<std::size_t>>> distinct;
            for (const auto &t : trees) {
                CHECK(t.leaves == n);
                CHECK(t.nodes == 2 * n - 2);
                CHECK(t.edges.size() == 2 * n - 3);
                std::vector<int> degree(t.nodes);
                for (auto [u, v] : t.edges) {
                    degree[u]++;
                    degree[v]++;
                }
                for (std::size_t k = 0; k < t.nodes; k++) {
                    CHECK(degree[k] == (k < n ? 1 : 3));
                }
                std::set<std::vector<std::size_t>> splits;
                for (std::size_t e = 0; e < t.edges.size(); e++) {
                    auto side = t.split(e).indices();
                    if (!side.empty() && side.front() != 0) {
                        side = t.split(e).complement().indices();
                    }
                    splits.insert(side);
                }
                distinct.insert(splits);
            }
            CHECK(distinct.size() == trees.size());
        }
        CHECK(cubic_trees(2).size() == 1);
    }

    TEST_CASE("entanglement width examples and ordering") {
        CHECK(entanglement_width_exact(path_fixture(5).graph) == 1);
        CHECK(entanglement_width_exact(cluster_fixture(2, 2).graph) == 1);
        CHECK_THROWS_AS(entanglement_width_exact(path_fixture(7).graph), BudgetExceeded);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 60; trial++) {
            auto g = oracle::random_graph(rng, 1 + rng() % 6, 0.5, 0, 1);
            CHECK(entanglement_width_exact(g) <= structural_entanglement_exact(g));
        }
    }

    TEST_CASE("flow bound on examples") {
        auto path = path_fixture(4);
        auto bound = flow_entanglement_bound(path.graph, *path.gflow);
        CHECK(bound.c_f == 0);
        CHECK(bound.delta == 0);
        CHECK(bound.bound == 1);
        CHECK(bound.wires.wires.size() == 1);

        auto cluster = cluster_fixture(3, 4);
        auto cb = flow_entanglement_bound(cluster.graph, *cluster.gflow);
        CHECK(cb.c_f == 4);
        CHECK(cb.bound == 9);
        CHECK(cb.wire_order.size() == 3);

        auto ladder = cluster_fixture(2, 3);
        auto lb = flow_entanglement_bound(ladder.graph, *ladder.gflow);
        CHECK(lb.c_f == 3);
        CHECK(lb.bound == 7);
        CHECK(structural_entanglement_exact(ladder.graph) == 2);

        OpenGraph bare(3, {}, {0, 1, 2}, {0, 1, 2});
        GFlow none;
        none.layers = {{0, 1, 2}};
        CHECK(flow_entanglement_bound(bare, none).bound == 1);

        auto gf = no_flow_gflow_fixture();
        auto nb = flow_entanglement_bound(gf.graph, *gf.gflow);
        CHECK(nb.bound >= structural_entanglement_exact(gf.graph));
    }

    TEST_CASE("flow bound dominates structural entanglement") {
        std::mt19937_64 rng(7);
        int checked = 0;
        while (checked < 120) {
            auto g = oracle::random_flow_candidate(rng, 2 + rng() % 8, 0.4);
            auto gflow = find_gflow(g);
            if (!gflow) {
                continue;
            }
            checked++;
            auto bound = flow_entanglement_bound(g, *gflow);
            CHECK(bound.bound >= structural_entanglement_exact(g, 10));
            CHECK(bound.bound == 1 + 2 * bound.c_f + bound.delta);
        }
    }

    TEST_CASE("measures are invariant under relabelling") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 40; trial++) {
            auto g = oracle::random_graph(rng, 2 + rng() % 5, 0.5, 0, 1);
            std::vector<Vertex> perm(g.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto h = relabel(g, perm);
            CHECK(structural_entanglement_exact(g) == structural_entanglement_exact(h));
            CHECK(entanglement_width_exact(g) == entanglement_width_exact(h));
        }
    }
}
