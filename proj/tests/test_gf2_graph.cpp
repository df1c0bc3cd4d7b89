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
#include "mbqc/open_graph.hpp"
#include "mbqc/statevec.hpp"
#include "oracles.hpp"

using namespace mbqc;

namespace {

OpenGraph path3() { return OpenGraph(3, {{0, 1}, {1, 2}}, {0}, {2}); }

}  // namespace

TEST_SUITE("gf2_graph") {
    TEST_CASE("bit vectors") {
        BitVec v = BitVec::from_indices(130, {0, 64, 129});
        CHECK(v.count() == 3);
        CHECK(v.indices() == std::vector<std::size_t>{0, 64, 129});
        CHECK(v.complement().count() == 127);
        CHECK_FALSE(v.complement().get(129));
        BitVec w = BitVec::from_indices(130, {64, 100});
        CHECK((v ^ w).indices() == std::vector<std::size_t>{0, 100, 129});
        CHECK((v & w).indices() == std::vector<std::size_t>{64});
        CHECK(v.without(w).indices() == std::vector<std::size_t>{0, 129});
        CHECK(v.dot(w));
        CHECK(BitVec::from_indices(130, {64}).is_subset_of(v));
        CHECK_THROWS_AS(BitVec::from_indices(3, {3}), std::invalid_argument);
    }

    TEST_CASE("matrix rank and lexicographically least solutions") {
        std::mt19937_64 rng(7);
        std::bernoulli_distribution coin(0.5);
        for (int trial = 0; trial < 300; trial++) {
            const std::size_t rows = 1 + trial % 5;
            const std::size_t cols = 1 + (trial / 5) % 6;
            Gf2Matrix m(rows, cols);
            for (std::size_t r = 0; r < rows; r++) {
                for (std::size_t c = 0; c < cols; c++) {
                    m.set(r, c, coin(rng));
                }
            }
            BitVec rhs(rows);
            for (std::size_t r = 0; r < rows; r++) {
                rhs.set(r, coin(rng));
            }
            // Brute force in lexicographic order, x_0 most significant.
            std::optional<BitVec> expected;
            std::size_t image_size = 0;
            std::vector<BitVec> images;
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << cols); code++) {
                BitVec x(cols);
                for (std::size_t c = 0; c < cols; c++) {
                    x.set(c, (code >> (cols - 1 - c)) & 1U);
                }
                BitVec y(rows);
                for (std::size_t r = 0; r < rows; r++) {
                    y.set(r, m.row(r).dot(x));
                }
                if (std::find(images.begin(), images.end(), y) == images.end()) {
                    images.push_back(y);
                }
                if (!expected && y == rhs) {
                    expected = x;
                }
            }
            image_size = images.size();
            std::size_t rank = 0;
            while ((std::size_t{1} << rank) < image_size) {
                rank++;
            }
            CHECK(m.rank() == rank);
            CHECK(m.solve(rhs) == expected);
        }
    }

    TEST_CASE("graph validation") {
        CHECK_THROWS_AS(OpenGraph(2, {{0, 0}}, {}, {}), std::invalid_argument);
        CHECK_THROWS_AS(OpenGraph(2, {{0, 1}, {1, 0}}, {}, {}), std::invalid_argument);
        CHECK_THROWS_AS(OpenGraph(2, {{0, 2}}, {}, {}), std::invalid_argument);
        CHECK_THROWS_AS(OpenGraph(2, {}, {0, 0}, {}), std::invalid_argument);
        CHECK_THROWS_AS(OpenGraph(2, {}, {}, {5}), std::invalid_argument);
        OpenGraph g(3, {{2, 1}, {1, 0}}, {0}, {2});
        CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    }

    TEST_CASE("odd neighbourhood examples") {
        auto g = path3();
        CHECK(odd_neighborhood(g, VertexSet{1}) == VertexSet{0, 2});
        CHECK(odd_neighborhood(g, VertexSet{0, 2}).empty());
        CHECK(odd_neighborhood(g, VertexSet{}).empty());
        CHECK_THROWS_AS(odd_neighborhood(g, VertexSet{3}), std::invalid_argument);
    }

    TEST_CASE("cut edges and cut rank examples") {
        auto g = path3();
        CHECK(cut_edges(g, VertexSet{0}) == 1);
        CHECK(cut_edges(g, VertexSet{1}) == 2);
        CHECK(cut_edges(g, VertexSet{}) == 0);
        CHECK(cut_rank(g, VertexSet{0}) == 1);
        CHECK(cut_rank(OpenGraph(4, {}, {}, {}), VertexSet{0, 2}) == 0);
        OpenGraph triangle(3, {{0, 1}, {0, 2}, {1, 2}}, {}, {});
        CHECK(cut_rank(triangle, VertexSet{0}) == 1);
    }

    TEST_CASE("odd neighbourhood is linear and cut rank is bounded by cut edges") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; trial++) {
            std::size_t n = 2 + trial % 9;
            auto g = oracle::random_graph(rng, n, 0.4, 0, 0);
            std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
            auto as_set = [n](std::uint64_t bits) {
                BitVec v(n);
                for (std::size_t k = 0; k < n; k++) {
                    v.set(k, (bits >> k) & 1U);
                }
                return v;
            };
            BitVec a = as_set(pick(rng));
            BitVec b = as_set(pick(rng));
            CHECK(odd_neighborhood(g, a ^ b) == (odd_neighborhood(g, a) ^ odd_neighborhood(g, b)));
            std::size_t rank = cut_rank(g, a);
            CHECK(rank <= cut_edges(g, a));
            CHECK(rank <= std::min(a.count(), n - a.count()));
            CHECK(rank == cut_rank(g, a.complement()));
        }
    }

    TEST_CASE("cut rank equals the dense Schmidt rank") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 60; trial++) {
            std::size_t n = 1 + trial % 8;
            auto g = oracle::random_graph(rng, n, 0.5, 0, 0);
            auto state = build_open_graph_state(g, StateVector::Ones(1));
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); bits++) {
                BitVec side(n);
                for (std::size_t k = 0; k < n; k++) {
                    side.set(k, (bits >> k) & 1U);
                }
                REQUIRE(cut_rank(g, side) == schmidt_rank_log2(state, side));
            }
        }
    }

    TEST_CASE("D-Happy examples") {
        auto bottleneck = bottleneck_fixture().graph;
        auto result = is_d_happy(bottleneck);
        CHECK_FALSE(result.happy);
        REQUIRE(result.witness);
        CHECK(*result.witness == VertexSet{0, 1, 2});
        CHECK(result.witness_rank == 1);
        CHECK(is_d_happy(path3()).happy);
        CHECK(is_d_happy(OpenGraph(2, {{0, 1}}, {}, {})).happy);
        CHECK_THROWS_AS(is_d_happy(OpenGraph(12, {}, {0}, {11}), 512), BudgetExceeded);
    }

    TEST_CASE("D-Happy matches a dense check on the pendant-extended state") {
        std::mt19937_64 rng(19);
        int unhappy = 0;
        for (int trial = 0; trial < 80; trial++) {
            std::size_t n = 3 + trial % 4;
            auto g = oracle::random_flow_candidate(rng, n, 0.45);
            const std::size_t k = g.inputs().size();
            std::vector<Edge> edges = g.edges();
            for (std::size_t p = 0; p < k; p++) {
                edges.emplace_back(g.inputs()[p], n + p);
            }
            OpenGraph ext(n + k, edges, {}, {});
            auto state = build_open_graph_state(ext, StateVector::Ones(1));
            bool happy = true;
            std::vector<Vertex> free;
            for (Vertex v = 0; v < n; v++) {
                if (!g.is_input(v) && !g.is_output(v)) {
                    free.push_back(v);
                }
            }
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); bits++) {
                BitVec side(n + k);
                for (std::size_t p = 0; p < k; p++) {
                    side.set(n + p);
                    side.set(g.inputs()[p], !g.is_output(g.inputs()[p]));
                }
                for (std::size_t b = 0; b < free.size(); b++) {
                    side.set(free[b], (bits >> b) & 1U);
                }
                if (schmidt_rank_log2(state, side) < k) {
                    happy = false;
                }
            }
            unhappy += happy ? 0 : 1;
            CHECK(is_d_happy(g).happy == happy);
        }
        CHECK(unhappy > 0);
    }

    TEST_CASE("graphs with a gflow are D-Happy") {
        std::mt19937_64 rng(23);
        int with_gflow = 0;
        for (int trial = 0; trial < 300; trial++) {
            auto g = oracle::random_flow_candidate(rng, 3 + trial % 8, 0.4);
            if (find_gflow(g)) {
                with_gflow++;
                CHECK(is_d_happy(g).happy);
            }
        }
        CHECK(with_gflow > 50);
    }
}
