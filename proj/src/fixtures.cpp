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

#include "mbqc/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mbqc {

Fixture path_fixture(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("a path needs at least one vertex");
    }
    std::vector<Edge> edges;
    GFlow gflow;
    for (Vertex v = 0; v + 1 < n; v++) {
        edges.emplace_back(v, v + 1);
        gflow.g[v] = {v + 1};
        gflow.planes[v] = Plane::XY;
    }
    for (Vertex v = 0; v < n; v++) {
        gflow.layers.push_back({v});
    }
    return {"path-" + std::to_string(n), "chain with flow f(i)=i+1", OpenGraph(n, edges, {0}, {n - 1}), gflow};
}

Fixture cluster_fixture(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("a cluster needs at least one row and one column");
    }
    auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    std::vector<Edge> edges;
    std::vector<Vertex> inputs, outputs;
    GFlow gflow;
    gflow.layers.resize(cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            if (c + 1 < cols) {
                edges.emplace_back(id(r, c), id(r, c + 1));
                gflow.g[id(r, c)] = {id(r, c + 1)};
                gflow.planes[id(r, c)] = Plane::XY;
            }
            if (r + 1 < rows) {
                edges.emplace_back(id(r, c), id(r + 1, c));
            }
            gflow.layers[c].push_back(id(r, c));
        }
        inputs.push_back(id(r, 0));
        outputs.push_back(id(r, cols - 1));
    }
    std::string name = "cluster-" + std::to_string(rows) + "x" + std::to_string(cols);
    return {name, "grid with row flow", OpenGraph(rows * cols, edges, inputs, outputs), gflow};
}

Fixture bottleneck_fixture() {
    return {"bottleneck", "inputs 0,1 -> 2 -> outputs 3,4; no gflow",
            OpenGraph(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}, {0, 1}, {3, 4}), std::nullopt};
}

Fixture no_flow_gflow_fixture() {
    GFlow gflow;
    gflow.g = {{0, {3}}, {1, {4}}, {2, {3, 4, 5}}};
    gflow.layers = {{0}, {1}, {2}, {3, 4, 5}};
    gflow.planes = {{0, Plane::XY}, {1, Plane::XY}, {2, Plane::XY}};
    return {"no-flow-gflow", "gflow with three rounds and no causal flow",
            OpenGraph(6, {{0, 3}, {0, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}}, {0, 1, 2}, {3, 4, 5}), gflow};
}

Fixture depth_tradeoff_fixture(bool depth_one) {
    OpenGraph graph(8, {{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}}, {0, 1, 2, 3}, {4, 5, 6, 7});
    GFlow gflow;
    for (Vertex i = 0; i < 4; i++) {
        gflow.planes[i] = Plane::XY;
    }
    if (depth_one) {
        gflow.g = {{0, {4, 5, 6, 7}}, {1, {5, 6, 7}}, {2, {6, 7}}, {3, {7}}};
        gflow.layers = {{0, 1, 2, 3}, {4, 5, 6, 7}};
        return {"depth-tradeoff-gflow", "one round, heavy classical processing", graph, gflow};
    }
    gflow.g = {{0, {4}}, {1, {5}}, {2, {6}}, {3, {7}}};
    gflow.layers = {{0}, {1}, {2}, {3}, {4, 5, 6, 7}};
    return {"depth-tradeoff-flow", "causal flow, four rounds", graph, gflow};
}

std::vector<std::string> fixture_names() {
    return {"path-<n>", "cluster-<rows>x<cols>", "bottleneck", "no-flow-gflow", "depth-tradeoff-flow",
            "depth-tradeoff-gflow"};
}

Fixture fixture_by_name(const std::string &name) {
    auto number = [&](const std::string &text) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(text, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != text.size()) {
            throw std::invalid_argument("bad fixture parameter in '" + name + "'");
        }
        return static_cast<std::size_t>(value);
    };
    if (name.rfind("path-", 0) == 0) {
        return path_fixture(number(name.substr(5)));
    }
    if (name.rfind("cluster-", 0) == 0) {
        auto rest = name.substr(8);
        auto x = rest.find('x');
        if (x == std::string::npos) {
            throw std::invalid_argument("cluster fixtures are named cluster-<rows>x<cols>");
        }
        return cluster_fixture(number(rest.substr(0, x)), number(rest.substr(x + 1)));
    }
    if (name == "bottleneck") {
        return bottleneck_fixture();
    }
    if (name == "no-flow-gflow") {
        return no_flow_gflow_fixture();
    }
    if (name == "depth-tradeoff-flow") {
        return depth_tradeoff_fixture(false);
    }
    if (name == "depth-tradeoff-gflow") {
        return depth_tradeoff_fixture(true);
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

OpenGraph random_open_graph(std::size_t n, double edge_probability, std::size_t inputs, std::size_t outputs,
                            std::uint64_t seed) {
    if (inputs > n || outputs > n) {
        throw std::invalid_argument("more terminals than vertices");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v = u + 1; v < n; v++) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    auto pick = [&](std::size_t k) {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(k);
        std::sort(all.begin(), all.end());
        return all;
    };
    auto in = pick(inputs);
    auto out = pick(outputs);
    return OpenGraph(n, std::move(edges), std::move(in), std::move(out));
}

std::vector<Fixture> standard_fixtures() {
    return {path_fixture(1),          path_fixture(2),          path_fixture(5),
            cluster_fixture(2, 2),    cluster_fixture(2, 3),    cluster_fixture(4, 4),
            bottleneck_fixture(),     no_flow_gflow_fixture(),  depth_tradeoff_fixture(false),
            depth_tradeoff_fixture(true)};
}

}  // namespace mbqc
