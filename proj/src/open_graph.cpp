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

#include "mbqc/open_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

void check_vertex(std::size_t n, Vertex v, const char *what) {
    if (v >= n) {
        throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n) + ")");
    }
}

BitVec terminal_mask(std::size_t n, const std::vector<Vertex> &terminals, const char *what) {
    BitVec mask(n);
    for (auto v : terminals) {
        check_vertex(n, v, what);
        if (mask.get(v)) {
            throw std::invalid_argument(std::string("duplicate ") + what + " vertex " + std::to_string(v));
        }
        mask.set(v);
    }
    return mask;
}

}  // namespace

OpenGraph::OpenGraph(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> inputs, std::vector<Vertex> outputs)
    : n_(n), inputs_(std::move(inputs)), outputs_(std::move(outputs)), adjacency_(n, BitVec(n)) {
    for (auto [u, v] : edges) {
        check_vertex(n, u, "edge");
        check_vertex(n, v, "edge");
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        if (adjacency_[u].get(v)) {
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
        adjacency_[u].set(v);
        adjacency_[v].set(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    input_mask_ = terminal_mask(n, inputs_, "input");
    output_mask_ = terminal_mask(n, outputs_, "output");
}

VertexSet OpenGraph::measured() const { return output_mask_.complement().indices(); }

BitVec OpenGraph::mask(const VertexSet &vertices) const {
    BitVec m(n_);
    for (auto v : vertices) {
        check_vertex(n_, v, "set");
        m.set(v);
    }
    return m;
}

BitVec odd_neighborhood(const OpenGraph &graph, const BitVec &set) {
    BitVec odd(graph.size());
    for (auto v : set.indices()) {
        odd ^= graph.neighbors(v);
    }
    return odd;
}

VertexSet odd_neighborhood(const OpenGraph &graph, const VertexSet &set) {
    return odd_neighborhood(graph, graph.mask(set)).indices();
}

std::size_t cut_edges(const OpenGraph &graph, const BitVec &side) {
    std::size_t total = 0;
    for (auto v : side.indices()) {
        total += graph.neighbors(v).without(side).count();
    }
    return total;
}

std::size_t cut_edges(const OpenGraph &graph, const VertexSet &side) { return cut_edges(graph, graph.mask(side)); }

std::size_t cut_rank(const OpenGraph &graph, const BitVec &side) {
    auto rows = side.indices();
    auto cols = side.complement().indices();
    Gf2Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); r++) {
        const auto &nb = graph.neighbors(rows[r]);
        for (std::size_t c = 0; c < cols.size(); c++) {
            if (nb.get(cols[c])) {
                m.set(r, c);
            }
        }
    }
    return m.rank();
}

std::size_t cut_rank(const OpenGraph &graph, const VertexSet &side) { return cut_rank(graph, graph.mask(side)); }

DHappyResult is_d_happy(const OpenGraph &graph, std::size_t budget) {
    const std::size_t n = graph.size();
    const std::size_t k = graph.inputs().size();
    if (k == 0) {
        return {};
    }

    std::vector<Edge> edges = graph.edges();
    for (std::size_t p = 0; p < k; p++) {
        edges.emplace_back(graph.inputs()[p], n + p);
    }
    OpenGraph extended(n + k, std::move(edges), {}, {});

    BitVec fixed_side(n + k);
    for (std::size_t p = 0; p < k; p++) {
        fixed_side.set(n + p);
        if (!graph.is_output(graph.inputs()[p])) {
            fixed_side.set(graph.inputs()[p]);
        }
    }
    VertexSet free;
    for (Vertex v = 0; v < n; v++) {
        if (!graph.is_input(v) && !graph.is_output(v)) {
            free.push_back(v);
        }
    }
    if (free.size() >= 64 || (std::uint64_t{1} << free.size()) > budget) {
        throw BudgetExceeded("D-Happy check needs 2^" + std::to_string(free.size()) + " cuts, budget is " +
                             std::to_string(budget));
    }

    // Descending masks: cuts with more free vertices on the input side come first.
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = total; mask-- > 0;) {
        BitVec side = fixed_side;
        for (std::size_t b = 0; b < free.size(); b++) {
            if ((mask >> b) & 1U) {
                side.set(free[b]);
            }
        }
        std::size_t rank = cut_rank(extended, side);
        if (rank < k) {
            VertexSet witness;
            for (auto v : side.indices()) {
                if (v < n) {
                    witness.push_back(v);
                }
            }
            return {false, std::move(witness), rank};
        }
    }
    return {};
}

}  // namespace mbqc
