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

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mbqc/gf2.hpp"

namespace mbqc {

using Vertex = std::size_t;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with ordered input and output vertex lists.
///
/// Construction validates the graph: endpoints and terminals must be in range, edges must not be
/// self-loops or duplicates, and no vertex may be listed twice in the same terminal list. Inputs
/// and outputs may overlap. The |I| <= |O| requirement is checked by the flow analyses, not here.
class OpenGraph {
   public:
    OpenGraph() = default;
    OpenGraph(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> inputs, std::vector<Vertex> outputs);

    std::size_t size() const { return n_; }
    /// Edges with u < v, sorted lexicographically.
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<Vertex> &inputs() const { return inputs_; }
    const std::vector<Vertex> &outputs() const { return outputs_; }

    const BitVec &neighbors(Vertex v) const { return adjacency_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].get(v); }
    std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

    const BitVec &input_mask() const { return input_mask_; }
    const BitVec &output_mask() const { return output_mask_; }
    bool is_input(Vertex v) const { return input_mask_.get(v); }
    bool is_output(Vertex v) const { return output_mask_.get(v); }
    /// Non-output vertices, ascending.
    VertexSet measured() const;

    BitVec mask(const VertexSet &vertices) const;

    bool operator==(const OpenGraph &other) const {
        return n_ == other.n_ && edges_ == other.edges_ && inputs_ == other.inputs_ && outputs_ == other.outputs_;
    }

   private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Vertex> inputs_;
    std::vector<Vertex> outputs_;
    std::vector<BitVec> adjacency_;
    BitVec input_mask_;
    BitVec output_mask_;
};

/// Vertices with an odd number of neighbours in `set`.
BitVec odd_neighborhood(const OpenGraph &graph, const BitVec &set);
VertexSet odd_neighborhood(const OpenGraph &graph, const VertexSet &set);

/// Number of edges with exactly one endpoint in `side`.
std::size_t cut_edges(const OpenGraph &graph, const BitVec &side);
std::size_t cut_edges(const OpenGraph &graph, const VertexSet &side);

/// GF(2) rank of the adjacency submatrix between `side` and its complement. For a graph state
/// this is the log2 Schmidt rank across the cut.
std::size_t cut_rank(const OpenGraph &graph, const BitVec &side);
std::size_t cut_rank(const OpenGraph &graph, const VertexSet &side);

struct DHappyResult {
    bool happy = true;
    /// Original-graph vertices on the input side of the first violating cut (pendants implied).
    std::optional<VertexSet> witness;
    std::size_t witness_rank = 0;
};

inline constexpr std::size_t kDefaultCutBudget = std::size_t{1} << 20;

/// Checks that every cut separating the inputs from the outputs carries at least |I| ebits.
///
/// Each input gets a pendant partner modelling half of a maximally entangled pair; pendants and
/// non-output inputs sit on the input side, outputs on the other, and every placement of the
/// remaining vertices is tried. Throws BudgetExceeded when the number of cuts exceeds `budget`.
DHappyResult is_d_happy(const OpenGraph &graph, std::size_t budget = kDefaultCutBudget);

}  // namespace mbqc
