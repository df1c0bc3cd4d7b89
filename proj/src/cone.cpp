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

#include "mbqc/cone.hpp"

#include <deque>
#include <stdexcept>

namespace mbqc {

BitVec influence_successors(const OpenGraph &graph, const GFlow &gflow, Vertex i) {
    if (i >= graph.size()) {
        throw std::invalid_argument("vertex " + std::to_string(i) + " out of range");
    }
    BitVec out(graph.size());
    auto it = gflow.g.find(i);
    if (graph.is_output(i) || it == gflow.g.end()) {
        return out;
    }
    BitVec set = graph.mask(it->second);
    out = set | odd_neighborhood(graph, set);
    // i itself stays only if it corrects itself (XZ/YZ planes put i in g(i)).
    if (!set.get(i)) {
        out.set(i, false);
    }
    return out;
}

BitVec forward_cone(const OpenGraph &graph, const GFlow &gflow, Vertex mu) {
    BitVec cone(graph.size());
    cone.set(mu);
    std::deque<Vertex> frontier{mu};
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop_front();
        for (auto w : influence_successors(graph, gflow, v).indices()) {
            if (!cone.get(w)) {
                cone.set(w);
                frontier.push_back(w);
            }
        }
    }
    return cone;
}

std::optional<ConeMax> max_forward_cone(const OpenGraph &graph, const GFlow &gflow) {
    std::optional<ConeMax> best;
    for (auto input : graph.inputs()) {
        std::size_t size = forward_cone(graph, gflow, input).count();
        if (!best || size > best->size || (size == best->size && input < best->vertex)) {
            best = ConeMax{input, size};
        }
    }
    return best;
}

}  // namespace mbqc
