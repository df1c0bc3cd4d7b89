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

#include "mbqc/ent_bounds.hpp"

#include <algorithm>
#include <limits>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

BitVec mask_from_bits(std::size_t n, std::uint64_t bits) {
    BitVec out(n);
    for (std::size_t v = 0; v < n; v++) {
        if ((bits >> v) & 1U) {
            out.set(v);
        }
    }
    return out;
}

// min over chains  empty = S_0 < S_1 < ... < S_k = full  of max cost(S_t), by subset DP.
template <typename Cost>
std::size_t min_max_chain(std::size_t items, Cost &&cost) {
    const std::uint64_t full = (std::uint64_t{1} << items) - 1;
    std::vector<std::size_t> best(full + 1, std::numeric_limits<std::size_t>::max());
    best[0] = cost(0);
    for (std::uint64_t s = 1; s <= full; s++) {
        std::size_t inner = std::numeric_limits<std::size_t>::max();
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            std::uint64_t v = rest & (~rest + 1);
            inner = std::min(inner, best[s ^ v]);
        }
        best[s] = std::max(inner, cost(s));
    }
    return best[full];
}

}  // namespace

std::size_t structural_entanglement_exact(const OpenGraph &graph, std::size_t max_vertices) {
    const std::size_t n = graph.size();
    if (n > max_vertices || n >= 31) {
        throw BudgetExceeded("ordering search over " + std::to_string(n) + " vertices exceeds the budget of " +
                             std::to_string(max_vertices));
    }
    return min_max_chain(n, [&](std::uint64_t s) { return cut_rank(graph, mask_from_bits(n, s)); });
}

BitVec SubcubicTree::split(std::size_t e) const {
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (std::size_t k = 0; k < edges.size(); k++) {
        if (k == e) {
            continue;
        }
        adj[edges[k].first].push_back(edges[k].second);
        adj[edges[k].second].push_back(edges[k].first);
    }
    BitVec seen(nodes);
    std::vector<std::size_t> stack{edges[e].first};
    seen.set(edges[e].first);
    BitVec side(leaves);
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        if (u < leaves) {
            side.set(u);
        }
        for (auto w : adj[u]) {
            if (!seen.get(w)) {
                seen.set(w);
                stack.push_back(w);
            }
        }
    }
    return side;
}

std::vector<SubcubicTree> cubic_trees(std::size_t leaves) {
    if (leaves <= 1) {
        return {SubcubicTree{leaves, leaves, {}}};
    }
    if (leaves == 2) {
        return {SubcubicTree{2, 2, {{0, 1}}}};
    }
    // Internal node ids are assigned as leaves + k; the final leaf count is known up front.
    std::vector<SubcubicTree> current{SubcubicTree{leaves, leaves + 1, {{0, leaves}, {1, leaves}, {2, leaves}}}};
    for (std::size_t leaf = 3; leaf < leaves; leaf++) {
        std::vector<SubcubicTree> next;
        for (const auto &tree : current) {
            for (std::size_t e = 0; e < tree.edges.size(); e++) {
                SubcubicTree grown = tree;
                std::size_t mid = grown.nodes++;
                auto [a, b] = grown.edges[e];
                grown.edges[e] = {a, mid};
                grown.edges.push_back({mid, b});
                grown.edges.push_back({leaf, mid});
                next.push_back(std::move(grown));
            }
        }
        current = std::move(next);
    }
    return current;
}

std::size_t entanglement_width_exact(const OpenGraph &graph, std::size_t max_vertices) {
    const std::size_t n = graph.size();
    if (n > max_vertices) {
        throw BudgetExceeded("tree search over " + std::to_string(n) + " leaves exceeds the budget of " +
                             std::to_string(max_vertices));
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto &tree : cubic_trees(n)) {
        std::size_t worst = 0;
        for (std::size_t e = 0; e < tree.edges.size() && worst < best; e++) {
            worst = std::max(worst, cut_rank(graph, tree.split(e)));
        }
        best = std::min(best, worst);
    }
    return n == 0 ? 0 : best;
}

FlowBound flow_entanglement_bound(const OpenGraph &graph, const GFlow &gflow, std::size_t max_wire_order) {
    FlowBound out;
    out.wires = flow_wires(graph, gflow);
    const std::size_t k = out.wires.wires.size();
    std::vector<BitVec> wire_mask;
    for (const auto &wire : out.wires.wires) {
        wire_mask.push_back(graph.mask(wire));
    }
    // crossing[a][b]: edges between wires a and b.
    std::vector<std::vector<std::size_t>> crossing(k, std::vector<std::size_t>(k, 0));
    for (std::size_t a = 0; a < k; a++) {
        for (std::size_t b = a + 1; b < k; b++) {
            std::size_t c = 0;
            for (auto v : wire_mask[a].indices()) {
                c += (graph.neighbors(v) & wire_mask[b]).count();
            }
            crossing[a][b] = crossing[b][a] = c;
        }
    }
    auto prefix_cost = [&](std::uint64_t s) {
        std::size_t c = 0;
        for (std::size_t a = 0; a < k; a++) {
            if (!((s >> a) & 1U)) {
                continue;
            }
            for (std::size_t b = 0; b < k; b++) {
                if (!((s >> b) & 1U)) {
                    c += crossing[a][b];
                }
            }
        }
        return c;
    };

    out.wire_order.resize(k);
    for (std::size_t a = 0; a < k; a++) {
        out.wire_order[a] = a;
    }
    if (k > 0 && k <= max_wire_order) {
        out.c_f = min_max_chain(k, prefix_cost);
        // Recover an optimal order greedily from the top: peel a wire whose removal keeps every
        // remaining prefix within c_f.
        const std::uint64_t full = (std::uint64_t{1} << k) - 1;
        std::vector<char> feasible(full + 1, 0);
        feasible[0] = 1;
        for (std::uint64_t s = 1; s <= full; s++) {
            if (prefix_cost(s) > out.c_f) {
                continue;
            }
            for (std::uint64_t rest = s; rest; rest &= rest - 1) {
                if (feasible[s ^ (rest & (~rest + 1))]) {
                    feasible[s] = 1;
                    break;
                }
            }
        }
        std::uint64_t s = full;
        for (std::size_t pos = k; pos-- > 0;) {
            for (std::size_t a = 0; a < k; a++) {
                if (((s >> a) & 1U) && feasible[s ^ (std::uint64_t{1} << a)]) {
                    out.wire_order[pos] = a;
                    s ^= std::uint64_t{1} << a;
                    break;
                }
            }
        }
    } else {
        std::uint64_t s = 0;
        for (std::size_t t = 0; t + 1 < k; t++) {
            s |= std::uint64_t{1} << t;
            out.c_f = std::max(out.c_f, prefix_cost(s));
        }
    }
    out.delta = graph.outputs().size() - graph.inputs().size() + out.wires.uncovered.size();
    out.bound = 1 + 2 * out.c_f + out.delta;
    return out;
}

}  // namespace mbqc
