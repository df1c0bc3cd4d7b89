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
#include <vector>

#include "mbqc/flow.hpp"

namespace mbqc {

inline constexpr std::size_t kDefaultOrderBudget = 8;
inline constexpr std::size_t kDefaultTreeBudget = 6;
inline constexpr std::size_t kDefaultWireOrderBudget = 8;

/// Minimum over vertex orderings of the largest prefix cut-rank. Exact subset dynamic programme;
/// throws BudgetExceeded above `max_vertices`.
std::size_t structural_entanglement_exact(const OpenGraph &graph, std::size_t max_vertices = kDefaultOrderBudget);

/// Tree whose leaves 0..leaves-1 are the qubits; internal nodes are numbered from `leaves`.
struct SubcubicTree {
    std::size_t leaves = 0;
    std::size_t nodes = 0;
    std::vector<Edge> edges;

    /// Leaf set on the side of edge `e` containing its first endpoint.
    BitVec split(std::size_t e) const;
};

/// Every cubic tree (internal degree 3) on `leaves` labelled leaves, by stepwise leaf
/// insertion. Trees with degree-2 internal nodes only repeat these bipartitions.
std::vector<SubcubicTree> cubic_trees(std::size_t leaves);

/// Minimum over subcubic trees of the largest edge cut-rank; throws BudgetExceeded above
/// `max_vertices`.
std::size_t entanglement_width_exact(const OpenGraph &graph, std::size_t max_vertices = kDefaultTreeBudget);

struct FlowBound {
    WireSet wires;
    /// Wire indices in the order achieving `c_f`.
    std::vector<std::size_t> wire_order;
    std::size_t c_f = 0;
    std::size_t delta = 0;
    std::size_t bound = 1;
};

/// Upper bound 1 + 2 C_F + Delta on the structural entanglement. C_F is the largest number of
/// edges crossing a prefix cut of the wires, minimised over wire orders when there are at most
/// `max_wire_order` inputs. Delta is |O| - |I| plus the measured vertices no wire covers.
FlowBound flow_entanglement_bound(const OpenGraph &graph, const GFlow &gflow,
                                  std::size_t max_wire_order = kDefaultWireOrderBudget);

}  // namespace mbqc
