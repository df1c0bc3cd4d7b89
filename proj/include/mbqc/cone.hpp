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

#include "mbqc/flow.hpp"

namespace mbqc {

/// Vertices that receive a correction from the measurement of i: g(i) together with
/// Odd(g(i)) minus i. Empty for outputs.
BitVec influence_successors(const OpenGraph &graph, const GFlow &gflow, Vertex i);

/// Forward cone of mu: mu plus everything reachable through influence successors.
BitVec forward_cone(const OpenGraph &graph, const GFlow &gflow, Vertex mu);

struct ConeMax {
    Vertex vertex = 0;
    std::size_t size = 0;
};

/// Largest forward cone over the inputs, lowest index on ties. nullopt when there are no inputs.
std::optional<ConeMax> max_forward_cone(const OpenGraph &graph, const GFlow &gflow);

}  // namespace mbqc
