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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/flow.hpp"

namespace mbqc {

struct Fixture {
    std::string name;
    std::string description;
    OpenGraph graph;
    /// Declared gFlow, absent for graphs that have none.
    std::optional<GFlow> gflow;
};

/// Chain 0-1-...-(n-1) with input 0, output n-1 and the flow f(i) = i+1.
Fixture path_fixture(std::size_t n);

/// rows x cols grid, vertex r*cols + c; inputs are column 0, outputs the last column, and the
/// flow runs along rows with one layer per column.
Fixture cluster_fixture(std::size_t rows, std::size_t cols);

/// Two inputs funnelled through one vertex to two outputs: no gFlow, cut-rank 1 bottleneck.
Fixture bottleneck_fixture();

/// Six vertices with a gFlow but no causal flow; the gFlow has three single-vertex rounds.
Fixture no_flow_gflow_fixture();

/// Four inputs, four outputs, edges i~i+4, i+1~i+4. `depth_one` selects the one-round gFlow
/// instead of the four-round causal flow.
Fixture depth_tradeoff_fixture(bool depth_one);

/// Names accepted by fixture_by_name, with parameter placeholders for families.
std::vector<std::string> fixture_names();

/// "path-5", "cluster-2x3", "bottleneck", "no-flow-gflow", "depth-tradeoff-flow",
/// "depth-tradeoff-gflow". Throws std::invalid_argument for unknown names.
Fixture fixture_by_name(const std::string &name);

/// G(n, p) graph with `inputs` and `outputs` drawn as independent random subsets, so the two
/// may overlap.
OpenGraph random_open_graph(std::size_t n, double edge_probability, std::size_t inputs, std::size_t outputs,
                            std::uint64_t seed);

/// Concrete instances used for catalog-wide checks.
std::vector<Fixture> standard_fixtures();

}  // namespace mbqc
