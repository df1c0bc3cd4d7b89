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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/open_graph.hpp"

namespace mbqc {

enum class Plane { XY, XZ, YZ };

std::string_view plane_name(Plane plane);
/// Parses "XY", "XZ" or "YZ"; throws std::invalid_argument otherwise.
Plane parse_plane(std::string_view name);

/// Generalized flow: correcting sets, a layered time order and a measurement plane per
/// measured vertex.
///
/// `layers.front()` is the first measurement round and `layers.back()` holds exactly the
/// outputs, which are never measured.
struct GFlow {
    std::map<Vertex, VertexSet> g;
    std::vector<VertexSet> layers;
    std::map<Vertex, Plane> planes;

    /// Layer index of every vertex; throws std::invalid_argument unless `layers` partitions
    /// 0..n-1.
    std::vector<std::size_t> layer_index(std::size_t n) const;
    Plane plane(Vertex v) const;
    /// True when every correcting set is a singleton and every plane is XY.
    bool is_flow() const;

    bool operator==(const GFlow &) const = default;
};

/// Causal flow: a single correcting vertex per measured vertex, all planes XY.
struct Flow {
    std::map<Vertex, Vertex> f;
    std::vector<VertexSet> layers;

    GFlow as_gflow() const;
};

/// Finds a causal flow by backward layer peeling with singleton correcting sets. Returns nullopt
/// exactly when the open graph has no causal flow.
std::optional<Flow> find_causal_flow(const OpenGraph &graph);

/// Finds the maximally delayed XY-plane gFlow by backward layer peeling over GF(2). Returns
/// nullopt exactly when no XY-plane gFlow exists.
std::optional<GFlow> find_gflow(const OpenGraph &graph);

struct Violation {
    Vertex vertex;
    std::string rule;  // "g1".."g5" or "codomain"

    bool operator==(const Violation &) const = default;
};

struct VerifyResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks g1, g2 and the plane condition (g3/g4/g5) for every measured vertex, plus that
/// correcting sets avoid the inputs. Throws std::invalid_argument when the gFlow is malformed:
/// `g` or `planes` not defined exactly on the non-outputs, or layers that do not partition the
/// vertices with the outputs alone in the last layer.
VerifyResult verify_gflow(const OpenGraph &graph, const GFlow &gflow);

struct Rounds {
    std::vector<VertexSet> rounds;
    std::size_t depth = 0;
};

/// Non-empty measurement layers in time order; the output layer is not a round.
Rounds measurement_rounds(const GFlow &gflow);

struct CorrectionReport {
    /// x_parity[j]: measured vertices whose outcome flips an X correction on j.
    std::vector<VertexSet> x_parity;
    /// z_parity[j]: measured vertices whose outcome flips a Z correction on j.
    std::vector<VertexSet> z_parity;
    std::size_t x_total = 0;
    std::size_t z_total = 0;
    std::size_t total = 0;
    std::size_t depth = 0;
};

/// Classical processing needed by the corrections of `gflow`, paired with its depth. The
/// measured vertex itself is excluded from its own parity sets since its correction acts
/// trivially there.
CorrectionReport correction_dependencies(const OpenGraph &graph, const GFlow &gflow);

struct WireSet {
    /// One induced path per input, in input order, each ending at its first output.
    std::vector<std::vector<Vertex>> wires;
    /// Non-output vertices on no wire.
    VertexSet uncovered;
};

/// Vertex-disjoint input-to-output paths. For a causal flow these follow the flow images; for
/// a general gFlow they come from a unit vertex-capacity max-flow. Every path is shortcut to an
/// induced path. Throws InconsistencyError when fewer than |I| disjoint paths exist.
WireSet flow_wires(const OpenGraph &graph, const GFlow &gflow);

}  // namespace mbqc
