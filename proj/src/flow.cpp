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

#include "mbqc/flow.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "mbqc/errors.hpp"

namespace mbqc {

std::string_view plane_name(Plane plane) {
    switch (plane) {
        case Plane::XY:
            return "XY";
        case Plane::XZ:
            return "XZ";
        case Plane::YZ:
            return "YZ";
    }
    return "?";
}

Plane parse_plane(std::string_view name) {
    if (name == "XY") {
        return Plane::XY;
    }
    if (name == "XZ") {
        return Plane::XZ;
    }
    if (name == "YZ") {
        return Plane::YZ;
    }
    throw std::invalid_argument("unknown measurement plane '" + std::string(name) + "'");
}

std::vector<std::size_t> GFlow::layer_index(std::size_t n) const {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unset);
    for (std::size_t l = 0; l < layers.size(); l++) {
        for (auto v : layers[l]) {
            if (v >= n) {
                throw std::invalid_argument("layer vertex " + std::to_string(v) + " out of range");
            }
            if (index[v] != unset) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " appears in more than one layer");
            }
            index[v] = l;
        }
    }
    for (std::size_t v = 0; v < n; v++) {
        if (index[v] == unset) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in no layer");
        }
    }
    return index;
}

Plane GFlow::plane(Vertex v) const {
    auto it = planes.find(v);
    if (it == planes.end()) {
        throw std::invalid_argument("no measurement plane for vertex " + std::to_string(v));
    }
    return it->second;
}

bool GFlow::is_flow() const {
    for (const auto &[i, set] : g) {
        if (set.size() != 1 || plane(i) != Plane::XY) {
            return false;
        }
    }
    return true;
}

GFlow Flow::as_gflow() const {
    GFlow out;
    out.layers = layers;
    for (auto [i, j] : f) {
        out.g[i] = {j};
        out.planes[i] = Plane::XY;
    }
    return out;
}

namespace {

// Shared backward peeling loop. `solve(u, unprocessed, candidates)` returns the correcting set
// for u if Odd(K) restricted to the unprocessed vertices can be made exactly {u}.
template <typename Solver>
std::optional<std::pair<std::map<Vertex, VertexSet>, std::vector<VertexSet>>> peel(const OpenGraph &graph,
                                                                                   Solver &&solve) {
    const std::size_t n = graph.size();
    BitVec processed = graph.output_mask();
    std::vector<VertexSet> reversed{graph.outputs()};
    std::sort(reversed.back().begin(), reversed.back().end());
    std::map<Vertex, VertexSet> g;

    while (processed.count() < n) {
        auto unprocessed = processed.complement().indices();
        auto candidates = processed.without(graph.input_mask()).indices();
        VertexSet layer;
        for (std::size_t r = 0; r < unprocessed.size(); r++) {
            if (auto set = solve(r, unprocessed, candidates)) {
                g[unprocessed[r]] = std::move(*set);
                layer.push_back(unprocessed[r]);
            }
        }
        if (layer.empty()) {
            return std::nullopt;
        }
        for (auto v : layer) {
            processed.set(v);
        }
        reversed.push_back(std::move(layer));
    }
    std::reverse(reversed.begin(), reversed.end());
    return std::make_pair(std::move(g), std::move(reversed));
}

}  // namespace

std::optional<Flow> find_causal_flow(const OpenGraph &graph) {
    auto solve = [&](std::size_t r, const VertexSet &unprocessed, const VertexSet &candidates) -> std::optional<VertexSet> {
        BitVec rows = graph.mask(unprocessed);
        for (auto c : candidates) {
            BitVec hit = graph.neighbors(c) & rows;
            if (hit.count() == 1 && hit.get(unprocessed[r])) {
                return VertexSet{c};
            }
        }
        return std::nullopt;
    };
    auto peeled = peel(graph, solve);
    if (!peeled) {
        return std::nullopt;
    }
    Flow flow;
    flow.layers = std::move(peeled->second);
    for (const auto &[i, set] : peeled->first) {
        flow.f[i] = set.front();
    }
    return flow;
}

std::optional<GFlow> find_gflow(const OpenGraph &graph) {
    // The system matrix only depends on the pass, so it is rebuilt lazily once per pass.
    const VertexSet *cached_rows = nullptr;
    std::optional<Gf2Matrix> system;
    auto solve = [&](std::size_t r, const VertexSet &unprocessed, const VertexSet &candidates) -> std::optional<VertexSet> {
        if (cached_rows != &unprocessed || r == 0) {
            system.emplace(unprocessed.size(), candidates.size());
            for (std::size_t i = 0; i < unprocessed.size(); i++) {
                for (std::size_t c = 0; c < candidates.size(); c++) {
                    if (graph.adjacent(unprocessed[i], candidates[c])) {
                        system->set(i, c);
                    }
                }
            }
            cached_rows = &unprocessed;
        }
        BitVec rhs(unprocessed.size());
        rhs.set(r);
        auto x = system->solve(rhs);
        if (!x) {
            return std::nullopt;
        }
        VertexSet set;
        for (auto c : x->indices()) {
            set.push_back(candidates[c]);
        }
        return set;
    };
    auto peeled = peel(graph, solve);
    if (!peeled) {
        return std::nullopt;
    }
    GFlow gflow;
    gflow.g = std::move(peeled->first);
    gflow.layers = std::move(peeled->second);
    for (const auto &entry : gflow.g) {
        gflow.planes[entry.first] = Plane::XY;
    }
    return gflow;
}

VerifyResult verify_gflow(const OpenGraph &graph, const GFlow &gflow) {
    const std::size_t n = graph.size();
    auto layer = gflow.layer_index(n);
    if (gflow.layers.empty()) {
        throw std::invalid_argument("gflow has no layers");
    }
    VertexSet last = gflow.layers.back();
    std::sort(last.begin(), last.end());
    VertexSet outputs = graph.outputs();
    std::sort(outputs.begin(), outputs.end());
    if (last != outputs) {
        throw std::invalid_argument("the last layer must contain exactly the outputs");
    }
    auto measured = graph.measured();
    if (gflow.g.size() != measured.size() ||
        !std::all_of(measured.begin(), measured.end(), [&](Vertex v) { return gflow.g.count(v) == 1; })) {
        throw std::invalid_argument("correcting sets must be defined exactly on the non-output vertices");
    }
    if (gflow.planes.size() != measured.size() ||
        !std::all_of(measured.begin(), measured.end(), [&](Vertex v) { return gflow.planes.count(v) == 1; })) {
        throw std::invalid_argument("planes must be defined exactly on the non-output vertices");
    }

    VerifyResult result;
    auto report = [&](Vertex v, const char *rule) {
        Violation violation{v, rule};
        if (std::find(result.violations.begin(), result.violations.end(), violation) == result.violations.end()) {
            result.violations.push_back(std::move(violation));
        }
    };
    for (auto i : measured) {
        BitVec set = graph.mask(gflow.g.at(i));
        for (auto j : set.indices()) {
            if (graph.is_input(j)) {
                report(i, "codomain");
            }
            if (j != i && layer[i] >= layer[j]) {
                report(i, "g1");
            }
        }
        BitVec odd = odd_neighborhood(graph, set);
        for (auto j : odd.indices()) {
            if (j != i && layer[j] <= layer[i]) {
                report(i, "g2");
            }
        }
        bool in_set = set.get(i);
        bool in_odd = odd.get(i);
        switch (gflow.plane(i)) {
            case Plane::XY:
                if (in_set || !in_odd) {
                    report(i, "g3");
                }
                break;
            case Plane::XZ:
                if (!in_set || !in_odd) {
                    report(i, "g4");
                }
                break;
            case Plane::YZ:
                if (!in_set || in_odd) {
                    report(i, "g5");
                }
                break;
        }
    }
    return result;
}

Rounds measurement_rounds(const GFlow &gflow) {
    Rounds out;
    for (std::size_t l = 0; l + 1 < gflow.layers.size(); l++) {
        if (!gflow.layers[l].empty()) {
            VertexSet round = gflow.layers[l];
            std::sort(round.begin(), round.end());
            out.rounds.push_back(std::move(round));
        }
    }
    out.depth = out.rounds.size();
    return out;
}

CorrectionReport correction_dependencies(const OpenGraph &graph, const GFlow &gflow) {
    const std::size_t n = graph.size();
    CorrectionReport report;
    report.x_parity.resize(n);
    report.z_parity.resize(n);
    for (const auto &[i, set] : gflow.g) {
        BitVec mask = graph.mask(set);
        for (auto j : mask.indices()) {
            if (j != i) {
                report.x_parity[j].push_back(i);
            }
        }
        for (auto j : odd_neighborhood(graph, mask).indices()) {
            if (j != i) {
                report.z_parity[j].push_back(i);
            }
        }
    }
    for (std::size_t j = 0; j < n; j++) {
        report.x_total += report.x_parity[j].size();
        report.z_total += report.z_parity[j].size();
    }
    report.total = report.x_total + report.z_total;
    report.depth = measurement_rounds(gflow).depth;
    return report;
}

namespace {

std::vector<Vertex> shortcut_to_induced(const OpenGraph &graph, const std::vector<Vertex> &path) {
    std::vector<Vertex> out;
    std::size_t cur = 0;
    while (true) {
        out.push_back(path[cur]);
        if (cur + 1 >= path.size()) {
            break;
        }
        std::size_t next = cur + 1;
        for (std::size_t j = path.size(); j-- > cur + 2;) {
            if (graph.adjacent(path[cur], path[j])) {
                next = j;
                break;
            }
        }
        cur = next;
    }
    return out;
}

std::optional<std::vector<std::vector<Vertex>>> follow_flow_images(const OpenGraph &graph, const GFlow &gflow) {
    BitVec used(graph.size());
    std::vector<std::vector<Vertex>> wires;
    for (auto v : graph.inputs()) {
        std::vector<Vertex> wire;
        while (true) {
            if (used.get(v)) {
                return std::nullopt;
            }
            used.set(v);
            wire.push_back(v);
            if (graph.is_output(v)) {
                break;
            }
            auto it = gflow.g.find(v);
            if (it == gflow.g.end() || !graph.adjacent(v, it->second.front())) {
                return std::nullopt;
            }
            v = it->second.front();
        }
        wires.push_back(std::move(wire));
    }
    return wires;
}

// Unit vertex-capacity max-flow from the inputs to the outputs (vertex-split network).
std::vector<std::vector<Vertex>> disjoint_paths(const OpenGraph &graph) {
    const std::size_t n = graph.size();
    const std::size_t source = 2 * n;
    const std::size_t sink = 2 * n + 1;
    struct Arc {
        std::size_t to;
        int cap;
        std::size_t rev;
    };
    std::vector<std::vector<Arc>> net(2 * n + 2);
    auto add = [&](std::size_t a, std::size_t b) {
        net[a].push_back({b, 1, net[b].size()});
        net[b].push_back({a, 0, net[a].size() - 1});
    };
    for (Vertex v = 0; v < n; v++) {
        add(2 * v, 2 * v + 1);
    }
    for (auto v : graph.inputs()) {
        add(source, 2 * v);
    }
    for (auto v : graph.outputs()) {
        add(2 * v + 1, sink);
    }
    for (auto [u, v] : graph.edges()) {
        add(2 * u + 1, 2 * v);
        add(2 * v + 1, 2 * u);
    }

    while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> parent(net.size(), {SIZE_MAX, 0});
        parent[source] = {source, 0};
        std::deque<std::size_t> queue{source};
        while (!queue.empty() && parent[sink].first == SIZE_MAX) {
            auto a = queue.front();
            queue.pop_front();
            for (std::size_t k = 0; k < net[a].size(); k++) {
                const auto &arc = net[a][k];
                if (arc.cap > 0 && parent[arc.to].first == SIZE_MAX) {
                    parent[arc.to] = {a, k};
                    queue.push_back(arc.to);
                }
            }
        }
        if (parent[sink].first == SIZE_MAX) {
            break;
        }
        for (std::size_t b = sink; b != source;) {
            auto [a, k] = parent[b];
            net[a][k].cap -= 1;
            net[b][net[a][k].rev].cap += 1;
            b = a;
        }
    }

    std::vector<std::vector<Vertex>> paths;
    for (auto start : graph.inputs()) {
        // Only follow arcs that carry flow: original arcs with exhausted capacity.
        std::vector<Vertex> path;
        std::size_t node = 2 * start;
        bool reached = false;
        bool from_source = false;
        for (const auto &arc : net[source]) {
            if (arc.to == node && arc.cap == 0) {
                from_source = true;
            }
        }
        if (!from_source) {
            continue;
        }
        while (!reached) {
            Vertex v = node / 2;
            path.push_back(v);
            std::size_t out = 2 * v + 1;
            std::optional<std::size_t> next;
            for (auto &arc : net[out]) {
                bool forward = arc.to == sink || (arc.to < 2 * n && arc.to % 2 == 0 && arc.to != 2 * v);
                if (forward && arc.cap == 0) {
                    next = arc.to;
                    arc.cap = -1;  // consume, so each unit of flow is followed once
                    break;
                }
            }
            if (!next) {
                break;
            }
            if (*next == sink) {
                reached = true;
            } else {
                node = *next;
            }
        }
        if (reached) {
            paths.push_back(std::move(path));
        }
    }
    return paths;
}

}  // namespace

WireSet flow_wires(const OpenGraph &graph, const GFlow &gflow) {
    std::optional<std::vector<std::vector<Vertex>>> raw;
    if (gflow.is_flow()) {
        raw = follow_flow_images(graph, gflow);
    }
    if (!raw) {
        raw = disjoint_paths(graph);
    }
    if (raw->size() < graph.inputs().size()) {
        throw InconsistencyError("only " + std::to_string(raw->size()) + " vertex-disjoint input/output paths for " +
                                 std::to_string(graph.inputs().size()) + " inputs");
    }

    WireSet out;
    BitVec covered(graph.size());
    for (auto &wire : *raw) {
        auto first_output = std::find_if(wire.begin(), wire.end(), [&](Vertex v) { return graph.is_output(v); });
        wire.erase(first_output + 1, wire.end());
        auto induced = shortcut_to_induced(graph, wire);
        for (auto v : induced) {
            covered.set(v);
        }
        out.wires.push_back(std::move(induced));
    }
    for (auto v : graph.measured()) {
        if (!covered.get(v)) {
            out.uncovered.push_back(v);
        }
    }
    return out;
}

}  // namespace mbqc
