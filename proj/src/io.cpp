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

#include "mbqc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

const Json &member(const Json &doc, const char *field) {
    if (!doc.is_object() || !doc.contains(field)) {
        throw ParseError("missing member", field);
    }
    return doc.at(field);
}

std::size_t index_value(const Json &value, const std::string &field) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ParseError("expected a non-negative integer", field);
    }
    return value.get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json &value, const std::string &field) {
    if (!value.is_array()) {
        throw ParseError("expected an array", field);
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < value.size(); k++) {
        out.push_back(index_value(value[k], field + "[" + std::to_string(k) + "]"));
    }
    return out;
}

Vertex key_vertex(const std::string &key, const std::string &field) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(key, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != key.size()) {
        throw ParseError("key '" + key + "' is not a vertex index", field);
    }
    return static_cast<Vertex>(v);
}

}  // namespace

Json graph_to_json(const OpenGraph &graph) {
    Json edges = Json::array();
    for (auto [u, v] : graph.edges()) {
        edges.push_back({u, v});
    }
    return Json{{"n", graph.size()}, {"edges", edges}, {"inputs", graph.inputs()}, {"outputs", graph.outputs()}};
}

OpenGraph graph_from_json(const Json &doc) {
    std::size_t n = index_value(member(doc, "n"), "n");
    const Json &edges_doc = member(doc, "edges");
    if (!edges_doc.is_array()) {
        throw ParseError("expected an array", "edges");
    }
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < edges_doc.size(); k++) {
        std::string field = "edges[" + std::to_string(k) + "]";
        auto pair = index_list(edges_doc[k], field);
        if (pair.size() != 2) {
            throw ParseError("an edge needs exactly two endpoints", field);
        }
        edges.emplace_back(pair[0], pair[1]);
    }
    auto inputs = index_list(member(doc, "inputs"), "inputs");
    auto outputs = index_list(member(doc, "outputs"), "outputs");
    try {
        return OpenGraph(n, std::move(edges), std::move(inputs), std::move(outputs));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), "graph");
    }
}

Json gflow_to_json(const GFlow &gflow) {
    Json g = Json::object();
    for (const auto &[i, set] : gflow.g) {
        g[std::to_string(i)] = set;
    }
    Json planes = Json::object();
    for (const auto &[i, plane] : gflow.planes) {
        planes[std::to_string(i)] = std::string(plane_name(plane));
    }
    return Json{{"g", g}, {"layers", gflow.layers}, {"planes", planes}};
}

GFlow gflow_from_json(const Json &doc) {
    GFlow out;
    const Json &g = member(doc, "g");
    if (!g.is_object()) {
        throw ParseError("expected an object", "g");
    }
    for (const auto &[key, value] : g.items()) {
        auto set = index_list(value, "g." + key);
        std::sort(set.begin(), set.end());
        out.g[key_vertex(key, "g")] = set;
    }
    const Json &layers = member(doc, "layers");
    if (!layers.is_array()) {
        throw ParseError("expected an array", "layers");
    }
    for (std::size_t k = 0; k < layers.size(); k++) {
        out.layers.push_back(index_list(layers[k], "layers[" + std::to_string(k) + "]"));
    }
    if (doc.contains("planes")) {
        for (const auto &[key, value] : doc.at("planes").items()) {
            if (!value.is_string()) {
                throw ParseError("expected a plane name", "planes." + key);
            }
            try {
                out.planes[key_vertex(key, "planes")] = parse_plane(value.get<std::string>());
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what(), "planes." + key);
            }
        }
    } else {
        for (const auto &entry : out.g) {
            out.planes[entry.first] = Plane::XY;
        }
    }
    return out;
}

Json pattern_to_json(const MeasurementPattern &pattern) {
    Json angles = Json::object();
    for (const auto &[v, a] : pattern.angles) {
        angles[std::to_string(v)] = a;
    }
    Json planes = Json::object();
    for (const auto &[v, p] : pattern.planes) {
        planes[std::to_string(v)] = std::string(plane_name(p));
    }
    return Json{{"angles", angles}, {"planes", planes}};
}

MeasurementPattern pattern_from_json(const Json &doc) {
    MeasurementPattern out;
    const Json &angles = member(doc, "angles");
    if (!angles.is_object()) {
        throw ParseError("expected an object", "angles");
    }
    for (const auto &[key, value] : angles.items()) {
        if (!value.is_number()) {
            throw ParseError("expected a number", "angles." + key);
        }
        out.angles[key_vertex(key, "angles")] = value.get<double>();
    }
    if (doc.contains("planes")) {
        for (const auto &[key, value] : doc.at("planes").items()) {
            if (!value.is_string()) {
                throw ParseError("expected a plane name", "planes." + key);
            }
            try {
                out.planes[key_vertex(key, "planes")] = parse_plane(value.get<std::string>());
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what(), "planes." + key);
            }
        }
    } else {
        for (const auto &entry : out.angles) {
            out.planes[entry.first] = Plane::XY;
        }
    }
    return out;
}

Json matrix_to_json(const Eigen::MatrixXcd &matrix) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < matrix.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < matrix.cols(); c++) {
            row.push_back({matrix(r, c).real(), matrix(r, c).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

Json parse_json_text(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_json_text(buffer.str());
    } catch (const ParseError &e) {
        throw ParseError(std::string(e.what()), path);
    }
}

std::string to_dot(const OpenGraph &graph, const GFlow *gflow, const BitVec *highlight) {
    std::ostringstream out;
    out << "graph open_graph {\n  node [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
    for (Vertex v = 0; v < graph.size(); v++) {
        out << "  " << v << " [";
        std::string fill = highlight != nullptr && highlight->get(v) ? "orange" : "black";
        if (graph.is_output(v)) {
            out << "style=solid, fontcolor=black";
        } else {
            out << "fillcolor=" << fill;
        }
        if (graph.is_input(v)) {
            out << ", shape=box";
        }
        if (highlight != nullptr && highlight->get(v) && graph.is_output(v)) {
            out << ", color=orange, penwidth=2";
        }
        out << "];\n";
    }
    for (auto [u, v] : graph.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    if (gflow != nullptr) {
        for (const auto &[i, set] : gflow->g) {
            for (auto j : set) {
                if (j != i) {
                    out << "  " << i << " -- " << j
                        << " [dir=forward, style=dashed, color=red, constraint=false];\n";
                }
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace mbqc
