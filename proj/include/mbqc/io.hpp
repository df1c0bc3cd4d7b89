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

#include <Eigen/Dense>
#include <json.hpp>
#include <optional>
#include <string>

#include "mbqc/flow.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"n", "edges", "inputs", "outputs"} with edges sorted.
Json graph_to_json(const OpenGraph &graph);
/// Throws ParseError naming the offending field, with the underlying validation message.
OpenGraph graph_from_json(const Json &doc);

/// {"g": {"i": [...]}, "layers": [[...]], "planes": {"i": "XY"}}
Json gflow_to_json(const GFlow &gflow);
GFlow gflow_from_json(const Json &doc);

/// {"angles": {"i": float}, "planes": {"i": "XY"}}
Json pattern_to_json(const MeasurementPattern &pattern);
MeasurementPattern pattern_from_json(const Json &doc);

/// Row-major list of [re, im] pairs.
Json matrix_to_json(const Eigen::MatrixXcd &matrix);

/// Parses text as JSON, reporting the byte offset of a syntax error in a ParseError.
Json parse_json_text(const std::string &text);
Json load_json_file(const std::string &path);

/// Graphviz rendering: inputs boxed, outputs unfilled, correcting-set arrows dashed red, and
/// `highlight` vertices shaded.
std::string to_dot(const OpenGraph &graph, const GFlow *gflow = nullptr, const BitVec *highlight = nullptr);

}  // namespace mbqc
