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

#include <array>
#include <map>

#include "mbqc/flow.hpp"
#include "mbqc/pauli.hpp"

namespace mbqc {

/// Measurement plane and angle (radians) for every measured vertex.
struct MeasurementPattern {
    std::map<Vertex, double> angles;
    std::map<Vertex, Plane> planes;

    /// All measured vertices in the XY plane with the given angles.
    static MeasurementPattern xy(const OpenGraph &graph, const std::map<Vertex, double> &angles);

    double angle(Vertex v) const;
    Plane plane(Vertex v) const;
    /// Throws std::invalid_argument unless angles and planes cover exactly the measured vertices
    /// with finite angles and planes that agree with `gflow`.
    void validate(const OpenGraph &graph, const GFlow &gflow) const;

    bool operator==(const MeasurementPattern &) const = default;
};

/// Amplitudes (on |0>, |1>) of the basis state selected by `outcome` (false = +1 eigenvalue).
///   XY: (|0> +- e^{i a}|1>)/sqrt2     XZ: cos(a/2)|0> + sin(a/2)|1> and its orthogonal
///   YZ: cos(a/2)|0> + i sin(a/2)|1> and its orthogonal
std::array<Complex, 2> measurement_state(Plane plane, double angle, bool outcome);

/// Real 3x3 matrix R with W P W^dagger = sum_Q R[P][Q] Q, where W maps the measured
/// observable onto X. Rows and columns are ordered X, Y, Z.
using FrameRotation = std::array<std::array<double, 3>, 3>;
FrameRotation measurement_frame(Plane plane, double angle);

/// Conjugates a phased Pauli word by the measurement frame of every measured vertex of
/// `pattern`. Unmeasured qubits are left alone.
LogicalOperator rotate_into_frame(const PauliProduct &product, const std::map<Vertex, FrameRotation> &frames);

}  // namespace mbqc
