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

#include "mbqc/pattern.hpp"

#include <cmath>
#include <stdexcept>

namespace mbqc {

MeasurementPattern MeasurementPattern::xy(const OpenGraph &graph, const std::map<Vertex, double> &angles) {
    MeasurementPattern pattern;
    for (auto v : graph.measured()) {
        auto it = angles.find(v);
        pattern.angles[v] = it == angles.end() ? 0.0 : it->second;
        pattern.planes[v] = Plane::XY;
    }
    return pattern;
}

double MeasurementPattern::angle(Vertex v) const {
    auto it = angles.find(v);
    if (it == angles.end()) {
        throw std::invalid_argument("no measurement angle for vertex " + std::to_string(v));
    }
    return it->second;
}

Plane MeasurementPattern::plane(Vertex v) const {
    auto it = planes.find(v);
    if (it == planes.end()) {
        throw std::invalid_argument("no measurement plane for vertex " + std::to_string(v));
    }
    return it->second;
}

void MeasurementPattern::validate(const OpenGraph &graph, const GFlow &gflow) const {
    auto measured = graph.measured();
    if (angles.size() != measured.size() || planes.size() != measured.size()) {
        throw std::invalid_argument("pattern must give an angle and a plane for exactly the measured vertices");
    }
    for (auto v : measured) {
        if (!std::isfinite(angle(v))) {
            throw std::invalid_argument("angle of vertex " + std::to_string(v) + " is not finite");
        }
        if (plane(v) != gflow.plane(v)) {
            throw std::invalid_argument("pattern plane of vertex " + std::to_string(v) + " disagrees with the gflow");
        }
    }
}

std::array<Complex, 2> measurement_state(Plane plane, double angle, bool outcome) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const Complex i{0, 1};
    switch (plane) {
        case Plane::XY: {
            const double r = 1 / std::sqrt(2.0);
            Complex phase = std::polar(1.0, angle);
            return {Complex{r}, outcome ? -r * phase : r * phase};
        }
        case Plane::XZ:
            return outcome ? std::array<Complex, 2>{Complex{s}, Complex{-c}} : std::array<Complex, 2>{Complex{c}, Complex{s}};
        case Plane::YZ:
            return outcome ? std::array<Complex, 2>{Complex{s}, -i * c} : std::array<Complex, 2>{Complex{c}, i * s};
    }
    throw std::invalid_argument("unknown plane");
}

namespace {

using Mat2 = std::array<std::array<Complex, 2>, 2>;

Mat2 mul(const Mat2 &a, const Mat2 &b) {
    Mat2 out{};
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    return out;
}

Mat2 dagger(const Mat2 &a) { return {{{std::conj(a[0][0]), std::conj(a[1][0])}, {std::conj(a[0][1]), std::conj(a[1][1])}}}; }

const Mat2 &pauli_matrix(int k) {
    static const Mat2 m[3] = {
        {{{0, 1}, {1, 0}}},
        {{{0, Complex{0, -1}}, {Complex{0, 1}, 0}}},
        {{{1, 0}, {0, -1}}},
    };
    return m[k];
}

}  // namespace

FrameRotation measurement_frame(Plane plane, double angle) {
    // W = |+><m+| + |-><m-|
    auto plus = measurement_state(plane, angle, false);
    auto minus = measurement_state(plane, angle, true);
    const double r = 1 / std::sqrt(2.0);
    Mat2 w{};
    for (int c = 0; c < 2; c++) {
        w[0][c] = r * std::conj(plus[c]) + r * std::conj(minus[c]);
        w[1][c] = r * std::conj(plus[c]) - r * std::conj(minus[c]);
    }
    FrameRotation rot{};
    for (int p = 0; p < 3; p++) {
        Mat2 image = mul(mul(w, pauli_matrix(p)), dagger(w));
        for (int q = 0; q < 3; q++) {
            Mat2 overlap = mul(pauli_matrix(q), image);
            double value = 0.5 * (overlap[0][0] + overlap[1][1]).real();
            rot[p][q] = std::abs(value) < 1e-15 ? 0.0 : value;
        }
    }
    return rot;
}

LogicalOperator rotate_into_frame(const PauliProduct &product, const std::map<Vertex, FrameRotation> &frames) {
    const std::size_t n = product.word.size();
    // Letter index in FrameRotation order (X=0, Y=1, Z=2) from the word's op code.
    static const int frame_index[4] = {-1, 0, 2, 1};
    static const char letters[3] = {'X', 'Y', 'Z'};

    PauliWord fixed = product.word;
    std::vector<std::pair<Vertex, int>> rotated;
    for (const auto &[v, rot] : frames) {
        if (v < n && fixed.op(v) != 0) {
            rotated.emplace_back(v, frame_index[fixed.op(v)]);
            fixed.set_op(v, 'I');
        }
    }
    LogicalOperator out = LogicalOperator::from_word(fixed, product.phase_value());
    for (auto [v, letter] : rotated) {
        const auto &row = frames.at(v)[letter];
        LogicalOperator next(n);
        for (const auto &[word, coefficient] : out.terms()) {
            for (int q = 0; q < 3; q++) {
                if (row[q] != 0.0) {
                    PauliWord w = word;
                    w.set_op(v, letters[q]);
                    next.add(w, coefficient * row[q]);
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace mbqc
