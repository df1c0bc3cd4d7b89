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

#include "mbqc/symbolic_sim.hpp"

#include <cmath>
#include <stdexcept>

#include "mbqc/cone.hpp"
#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

PauliProduct stabilizer_word(const OpenGraph &graph, Vertex i) {
    PauliProduct k{PauliWord(graph.size()), 0};
    k.word.x.set(i);
    k.word.z = graph.neighbors(i);
    return k;
}

std::map<Vertex, FrameRotation> frames_of(const OpenGraph &graph, const MeasurementPattern &pattern) {
    std::map<Vertex, FrameRotation> frames;
    for (auto v : graph.measured()) {
        frames[v] = measurement_frame(pattern.plane(v), pattern.angle(v));
    }
    return frames;
}

PauliProduct stabilizer_product(const OpenGraph &graph, const VertexSet &set) {
    PauliProduct out{PauliWord(graph.size()), 0};
    for (auto j : set) {
        out = pauli_multiply(out, stabilizer_word(graph, j));
    }
    return out;
}

// One vertex step on one operator: correct anticommuting terms, then project mu onto X = +1.
LogicalOperator step(const LogicalOperator &op, Vertex mu, const LogicalOperator &correction, BitVec *touched) {
    LogicalOperator corrected(op.qubits());
    for (const auto &[word, c] : op.terms()) {
        if (!word.z.get(mu)) {
            corrected.add(word, c);
            continue;
        }
        for (const auto &[sword, sc] : correction.terms()) {
            corrected.add(pauli_multiply(PauliProduct{sword, 0}, PauliProduct{word, 0}), sc * c);
        }
    }
    if (touched != nullptr) {
        *touched |= corrected.support();
    }
    LogicalOperator projected(op.qubits());
    for (const auto &[word, c] : corrected.terms()) {
        if (word.z.get(mu)) {
            throw InconsistencyError("term " + word.str() + " still anticommutes with X on vertex " +
                                     std::to_string(mu) + " after correction");
        }
        PauliWord stripped = word;
        stripped.x.set(mu, false);
        projected.add(stripped, c);
    }
    return projected;
}

std::vector<LogicalOperator> restrict_to_outputs(const SimulationState &state, const std::vector<LogicalOperator> &ops) {
    if (state.round_cursor != state.rounds.size()) {
        throw InvalidState("finalize called with " + std::to_string(state.rounds.size() - state.round_cursor) +
                           " rounds still to propagate");
    }
    BitVec output_mask(state.qubits);
    for (auto v : state.outputs) {
        output_mask.set(v);
    }
    std::vector<LogicalOperator> out;
    for (const auto &op : ops) {
        LogicalOperator local(state.outputs.size());
        for (const auto &[word, c] : op.terms()) {
            if (!word.support().is_subset_of(output_mask)) {
                throw InconsistencyError("term " + word.str() + " acts on a measured qubit after the last round");
            }
            PauliWord w(state.outputs.size());
            for (std::size_t q = 0; q < state.outputs.size(); q++) {
                w.x.set(q, word.x.get(state.outputs[q]));
                w.z.set(q, word.z.get(state.outputs[q]));
            }
            local.add(w, c);
        }
        out.push_back(std::move(local));
    }
    return out;
}

}  // namespace

LogicalOperator rotated_stabilizer(const OpenGraph &graph, Vertex i, double theta) {
    if (i >= graph.size() || graph.is_input(i)) {
        throw std::invalid_argument("vertex " + std::to_string(i) + " carries no stabilizer");
    }
    std::map<Vertex, FrameRotation> frames{{i, measurement_frame(Plane::XY, theta)}};
    return rotate_into_frame(stabilizer_word(graph, i), frames);
}

LogicalOperator rotated_stabilizer(const OpenGraph &graph, Vertex i, const MeasurementPattern &pattern) {
    if (i >= graph.size() || graph.is_input(i)) {
        throw std::invalid_argument("vertex " + std::to_string(i) + " carries no stabilizer");
    }
    return rotate_into_frame(stabilizer_word(graph, i), frames_of(graph, pattern));
}

SimulationState initialize_simulation(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern) {
    if (graph.inputs().size() > graph.outputs().size()) {
        throw std::invalid_argument("more inputs than outputs");
    }
    pattern.validate(graph, gflow);
    const std::size_t n = graph.size();
    auto frames = frames_of(graph, pattern);

    SimulationState state;
    state.qubits = n;
    state.rounds = measurement_rounds(gflow).rounds;
    state.consumed = BitVec(n);
    state.outputs = graph.outputs();

    for (const auto &[mu, set] : gflow.g) {
        state.stabilizers.emplace(mu, rotate_into_frame(stabilizer_product(graph, set), frames));
    }

    // Extend the correcting sets to a basis of all non-input stabilizers with unit vectors.
    VertexSet non_inputs = graph.input_mask().complement().indices();
    std::vector<BitVec> basis;
    auto rank_of = [&](const std::vector<BitVec> &rows) {
        Gf2Matrix m(rows.size(), n);
        for (std::size_t r = 0; r < rows.size(); r++) {
            for (auto c : rows[r].indices()) {
                m.set(r, c);
            }
        }
        return m.rank();
    };
    for (const auto &entry : gflow.g) {
        basis.push_back(graph.mask(entry.second));
    }
    std::size_t rank = rank_of(basis);
    for (auto j : non_inputs) {
        basis.push_back(BitVec::from_indices(n, {j}));
        std::size_t next = rank_of(basis);
        if (next == rank) {
            basis.pop_back();
            continue;
        }
        rank = next;
        state.completion_sets.push_back({j});
        state.completion.push_back(rotate_into_frame(stabilizer_word(graph, j), frames));
    }

    for (auto i : graph.inputs()) {
        state.logicals.push_back(rotate_into_frame(stabilizer_word(graph, i), frames));
        PauliProduct z{PauliWord(n), 0};
        z.word.z.set(i);
        state.logicals.push_back(rotate_into_frame(z, frames));
    }
    for (const auto &op : state.logicals) {
        state.high_water.push_back(op.size());
        state.touched.push_back(op.support());
    }
    return state;
}

void propagate_round(SimulationState &state, std::size_t round) {
    if (round != state.round_cursor || round >= state.rounds.size()) {
        throw InvalidState("expected round " + std::to_string(state.round_cursor) + " of " +
                           std::to_string(state.rounds.size()) + ", got " + std::to_string(round));
    }
    for (auto mu : state.rounds[round]) {
        const auto &correction = state.stabilizers.at(mu);
        for (std::size_t k = 0; k < state.logicals.size(); k++) {
            state.logicals[k] = step(state.logicals[k], mu, correction, &state.touched[k]);
            state.high_water[k] = std::max(state.high_water[k], state.logicals[k].size());
        }
        for (auto &g : state.completion) {
            g = step(g, mu, correction, nullptr);
        }
        state.consumed.set(mu);
    }
    state.round_cursor++;
}

std::vector<LogicalOperator> finalize_outputs(const SimulationState &state) {
    return restrict_to_outputs(state, state.logicals);
}

std::vector<LogicalOperator> finalize_completion(const SimulationState &state) {
    return restrict_to_outputs(state, state.completion);
}

Eigen::MatrixXcd dense_operator(const LogicalOperator &op) {
    const std::size_t k = op.qubits();
    const std::size_t dim = std::size_t{1} << k;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[word, c] : op.terms()) {
        std::size_t flip = 0;
        for (std::size_t q = 0; q < k; q++) {
            if (word.x.get(q)) {
                flip |= std::size_t{1} << q;
            }
        }
        for (std::size_t col = 0; col < dim; col++) {
            Complex amp = c;
            for (std::size_t q = 0; q < k; q++) {
                bool bit = (col >> q) & 1U;
                switch (word.op(q)) {
                    case 2:
                        if (bit) {
                            amp = -amp;
                        }
                        break;
                    case 3:
                        amp *= bit ? Complex{0, -1} : Complex{0, 1};
                        break;
                    default:
                        break;
                }
            }
            out(col ^ flip, col) += amp;
        }
    }
    return out;
}

void fix_global_phase(Eigen::MatrixXcd &matrix) {
    for (Eigen::Index c = 0; c < matrix.cols(); c++) {
        for (Eigen::Index r = 0; r < matrix.rows(); r++) {
            if (std::abs(matrix(r, c)) > 1e-6) {
                matrix *= std::conj(matrix(r, c)) / std::abs(matrix(r, c));
                return;
            }
        }
    }
}

Eigen::MatrixXcd extract_unitary(const std::vector<LogicalOperator> &finalized, std::size_t input_count) {
    const std::size_t k = input_count;
    if (finalized.size() != 2 * k) {
        throw std::invalid_argument("expected " + std::to_string(2 * k) + " logicals, got " +
                                    std::to_string(finalized.size()));
    }
    for (const auto &op : finalized) {
        if (op.qubits() != k) {
            throw std::invalid_argument("unitary extraction needs as many outputs as inputs");
        }
    }
    const std::size_t dim = std::size_t{1} << k;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    std::vector<Eigen::MatrixXcd> lx, lz;
    for (std::size_t q = 0; q < k; q++) {
        lx.push_back(dense_operator(finalized[2 * q]));
        lz.push_back(dense_operator(finalized[2 * q + 1]));
    }

    // Image of |a><0| is the product over qubits of L_X^{a_q} (1 + L_Z)/2.
    auto image = [&](std::size_t a) {
        Eigen::MatrixXcd m = id;
        for (std::size_t q = 0; q < k; q++) {
            Eigen::MatrixXcd factor = 0.5 * (id + lz[q]);
            if ((a >> q) & 1U) {
                factor = lx[q] * factor;
            }
            m = m * factor;
        }
        return m;
    };
    Eigen::MatrixXcd m00 = image(0);
    Eigen::Index pivot = 0;
    for (Eigen::Index r = 1; r < m00.rows(); r++) {
        if (m00(r, r).real() > m00(pivot, pivot).real()) {
            pivot = r;
        }
    }
    double weight = m00(pivot, pivot).real();
    if (weight < 1e-9) {
        throw NotDeterministic("transfer map sends |0><0| to zero");
    }
    Eigen::VectorXcd u0 = m00.col(pivot) / std::sqrt(weight);
    Eigen::MatrixXcd u(dim, dim);
    for (std::size_t a = 0; a < dim; a++) {
        u.col(static_cast<Eigen::Index>(a)) = image(a) * u0;
    }

    constexpr double tol = 1e-9;
    if ((u.adjoint() * u - id).cwiseAbs().maxCoeff() > tol) {
        throw NotDeterministic("reconstructed matrix is not unitary");
    }
    for (std::size_t q = 0; q < k; q++) {
        PauliWord wx(k), wz(k);
        wx.x.set(q);
        wz.z.set(q);
        Eigen::MatrixXcd px = dense_operator(LogicalOperator::from_word(wx));
        Eigen::MatrixXcd pz = dense_operator(LogicalOperator::from_word(wz));
        double dev = std::max((u * px * u.adjoint() - lx[q]).cwiseAbs().maxCoeff(),
                              (u * pz * u.adjoint() - lz[q]).cwiseAbs().maxCoeff());
        if (dev > tol) {
            throw NotDeterministic("logical images are not a unitary conjugation (deviation " + std::to_string(dev) +
                                   ")");
        }
    }
    fix_global_phase(u);
    return u;
}

SimulationResult simulate_pattern(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern) {
    auto state = initialize_simulation(graph, gflow, pattern);
    for (std::size_t r = 0; r < state.rounds.size(); r++) {
        propagate_round(state, r);
    }
    SimulationResult result;
    result.outputs = finalize_outputs(state);
    for (std::size_t q = 0; q < graph.inputs().size(); q++) {
        std::size_t count = std::max(state.high_water[2 * q], state.high_water[2 * q + 1]);
        std::size_t cone = forward_cone(graph, gflow, graph.inputs()[q]).count();
        result.term_high_water.push_back(count);
        result.cone_sizes.push_back(cone);
        if (cone < 63 && count > (std::size_t{1} << cone)) {
            result.cone_bound_holds = false;
        }
    }
    if (graph.inputs().size() == graph.outputs().size()) {
        result.unitary = extract_unitary(result.outputs, graph.inputs().size());
    }
    return result;
}

}  // namespace mbqc
