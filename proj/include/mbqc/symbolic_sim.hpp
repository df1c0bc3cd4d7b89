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
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mbqc/flow.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/pauli.hpp"

namespace mbqc {

/// K_i conjugated by the XY measurement frame of vertex i at angle theta:
/// cos(theta) X_i Z_N(i) - sin(theta) Y_i Z_N(i). Throws std::invalid_argument for inputs.
LogicalOperator rotated_stabilizer(const OpenGraph &graph, Vertex i, double theta);

/// K_i conjugated by the frames of every measured vertex of `pattern`.
LogicalOperator rotated_stabilizer(const OpenGraph &graph, Vertex i, const MeasurementPattern &pattern);

/// Heisenberg-picture state of the symbolic simulation, in the rotated frame where every
/// measured qubit is read out in the X basis.
struct SimulationState {
    std::size_t qubits = 0;
    std::vector<VertexSet> rounds;
    /// Vertex order within rounds, flattened; used to check the sequence of calls.
    std::size_t round_cursor = 0;
    /// Correction stabilizers S_mu = product of rotated K_j over j in g(mu).
    std::map<Vertex, LogicalOperator> stabilizers;
    /// K-index sets of the completion generators; together with the correcting sets they span
    /// all non-input stabilizers.
    std::vector<VertexSet> completion_sets;
    std::vector<LogicalOperator> completion;
    /// logicals[2q] is the image of X on input q, logicals[2q+1] the image of Z.
    std::vector<LogicalOperator> logicals;
    /// Largest term count seen per logical.
    std::vector<std::size_t> high_water;
    /// Union of term supports seen per logical, across all steps.
    std::vector<BitVec> touched;
    /// Qubits already read out and projected away.
    BitVec consumed;
    std::vector<Vertex> outputs;
};

/// Builds the correction stabilizers, the completion generators and the initial logicals.
SimulationState initialize_simulation(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern);

/// Processes round `round` (0-based): for each vertex in ascending order every term that
/// anticommutes with its X is multiplied by the vertex's correction stabilizer, then the qubit is
/// projected onto X = +1. Throws InvalidState unless `round` is the next unprocessed round.
void propagate_round(SimulationState &state, std::size_t round);

/// Images of the input Paulis restricted to the outputs, re-indexed so that qubit q is
/// outputs[q]. Throws InvalidState if rounds remain and InconsistencyError if a term still acts
/// on a measured qubit.
std::vector<LogicalOperator> finalize_outputs(const SimulationState &state);

/// Same as finalize_outputs for the completion generators (stabilizers of the output code).
std::vector<LogicalOperator> finalize_completion(const SimulationState &state);

/// Dense matrix of a Pauli sum on `qubits` qubits; qubit q is bit q of the basis index.
Eigen::MatrixXcd dense_operator(const LogicalOperator &op);

/// Makes the first entry with magnitude above 1e-6 (column-major scan) real and positive.
void fix_global_phase(Eigen::MatrixXcd &matrix);

/// Recovers U from output logicals L_X, L_Z (interleaved per input) satisfying
/// L_P = U P U^dagger. Throws NotDeterministic when the transfer map is not a unitary
/// conjugation within 1e-9.
Eigen::MatrixXcd extract_unitary(const std::vector<LogicalOperator> &finalized, std::size_t input_count);

struct SimulationResult {
    /// Present when |I| = |O|.
    std::optional<Eigen::MatrixXcd> unitary;
    std::vector<LogicalOperator> outputs;
    /// Per input: largest term count of its two logicals.
    std::vector<std::size_t> term_high_water;
    /// Per input: forward cone size.
    std::vector<std::size_t> cone_sizes;
    /// term_high_water[q] <= 2^cone_sizes[q] for every input.
    bool cone_bound_holds = true;
};

SimulationResult simulate_pattern(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern);

}  // namespace mbqc
