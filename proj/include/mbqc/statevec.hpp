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
#include <cstdint>
#include <map>
#include <vector>

#include "mbqc/flow.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

inline constexpr std::size_t kDefaultDenseLimit = 14;
inline constexpr std::size_t kDefaultBranchBudget = std::size_t{1} << 12;

/// Dense state on n qubits; qubit k is bit k of the amplitude index.
using StateVector = Eigen::VectorXcd;

/// CZ on every edge applied to input_state on I (input q is bit q) and |+> elsewhere.
/// Throws BudgetExceeded when the graph has more than `dense_limit` vertices.
StateVector build_open_graph_state(const OpenGraph &graph, const StateVector &input_state,
                                   std::size_t dense_limit = kDefaultDenseLimit);

/// Haar-ish random normalized state from a seeded Gaussian.
StateVector random_state(std::size_t qubits, std::uint64_t seed);

struct BranchRecord {
    std::map<Vertex, bool> outcomes;
    /// Probability of each measurement given the earlier ones, in measurement order.
    std::vector<std::pair<Vertex, double>> step_probabilities;
    double probability = 0;
    /// State on the outputs (output q is bit q). Empty when the branch has probability zero.
    StateVector output;
};

/// Measures the non-outputs in gFlow order, selecting the recorded outcome each time and
/// applying the gFlow correction for outcome 1. With `normalize` false the output is the raw
/// (unnormalized) image of the input under the branch's linear map.
BranchRecord run_branch(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern,
                        const StateVector &input_state, const std::map<Vertex, bool> &outcomes, bool normalize = true,
                        std::size_t dense_limit = kDefaultDenseLimit);

struct DeterminismReport {
    bool deterministic = true;
    double worst_fidelity = 1;
    std::size_t branches = 0;
    bool equiprobable = true;
    double worst_probability_deviation = 0;
    double total_probability = 0;
};

/// Runs every branch on a seeded random input and compares each output with branch 0 up to
/// global phase. Throws BudgetExceeded when 2^|measured| exceeds `branch_budget`.
DeterminismReport check_determinism(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern,
                                    std::uint64_t seed = 1, std::size_t branch_budget = kDefaultBranchBudget,
                                    std::size_t dense_limit = kDefaultDenseLimit);

/// Branch-0 linear map on computational basis inputs, with one common scale and the global phase
/// fixed. Requires |I| = |O|; throws NotDeterministic unless the result is unitary within 1e-9.
Eigen::MatrixXcd oracle_unitary(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern,
                                std::size_t dense_limit = kDefaultDenseLimit);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double phase_insensitive_fidelity(const StateVector &a, const StateVector &b);

/// log2 of the Schmidt rank of `state` across (side, complement).
std::size_t schmidt_rank_log2(const StateVector &state, const BitVec &side, double tolerance = 1e-9);

/// Expectation <psi|P|psi> of a Pauli sum over the same qubits as the state.
Complex expectation(const StateVector &state, const LogicalOperator &op);

/// Applies a phased Pauli word to a dense state in place.
void apply_pauli(StateVector &state, const PauliProduct &product);

}  // namespace mbqc
