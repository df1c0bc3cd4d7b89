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

#include "mbqc/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mbqc/errors.hpp"
#include "mbqc/pauli.hpp"

namespace mbqc {

namespace {

void check_dense(std::size_t n, std::size_t limit) {
    if (n > limit) {
        throw BudgetExceeded("dense state on " + std::to_string(n) + " qubits exceeds the limit of " +
                             std::to_string(limit));
    }
}

// Measured vertices in gFlow order, ascending within a layer.
std::vector<Vertex> measurement_order(const OpenGraph &graph, const GFlow &gflow) {
    gflow.layer_index(graph.size());
    std::vector<Vertex> order;
    for (const auto &layer : gflow.layers) {
        VertexSet sorted = layer;
        std::sort(sorted.begin(), sorted.end());
        for (auto v : sorted) {
            if (!graph.is_output(v)) {
                order.push_back(v);
            }
        }
    }
    return order;
}

void project(StateVector &state, Vertex v, const std::array<Complex, 2> &basis) {
    const std::size_t bit = std::size_t{1} << v;
    for (Eigen::Index idx = 0; idx < state.size(); idx++) {
        if (idx & bit) {
            continue;
        }
        Complex overlap = std::conj(basis[0]) * state(idx) + std::conj(basis[1]) * state(idx | bit);
        state(idx) = basis[0] * overlap;
        state(idx | bit) = basis[1] * overlap;
    }
}

}  // namespace

void apply_pauli(StateVector &state, const PauliProduct &product) {
    std::size_t flip = 0;
    for (auto q : product.word.x.indices()) {
        flip |= std::size_t{1} << q;
    }
    auto z_bits = product.word.z.indices();
    auto y_count = (product.word.x & product.word.z).count();
    // P = phase * i^{#Y} * X^x Z^z with Y = iXZ.
    Complex global = product.phase_value() * std::pow(Complex{0, 1}, static_cast<double>(y_count % 4));
    StateVector out(state.size());
    for (Eigen::Index idx = 0; idx < state.size(); idx++) {
        int sign = 0;
        for (auto q : z_bits) {
            sign ^= static_cast<int>((static_cast<std::size_t>(idx) >> q) & 1U);
        }
        out(static_cast<Eigen::Index>(static_cast<std::size_t>(idx) ^ flip)) = (sign ? -global : global) * state(idx);
    }
    state = std::move(out);
}

StateVector build_open_graph_state(const OpenGraph &graph, const StateVector &input_state, std::size_t dense_limit) {
    const std::size_t n = graph.size();
    check_dense(n, dense_limit);
    const auto &inputs = graph.inputs();
    if (input_state.size() != (Eigen::Index{1} << inputs.size())) {
        throw std::invalid_argument("input state has the wrong dimension");
    }
    const std::size_t dim = std::size_t{1} << n;
    const double plus = std::pow(2.0, -0.5 * static_cast<double>(n - inputs.size()));
    StateVector state(static_cast<Eigen::Index>(dim));
    for (std::size_t idx = 0; idx < dim; idx++) {
        std::size_t local = 0;
        for (std::size_t q = 0; q < inputs.size(); q++) {
            local |= ((idx >> inputs[q]) & 1U) << q;
        }
        int parity = 0;
        for (auto [u, v] : graph.edges()) {
            parity ^= static_cast<int>(((idx >> u) & (idx >> v)) & 1U);
        }
        Complex amp = plus * input_state(static_cast<Eigen::Index>(local));
        state(static_cast<Eigen::Index>(idx)) = parity ? -amp : amp;
    }
    return state;
}

StateVector random_state(std::size_t qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    StateVector state(Eigen::Index{1} << qubits);
    for (Eigen::Index k = 0; k < state.size(); k++) {
        state(k) = Complex{normal(rng), normal(rng)};
    }
    state.normalize();
    return state;
}

BranchRecord run_branch(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern,
                        const StateVector &input_state, const std::map<Vertex, bool> &outcomes, bool normalize,
                        std::size_t dense_limit) {
    auto order = measurement_order(graph, gflow);
    StateVector state = build_open_graph_state(graph, input_state, dense_limit);

    BranchRecord record;
    record.probability = 1;
    std::map<Vertex, std::array<Complex, 2>> chosen;
    double norm2 = state.squaredNorm();
    for (auto v : order) {
        auto it = outcomes.find(v);
        if (it == outcomes.end()) {
            throw std::invalid_argument("no outcome recorded for vertex " + std::to_string(v));
        }
        bool bit = it->second;
        record.outcomes[v] = bit;
        auto basis = measurement_state(pattern.plane(v), pattern.angle(v), bit);
        chosen[v] = basis;
        project(state, v, basis);
        double after = state.squaredNorm();
        double p = norm2 > 0 ? after / norm2 : 0;
        record.step_probabilities.emplace_back(v, p);
        record.probability *= p;
        norm2 = after;
        if (after < 1e-28) {
            record.probability = 0;
            return record;
        }
        if (bit) {
            // Product of K_j over g(v); its factor on v itself is absorbed by the outcome flip.
            PauliProduct correction{PauliWord(graph.size()), 0};
            for (auto j : gflow.g.at(v)) {
                PauliProduct k{PauliWord(graph.size()), 0};
                k.word.x.set(j);
                k.word.z = graph.neighbors(j);
                correction = pauli_multiply(correction, k);
            }
            correction.word.x.set(v, false);
            correction.word.z.set(v, false);
            apply_pauli(state, correction);
        }
    }

    // Contract every measured qubit with its selected basis state.
    const auto &outputs = graph.outputs();
    StateVector out = StateVector::Zero(Eigen::Index{1} << outputs.size());
    for (Eigen::Index idx = 0; idx < state.size(); idx++) {
        Complex amp = state(idx);
        if (amp == Complex{}) {
            continue;
        }
        auto u = static_cast<std::size_t>(idx);
        for (const auto &[v, basis] : chosen) {
            amp *= std::conj(basis[(u >> v) & 1U]);
        }
        std::size_t local = 0;
        for (std::size_t q = 0; q < outputs.size(); q++) {
            local |= ((u >> outputs[q]) & 1U) << q;
        }
        out(static_cast<Eigen::Index>(local)) += amp;
    }
    if (normalize) {
        out.normalize();
    }
    record.output = std::move(out);
    return record;
}

double phase_insensitive_fidelity(const StateVector &a, const StateVector &b) {
    double na = a.squaredNorm();
    double nb = b.squaredNorm();
    if (na == 0 || nb == 0) {
        return 0;
    }
    return std::norm(a.dot(b)) / (na * nb);
}

DeterminismReport check_determinism(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern,
                                    std::uint64_t seed, std::size_t branch_budget, std::size_t dense_limit) {
    auto order = measurement_order(graph, gflow);
    check_dense(graph.size(), dense_limit);
    if (order.size() >= 63 || (std::size_t{1} << order.size()) > branch_budget) {
        throw BudgetExceeded(std::to_string(order.size()) + " measurements give more branches than the budget of " +
                             std::to_string(branch_budget));
    }
    StateVector input = random_state(graph.inputs().size(), seed);
    DeterminismReport report;
    StateVector reference;
    const std::size_t branches = std::size_t{1} << order.size();
    for (std::size_t b = 0; b < branches; b++) {
        std::map<Vertex, bool> outcomes;
        for (std::size_t k = 0; k < order.size(); k++) {
            outcomes[order[k]] = (b >> k) & 1U;
        }
        auto record = run_branch(graph, gflow, pattern, input, outcomes, true, dense_limit);
        report.branches++;
        report.total_probability += record.probability;
        for (const auto &step : record.step_probabilities) {
            double dev = std::abs(step.second - 0.5);
            report.worst_probability_deviation = std::max(report.worst_probability_deviation, dev);
            if (dev > 1e-9) {
                report.equiprobable = false;
            }
        }
        if (record.probability == 0) {
            continue;
        }
        if (b == 0) {
            reference = record.output;
            continue;
        }
        if (reference.size() == 0) {
            report.deterministic = false;
            report.worst_fidelity = 0;
            continue;
        }
        double f = phase_insensitive_fidelity(reference, record.output);
        report.worst_fidelity = std::min(report.worst_fidelity, f);
        if (f < 1 - 1e-9) {
            report.deterministic = false;
        }
    }
    return report;
}

Eigen::MatrixXcd oracle_unitary(const OpenGraph &graph, const GFlow &gflow, const MeasurementPattern &pattern,
                                std::size_t dense_limit) {
    const std::size_t k = graph.inputs().size();
    if (k != graph.outputs().size()) {
        throw std::invalid_argument("a unitary needs as many outputs as inputs");
    }
    std::map<Vertex, bool> zeros;
    for (auto v : graph.measured()) {
        zeros[v] = false;
    }
    const auto dim = Eigen::Index{1} << k;
    Eigen::MatrixXcd v(dim, dim);
    for (Eigen::Index a = 0; a < dim; a++) {
        StateVector basis = StateVector::Zero(dim);
        basis(a) = 1;
        v.col(a) = run_branch(graph, gflow, pattern, basis, zeros, false, dense_limit).output;
    }
    double scale = v.col(0).norm();
    if (scale < 1e-12) {
        throw NotDeterministic("branch 0 annihilates the first basis input");
    }
    v /= scale;
    if ((v.adjoint() * v - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-9) {
        throw NotDeterministic("branch-0 map is not unitary");
    }
    for (Eigen::Index c = 0; c < v.cols(); c++) {
        for (Eigen::Index r = 0; r < v.rows(); r++) {
            if (std::abs(v(r, c)) > 1e-6) {
                v *= std::conj(v(r, c)) / std::abs(v(r, c));
                return v;
            }
        }
    }
    return v;
}

std::size_t schmidt_rank_log2(const StateVector &state, const BitVec &side, double tolerance) {
    const std::size_t n = side.size();
    auto a_bits = side.indices();
    auto b_bits = side.complement().indices();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << a_bits.size(), Eigen::Index{1} << b_bits.size());
    for (std::size_t idx = 0; idx < (std::size_t{1} << n); idx++) {
        std::size_t ra = 0, rb = 0;
        for (std::size_t q = 0; q < a_bits.size(); q++) {
            ra |= ((idx >> a_bits[q]) & 1U) << q;
        }
        for (std::size_t q = 0; q < b_bits.size(); q++) {
            rb |= ((idx >> b_bits[q]) & 1U) << q;
        }
        m(static_cast<Eigen::Index>(ra), static_cast<Eigen::Index>(rb)) = state(static_cast<Eigen::Index>(idx));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); k++) {
        if (svd.singularValues()(k) > tolerance) {
            rank++;
        }
    }
    std::size_t log = 0;
    while ((std::size_t{1} << log) < rank) {
        log++;
    }
    if ((std::size_t{1} << log) != rank) {
        throw InconsistencyError("Schmidt rank " + std::to_string(rank) + " is not a power of two");
    }
    return log;
}

Complex expectation(const StateVector &state, const LogicalOperator &op) {
    Complex total{};
    for (const auto &[word, c] : op.terms()) {
        StateVector image = state;
        apply_pauli(image, PauliProduct{word, 0});
        total += c * state.dot(image);
    }
    return total;
}

}  // namespace mbqc
