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

#include "mbqc/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mbqc {

namespace {

// Exponent of i picked up when the single-qubit Pauli (x1,z1) is multiplied on the right by
// (x2,z2), both written with Y for x=z=1.
int reorder_exponent(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return int(z2) - int(x2);
    }
    if (x1) {
        return int(z2) * (2 * int(x2) - 1);
    }
    return int(x2) * (1 - 2 * int(z2));
}

const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliWord::PauliWord(BitVec x_bits, BitVec z_bits) : x(std::move(x_bits)), z(std::move(z_bits)) {
    if (x.size() != z.size()) {
        throw std::invalid_argument("x and z parts of a Pauli word differ in length");
    }
}

void PauliWord::set_op(std::size_t k, char pauli) {
    switch (pauli) {
        case 'I':
            x.set(k, false);
            z.set(k, false);
            break;
        case 'X':
            x.set(k, true);
            z.set(k, false);
            break;
        case 'Z':
            x.set(k, false);
            z.set(k, true);
            break;
        case 'Y':
            x.set(k, true);
            z.set(k, true);
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + pauli + "'");
    }
}

bool PauliWord::commutes(const PauliWord &other) const {
    if (size() != other.size()) {
        throw std::invalid_argument("Pauli words differ in length");
    }
    return x.dot(other.z) == z.dot(other.x);
}

std::string PauliWord::str() const {
    static const char letters[4] = {'I', 'X', 'Z', 'Y'};
    std::string out;
    for (std::size_t k = 0; k < size(); k++) {
        out.push_back(letters[op(k)]);
    }
    return out;
}

PauliProduct PauliProduct::parse(const std::string &text) {
    std::size_t pos = 0;
    std::uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = static_cast<std::uint8_t>((phase + 1) % 4);
        pos++;
    }
    PauliProduct out{PauliWord(text.size() - pos), phase};
    for (std::size_t k = pos; k < text.size(); k++) {
        out.word.set_op(k - pos, text[k]);
    }
    return out;
}

Complex PauliProduct::phase_value() const { return kPhases[phase & 3]; }

PauliProduct pauli_multiply(const PauliProduct &a, const PauliProduct &b) {
    if (a.word.size() != b.word.size()) {
        throw std::invalid_argument("cannot multiply Pauli products on " + std::to_string(a.word.size()) + " and " +
                                    std::to_string(b.word.size()) + " qubits");
    }
    int exponent = a.phase + b.phase;
    for (auto k : (a.word.support() & b.word.support()).indices()) {
        exponent += reorder_exponent(a.word.x.get(k), a.word.z.get(k), b.word.x.get(k), b.word.z.get(k));
    }
    PauliProduct out{PauliWord(a.word.x ^ b.word.x, a.word.z ^ b.word.z),
                     static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)};
    return out;
}

LogicalOperator LogicalOperator::from_word(const PauliWord &word, Complex coefficient) {
    LogicalOperator out(word.size());
    out.add(word, coefficient);
    return out;
}

void LogicalOperator::add(const PauliWord &word, Complex coefficient) {
    if (word.size() != n_) {
        throw std::invalid_argument("term size does not match the operator");
    }
    auto [it, inserted] = terms_.try_emplace(word, coefficient);
    if (!inserted) {
        it->second += coefficient;
    }
    if (std::abs(it->second) < kPruneTolerance) {
        terms_.erase(it);
    }
}

void LogicalOperator::add(const PauliProduct &product, Complex coefficient) {
    add(product.word, coefficient * product.phase_value());
}

LogicalOperator &LogicalOperator::operator+=(const LogicalOperator &other) {
    for (const auto &[word, c] : other.terms_) {
        add(word, c);
    }
    return *this;
}

LogicalOperator &LogicalOperator::operator*=(Complex scale) {
    for (auto &entry : terms_) {
        entry.second *= scale;
    }
    prune();
    return *this;
}

void LogicalOperator::prune() {
    std::erase_if(terms_, [](const auto &entry) { return std::abs(entry.second) < kPruneTolerance; });
}

LogicalOperator operator*(const LogicalOperator &a, const LogicalOperator &b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("cannot multiply operators on different qubit counts");
    }
    LogicalOperator out(a.n_);
    for (const auto &[wa, ca] : a.terms_) {
        for (const auto &[wb, cb] : b.terms_) {
            auto product = pauli_multiply(PauliProduct{wa, 0}, PauliProduct{wb, 0});
            out.add(product, ca * cb);
        }
    }
    return out;
}

BitVec LogicalOperator::support() const {
    BitVec out(n_);
    for (const auto &entry : terms_) {
        out |= entry.first.support();
    }
    return out;
}

LogicalOperator LogicalOperator::adjoint() const {
    LogicalOperator out(n_);
    for (const auto &[word, c] : terms_) {
        out.terms_.emplace(word, std::conj(c));
    }
    return out;
}

double LogicalOperator::distance(const LogicalOperator &other) const {
    double worst = 0;
    for (const auto &[word, c] : terms_) {
        auto it = other.terms_.find(word);
        worst = std::max(worst, std::abs(c - (it == other.terms_.end() ? Complex{} : it->second)));
    }
    for (const auto &[word, c] : other.terms_) {
        if (!terms_.count(word)) {
            worst = std::max(worst, std::abs(c));
        }
    }
    return worst;
}

}  // namespace mbqc
