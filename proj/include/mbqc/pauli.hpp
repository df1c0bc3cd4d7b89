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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "mbqc/gf2.hpp"

namespace mbqc {

using Complex = std::complex<double>;

/// Unphased Pauli word in symplectic form: qubit k carries X if x[k], Z if z[k], Y if both.
struct PauliWord {
    BitVec x;
    BitVec z;

    explicit PauliWord(std::size_t n = 0) : x(n), z(n) {}
    PauliWord(BitVec x_bits, BitVec z_bits);

    std::size_t size() const { return x.size(); }
    /// 0 = I, 1 = X, 2 = Z, 3 = Y.
    int op(std::size_t k) const { return int(x.get(k)) | (int(z.get(k)) << 1); }
    void set_op(std::size_t k, char pauli);
    BitVec support() const { return x | z; }
    bool is_identity() const { return x.none() && z.none(); }
    /// True when the words commute (symplectic product zero).
    bool commutes(const PauliWord &other) const;
    /// Text such as "XIZY", qubit 0 first.
    std::string str() const;

    auto operator<=>(const PauliWord &) const = default;
};

/// A Pauli word with a phase i^phase.
struct PauliProduct {
    PauliWord word;
    std::uint8_t phase = 0;  // exponent of i, 0..3

    static PauliProduct parse(const std::string &text);  // e.g. "XIZ", "-iYY"
    Complex phase_value() const;
    bool operator==(const PauliProduct &) const = default;
};

/// Product a*b with the phase accumulated from reordering each qubit's factors.
/// Throws std::invalid_argument on a size mismatch.
PauliProduct pauli_multiply(const PauliProduct &a, const PauliProduct &b);

/// Complex-weighted sum of Pauli words. Terms whose magnitude drops below kPruneTolerance are
/// removed.
class LogicalOperator {
   public:
    static constexpr double kPruneTolerance = 1e-12;

    explicit LogicalOperator(std::size_t n = 0) : n_(n) {}
    static LogicalOperator from_word(const PauliWord &word, Complex coefficient = 1.0);

    std::size_t qubits() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::map<PauliWord, Complex> &terms() const { return terms_; }

    void add(const PauliWord &word, Complex coefficient);
    void add(const PauliProduct &product, Complex coefficient);
    LogicalOperator &operator+=(const LogicalOperator &other);
    LogicalOperator &operator*=(Complex scale);
    void prune();

    friend LogicalOperator operator*(const LogicalOperator &a, const LogicalOperator &b);

    /// Union of the supports of all terms.
    BitVec support() const;
    LogicalOperator adjoint() const;
    double distance(const LogicalOperator &other) const;

   private:
    std::size_t n_;
    std::map<PauliWord, Complex> terms_;
};

}  // namespace mbqc
