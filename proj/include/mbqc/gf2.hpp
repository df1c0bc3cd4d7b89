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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace mbqc {

/// Dynamically sized bit vector packed into 64-bit words. Bits past size() are always zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVec from_indices(std::size_t size, const std::vector<std::size_t> &indices);

    std::size_t size() const { return size_; }
    bool get(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1U; }
    void set(std::size_t k, bool value = true) {
        std::uint64_t mask = std::uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(std::size_t k) { words_[k >> 6] ^= std::uint64_t{1} << (k & 63); }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec &b) { return a |= b; }
    /// Bits of this vector not set in `other`.
    BitVec without(const BitVec &other) const;
    BitVec complement() const;

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Parity of the AND with `other`.
    bool dot(const BitVec &other) const;
    bool is_subset_of(const BitVec &other) const;

    std::vector<std::size_t> indices() const;
    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const BitVec &other) const = default;
    std::strong_ordering operator<=>(const BitVec &other) const;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2), stored row-major as bit-packed rows.
class Gf2Matrix {
   public:
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    const BitVec &row(std::size_t r) const { return rows_[r]; }

    std::size_t rank() const;

    /// Solves M x = rhs. Among all solutions returns the lexicographically least one, comparing
    /// x_0 first. Returns nullopt when the system is inconsistent.
    std::optional<BitVec> solve(const BitVec &rhs) const;

   private:
    std::size_t cols_;
    std::vector<BitVec> rows_;
};

}  // namespace mbqc

template <>
struct std::hash<mbqc::BitVec> {
    std::size_t operator()(const mbqc::BitVec &v) const noexcept;
};
