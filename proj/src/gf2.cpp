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

#include "mbqc/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbqc {

BitVec BitVec::from_indices(std::size_t size, const std::vector<std::size_t> &indices) {
    BitVec v(size);
    for (auto k : indices) {
        if (k >= size) {
            throw std::invalid_argument("bit index " + std::to_string(k) + " out of range for size " +
                                        std::to_string(size));
        }
        v.set(k);
    }
    return v;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

BitVec BitVec::without(const BitVec &other) const {
    BitVec out = *this;
    for (std::size_t w = 0; w < words_.size(); w++) {
        out.words_[w] &= ~other.words_[w];
    }
    return out;
}

BitVec BitVec::complement() const {
    BitVec out(size_);
    for (std::size_t w = 0; w < words_.size(); w++) {
        out.words_[w] = ~words_[w];
    }
    if (size_ & 63) {
        out.words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }
    return out;
}

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (auto w : words_) {
        c += std::popcount(w);
    }
    return c;
}

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool BitVec::dot(const BitVec &other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

bool BitVec::is_subset_of(const BitVec &other) const {
    for (std::size_t w = 0; w < words_.size(); w++) {
        if (words_[w] & ~other.words_[w]) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> BitVec::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); w++) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::strong_ordering BitVec::operator<=>(const BitVec &other) const {
    if (auto c = size_ <=> other.size_; c != 0) {
        return c;
    }
    for (std::size_t w = 0; w < words_.size(); w++) {
        if (auto c = words_[w] <=> other.words_[w]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

std::size_t Gf2Matrix::rank() const {
    std::vector<BitVec> m = rows_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < m.size(); c++) {
        std::size_t pivot = rank;
        while (pivot < m.size() && !m[pivot].get(c)) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); r++) {
            if (m[r].get(c)) {
                m[r] ^= m[rank];
            }
        }
        rank++;
    }
    return rank;
}

std::optional<BitVec> Gf2Matrix::solve(const BitVec &rhs) const {
    if (rhs.size() != rows_.size()) {
        throw std::invalid_argument("right-hand side length does not match the row count");
    }
    // Reduced row echelon form with pivots searched from the highest column downwards, so that
    // every pivot variable depends only on lower-indexed free variables. Setting all free
    // variables to zero then yields the lexicographically least solution.
    std::vector<BitVec> m = rows_;
    std::vector<bool> b(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); r++) {
        b[r] = rhs.get(r);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t next = 0;
    for (std::size_t c = cols_; c-- > 0 && next < m.size();) {
        std::size_t pivot = next;
        while (pivot < m.size() && !m[pivot].get(c)) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[next], m[pivot]);
        std::swap(b[next], b[pivot]);
        for (std::size_t r = 0; r < m.size(); r++) {
            if (r != next && m[r].get(c)) {
                m[r] ^= m[next];
                b[r] = b[r] ^ b[next];
            }
        }
        pivots.emplace_back(next, c);
        next++;
    }
    for (std::size_t r = next; r < m.size(); r++) {
        if (b[r]) {
            return std::nullopt;
        }
    }
    BitVec x(cols_);
    for (auto [r, c] : pivots) {
        x.set(c, b[r]);
    }
    return x;
}

}  // namespace mbqc

std::size_t std::hash<mbqc::BitVec>::operator()(const mbqc::BitVec &v) const noexcept {
    std::size_t h = v.size();
    for (auto w : v.words()) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
