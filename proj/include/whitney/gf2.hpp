// Copyright 2026 The Whitney Authors.
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace whitney::gf2 {

/// Packed bit vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1u; }
  void set(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  void flip(std::size_t k) { words_[k / 64] ^= std::uint64_t{1} << (k % 64); }
  BitVector& operator^=(const BitVector& other);
  bool any() const noexcept;
  /// Lowest set bit, or size() when zero.
  std::size_t first_set() const noexcept;
  std::vector<std::size_t> ones() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sparse column: the row indices holding a 1.
using SparseColumn = std::vector<std::size_t>;

/// Incremental column reduction with lowest-row pivots. Columns are inserted
/// in a fixed order; the reduced basis remembers which original columns it
/// combines, so solutions are reproducible from the insertion order alone.
class ColumnReducer {
 public:
  ColumnReducer(std::size_t rows, std::size_t columns, bool track_combinations);

  /// Reduces and inserts the next column. Returns true if it was independent.
  bool push(const SparseColumn& column);

  std::size_t rank() const noexcept { return basis_.size(); }

  /// Solves sum_j x_j * column_j = rhs over the pushed columns. The witness
  /// lists the j with x_j = 1 in increasing order.
  std::optional<std::vector<std::size_t>> solve(const SparseColumn& rhs) const;

 private:
  struct Entry {
    BitVector vector;
    BitVector combination;
  };

  std::size_t rows_;
  std::size_t columns_;
  std::size_t pushed_ = 0;
  bool track_;
  std::vector<Entry> basis_;
  std::vector<std::size_t> pivot_owner_;  // row -> basis entry, or npos
};

std::size_t rank(std::size_t rows, std::span<const SparseColumn> columns);

std::optional<std::vector<std::size_t>> solve(std::size_t rows, std::span<const SparseColumn> columns,
                                              const SparseColumn& rhs);

}  // namespace whitney::gf2
