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

#include "whitney/gf2.hpp"

#include <bit>
#include <limits>

#include "whitney/error.hpp"

namespace whitney::gf2 {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::any() const noexcept {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return bits_;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

ColumnReducer::ColumnReducer(std::size_t rows, std::size_t columns, bool track_combinations)
    : rows_(rows), columns_(columns), track_(track_combinations), pivot_owner_(rows, npos) {}

bool ColumnReducer::push(const SparseColumn& column) {
  if (pushed_ >= columns_) throw Error(ErrorKind::Internal, "column reducer overflow");
  Entry entry{BitVector(rows_), track_ ? BitVector(columns_) : BitVector()};
  for (std::size_t r : column) entry.vector.flip(r);
  if (track_) entry.combination.set(pushed_);
  ++pushed_;
  for (std::size_t p = entry.vector.first_set(); p < rows_; p = entry.vector.first_set()) {
    const std::size_t owner = pivot_owner_[p];
    if (owner == npos) {
      pivot_owner_[p] = basis_.size();
      basis_.push_back(std::move(entry));
      return true;
    }
    entry.vector ^= basis_[owner].vector;
    if (track_) entry.combination ^= basis_[owner].combination;
  }
  return false;
}

std::optional<std::vector<std::size_t>> ColumnReducer::solve(const SparseColumn& rhs) const {
  if (!track_) throw Error(ErrorKind::Internal, "solve requires tracked combinations");
  BitVector v(rows_);
  BitVector combination(columns_);
  for (std::size_t r : rhs) v.flip(r);
  for (std::size_t p = v.first_set(); p < rows_; p = v.first_set()) {
    const std::size_t owner = pivot_owner_[p];
    if (owner == npos) return std::nullopt;
    v ^= basis_[owner].vector;
    combination ^= basis_[owner].combination;
  }
  return combination.ones();
}

std::size_t rank(std::size_t rows, std::span<const SparseColumn> columns) {
  ColumnReducer reducer(rows, columns.size(), false);
  for (const auto& c : columns) reducer.push(c);
  return reducer.rank();
}

std::optional<std::vector<std::size_t>> solve(std::size_t rows, std::span<const SparseColumn> columns,
                                              const SparseColumn& rhs) {
  ColumnReducer reducer(rows, columns.size(), true);
  for (const auto& c : columns) reducer.push(c);
  return reducer.solve(rhs);
}

}  // namespace whitney::gf2
