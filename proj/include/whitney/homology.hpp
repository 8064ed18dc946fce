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

#include <optional>
#include <span>
#include <vector>

#include "whitney/simplicial.hpp"

namespace whitney {

/// A GF(2) formal sum of same-dimension simplices of one complex.
class Mod2Chain {
 public:
  /// Repeated simplices cancel in pairs. Throws Error(Homology) if a simplex
  /// is out of range or has the wrong dimension.
  Mod2Chain(ComplexPtr base, int dimension, std::vector<SimplexIndex> simplices);

  static Mod2Chain zero(ComplexPtr base, int dimension) { return Mod2Chain(std::move(base), dimension, {}); }
  static Mod2Chain from_ids(ComplexPtr base, int dimension, const std::vector<std::vector<VertexId>>& simplices);

  const ComplexPtr& base() const noexcept { return base_; }
  int dimension() const noexcept { return dimension_; }
  /// Support in canonical simplex order.
  std::span<const SimplexIndex> support() const noexcept { return support_; }
  std::size_t size() const noexcept { return support_.size(); }
  bool empty() const noexcept { return support_.empty(); }
  bool contains(SimplexIndex s) const;

  std::vector<std::vector<VertexId>> simplex_ids() const;

  friend Mod2Chain operator+(const Mod2Chain& a, const Mod2Chain& b);
  friend bool operator==(const Mod2Chain& a, const Mod2Chain& b);

 private:
  ComplexPtr base_;
  int dimension_;
  std::vector<SimplexIndex> support_;
};

struct HomologySummary {
  /// boundary_rank[k] = rank of the boundary map C_k -> C_{k-1}.
  std::vector<std::size_t> boundary_rank;
  std::vector<std::size_t> betti;
};

struct BoundaryDecision {
  bool bounds = false;
  /// A chain x with boundary(x) = c, when one exists.
  std::optional<Mod2Chain> witness;
};

Mod2Chain boundary(const Mod2Chain& c);
bool is_cycle(const Mod2Chain& c);
HomologySummary betti_mod2(const SimplicialComplex& k);

/// Decides whether the cycle c bounds. The witness is the one produced by
/// column reduction in canonical simplex order. Throws Error(Homology) if c
/// is not a cycle.
BoundaryDecision is_boundary(const Mod2Chain& c);
bool homologous(const Mod2Chain& a, const Mod2Chain& b);

/// Simplicial chain map f_#; simplices whose image drops dimension vanish.
Mod2Chain chain_pushforward(const SimplicialMap& f, const Mod2Chain& c);

/// Sum of all top simplices of a pure complex whose top chain is a cycle.
Mod2Chain fundamental_cycle(const ComplexPtr& k);

}  // namespace whitney
