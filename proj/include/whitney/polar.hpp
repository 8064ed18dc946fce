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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "whitney/euler_calculus.hpp"
#include "whitney/homology.hpp"
#include "whitney/rational.hpp"
#include "whitney/simplicial.hpp"

namespace whitney {

/// Exact images of the vertices of a complex in R^m; extended linearly over
/// each simplex.
class AffineVertexMap {
 public:
  AffineVertexMap(ComplexPtr domain, std::size_t target_dimension, std::vector<Point> images);

  static AffineVertexMap from_ids(ComplexPtr domain, std::size_t target_dimension,
                                  const std::map<VertexId, Point>& images);

  const ComplexPtr& domain() const noexcept { return domain_; }
  std::size_t target_dimension() const noexcept { return target_dimension_; }
  const Point& image(Vertex v) const { return images_.at(v); }
  const std::vector<Point>& images() const noexcept { return images_; }

  /// The same vertex images on a closed subcomplex (matched by vertex id).
  AffineVertexMap restricted_to(ComplexPtr sub) const;

 private:
  ComplexPtr domain_;
  std::size_t target_dimension_;
  std::vector<Point> images_;
};

/// { x : normal . x = offset } with the normal scaled so that its first
/// nonzero component is 1. The positive side is normal . x > offset.
struct Hyperplane {
  Point normal;
  Rational offset;

  int side(const Point& x) const;
};

/// Hyperplane through the images of an i-simplex in R^(i+1), or nullopt if
/// they are affinely dependent.
std::optional<Hyperplane> spanned_hyperplane(const AffineVertexMap& f, SimplexIndex s);

struct NondegeneracyReport {
  bool nondegenerate = true;
  std::optional<SimplexIndex> offending;
  std::string reason;
};

/// Per i-simplex S: f(S) spans a hyperplane P of R^(i+1) and no vertex of
/// Lk(S) maps into P. Throws Error(Polar) when target dimension != i + 1.
NondegeneracyReport check_nondegenerate(const AffineVertexMap& f, int i);
bool is_nondegenerate(const AffineVertexMap& f, int i);

/// For every simplex S, the linear part of f on the affine span of S has
/// rank min(dim S, target dimension).
NondegeneracyReport check_rank_generic(const AffineVertexMap& f);

/// For every vertex v and every i+2 distinct vertices of St(v), the images
/// affinely span R^(i+1).
NondegeneracyReport check_star_general_position(const AffineVertexMap& f, int i);

enum class Side { Positive, Negative };

/// Census of one link simplex U of S. The open cell of U strictly on a side
/// is present iff some vertex of U lies there; the slice U o f^-1(P) is
/// present iff U has vertices on both sides.
struct HalfLinkCell {
  SimplexIndex link_simplex;  // U = joined \ S (index in the domain)
  SimplexIndex joined;        // S * U
  bool positive = false;
  bool negative = false;
  bool slice = false;
};

struct HalfLinkReport {
  SimplexIndex simplex = 0;
  Hyperplane plane;
  std::vector<HalfLinkCell> cells;
  /// chi(L+) and chi(L-) of the full link.
  std::int64_t chi_plus = 0;
  std::int64_t chi_minus = 0;
  /// Weighted variants: each cell counts with the value of the function on
  /// the joined simplex.
  std::int64_t weighted_plus = 0;
  std::int64_t weighted_minus = 0;
};

/// Throws Error(Polar) if f is degenerate at s.
HalfLinkReport half_link(const ConstructibleFunction& a, SimplexIndex s, const AffineVertexMap& f);
std::int64_t half_link_chi(const ConstructibleFunction& a, SimplexIndex s, const AffineVertexMap& f, Side side);

/// Coefficient of an i-simplex S is a(S) - chi+_S(a) mod 2; with a = 1 this
/// is 1 - chi(L+). Requires f nondegenerate and a Euler.
Mod2Chain euler_singularity_chain(const AffineVertexMap& f, const ConstructibleFunction& a, int i,
                                  std::vector<HalfLinkReport>* reports = nullptr);

/// The same coefficient formula without the Euler precondition on a.
Mod2Chain singularity_chain(const AffineVertexMap& f, const ConstructibleFunction& a, int i,
                            std::vector<HalfLinkReport>* reports = nullptr);
/// Barycenter of each k-simplex of K goes to (k, k^2, ..., k^(i+1)); the map
/// lives on K'.
AffineVertexMap moment_map(const Subdivision& sd, int i);

/// x -> (<b_1, x>, ..., <b_m, x>) on the vertex coordinates.
AffineVertexMap projection_map(const ComplexPtr& k, const std::vector<Point>& basis);

/// Draws integer bases from MT19937-64 until the induced projection is
/// nondegenerate in dimension rank - 1. Deterministic in (seed, K).
std::vector<Point> sample_generic_subspace(const ComplexPtr& k, std::size_t rank, std::uint64_t seed,
                                           int max_attempts = 200);

}  // namespace whitney
