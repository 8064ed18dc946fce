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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "whitney/rational.hpp"

namespace whitney {

using VertexId = std::string;
// Position of a vertex in the complex's sorted vertex table.
using Vertex = std::uint32_t;
// Position of a simplex in the complex's canonical simplex order.
using SimplexIndex = std::size_t;

/// A non-empty, duplicate-free, sorted vertex set.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts; throws Error(Simplicial) on an empty or repeated vertex list.
  explicit Simplex(std::vector<Vertex> vertices);

  static Simplex from_sorted_unchecked(std::vector<Vertex> vertices) {
    Simplex s;
    s.vertices_ = std::move(vertices);
    return s;
  }

  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  Vertex operator[](std::size_t k) const { return vertices_[k]; }
  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// A finite abstract simplicial complex, optionally with exact rational
/// vertex coordinates. Immutable after construction.
///
/// Vertices are opaque strings sorted lexicographically; simplices are
/// enumerated in lexicographic order of their sorted vertex lists, so every
/// index into the complex is reproducible from its content alone.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of `maximal_simplices`. Every vertex id becomes a
  /// 0-simplex, whether or not a listed simplex uses it.
  static SimplicialComplex build(std::vector<VertexId> vertex_ids,
                                 const std::vector<std::vector<VertexId>>& maximal_simplices,
                                 std::optional<std::map<VertexId, Point>> coordinates = std::nullopt);

  /// `simplices` must already be face-closed and use vertex indices into the
  /// sorted `vertex_ids` table. Throws if a face is missing.
  static SimplicialComplex from_closed_set(std::vector<VertexId> vertex_ids, std::vector<Simplex> simplices,
                                           std::optional<std::vector<Point>> coordinates = std::nullopt);

  int dimension() const noexcept { return static_cast<int>(by_dimension_.size()) - 1; }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  const VertexId& vertex_id(Vertex v) const { return vertex_ids_.at(v); }
  std::span<const VertexId> vertex_ids() const noexcept { return vertex_ids_; }
  std::optional<Vertex> find_vertex(std::string_view id) const;

  const Simplex& simplex(SimplexIndex s) const { return simplices_.at(s); }
  int dimension_of(SimplexIndex s) const { return simplices_.at(s).dimension(); }
  std::optional<SimplexIndex> find(const Simplex& s) const;
  std::optional<SimplexIndex> find_ids(const std::vector<VertexId>& ids) const;
  /// Throws Error(Simplicial) naming the simplex when absent.
  SimplexIndex index_of(const Simplex& s) const;
  SimplexIndex vertex_simplex(Vertex v) const { return vertex_simplex_.at(v); }

  std::span<const SimplexIndex> simplices_of_dimension(int d) const;
  std::size_t count(int d) const { return simplices_of_dimension(d).size(); }
  /// Position of a simplex within simplices_of_dimension(dim).
  std::size_t position_in_dimension(SimplexIndex s) const { return position_.at(s); }

  /// Codimension-one faces.
  std::span<const SimplexIndex> facets(SimplexIndex s) const { return facets_.at(s); }
  /// All faces, including s itself, in canonical order.
  std::span<const SimplexIndex> faces(SimplexIndex s) const { return faces_.at(s); }
  /// All cofaces, including s itself, in canonical order.
  std::span<const SimplexIndex> cofaces(SimplexIndex s) const { return cofaces_.at(s); }

  /// Simplices without proper cofaces.
  std::vector<SimplexIndex> maximal_simplices() const;
  bool is_pure() const;

  std::vector<VertexId> simplex_ids(SimplexIndex s) const;
  std::vector<VertexId> simplex_ids(const Simplex& s) const;
  /// "a,b,c" (vertex ids joined with commas).
  std::string label(SimplexIndex s) const;

  bool has_coordinates() const noexcept { return coordinates_.has_value(); }
  std::size_t ambient_dimension() const noexcept { return ambient_dimension_; }
  const Point& coordinate(Vertex v) const;
  const std::optional<std::vector<Point>>& coordinates() const noexcept { return coordinates_; }

  /// The closed subcomplex spanned by `simplices` (which must be face-closed),
  /// keeping vertex ids and coordinates.
  SimplicialComplex subcomplex(std::span<const SimplexIndex> simplices) const;

  /// Same complex with coordinates attached (checked for affine independence).
  SimplicialComplex with_coordinates(std::vector<Point> coords) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  void index_and_check();

  std::vector<VertexId> vertex_ids_;
  std::unordered_map<VertexId, Vertex> vertex_lookup_;
  std::vector<Simplex> simplices_;
  std::unordered_map<Simplex, SimplexIndex, SimplexHash> lookup_;
  std::vector<std::vector<SimplexIndex>> by_dimension_;
  std::vector<std::size_t> position_;
  std::vector<SimplexIndex> vertex_simplex_;
  std::vector<std::vector<SimplexIndex>> facets_;
  std::vector<std::vector<SimplexIndex>> faces_;
  std::vector<std::vector<SimplexIndex>> cofaces_;
  std::optional<std::vector<Point>> coordinates_;
  std::size_t ambient_dimension_ = 0;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex k) { return std::make_shared<const SimplicialComplex>(std::move(k)); }

/// Pointer identity or structural equality.
bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

std::int64_t euler_characteristic(const SimplicialComplex& k);

/// Lk(s) = { t : t and s disjoint, t u s in K }, on the ambient vertex ids.
SimplicialComplex link(const SimplicialComplex& k, SimplexIndex s);
/// Closed star: every face of every coface of s.
SimplicialComplex star(const SimplicialComplex& k, SimplexIndex s);

/// Barycentric subdivision K' with carrier bookkeeping.
///
/// The vertex of K' at the barycenter of a simplex with vertices v1 < ... < vk
/// is named "b(v1,...,vk)". Simplices of K' are strict flags of K.
class Subdivision {
 public:
  explicit Subdivision(ComplexPtr base);

  const ComplexPtr& base() const noexcept { return base_; }
  const ComplexPtr& subdivided() const noexcept { return subdivided_; }

  /// K-simplex whose barycenter is the given K' vertex.
  SimplexIndex carrier_of_vertex(Vertex v) const { return carrier_of_vertex_.at(v); }
  /// K' vertex at the barycenter of a K-simplex.
  Vertex vertex_of_simplex(SimplexIndex s) const { return vertex_of_simplex_.at(s); }
  /// Flag of K-simplices, ascending, for a K' simplex.
  std::span<const SimplexIndex> flag(SimplexIndex s) const { return flags_.at(s); }
  /// The maximal member of the flag.
  SimplexIndex carrier(SimplexIndex s) const { return flags_.at(s).back(); }

 private:
  ComplexPtr base_;
  ComplexPtr subdivided_;
  std::vector<SimplexIndex> carrier_of_vertex_;
  std::vector<Vertex> vertex_of_simplex_;
  std::vector<std::vector<SimplexIndex>> flags_;
};

Subdivision barycentric_subdivision(ComplexPtr k);

std::string barycenter_id(const SimplicialComplex& k, SimplexIndex s);

/// A vertex assignment that sends every simplex of the domain onto a simplex
/// of the codomain.
class SimplicialMap {
 public:
  /// Throws Error(Simplicial) if some vertex is unassigned or some image is
  /// not a simplex of the codomain.
  SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<Vertex> assignment);

  static SimplicialMap identity(ComplexPtr k);

  const ComplexPtr& domain() const noexcept { return domain_; }
  const ComplexPtr& codomain() const noexcept { return codomain_; }
  Vertex operator()(Vertex v) const { return assignment_.at(v); }
  std::span<const Vertex> assignment() const noexcept { return assignment_; }
  /// Image simplex f(s) in the codomain.
  SimplexIndex image(SimplexIndex s) const { return image_.at(s); }

 private:
  ComplexPtr domain_;
  ComplexPtr codomain_;
  std::vector<Vertex> assignment_;
  std::vector<SimplexIndex> image_;
};

SimplicialMap validate_map(ComplexPtr domain, ComplexPtr codomain,
                           const std::map<VertexId, VertexId>& vertex_assignment);

/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// f' : K' -> L', sending the barycenter of s to the barycenter of f(s).
SimplicialMap induced_subdivided_map(const SimplicialMap& f, const Subdivision& domain,
                                     const Subdivision& codomain);

}  // namespace whitney
