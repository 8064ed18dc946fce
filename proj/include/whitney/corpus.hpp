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
#include <string>
#include <vector>

#include "whitney/simplicial.hpp"

namespace whitney::corpus {

struct Entry {
  std::string name;
  std::string description;
  bool euler;  // documented Euler-space status
  ComplexPtr complex;
};

/// point, interval, s1_3, s1_6, boundary_triangle, boundary_tetrahedron,
/// closed_triangle, rp2_6, torus_7, pinched_torus, sphere_wedge, bowtie.
const std::vector<Entry>& bundled();
/// Throws Error(Usage) for an unknown name.
const Entry& get(const std::string& name);

ComplexPtr full_simplex(int dimension, const std::string& prefix = "t");
/// Cone over k with the given apex id.
ComplexPtr cone(const SimplicialComplex& k, const std::string& apex);
/// Vertices at the origin and the unit vectors of R^(N-1) (N = vertex count,
/// at least R^1), so every simplex is affinely independent.
ComplexPtr embed_on_simplex_vertices(const SimplicialComplex& k);

struct NamedMap {
  std::string name;
  SimplicialMap map;
};

/// identity (s1_3, rp2_6), double_cover (s1_6 -> s1_3), fold (square ->
/// path), collapse (s1_3 -> point), edge_collapse (interval -> point),
/// cone_inclusion (s1_3 -> cone), rp2_coloring (rp2_6 -> closed triangle).
const std::vector<NamedMap>& map_suite();

}  // namespace whitney::corpus
