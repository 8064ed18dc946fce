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

#include "whitney/euler_calculus.hpp"
#include "whitney/homology.hpp"
#include "whitney/simplicial.hpp"

namespace whitney {

/// s_i(K): every i-simplex of K'.
Mod2Chain stiefel_chain(const Subdivision& sd, int i);

/// a on K read on K': each simplex of K' takes the value of its carrier.
ConstructibleFunction lift_to_subdivision(const Subdivision& sd, const ConstructibleFunction& a);

/// Representative of w_i(a) on K' for an Euler function a on K: the Euler
/// singularity chain of the moment map, weighted by a. For a = 1 it is
/// exactly s_i(K). Throws Error(Classes) if a is not Euler or i is outside
/// [0, dim K].
Mod2Chain sw_representative(const Subdivision& sd, const ConstructibleFunction& a, int i);

/// sd_#: an i-simplex of K goes to the (i+1)! simplices of K' built from one
/// face of each dimension 0..i inside it.
Mod2Chain subdivision_chain_map(const Subdivision& sd, const Mod2Chain& c);

struct PushforwardAxiomCheck {
  bool holds = false;
  Mod2Chain pushed;          // f'_# w_i(a), on L'
  Mod2Chain representative;  // w_i(f_* a), on L'
};

/// Compares f'_# sw_representative(a, i) with sw_representative(f_* a, i)
/// in the homology of L'.
PushforwardAxiomCheck check_pushforward_axiom(const SimplicialMap& f, const ConstructibleFunction& a, int i);
bool verify_pushforward_axiom(const SimplicialMap& f, const ConstructibleFunction& a, int i);

struct DegreeReport {
  int degree = 0;    // augmentation of w_0(a)
  int chi_mod2 = 0;  // chi(a) mod 2
};

DegreeReport w0_degree(const Subdivision& sd, const ConstructibleFunction& a);

}  // namespace whitney
