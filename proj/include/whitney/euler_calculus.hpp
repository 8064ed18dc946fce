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
#include <span>
#include <vector>

#include "whitney/simplicial.hpp"

namespace whitney {

enum class Ring { Integers, Mod2 };

const char* to_string(Ring ring) noexcept;

/// A function constant on the open simplices of a complex, with values in
/// Z or Z/2Z. Mod 2 values are stored as 0 or 1.
class ConstructibleFunction {
 public:
  ConstructibleFunction(ComplexPtr base, Ring ring, std::vector<std::int64_t> values);

  static ConstructibleFunction constant(ComplexPtr base, Ring ring, std::int64_t value);
  static ConstructibleFunction zero(ComplexPtr base, Ring ring) { return constant(std::move(base), ring, 0); }

  const ComplexPtr& base() const noexcept { return base_; }
  Ring ring() const noexcept { return ring_; }
  std::int64_t operator[](SimplexIndex s) const { return values_.at(s); }
  std::span<const std::int64_t> values() const noexcept { return values_; }

  /// Reduction to Z/2Z (identity on mod 2 functions).
  ConstructibleFunction reduced() const;
  /// Value -a (identity on mod 2 functions).
  ConstructibleFunction negated() const;

  friend bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b);

 private:
  ComplexPtr base_;
  Ring ring_;
  std::vector<std::int64_t> values_;
};

/// One summand n * 1_X of an indicator sum; X is the face closure of `generators`.
struct IndicatorTerm {
  std::int64_t coefficient = 1;
  std::vector<SimplexIndex> generators;
};

/// 1_X for a face-closed simplex set X. Throws Error(Calculus) naming a
/// missing face otherwise.
ConstructibleFunction indicator(ComplexPtr k, std::span<const SimplexIndex> closed_subcomplex,
                                Ring ring = Ring::Integers);

/// Faces of `generators`, sorted.
std::vector<SimplexIndex> face_closure(const SimplicialComplex& k, std::span<const SimplexIndex> generators);

ConstructibleFunction indicator_sum(ComplexPtr k, Ring ring, std::span<const IndicatorTerm> terms);

enum class CombineOp { Add, Multiply };

ConstructibleFunction combine(CombineOp op, const ConstructibleFunction& a, const ConstructibleFunction& b);
ConstructibleFunction operator+(const ConstructibleFunction& a, const ConstructibleFunction& b);
ConstructibleFunction operator-(const ConstructibleFunction& a, const ConstructibleFunction& b);
ConstructibleFunction operator*(const ConstructibleFunction& a, const ConstructibleFunction& b);

/// Euler integral: sum over simplices of (-1)^dim * value (mod 2: sum of values).
std::int64_t chi(const ConstructibleFunction& a);

/// (Da)(s) = sum over cofaces t of s of (-1)^dim(t) a(t).
ConstructibleFunction dual(const ConstructibleFunction& a);

/// (f_* a)(s) = sum over t with f(t) = s of (-1)^(dim t - dim s) a(t),
/// the Euler integral of a over the fibre of an interior point of s.
ConstructibleFunction pushforward(const SimplicialMap& f, const ConstructibleFunction& a);

/// (f^* b)(t) = b(f(t)).
ConstructibleFunction pullback(const SimplicialMap& f, const ConstructibleFunction& b);

/// Euler characteristic of the subcomplex of domain simplices all of whose
/// vertices map to q. Independent of the pushforward formula.
std::int64_t fiber_chi_oracle(const SimplicialMap& f, Vertex q);

struct EulerCheck {
  bool euler = true;
  /// Simplices where Da != a mod 2, in canonical order.
  std::vector<SimplexIndex> offenders;
};

/// D a = a mod 2, i.e. every simplex has an even number of proper cofaces
/// where a is odd.
EulerCheck check_euler_function(const ConstructibleFunction& a);
bool is_euler_function(const ConstructibleFunction& a);

/// Euler-ness of the constant function 1: every link has even Euler
/// characteristic.
EulerCheck check_euler_space(const ComplexPtr& k);
bool is_euler_space(const ComplexPtr& k);

}  // namespace whitney
