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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "whitney/corpus.hpp"
#include "whitney/error.hpp"
#include "whitney/euler_calculus.hpp"
#include "whitney/homology.hpp"
#include "whitney/polar.hpp"
#include "whitney/simplicial.hpp"
#include "whitney/sw_classes.hpp"

namespace support {

using namespace whitney;
using Ids = std::vector<VertexId>;

inline ComplexPtr complex(const Ids& vertices, const std::vector<Ids>& maximal) {
  return share(SimplicialComplex::build(vertices, maximal));
}

inline ComplexPtr bundled(const std::string& name) { return corpus::get(name).complex; }

inline SimplexIndex at(const ComplexPtr& k, const Ids& ids) {
  const auto s = k->find_ids(ids);
  REQUIRE_MESSAGE(s.has_value(), "missing simplex");
  return *s;
}

inline Mod2Chain chain(const ComplexPtr& k, int dim, const std::vector<Ids>& simplices) {
  return Mod2Chain::from_ids(k, dim, simplices);
}

inline std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

inline Point point(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

inline ConstructibleFunction one(const ComplexPtr& k, Ring ring = Ring::Mod2) {
  return ConstructibleFunction::constant(k, ring, 1);
}

// 1_X for the face closure of the given simplices.
inline ConstructibleFunction indicator_of(const ComplexPtr& k, const std::vector<Ids>& generators,
                                          Ring ring = Ring::Integers) {
  std::vector<SimplexIndex> g;
  for (const auto& s : generators) g.push_back(at(k, s));
  return indicator(k, face_closure(*k, g), ring);
}

// Cylinder S^1 x I on vertices 1,2,3 (bottom) and 4,5,6 (top).
inline ComplexPtr cylinder() {
  return complex({"1", "2", "3", "4", "5", "6"},
                 {{"1", "2", "4"}, {"2", "4", "5"}, {"2", "3", "5"}, {"3", "5", "6"}, {"1", "3", "6"}, {"1", "4", "6"}});
}

}  // namespace support
