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

#include "whitney/euler_calculus.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "whitney/error.hpp"

namespace whitney {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Calculus, message); }

std::int64_t reduce(Ring ring, std::int64_t v) {
  if (ring == Ring::Integers) return v;
  return ((v % 2) + 2) % 2;
}

std::int64_t parity_sign(int d) { return d % 2 == 0 ? 1 : -1; }

void require_compatible(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  if (a.ring() != b.ring()) fail("functions have different rings");
  if (!same_complex(a.base(), b.base())) fail("functions live on different complexes");
}

}  // namespace

const char* to_string(Ring ring) noexcept { return ring == Ring::Integers ? "Z" : "Z2"; }

ConstructibleFunction::ConstructibleFunction(ComplexPtr base, Ring ring, std::vector<std::int64_t> values)
    : base_(std::move(base)), ring_(ring), values_(std::move(values)) {
  if (!base_) fail("function on a null complex");
  if (values_.size() != base_->size())
    fail("function has " + std::to_string(values_.size()) + " values for " + std::to_string(base_->size()) +
         " simplices");
  for (auto& v : values_) v = reduce(ring_, v);
}

ConstructibleFunction ConstructibleFunction::constant(ComplexPtr base, Ring ring, std::int64_t value) {
  const std::size_t n = base->size();
  return ConstructibleFunction(std::move(base), ring, std::vector<std::int64_t>(n, value));
}

ConstructibleFunction ConstructibleFunction::reduced() const { return ConstructibleFunction(base_, Ring::Mod2, values_); }

ConstructibleFunction ConstructibleFunction::negated() const {
  std::vector<std::int64_t> out(values_.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = -values_[s];
  return ConstructibleFunction(base_, ring_, std::move(out));
}

bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  return a.ring_ == b.ring_ && a.values_ == b.values_ && same_complex(a.base_, b.base_);
}

std::vector<SimplexIndex> face_closure(const SimplicialComplex& k, std::span<const SimplexIndex> generators) {
  std::vector<SimplexIndex> out;
  for (SimplexIndex g : generators) {
    if (g >= k.size()) fail("simplex index out of range");
    for (SimplexIndex f : k.faces(g)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConstructibleFunction indicator(ComplexPtr k, std::span<const SimplexIndex> closed_subcomplex, Ring ring) {
  std::vector<std::int64_t> values(k->size(), 0);
  for (SimplexIndex s : closed_subcomplex) {
    if (s >= k->size()) fail("simplex index out of range");
    values[s] = 1;
  }
  for (SimplexIndex s : closed_subcomplex)
    for (SimplexIndex f : k->faces(s))
      if (!values[f]) fail("not face-closed: face {" + k->label(f) + "} of {" + k->label(s) + "} is missing");
  return ConstructibleFunction(std::move(k), ring, std::move(values));
}

ConstructibleFunction indicator_sum(ComplexPtr k, Ring ring, std::span<const IndicatorTerm> terms) {
  std::vector<std::int64_t> values(k->size(), 0);
  for (const auto& term : terms)
    for (SimplexIndex s : face_closure(*k, term.generators)) values[s] += term.coefficient;
  return ConstructibleFunction(std::move(k), ring, std::move(values));
}

ConstructibleFunction combine(CombineOp op, const ConstructibleFunction& a, const ConstructibleFunction& b) {
  require_compatible(a, b);
  std::vector<std::int64_t> out(a.values().size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = op == CombineOp::Add ? a[s] + b[s] : a[s] * b[s];
  return ConstructibleFunction(a.base(), a.ring(), std::move(out));
}

ConstructibleFunction operator+(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  return combine(CombineOp::Add, a, b);
}

ConstructibleFunction operator-(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  return combine(CombineOp::Add, a, b.negated());
}

ConstructibleFunction operator*(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  return combine(CombineOp::Multiply, a, b);
}

std::int64_t chi(const ConstructibleFunction& a) {
  const SimplicialComplex& k = *a.base();
  std::int64_t total = 0;
  for (SimplexIndex s = 0; s < k.size(); ++s) total += parity_sign(k.dimension_of(s)) * a[s];
  return reduce(a.ring(), total);
}

ConstructibleFunction dual(const ConstructibleFunction& a) {
  const SimplicialComplex& k = *a.base();
  std::vector<std::int64_t> out(k.size(), 0);
  detail::parallel_for(k.size(), [&](std::size_t s) {
    std::int64_t total = 0;
    for (SimplexIndex t : k.cofaces(s)) total += parity_sign(k.dimension_of(t)) * a[t];
    out[s] = total;
  });
  return ConstructibleFunction(a.base(), a.ring(), std::move(out));
}

ConstructibleFunction pushforward(const SimplicialMap& f, const ConstructibleFunction& a) {
  if (!same_complex(f.domain(), a.base())) fail("pushforward: function is not on the domain of the map");
  const SimplicialComplex& k = *f.domain();
  const SimplicialComplex& l = *f.codomain();
  std::vector<std::int64_t> out(l.size(), 0);
  for (SimplexIndex t = 0; t < k.size(); ++t) {
    const SimplexIndex s = f.image(t);
    out[s] += parity_sign(k.dimension_of(t) - l.dimension_of(s)) * a[t];
  }
  return ConstructibleFunction(f.codomain(), a.ring(), std::move(out));
}

ConstructibleFunction pullback(const SimplicialMap& f, const ConstructibleFunction& b) {
  if (!same_complex(f.codomain(), b.base())) fail("pullback: function is not on the codomain of the map");
  const SimplicialComplex& k = *f.domain();
  std::vector<std::int64_t> out(k.size(), 0);
  for (SimplexIndex t = 0; t < k.size(); ++t) out[t] = b[f.image(t)];
  return ConstructibleFunction(f.domain(), b.ring(), std::move(out));
}

std::int64_t fiber_chi_oracle(const SimplicialMap& f, Vertex q) {
  if (q >= f.codomain()->vertex_count()) fail("fiber oracle: unknown codomain vertex");
  const SimplicialComplex& k = *f.domain();
  std::vector<SimplexIndex> fiber;
  for (SimplexIndex t = 0; t < k.size(); ++t) {
    const auto verts = k.simplex(t).vertices();
    if (std::all_of(verts.begin(), verts.end(), [&](Vertex v) { return f(v) == q; })) fiber.push_back(t);
  }
  return euler_characteristic(k.subcomplex(fiber));
}

EulerCheck check_euler_function(const ConstructibleFunction& a) {
  const ConstructibleFunction mod2 = a.reduced();
  const ConstructibleFunction d = dual(mod2);
  EulerCheck check;
  for (SimplexIndex s = 0; s < mod2.values().size(); ++s)
    if (d[s] != mod2[s]) check.offenders.push_back(s);
  check.euler = check.offenders.empty();
  return check;
}

bool is_euler_function(const ConstructibleFunction& a) { return check_euler_function(a).euler; }

EulerCheck check_euler_space(const ComplexPtr& k) {
  return check_euler_function(ConstructibleFunction::constant(k, Ring::Mod2, 1));
}

bool is_euler_space(const ComplexPtr& k) { return check_euler_space(k).euler; }

}  // namespace whitney
