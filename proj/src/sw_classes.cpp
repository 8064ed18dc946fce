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

#include "whitney/sw_classes.hpp"

#include "whitney/error.hpp"
#include "whitney/polar.hpp"

namespace whitney {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Classes, message); }

void require_degree(const SimplicialComplex& k, int i) {
  if (i < 0 || i > k.dimension())
    fail("degree " + std::to_string(i) + " outside [0, " + std::to_string(k.dimension()) + "]");
}

}  // namespace

Mod2Chain stiefel_chain(const Subdivision& sd, int i) {
  require_degree(*sd.base(), i);
  auto cells = sd.subdivided()->simplices_of_dimension(i);
  return Mod2Chain(sd.subdivided(), i, std::vector<SimplexIndex>(cells.begin(), cells.end()));
}

ConstructibleFunction lift_to_subdivision(const Subdivision& sd, const ConstructibleFunction& a) {
  if (!same_complex(sd.base(), a.base())) fail("lift: function is not on the subdivided complex");
  const SimplicialComplex& kp = *sd.subdivided();
  std::vector<std::int64_t> values(kp.size());
  for (SimplexIndex t = 0; t < kp.size(); ++t) values[t] = a[sd.carrier(t)];
  return ConstructibleFunction(sd.subdivided(), a.ring(), std::move(values));
}

Mod2Chain sw_representative(const Subdivision& sd, const ConstructibleFunction& a, int i) {
  require_degree(*sd.base(), i);
  if (auto check = check_euler_function(a); !check.euler)
    fail("not an Euler function: D(a) != a at {" + a.base()->label(check.offenders.front()) + "}");
  const ConstructibleFunction lifted = lift_to_subdivision(sd, a.reduced());
  return euler_singularity_chain(moment_map(sd, i), lifted, i);
}

Mod2Chain subdivision_chain_map(const Subdivision& sd, const Mod2Chain& c) {
  if (!same_complex(sd.base(), c.base())) fail("subdivision chain map: chain is not on the subdivided complex");
  const SimplicialComplex& k = *sd.base();
  const SimplicialComplex& kp = *sd.subdivided();
  const int i = c.dimension();
  std::vector<char> wanted(k.size(), 0);
  for (SimplexIndex s : c.support()) wanted[s] = 1;
  std::vector<SimplexIndex> out;
  for (SimplexIndex t : kp.simplices_of_dimension(i)) {
    if (!wanted[sd.carrier(t)]) continue;
    // i+1 flag members inside an i-simplex must have dimensions 0..i.
    if (k.dimension_of(sd.carrier(t)) == i) out.push_back(t);
  }
  return Mod2Chain(sd.subdivided(), i, std::move(out));
}

PushforwardAxiomCheck check_pushforward_axiom(const SimplicialMap& f, const ConstructibleFunction& a, int i) {
  if (!same_complex(f.domain(), a.base())) fail("pushforward axiom: function is not on the domain of the map");
  const ConstructibleFunction pushed_function = pushforward(f, a.reduced());
  if (auto check = check_euler_function(pushed_function); !check.euler)
    fail("pushforward axiom: f_* a is not Euler at {" + f.codomain()->label(check.offenders.front()) + "}");

  const Subdivision sd_domain(f.domain());
  const Subdivision sd_codomain(f.codomain());
  const SimplicialMap lifted = induced_subdivided_map(f, sd_domain, sd_codomain);

  Mod2Chain pushed = chain_pushforward(lifted, sw_representative(sd_domain, a, i));
  Mod2Chain representative = i <= f.codomain()->dimension() ? sw_representative(sd_codomain, pushed_function, i)
                                                           : Mod2Chain::zero(sd_codomain.subdivided(), i);
  const bool holds = homologous(pushed, representative);
  return {holds, std::move(pushed), std::move(representative)};
}

bool verify_pushforward_axiom(const SimplicialMap& f, const ConstructibleFunction& a, int i) {
  return check_pushforward_axiom(f, a, i).holds;
}

DegreeReport w0_degree(const Subdivision& sd, const ConstructibleFunction& a) {
  DegreeReport report;
  report.degree = static_cast<int>(sw_representative(sd, a, 0).size() % 2);
  report.chi_mod2 = static_cast<int>(chi(a.reduced()));
  return report;
}

}  // namespace whitney
