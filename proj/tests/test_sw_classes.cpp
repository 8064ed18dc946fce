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

#include "support.hpp"

using namespace support;

namespace {

const SimplicialMap& suite_map(const std::string& name) {
  for (const auto& m : corpus::map_suite())
    if (m.name == name) return m.map;
  FAIL("unknown suite map " << name);
  throw std::logic_error(name);
}

// S^1 on 1,2,3 plus an isolated vertex p.
ComplexPtr circle_and_point() { return complex({"1", "2", "3", "p"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}, {"p"}}); }

}  // namespace

TEST_CASE("stiefel chain") {
  const Subdivision s1(bundled("s1_3"));
  const auto c1 = stiefel_chain(s1, 1);
  CHECK(c1.size() == 6);
  CHECK(is_cycle(c1));
  const auto c0 = stiefel_chain(s1, 0);
  CHECK(c0.size() == 6);
  CHECK(c0.size() % 2 == 0);

  const Subdivision rp2(bundled("rp2_6"));
  CHECK(stiefel_chain(rp2, 2).size() == 60);
  CHECK(stiefel_chain(rp2, 1).size() == rp2.subdivided()->count(1));

  CHECK(error_kind([&] { stiefel_chain(s1, 2); }) == ErrorKind::Classes);
  CHECK(error_kind([&] { stiefel_chain(s1, -1); }) == ErrorKind::Classes);
}

TEST_CASE("stiefel chains are cycles on Euler spaces") {
  for (const auto& e : corpus::bundled()) {
    const Subdivision sd(e.complex);
    for (int i = 0; i <= e.complex->dimension(); ++i) {
      CAPTURE(e.name);
      CAPTURE(i);
      if (e.euler) CHECK(is_cycle(stiefel_chain(sd, i)));
    }
  }
  const Subdivision tri(bundled("closed_triangle"));
  CHECK(!is_cycle(stiefel_chain(tri, 1)));
}

TEST_CASE("sw representative") {
  const Subdivision s1(bundled("s1_3"));
  CHECK(sw_representative(s1, one(s1.base()), 1) == stiefel_chain(s1, 1));

  const auto k = circle_and_point();
  const Subdivision sd(k);
  const auto p = indicator_of(k, {{"p"}}, Ring::Mod2);
  const auto rp = sw_representative(sd, p, 0);
  REQUIRE(rp.size() == 1);
  CHECK(sd.subdivided()->label(rp.support()[0]) == "b(p)");

  const auto circle = indicator_of(k, {{"1", "2"}, {"2", "3"}, {"1", "3"}}, Ring::Mod2);
  CHECK(sw_representative(sd, circle + p, 0) == sw_representative(sd, circle, 0) + rp);
  CHECK(sw_representative(sd, one(k), 0) == stiefel_chain(sd, 0));

  const Subdivision tri(bundled("closed_triangle"));
  CHECK(error_kind([&] { sw_representative(tri, one(tri.base()), 0); }) == ErrorKind::Classes);
  CHECK(error_kind([&] { sw_representative(s1, one(s1.base()), 2); }) == ErrorKind::Classes);
}

TEST_CASE("normalization and top class") {
  for (const auto& e : corpus::bundled()) {
    if (!e.euler) continue;
    CAPTURE(e.name);
    const Subdivision sd(e.complex);
    for (int i = 0; i <= e.complex->dimension(); ++i)
      CHECK(sw_representative(sd, one(e.complex), i) == stiefel_chain(sd, i));
    if (e.complex->is_pure()) {
      const int d = e.complex->dimension();
      CHECK(stiefel_chain(sd, d) == subdivision_chain_map(sd, fundamental_cycle(e.complex)));
    }
  }
}

TEST_CASE("subdivision chain map") {
  const auto edge = bundled("interval");
  const Subdivision sd(edge);
  const auto e = subdivision_chain_map(sd, chain(edge, 1, {{"1", "2"}}));
  CHECK(e.size() == 2);
  CHECK(e.simplex_ids() == std::vector<Ids>{{"b(1)", "b(1,2)"}, {"b(1,2)", "b(2)"}});

  const Subdivision s1(bundled("s1_3"));
  CHECK(subdivision_chain_map(s1, fundamental_cycle(s1.base())) == stiefel_chain(s1, 1));
  CHECK(subdivision_chain_map(s1, Mod2Chain::zero(s1.base(), 1)).empty());

  const Subdivision rp2(bundled("rp2_6"));
  for (int d = 1; d <= 2; ++d) {
    std::vector<SimplexIndex> all(rp2.base()->simplices_of_dimension(d).begin(),
                                  rp2.base()->simplices_of_dimension(d).end());
    const Mod2Chain c(rp2.base(), d, all);
    CHECK(boundary(subdivision_chain_map(rp2, c)) == subdivision_chain_map(rp2, boundary(c)));
  }
}

TEST_CASE("subdivision stability") {
  for (const auto& name : {"s1_3", "boundary_triangle", "rp2_6", "pinched_torus"}) {
    CAPTURE(name);
    const Subdivision once(bundled(name));
    const Subdivision twice(once.subdivided());
    for (int i = 0; i <= once.base()->dimension(); ++i)
      CHECK(homologous(subdivision_chain_map(twice, stiefel_chain(once, i)), stiefel_chain(twice, i)));
  }
}

TEST_CASE("pushforward axiom") {
  const auto& id = suite_map("identity_rp2_6");
  for (int i = 0; i <= 2; ++i) CHECK(verify_pushforward_axiom(id, one(id.domain()), i));

  const auto& cover = suite_map("double_cover");
  const auto c = check_pushforward_axiom(cover, one(cover.domain()), 1);
  CHECK(c.holds);
  CHECK(c.representative.empty());
  CHECK(is_boundary(c.pushed).bounds);

  const auto& collapse = suite_map("collapse");
  const auto z = check_pushforward_axiom(collapse, one(collapse.domain()), 0);
  CHECK(z.holds);
  CHECK(z.pushed.size() % 2 == 0);

  for (const auto& m : corpus::map_suite()) {
    if (!is_euler_space(m.map.domain())) continue;
    CAPTURE(m.name);
    for (int i = 0; i <= m.map.domain()->dimension(); ++i)
      CHECK(verify_pushforward_axiom(m.map, one(m.map.domain()), i));
  }
}

TEST_CASE("w0 degree") {
  CHECK(w0_degree(Subdivision(bundled("rp2_6")), one(bundled("rp2_6"))).degree == 1);
  CHECK(w0_degree(Subdivision(bundled("torus_7")), one(bundled("torus_7"))).degree == 0);
  CHECK(w0_degree(Subdivision(bundled("point")), one(bundled("point"))).degree == 1);
  const auto pinch = w0_degree(Subdivision(bundled("pinched_torus")), one(bundled("pinched_torus")));
  CHECK(pinch.degree == 1);
  CHECK(pinch.chi_mod2 == 1);
  for (const auto& e : corpus::bundled()) {
    if (!e.euler) continue;
    const auto r = w0_degree(Subdivision(e.complex), one(e.complex));
    CHECK(r.degree == r.chi_mod2);
  }
}

TEST_CASE("classical values") {
  const Subdivision rp2(bundled("rp2_6"));
  CHECK(!is_boundary(stiefel_chain(rp2, 1)).bounds);
  CHECK(!is_boundary(stiefel_chain(rp2, 2)).bounds);
  const Subdivision torus(bundled("torus_7"));
  CHECK(is_boundary(stiefel_chain(torus, 1)).bounds);
  const Subdivision tet(bundled("boundary_tetrahedron"));
  CHECK(is_boundary(stiefel_chain(tet, 1)).bounds);
  CHECK(!is_boundary(stiefel_chain(tet, 2)).bounds);
}
