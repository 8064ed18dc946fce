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

// S^1_3 with heights 0, 1, 2 on vertices 1, 2, 3.
AffineVertexMap heights() {
  return AffineVertexMap::from_ids(bundled("s1_3"), 1, {{"1", point({0})}, {"2", point({1})}, {"3", point({2})}});
}

// Boundary of the tetrahedron with edge {1,2} on y = 0 and both link
// vertices above it.
AffineVertexMap tetrahedron_in_plane() {
  const auto k = complex({"1", "2", "3", "4"}, {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
  return AffineVertexMap::from_ids(
      k, 2, {{"1", point({0, 0})}, {"2", point({1, 0})}, {"3", point({0, 1})}, {"4", point({3, 2})}});
}

std::vector<Point> standard_basis(std::size_t n, std::size_t m) {
  std::vector<Point> b(m, Point(n, Rational(0)));
  for (std::size_t j = 0; j < m; ++j) b[j][j] = 1;
  return b;
}

}  // namespace

TEST_CASE("nondegeneracy") {
  const auto s1 = bundled("s1_3");
  const auto flat = AffineVertexMap::from_ids(s1, 1, {{"1", point({0})}, {"2", point({0})}, {"3", point({0})}});
  const auto r = check_nondegenerate(flat, 0);
  CHECK(!r.nondegenerate);
  CHECK(r.offending.has_value());
  CHECK(is_nondegenerate(heights(), 0));

  const Subdivision sd(s1);
  CHECK(is_nondegenerate(moment_map(sd, 1), 1));
  CHECK(is_nondegenerate(moment_map(sd, 0), 0));

  CHECK(error_kind([&] { check_nondegenerate(heights(), 1); }) == ErrorKind::Polar);
}

TEST_CASE("moment map violates star general position") {
  const Subdivision sd(bundled("boundary_triangle"));
  const auto f = moment_map(sd, 0);
  CHECK(is_nondegenerate(f, 0));
  CHECK(!check_star_general_position(f, 0).nondegenerate);
  CHECK(check_rank_generic(f).nondegenerate);
}

TEST_CASE("half link") {
  const auto f = heights();
  const auto& k = f.domain();
  const auto a = one(k, Ring::Integers);
  CHECK(half_link_chi(a, at(k, {"3"}), f, Side::Positive) == 0);
  CHECK(half_link_chi(a, at(k, {"2"}), f, Side::Positive) == 1);
  CHECK(half_link_chi(a, at(k, {"1"}), f, Side::Positive) == 2);
  CHECK(half_link_chi(a, at(k, {"1"}), f, Side::Negative) == 0);

  const auto g = tetrahedron_in_plane();
  const auto r = half_link(one(g.domain(), Ring::Integers), at(g.domain(), {"1", "2"}), g);
  CHECK(r.chi_plus == 2);
  CHECK(r.chi_minus == 0);
  CHECK(r.chi_plus % 2 == r.chi_minus % 2);
  CHECK(r.plane.normal == point({0, 1}));
  CHECK(r.plane.offset == Rational(0));
  CHECK(r.cells.size() == 2);
  for (const auto& c : r.cells) {
    CHECK(c.positive);
    CHECK(!c.negative);
    CHECK(!c.slice);
  }

  const auto flat = AffineVertexMap::from_ids(k, 1, {{"1", point({0})}, {"2", point({0})}, {"3", point({1})}});
  CHECK(error_kind([&] { half_link(a, at(k, {"1"}), flat); }) == ErrorKind::Polar);
}

TEST_CASE("singularity chain") {
  const auto f = heights();
  const auto sigma = euler_singularity_chain(f, one(f.domain()), 0);
  CHECK(sigma.simplex_ids() == std::vector<Ids>{{"1"}, {"3"}});
  CHECK(sigma.size() % 2 == 0);

  const auto line = AffineVertexMap::from_ids(bundled("s1_3"), 2,
                                              {{"1", point({0, 0})}, {"2", point({1, 0})}, {"3", point({0, 1})}});
  CHECK(euler_singularity_chain(line, one(line.domain()), 1).size() == 3);

  // A vertex indicator sees only its own vertex.
  const auto k = complex({"1", "2", "3", "p"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}, {"p"}});
  const auto g = AffineVertexMap::from_ids(
      k, 1, {{"1", point({0})}, {"2", point({1})}, {"3", point({2})}, {"p", point({1})}});
  const auto p = indicator_of(k, {{"p"}}, Ring::Mod2);
  CHECK(euler_singularity_chain(g, p, 0).simplex_ids() == std::vector<Ids>{{"p"}});
  const auto two = indicator_of(k, {{"2"}}, Ring::Mod2);
  CHECK(euler_singularity_chain(g, two, 0).simplex_ids() == std::vector<Ids>{{"2"}});

  const auto tri = bundled("closed_triangle");
  const auto h = AffineVertexMap::from_ids(tri, 1, {{"1", point({0})}, {"2", point({1})}, {"3", point({2})}});
  CHECK(error_kind([&] { euler_singularity_chain(h, one(tri), 0); }) == ErrorKind::Polar);
  const auto flat = AffineVertexMap::from_ids(bundled("s1_3"), 1,
                                              {{"1", point({0})}, {"2", point({0})}, {"3", point({0})}});
  CHECK(error_kind([&] { euler_singularity_chain(flat, one(flat.domain()), 0); }) == ErrorKind::Polar);
}

TEST_CASE("moment map") {
  const auto tri = bundled("closed_triangle");
  const Subdivision sd(tri);
  const auto f = moment_map(sd, 1);
  const auto& kp = sd.subdivided();
  CHECK(f.target_dimension() == 2);
  CHECK(f.image(*kp->find_vertex("b(1)")) == point({0, 0}));
  CHECK(f.image(*kp->find_vertex("b(1,2)")) == point({1, 1}));
  CHECK(f.image(*kp->find_vertex("b(1,2,3)")) == point({2, 4}));
  const auto f0 = moment_map(sd, 0);
  CHECK(f0.image(*kp->find_vertex("b(1,2,3)")) == point({2}));
  const auto f2 = moment_map(sd, 2);
  CHECK(f2.image(*kp->find_vertex("b(1,2,3)")) == point({2, 4, 8}));

  for (const auto& e : corpus::bundled()) {
    if (!e.euler) continue;
    CAPTURE(e.name);
    const Subdivision s(e.complex);
    for (int i = 0; i <= e.complex->dimension(); ++i) {
      const auto m = moment_map(s, i);
      CHECK(is_nondegenerate(m, i));
      CHECK(euler_singularity_chain(m, one(s.subdivided()), i) == stiefel_chain(s, i));
    }
  }
}

TEST_CASE("projection map") {
  const auto k = share(bundled("interval")->with_coordinates({point({3, 7}), point({5, -1})}));
  const auto h = projection_map(k, {point({1, 0})});
  CHECK(h.target_dimension() == 1);
  CHECK(h.image(0) == point({3}));
  CHECK(h.image(1) == point({5}));
  const auto id = projection_map(k, standard_basis(2, 2));
  CHECK(id.images() == *k->coordinates());

  CHECK(error_kind([&] { projection_map(bundled("interval"), {point({1})}); }) == ErrorKind::Polar);
  CHECK(error_kind([&] { projection_map(k, {point({1, 2}), point({2, 4})}); }) == ErrorKind::Polar);
}

TEST_CASE("same plane gives the same chain") {
  const auto x = corpus::embed_on_simplex_vertices(*bundled("rp2_6"));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto b = sample_generic_subspace(x, 2, seed);
    const std::vector<Point> b2{{b[0][0] + b[1][0], b[0][1] + b[1][1], b[0][2] + b[1][2], b[0][3] + b[1][3],
                                 b[0][4] + b[1][4]},
                                b[1]};
    const auto f = projection_map(x, b);
    const auto g = projection_map(x, b2);
    REQUIRE(is_nondegenerate(g, 1));
    const auto sf = euler_singularity_chain(f, one(x), 1);
    CHECK(sf == euler_singularity_chain(g, one(x), 1));
    CHECK(is_cycle(sf));
    CHECK(!is_boundary(sf).bounds);
  }
}

TEST_CASE("sampler") {
  const auto circle = share(bundled("s1_3")->with_coordinates({point({0, 0}), point({1, 0}), point({0, 1})}));
  const auto c = sample_generic_subspace(circle, 1, 11);
  REQUIRE(c.size() == 1);
  CHECK(c[0] != Point(2, Rational(0)));
  CHECK(is_nondegenerate(projection_map(circle, c), 0));
  CHECK(sample_generic_subspace(circle, 1, 11) == c);

  const auto line = share(bundled("interval")->with_coordinates({point({2}), point({5})}));
  CHECK(sample_generic_subspace(line, 1, 4) == std::vector<Point>{point({1})});

  CHECK(error_kind([&] { sample_generic_subspace(line, 2, 4); }) == ErrorKind::Polar);
  CHECK(error_kind([&] { sample_generic_subspace(bundled("s1_3"), 1, 4); }) == ErrorKind::Polar);

  CHECK(error_message([&] { sample_generic_subspace(circle, 1, 4, 0); }).find("after 0 attempts") != std::string::npos);
}

TEST_CASE("restriction consistency") {
  const auto x = corpus::embed_on_simplex_vertices(*bundled("rp2_6"));
  const auto f = projection_map(x, sample_generic_subspace(x, 1, 9));
  std::vector<SimplexIndex> gens;
  for (const auto& s : std::vector<Ids>{{"1", "2"}, {"2", "3"}, {"1", "3"}}) gens.push_back(at(x, s));
  const auto closed = face_closure(*x, gens);
  const auto sub = share(x->subcomplex(closed));
  const auto in_k = euler_singularity_chain(f, indicator(x, closed, Ring::Mod2), 0);
  const auto in_x = euler_singularity_chain(f.restricted_to(sub), one(sub), 0);
  std::vector<Ids> a = in_k.simplex_ids(), b = in_x.simplex_ids();
  CHECK(a == b);
  CHECK(a.size() % 2 == 0);
}

TEST_CASE("parity at every simplex") {
  for (const auto& e : corpus::bundled()) {
    if (!e.euler) continue;
    const Subdivision s(e.complex);
    for (int i = 0; i <= e.complex->dimension(); ++i) {
      std::vector<HalfLinkReport> reports;
      euler_singularity_chain(moment_map(s, i), one(s.subdivided()), i, &reports);
      for (const auto& r : reports) CHECK((r.chi_plus - r.chi_minus) % 2 == 0);
    }
  }
}
