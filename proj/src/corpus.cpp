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

#include "whitney/corpus.hpp"

#include <algorithm>
#include <map>

#include "whitney/error.hpp"

namespace whitney::corpus {

namespace {

using Ids = std::vector<VertexId>;

ComplexPtr make(const Ids& vertices, const std::vector<Ids>& maximal) {
  return share(SimplicialComplex::build(vertices, maximal));
}

Ids numbered(int from, int to) {
  Ids ids;
  for (int v = from; v <= to; ++v) ids.push_back(std::to_string(v));
  return ids;
}

ComplexPtr cycle(int n) {
  std::vector<Ids> edges;
  for (int v = 1; v <= n; ++v) edges.push_back({std::to_string(v), std::to_string(v % n + 1)});
  return make(numbered(1, n), edges);
}

ComplexPtr boundary_of_tetrahedron(const Ids& v) {
  return make(v, {{v[0], v[1], v[2]}, {v[0], v[1], v[3]}, {v[0], v[2], v[3]}, {v[1], v[2], v[3]}});
}

ComplexPtr rp2() {
  return make(numbered(1, 6), {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "6", "2"},
                               {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"}, {"6", "2", "4"}});
}

ComplexPtr torus7() {
  std::vector<Ids> triangles;
  for (int v = 0; v < 7; ++v) {
    triangles.push_back({std::to_string(v), std::to_string((v + 1) % 7), std::to_string((v + 3) % 7)});
    triangles.push_back({std::to_string(v), std::to_string((v + 2) % 7), std::to_string((v + 3) % 7)});
  }
  return make(numbered(0, 6), triangles);
}

// 6x6 grid torus with the vertices at (0,0) and (3,3) identified. They are
// three steps apart, so the quotient is still a simplicial complex and the
// link of the pinch point is two disjoint hexagons.
ComplexPtr pinched_torus() {
  auto id = [](int a, int b) {
    a = ((a % 6) + 6) % 6;
    b = ((b % 6) + 6) % 6;
    if (a == 3 && b == 3) a = b = 0;
    return "v" + std::to_string(a) + std::to_string(b);
  };
  std::vector<Ids> triangles;
  Ids vertices;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (!(a == 3 && b == 3)) vertices.push_back(id(a, b));
      triangles.push_back({id(a, b), id(a + 1, b), id(a + 1, b + 1)});
      triangles.push_back({id(a, b), id(a, b + 1), id(a + 1, b + 1)});
    }
  }
  return make(vertices, triangles);
}

std::vector<Entry> build_corpus() {
  std::vector<Entry> out;
  out.push_back({"point", "one vertex", true, make({"1"}, {})});
  out.push_back({"interval", "closed edge; endpoints have one-point links", false, make({"1", "2"}, {{"1", "2"}})});
  out.push_back({"s1_3", "circle on three vertices", true, cycle(3)});
  out.push_back({"s1_6", "circle on six vertices", true, cycle(6)});
  out.push_back({"boundary_triangle", "boundary of the 2-simplex", true,
                 make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})});
  out.push_back({"boundary_tetrahedron", "boundary of the 3-simplex (2-sphere)", true,
                 boundary_of_tetrahedron({"1", "2", "3", "4"})});
  out.push_back({"closed_triangle", "closed 2-simplex; every boundary simplex has a contractible link", false,
                 make({"1", "2", "3"}, {{"1", "2", "3"}})});
  out.push_back({"rp2_6", "six-vertex real projective plane", true, rp2()});
  out.push_back({"torus_7", "seven-vertex torus", true, torus7()});
  out.push_back({"pinched_torus", "torus with two vertices identified; chi = -1", true, pinched_torus()});
  {
    std::vector<Ids> faces;
    for (const Ids& q : {Ids{"1", "2", "3", "4"}, Ids{"4", "5", "6", "7"}})
      for (int skip = 0; skip < 4; ++skip) {
        Ids t;
        for (int j = 0; j < 4; ++j)
          if (j != skip) t.push_back(q[static_cast<std::size_t>(j)]);
        faces.push_back(t);
      }
    out.push_back({"sphere_wedge", "two 2-spheres joined at vertex 4", true, make(numbered(1, 7), faces)});
  }
  out.push_back({"bowtie", "two closed triangles joined at vertex 3; Euler at the joint, not at the boundary", false,
                 make(numbered(1, 5), {{"1", "2", "3"}, {"3", "4", "5"}})});
  return out;
}

}  // namespace

const std::vector<Entry>& bundled() {
  static const std::vector<Entry> entries = build_corpus();
  return entries;
}

const Entry& get(const std::string& name) {
  for (const auto& e : bundled())
    if (e.name == name) return e;
  throw Error(ErrorKind::Usage, "unknown corpus complex \"" + name + "\"");
}

ComplexPtr full_simplex(int dimension, const std::string& prefix) {
  Ids ids;
  for (int v = 0; v <= dimension; ++v) ids.push_back(prefix + std::to_string(v));
  return make(ids, {ids});
}

ComplexPtr cone(const SimplicialComplex& k, const std::string& apex) {
  if (k.find_vertex(apex)) throw Error(ErrorKind::Simplicial, "cone apex \"" + apex + "\" is already a vertex");
  Ids vertices(k.vertex_ids().begin(), k.vertex_ids().end());
  vertices.push_back(apex);
  std::vector<Ids> maximal;
  for (SimplexIndex s : k.maximal_simplices()) {
    Ids ids = k.simplex_ids(s);
    ids.push_back(apex);
    maximal.push_back(std::move(ids));
  }
  return make(vertices, maximal);
}

ComplexPtr embed_on_simplex_vertices(const SimplicialComplex& k) {
  const std::size_t n = std::max<std::size_t>(1, k.vertex_count() - 1);
  std::vector<Point> coords;
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    Point p(n, Rational(0));
    if (v > 0) p[v - 1] = 1;
    coords.push_back(std::move(p));
  }
  return share(k.with_coordinates(std::move(coords)));
}

namespace {

std::vector<NamedMap> build_maps() {
  std::vector<NamedMap> out;
  auto add = [&](const std::string& name, ComplexPtr dom, ComplexPtr cod, const std::map<VertexId, VertexId>& m) {
    out.push_back({name, validate_map(std::move(dom), std::move(cod), m)});
  };
  const ComplexPtr s13 = get("s1_3").complex;
  const ComplexPtr s16 = get("s1_6").complex;
  const ComplexPtr rp = get("rp2_6").complex;
  const ComplexPtr pt = get("point").complex;
  out.push_back({"identity_s1_3", SimplicialMap::identity(s13)});
  out.push_back({"identity_rp2_6", SimplicialMap::identity(rp)});
  add("double_cover", s16, s13, {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "1"}, {"5", "2"}, {"6", "3"}});
  const ComplexPtr square = make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  const ComplexPtr path = make({"a'", "b'"}, {{"a'", "b'"}});
  add("fold", square, path, {{"a", "a'"}, {"c", "a'"}, {"b", "b'"}, {"d", "b'"}});
  add("collapse", s13, pt, {{"1", "1"}, {"2", "1"}, {"3", "1"}});
  add("edge_collapse", get("interval").complex, pt, {{"1", "1"}, {"2", "1"}});
  add("cone_inclusion", s13, cone(*s13, "c"), {{"1", "1"}, {"2", "2"}, {"3", "3"}});
  add("rp2_coloring", rp, full_simplex(2),
      {{"1", "t0"}, {"2", "t1"}, {"3", "t2"}, {"4", "t0"}, {"5", "t1"}, {"6", "t2"}});
  return out;
}

}  // namespace

const std::vector<NamedMap>& map_suite() {
  static const std::vector<NamedMap> maps = build_maps();
  return maps;
}

}  // namespace whitney::corpus
