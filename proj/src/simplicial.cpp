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

#include "whitney/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "whitney/error.hpp"

namespace whitney {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Simplicial, message); }

std::string join_ids(const std::vector<VertexId>& ids) {
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ',';
    out += ids[k];
  }
  return out;
}

constexpr int kMaxSimplexVertices = 24;

template <class Fn>
void for_each_face(const Simplex& s, Fn&& fn) {
  const std::size_t m = s.size();
  if (m > kMaxSimplexVertices) fail("simplex of dimension " + std::to_string(m - 1) + " is too large");
  std::vector<Vertex> face;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    face.clear();
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (1u << k)) face.push_back(s[k]);
    fn(face);
  }
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) fail("empty simplex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    fail("duplicate vertex in simplex");
}

bool Simplex::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Vertex v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SimplicialComplex SimplicialComplex::build(std::vector<VertexId> vertex_ids,
                                           const std::vector<std::vector<VertexId>>& maximal_simplices,
                                           std::optional<std::map<VertexId, Point>> coordinates) {
  std::sort(vertex_ids.begin(), vertex_ids.end());
  if (auto dup = std::adjacent_find(vertex_ids.begin(), vertex_ids.end()); dup != vertex_ids.end())
    fail("duplicate vertex id \"" + *dup + "\"");

  std::unordered_map<VertexId, Vertex> lookup;
  for (std::size_t k = 0; k < vertex_ids.size(); ++k) lookup.emplace(vertex_ids[k], static_cast<Vertex>(k));

  std::set<Simplex> closed;
  for (Vertex v = 0; v < vertex_ids.size(); ++v) closed.insert(Simplex::from_sorted_unchecked({v}));
  for (const auto& ids : maximal_simplices) {
    std::vector<Vertex> verts;
    verts.reserve(ids.size());
    for (const auto& id : ids) {
      auto it = lookup.find(id);
      if (it == lookup.end()) fail("simplex {" + join_ids(ids) + "} references unknown vertex \"" + id + "\"");
      verts.push_back(it->second);
    }
    std::vector<Vertex> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) fail("empty simplex");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("duplicate vertex in simplex {" + join_ids(ids) + "}");
    for_each_face(Simplex::from_sorted_unchecked(std::move(sorted)),
                  [&](const std::vector<Vertex>& face) { closed.insert(Simplex::from_sorted_unchecked(face)); });
  }

  std::optional<std::vector<Point>> coords;
  if (coordinates) {
    coords.emplace();
    coords->reserve(vertex_ids.size());
    for (const auto& id : vertex_ids) {
      auto it = coordinates->find(id);
      if (it == coordinates->end()) fail("vertex \"" + id + "\" has no coordinates");
      coords->push_back(it->second);
    }
    for (const auto& [id, point] : *coordinates)
      if (!lookup.count(id)) fail("coordinates given for unknown vertex \"" + id + "\"");
  }

  return from_closed_set(std::move(vertex_ids), std::vector<Simplex>(closed.begin(), closed.end()), std::move(coords));
}

SimplicialComplex SimplicialComplex::from_closed_set(std::vector<VertexId> vertex_ids, std::vector<Simplex> simplices,
                                                     std::optional<std::vector<Point>> coordinates) {
  SimplicialComplex k;
  k.vertex_ids_ = std::move(vertex_ids);
  k.simplices_ = std::move(simplices);
  k.coordinates_ = std::move(coordinates);
  k.index_and_check();
  return k;
}

void SimplicialComplex::index_and_check() {
  if (!std::is_sorted(vertex_ids_.begin(), vertex_ids_.end()) ||
      std::adjacent_find(vertex_ids_.begin(), vertex_ids_.end()) != vertex_ids_.end())
    fail("vertex table is not sorted and duplicate-free");
  vertex_lookup_.clear();
  for (std::size_t k = 0; k < vertex_ids_.size(); ++k) vertex_lookup_.emplace(vertex_ids_[k], static_cast<Vertex>(k));

  std::sort(simplices_.begin(), simplices_.end());
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());

  lookup_.clear();
  lookup_.reserve(simplices_.size());
  int top = -1;
  for (std::size_t s = 0; s < simplices_.size(); ++s) {
    const Simplex& simplex = simplices_[s];
    if (simplex.size() == 0) fail("empty simplex");
    if (simplex.vertices().back() >= vertex_ids_.size()) fail("simplex references a vertex outside the table");
    lookup_.emplace(simplex, s);
    top = std::max(top, simplex.dimension());
  }

  by_dimension_.assign(static_cast<std::size_t>(top + 1), {});
  position_.assign(simplices_.size(), 0);
  for (std::size_t s = 0; s < simplices_.size(); ++s) {
    auto& bucket = by_dimension_[static_cast<std::size_t>(simplices_[s].dimension())];
    position_[s] = bucket.size();
    bucket.push_back(s);
  }

  vertex_simplex_.assign(vertex_ids_.size(), 0);
  std::vector<bool> seen(vertex_ids_.size(), false);
  if (!by_dimension_.empty()) {
    for (SimplexIndex s : by_dimension_[0]) {
      vertex_simplex_[simplices_[s][0]] = s;
      seen[simplices_[s][0]] = true;
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) fail("vertex \"" + vertex_ids_[v] + "\" is not a 0-simplex");

  faces_.assign(simplices_.size(), {});
  facets_.assign(simplices_.size(), {});
  cofaces_.assign(simplices_.size(), {});
  for (std::size_t s = 0; s < simplices_.size(); ++s) {
    const Simplex& simplex = simplices_[s];
    for_each_face(simplex, [&](const std::vector<Vertex>& face) {
      auto it = lookup_.find(Simplex::from_sorted_unchecked(face));
      if (it == lookup_.end()) {
        std::vector<VertexId> ids;
        for (Vertex v : face) ids.push_back(vertex_ids_[v]);
        fail("not face-closed: face {" + join_ids(ids) + "} of {" + label(s) + "} is missing");
      }
      faces_[s].push_back(it->second);
      if (face.size() + 1 == simplex.size()) facets_[s].push_back(it->second);
    });
    std::sort(faces_[s].begin(), faces_[s].end());
    std::sort(facets_[s].begin(), facets_[s].end());
    for (SimplexIndex f : faces_[s]) cofaces_[f].push_back(s);
  }

  ambient_dimension_ = 0;
  if (coordinates_) {
    if (coordinates_->size() != vertex_ids_.size()) fail("coordinate table does not match the vertex table");
    if (!coordinates_->empty()) ambient_dimension_ = coordinates_->front().size();
    if (ambient_dimension_ == 0) fail("coordinates must have positive ambient dimension");
    for (std::size_t v = 0; v < coordinates_->size(); ++v)
      if ((*coordinates_)[v].size() != ambient_dimension_)
        fail("vertex \"" + vertex_ids_[v] + "\" has coordinates of dimension " +
             std::to_string((*coordinates_)[v].size()) + ", expected " + std::to_string(ambient_dimension_));
    for (SimplexIndex s : maximal_simplices()) {
      std::vector<Point> pts;
      for (Vertex v : simplices_[s].vertices()) pts.push_back((*coordinates_)[v]);
      if (affine_rank(pts) != pts.size() - 1)
        fail("vertices of simplex {" + label(s) + "} are not affinely independent");
    }
  }
}

std::optional<Vertex> SimplicialComplex::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<SimplexIndex> SimplicialComplex::find(const Simplex& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<SimplexIndex> SimplicialComplex::find_ids(const std::vector<VertexId>& ids) const {
  std::vector<Vertex> verts;
  verts.reserve(ids.size());
  for (const auto& id : ids) {
    auto v = find_vertex(id);
    if (!v) return std::nullopt;
    verts.push_back(*v);
  }
  std::sort(verts.begin(), verts.end());
  if (verts.empty() || std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return std::nullopt;
  return find(Simplex::from_sorted_unchecked(std::move(verts)));
}

SimplexIndex SimplicialComplex::index_of(const Simplex& s) const {
  if (auto found = find(s)) return *found;
  fail("simplex {" + join_ids(simplex_ids(s)) + "} is not in the complex");
}

std::span<const SimplexIndex> SimplicialComplex::simplices_of_dimension(int d) const {
  if (d < 0 || d > dimension()) return {};
  return by_dimension_[static_cast<std::size_t>(d)];
}

std::vector<SimplexIndex> SimplicialComplex::maximal_simplices() const {
  std::vector<SimplexIndex> out;
  for (std::size_t s = 0; s < simplices_.size(); ++s)
    if (cofaces_[s].size() == 1) out.push_back(s);
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (SimplexIndex s : maximal_simplices())
    if (simplices_[s].dimension() != dimension()) return false;
  return true;
}

std::vector<VertexId> SimplicialComplex::simplex_ids(SimplexIndex s) const { return simplex_ids(simplex(s)); }

std::vector<VertexId> SimplicialComplex::simplex_ids(const Simplex& s) const {
  std::vector<VertexId> ids;
  ids.reserve(s.size());
  for (Vertex v : s.vertices()) ids.push_back(v < vertex_ids_.size() ? vertex_ids_[v] : "?");
  return ids;
}

std::string SimplicialComplex::label(SimplexIndex s) const { return join_ids(simplex_ids(s)); }

const Point& SimplicialComplex::coordinate(Vertex v) const {
  if (!coordinates_) fail("complex has no coordinates");
  return coordinates_->at(v);
}

SimplicialComplex SimplicialComplex::subcomplex(std::span<const SimplexIndex> simplices) const {
  std::vector<bool> used(vertex_ids_.size(), false);
  for (SimplexIndex s : simplices)
    for (Vertex v : simplex(s).vertices()) used[v] = true;
  std::vector<Vertex> remap(vertex_ids_.size(), 0);
  std::vector<VertexId> ids;
  std::optional<std::vector<Point>> coords;
  if (coordinates_) coords.emplace();
  for (std::size_t v = 0; v < vertex_ids_.size(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<Vertex>(ids.size());
    ids.push_back(vertex_ids_[v]);
    if (coords) coords->push_back((*coordinates_)[v]);
  }
  std::vector<Simplex> out;
  out.reserve(simplices.size());
  for (SimplexIndex s : simplices) {
    std::vector<Vertex> verts;
    for (Vertex v : simplex(s).vertices()) verts.push_back(remap[v]);
    out.push_back(Simplex::from_sorted_unchecked(std::move(verts)));
  }
  if (ids.empty()) coords.reset();
  return from_closed_set(std::move(ids), std::move(out), std::move(coords));
}

SimplicialComplex SimplicialComplex::with_coordinates(std::vector<Point> coords) const {
  return from_closed_set(vertex_ids_, simplices_, std::move(coords));
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.vertex_ids_ == b.vertex_ids_ && a.simplices_ == b.simplices_ && a.coordinates_ == b.coordinates_;
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.count(d));
  return chi;
}

SimplicialComplex link(const SimplicialComplex& k, SimplexIndex s) {
  if (s >= k.size()) fail("link: simplex index out of range");
  const Simplex& base = k.simplex(s);
  std::vector<SimplexIndex> members;
  for (SimplexIndex t : k.cofaces(s)) {
    if (t == s) continue;
    std::vector<Vertex> rest;
    for (Vertex v : k.simplex(t).vertices())
      if (!base.contains(v)) rest.push_back(v);
    members.push_back(k.index_of(Simplex::from_sorted_unchecked(std::move(rest))));
  }
  std::sort(members.begin(), members.end());
  return k.subcomplex(members);
}

SimplicialComplex star(const SimplicialComplex& k, SimplexIndex s) {
  if (s >= k.size()) fail("star: simplex index out of range");
  std::vector<SimplexIndex> members;
  for (SimplexIndex t : k.cofaces(s))
    for (SimplexIndex f : k.faces(t)) members.push_back(f);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return k.subcomplex(members);
}

std::string barycenter_id(const SimplicialComplex& k, SimplexIndex s) { return "b(" + k.label(s) + ")"; }

Subdivision::Subdivision(ComplexPtr base) : base_(std::move(base)) {
  if (!base_) fail("subdivision of a null complex");
  const SimplicialComplex& k = *base_;

  std::vector<std::pair<VertexId, SimplexIndex>> named;
  named.reserve(k.size());
  for (SimplexIndex s = 0; s < k.size(); ++s) named.emplace_back(barycenter_id(k, s), s);
  std::sort(named.begin(), named.end());

  std::vector<VertexId> ids;
  ids.reserve(named.size());
  carrier_of_vertex_.resize(named.size());
  vertex_of_simplex_.resize(k.size());
  for (std::size_t v = 0; v < named.size(); ++v) {
    ids.push_back(named[v].first);
    carrier_of_vertex_[v] = named[v].second;
    vertex_of_simplex_[named[v].second] = static_cast<Vertex>(v);
  }

  std::vector<Simplex> flags;
  std::vector<Vertex> chain;
  // Flags are enumerated from their top element downward, so each appears once.
  auto descend = [&](auto&& self, SimplexIndex lowest) -> void {
    std::vector<Vertex> sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    flags.push_back(Simplex::from_sorted_unchecked(std::move(sorted)));
    for (SimplexIndex f : k.faces(lowest)) {
      if (f == lowest) continue;
      chain.push_back(vertex_of_simplex_[f]);
      self(self, f);
      chain.pop_back();
    }
  };
  for (SimplexIndex s = 0; s < k.size(); ++s) {
    chain.assign(1, vertex_of_simplex_[s]);
    descend(descend, s);
  }

  std::optional<std::vector<Point>> coords;
  if (k.has_coordinates()) {
    coords.emplace();
    coords->reserve(ids.size());
    for (std::size_t v = 0; v < ids.size(); ++v) {
      const Simplex& carrier = k.simplex(carrier_of_vertex_[v]);
      Point center(k.ambient_dimension(), Rational(0));
      for (Vertex u : carrier.vertices())
        for (std::size_t j = 0; j < center.size(); ++j) center[j] += k.coordinate(u)[j];
      for (auto& c : center) c /= static_cast<long>(carrier.size());
      coords->push_back(std::move(center));
    }
  }

  subdivided_ = share(SimplicialComplex::from_closed_set(std::move(ids), std::move(flags), std::move(coords)));

  const SimplicialComplex& kp = *subdivided_;
  flags_.resize(kp.size());
  for (SimplexIndex t = 0; t < kp.size(); ++t) {
    auto& flag = flags_[t];
    for (Vertex v : kp.simplex(t).vertices()) flag.push_back(carrier_of_vertex_[v]);
    std::sort(flag.begin(), flag.end(),
              [&](SimplexIndex a, SimplexIndex b) { return k.dimension_of(a) < k.dimension_of(b); });
  }
}

Subdivision barycentric_subdivision(ComplexPtr k) { return Subdivision(std::move(k)); }

SimplicialMap::SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<Vertex> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  if (!domain_ || !codomain_) fail("simplicial map with a null complex");
  if (assignment_.size() != domain_->vertex_count()) fail("vertex assignment does not cover the domain");
  for (Vertex v : assignment_)
    if (v >= codomain_->vertex_count()) fail("vertex assignment points outside the codomain");
  image_.resize(domain_->size());
  for (SimplexIndex s = 0; s < domain_->size(); ++s) {
    std::vector<Vertex> img;
    for (Vertex v : domain_->simplex(s).vertices()) img.push_back(assignment_[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto found = codomain_->find(Simplex::from_sorted_unchecked(img));
    if (!found) {
      std::vector<VertexId> ids = codomain_->simplex_ids(Simplex::from_sorted_unchecked(img));
      fail("image of simplex {" + domain_->label(s) + "} is {" + join_ids(ids) +
           "}, which is not a simplex of the codomain");
    }
    image_[s] = *found;
  }
}

SimplicialMap SimplicialMap::identity(ComplexPtr k) {
  std::vector<Vertex> id(k->vertex_count());
  std::iota(id.begin(), id.end(), Vertex{0});
  return SimplicialMap(k, k, std::move(id));
}

SimplicialMap validate_map(ComplexPtr domain, ComplexPtr codomain,
                           const std::map<VertexId, VertexId>& vertex_assignment) {
  std::vector<Vertex> assignment;
  assignment.reserve(domain->vertex_count());
  for (const auto& id : domain->vertex_ids()) {
    auto it = vertex_assignment.find(id);
    if (it == vertex_assignment.end()) fail("vertex \"" + id + "\" has no image");
    auto target = codomain->find_vertex(it->second);
    if (!target) fail("image \"" + it->second + "\" of vertex \"" + id + "\" is not a codomain vertex");
    assignment.push_back(*target);
  }
  for (const auto& [id, image] : vertex_assignment)
    if (!domain->find_vertex(id)) fail("map assigns unknown domain vertex \"" + id + "\"");
  return SimplicialMap(std::move(domain), std::move(codomain), std::move(assignment));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!same_complex(f.codomain(), g.domain())) fail("compose: codomain of f is not the domain of g");
  std::vector<Vertex> assignment(f.assignment().size());
  for (std::size_t v = 0; v < assignment.size(); ++v) assignment[v] = g(f(static_cast<Vertex>(v)));
  return SimplicialMap(f.domain(), g.codomain(), std::move(assignment));
}

SimplicialMap induced_subdivided_map(const SimplicialMap& f, const Subdivision& domain, const Subdivision& codomain) {
  if (!same_complex(domain.base(), f.domain()) || !same_complex(codomain.base(), f.codomain()))
    fail("induced map: subdivisions do not match the map");
  const SimplicialComplex& kp = *domain.subdivided();
  std::vector<Vertex> assignment(kp.vertex_count());
  for (Vertex v = 0; v < kp.vertex_count(); ++v)
    assignment[v] = codomain.vertex_of_simplex(f.image(domain.carrier_of_vertex(v)));
  return SimplicialMap(domain.subdivided(), codomain.subdivided(), std::move(assignment));
}

}  // namespace whitney
