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

#include "whitney/polar.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "random.hpp"
#include "whitney/error.hpp"

namespace whitney {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Polar, message); }

std::int64_t parity_sign(int d) { return d % 2 == 0 ? 1 : -1; }

std::string vertex_label(const SimplicialComplex& k, Vertex v) { return "\"" + k.vertex_id(v) + "\""; }

// Null vector of a (m-1) x m matrix of rank m-1.
std::optional<Point> null_vector(std::vector<Point> rows, std::size_t m) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      const Rational factor = rows[q][c];
      for (std::size_t j = 0; j < m; ++j) rows[q][j] -= factor * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r + 1 != m) return std::nullopt;
  std::size_t free_col = 0;
  while (free_col < m && std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  Point n(m, Rational(0));
  n[free_col] = 1;
  for (std::size_t q = 0; q < r; ++q) n[pivot_col[q]] = -rows[q][free_col];
  return n;
}


}  // namespace

AffineVertexMap::AffineVertexMap(ComplexPtr domain, std::size_t target_dimension, std::vector<Point> images)
    : domain_(std::move(domain)), target_dimension_(target_dimension), images_(std::move(images)) {
  if (!domain_) fail("affine map on a null complex");
  if (target_dimension_ == 0) fail("affine map target dimension must be at least 1");
  if (images_.size() != domain_->vertex_count()) fail("affine map does not assign every vertex");
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v].size() != target_dimension_)
      fail("image of vertex " + vertex_label(*domain_, static_cast<Vertex>(v)) + " has dimension " +
           std::to_string(images_[v].size()) + ", expected " + std::to_string(target_dimension_));
}

AffineVertexMap AffineVertexMap::from_ids(ComplexPtr domain, std::size_t target_dimension,
                                          const std::map<VertexId, Point>& images) {
  std::vector<Point> table;
  table.reserve(domain->vertex_count());
  for (const auto& id : domain->vertex_ids()) {
    auto it = images.find(id);
    if (it == images.end()) fail("vertex \"" + id + "\" has no image");
    table.push_back(it->second);
  }
  for (const auto& [id, p] : images)
    if (!domain->find_vertex(id)) fail("image given for unknown vertex \"" + id + "\"");
  return AffineVertexMap(std::move(domain), target_dimension, std::move(table));
}

AffineVertexMap AffineVertexMap::restricted_to(ComplexPtr sub) const {
  std::vector<Point> table;
  table.reserve(sub->vertex_count());
  for (const auto& id : sub->vertex_ids()) {
    auto v = domain_->find_vertex(id);
    if (!v) fail("restriction: vertex \"" + id + "\" is not in the domain");
    table.push_back(images_[*v]);
  }
  return AffineVertexMap(std::move(sub), target_dimension_, std::move(table));
}

int Hyperplane::side(const Point& x) const { return sign(dot(normal, x) - offset); }

std::optional<Hyperplane> spanned_hyperplane(const AffineVertexMap& f, SimplexIndex s) {
  const SimplicialComplex& k = *f.domain();
  const Simplex& simplex = k.simplex(s);
  const std::size_t m = f.target_dimension();
  if (simplex.size() != m) fail("hyperplane: simplex {" + k.label(s) + "} does not have dimension target - 1");
  const Point& base = f.image(simplex[0]);
  std::vector<Point> rows;
  for (std::size_t j = 1; j < simplex.size(); ++j) {
    Point d(m);
    for (std::size_t c = 0; c < m; ++c) d[c] = f.image(simplex[j])[c] - base[c];
    rows.push_back(std::move(d));
  }
  auto normal = null_vector(std::move(rows), m);
  if (!normal) return std::nullopt;
  auto lead = std::find_if(normal->begin(), normal->end(), [](const Rational& x) { return x != 0; });
  const Rational scale = *lead;
  for (auto& x : *normal) x /= scale;
  Hyperplane h{std::move(*normal), 0};
  h.offset = dot(h.normal, base);
  return h;
}

NondegeneracyReport check_nondegenerate(const AffineVertexMap& f, int i) {
  if (i < 0 || f.target_dimension() != static_cast<std::size_t>(i) + 1)
    fail("nondegeneracy in dimension " + std::to_string(i) + " needs target dimension " + std::to_string(i + 1) +
         ", got " + std::to_string(f.target_dimension()));
  const SimplicialComplex& k = *f.domain();
  NondegeneracyReport report;
  for (SimplexIndex s : k.simplices_of_dimension(i)) {
    auto plane = spanned_hyperplane(f, s);
    if (!plane) {
      report = {false, s, "images of {" + k.label(s) + "} do not span a hyperplane"};
      return report;
    }
    const Simplex& simplex = k.simplex(s);
    for (SimplexIndex t : k.cofaces(s)) {
      for (Vertex v : k.simplex(t).vertices()) {
        if (simplex.contains(v)) continue;
        if (plane->side(f.image(v)) == 0) {
          report = {false, s, "link vertex " + vertex_label(k, v) + " of {" + k.label(s) + "} maps into its hyperplane"};
          return report;
        }
      }
    }
  }
  return report;
}

bool is_nondegenerate(const AffineVertexMap& f, int i) { return check_nondegenerate(f, i).nondegenerate; }

NondegeneracyReport check_rank_generic(const AffineVertexMap& f) {
  const SimplicialComplex& k = *f.domain();
  for (SimplexIndex s = 0; s < k.size(); ++s) {
    std::vector<Point> pts;
    for (Vertex v : k.simplex(s).vertices()) pts.push_back(f.image(v));
    const auto expected = std::min<std::size_t>(static_cast<std::size_t>(k.dimension_of(s)), f.target_dimension());
    if (affine_rank(pts) != expected)
      return {false, s, "f has rank below " + std::to_string(expected) + " on {" + k.label(s) + "}"};
  }
  return {};
}

NondegeneracyReport check_star_general_position(const AffineVertexMap& f, int i) {
  const SimplicialComplex& k = *f.domain();
  const std::size_t pick = static_cast<std::size_t>(i) + 2;
  for (Vertex v = 0; v < k.vertex_count(); ++v) {
    std::vector<Vertex> verts;
    for (SimplexIndex t : k.cofaces(k.vertex_simplex(v)))
      for (Vertex u : k.simplex(t).vertices()) verts.push_back(u);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() < pick) continue;
    std::vector<std::size_t> idx(pick);
    for (std::size_t j = 0; j < pick; ++j) idx[j] = j;
    while (true) {
      std::vector<Point> pts;
      for (auto j : idx) pts.push_back(f.image(verts[j]));
      if (affine_rank(pts) != pick - 1) {
        std::string names;
        for (auto j : idx) names += (names.empty() ? "" : ",") + k.vertex_id(verts[j]);
        return {false, k.vertex_simplex(v),
                "star vertices {" + names + "} of " + vertex_label(k, v) + " do not span the target"};
      }
      std::size_t j = pick;
      while (j > 0 && idx[j - 1] == verts.size() - pick + (j - 1)) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t q = j; q < pick; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return {};
}

HalfLinkReport half_link(const ConstructibleFunction& a, SimplexIndex s, const AffineVertexMap& f) {
  if (!same_complex(a.base(), f.domain())) fail("half link: function and map live on different complexes");
  const SimplicialComplex& k = *f.domain();
  auto plane = spanned_hyperplane(f, s);
  if (!plane) fail("degenerate at {" + k.label(s) + "}: images do not span a hyperplane");

  HalfLinkReport report;
  report.simplex = s;
  report.plane = *plane;
  const Simplex& simplex = k.simplex(s);
  const int dim_s = simplex.dimension();
  for (SimplexIndex t : k.cofaces(s)) {
    if (t == s) continue;
    HalfLinkCell cell;
    cell.joined = t;
    std::vector<Vertex> rest;
    for (Vertex v : k.simplex(t).vertices()) {
      if (simplex.contains(v)) continue;
      rest.push_back(v);
      const int side = plane->side(f.image(v));
      if (side == 0)
        fail("degenerate at {" + k.label(s) + "}: link vertex " + vertex_label(k, v) + " maps into the hyperplane");
      (side > 0 ? cell.positive : cell.negative) = true;
    }
    cell.link_simplex = k.index_of(Simplex::from_sorted_unchecked(std::move(rest)));
    cell.slice = cell.positive && cell.negative;

    const int dim_u = k.dimension_of(t) - dim_s - 1;
    const std::int64_t open = parity_sign(dim_u);
    const std::int64_t cut = cell.slice ? parity_sign(dim_u - 1) : 0;
    const std::int64_t plus = (cell.positive ? open : 0) + cut;
    const std::int64_t minus = (cell.negative ? open : 0) + cut;
    report.chi_plus += plus;
    report.chi_minus += minus;
    report.weighted_plus += plus * a[t];
    report.weighted_minus += minus * a[t];
    report.cells.push_back(cell);
  }
  if (a.ring() == Ring::Mod2) {
    report.weighted_plus = ((report.weighted_plus % 2) + 2) % 2;
    report.weighted_minus = ((report.weighted_minus % 2) + 2) % 2;
  }
  return report;
}

std::int64_t half_link_chi(const ConstructibleFunction& a, SimplexIndex s, const AffineVertexMap& f, Side side) {
  const HalfLinkReport report = half_link(a, s, f);
  return side == Side::Positive ? report.weighted_plus : report.weighted_minus;
}

Mod2Chain euler_singularity_chain(const AffineVertexMap& f, const ConstructibleFunction& a, int i,
                                  std::vector<HalfLinkReport>* reports) {
  if (i < 0 || f.target_dimension() != static_cast<std::size_t>(i) + 1)
    fail("Euler singularity chain in dimension " + std::to_string(i) + " needs target dimension " +
         std::to_string(i + 1) + ", got " + std::to_string(f.target_dimension()));
  if (!same_complex(a.base(), f.domain())) fail("Euler singularity chain: function and map live on different complexes");
  if (auto check = check_euler_function(a); !check.euler)
    fail("not an Euler function: D(a) != a at {" + f.domain()->label(check.offenders.front()) + "}");
  return singularity_chain(f, a, i, reports);
}

Mod2Chain singularity_chain(const AffineVertexMap& f, const ConstructibleFunction& a, int i,
                            std::vector<HalfLinkReport>* reports) {
  if (i < 0 || f.target_dimension() != static_cast<std::size_t>(i) + 1)
    fail("singularity chain in dimension " + std::to_string(i) + " needs target dimension " +
         std::to_string(i + 1) + ", got " + std::to_string(f.target_dimension()));
  if (!same_complex(a.base(), f.domain())) fail("singularity chain: function and map live on different complexes");

  const SimplicialComplex& k = *f.domain();
  const auto cells = k.simplices_of_dimension(i);
  std::vector<HalfLinkReport> computed(cells.size());
  std::vector<char> coefficient(cells.size(), 0);
  detail::parallel_for(cells.size(), [&](std::size_t j) {
    computed[j] = half_link(a, cells[j], f);
    const std::int64_t c = a[cells[j]] - computed[j].weighted_plus;
    coefficient[j] = static_cast<char>(((c % 2) + 2) % 2);
  });

  std::vector<SimplexIndex> support;
  for (std::size_t j = 0; j < cells.size(); ++j)
    if (coefficient[j]) support.push_back(cells[j]);
  if (reports) *reports = std::move(computed);
  return Mod2Chain(f.domain(), i, std::move(support));
}

AffineVertexMap moment_map(const Subdivision& sd, int i) {
  const SimplicialComplex& k = *sd.base();
  if (i < 0 || i > k.dimension())
    fail("moment map dimension " + std::to_string(i) + " outside [0, " + std::to_string(k.dimension()) + "]");
  const SimplicialComplex& kp = *sd.subdivided();
  std::vector<Point> images;
  images.reserve(kp.vertex_count());
  for (Vertex v = 0; v < kp.vertex_count(); ++v) {
    const long d = k.dimension_of(sd.carrier_of_vertex(v));
    Point p;
    Integer power = 1;
    for (int e = 1; e <= i + 1; ++e) {
      power *= d;
      p.emplace_back(power);
    }
    images.push_back(std::move(p));
  }
  return AffineVertexMap(sd.subdivided(), static_cast<std::size_t>(i) + 1, std::move(images));
}

AffineVertexMap projection_map(const ComplexPtr& k, const std::vector<Point>& basis) {
  if (!k->has_coordinates()) fail("projection: complex has no coordinates");
  if (basis.empty()) fail("projection: empty basis");
  for (const auto& b : basis)
    if (b.size() != k->ambient_dimension())
      fail("projection: basis vector of dimension " + std::to_string(b.size()) + " in ambient dimension " +
           std::to_string(k->ambient_dimension()));
  if (rank(basis) != basis.size()) fail("projection: basis vectors are linearly dependent");
  std::vector<Point> images;
  images.reserve(k->vertex_count());
  for (Vertex v = 0; v < k->vertex_count(); ++v) {
    Point p;
    for (const auto& b : basis) p.push_back(dot(b, k->coordinate(v)));
    images.push_back(std::move(p));
  }
  return AffineVertexMap(k, basis.size(), std::move(images));
}

std::vector<Point> sample_generic_subspace(const ComplexPtr& k, std::size_t rank_wanted, std::uint64_t seed,
                                           int max_attempts) {
  if (!k->has_coordinates()) fail("sampling: complex has no coordinates");
  const std::size_t n = k->ambient_dimension();
  if (rank_wanted < 1 || rank_wanted > n)
    fail("sampling: rank " + std::to_string(rank_wanted) + " outside [1, " + std::to_string(n) + "]");
  const int i = static_cast<int>(rank_wanted) - 1;

  // At full rank every basis spans R^n and nondegeneracy does not depend on
  // the basis, so the standard one decides.
  if (rank_wanted == n) {
    std::vector<Point> basis(n, Point(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) basis[j][j] = 1;
    auto report = check_nondegenerate(projection_map(k, basis), i);
    if (!report.nondegenerate) fail("sampling: no full-rank projection is nondegenerate: " + report.reason);
    return basis;
  }

  detail::Rng rng(seed);
  NondegeneracyReport last;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Point> basis(rank_wanted, Point(n));
    for (auto& b : basis)
      for (auto& x : b) x = static_cast<long>(rng.between(-1000, 1000));
    if (rank(basis) != rank_wanted) continue;
    last = check_nondegenerate(projection_map(k, basis), i);
    if (last.nondegenerate) return basis;
  }
  fail("sampling: no nondegenerate projection after " + std::to_string(max_attempts) + " attempts" +
       (last.reason.empty() ? std::string() : ": " + last.reason));
}

}  // namespace whitney
