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

#include "whitney/homology.hpp"

#include <algorithm>

#include "whitney/error.hpp"
#include "whitney/gf2.hpp"

namespace whitney {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Homology, message); }

std::vector<SimplexIndex> cancel_pairs(std::vector<SimplexIndex> simplices) {
  std::sort(simplices.begin(), simplices.end());
  std::vector<SimplexIndex> out;
  out.reserve(simplices.size());
  for (std::size_t k = 0; k < simplices.size();) {
    std::size_t j = k;
    while (j < simplices.size() && simplices[j] == simplices[k]) ++j;
    if ((j - k) % 2 == 1) out.push_back(simplices[k]);
    k = j;
  }
  return out;
}

void require_same_base(const Mod2Chain& a, const Mod2Chain& b, const char* what) {
  if (!same_complex(a.base(), b.base())) fail(std::string(what) + ": chains live on different complexes");
  if (a.dimension() != b.dimension()) fail(std::string(what) + ": chains have different dimensions");
}

std::vector<gf2::SparseColumn> boundary_columns(const SimplicialComplex& k, int d) {
  std::vector<gf2::SparseColumn> columns;
  const auto cells = k.simplices_of_dimension(d);
  columns.reserve(cells.size());
  for (SimplexIndex s : cells) {
    gf2::SparseColumn col;
    if (d > 0)
      for (SimplexIndex f : k.facets(s)) col.push_back(k.position_in_dimension(f));
    columns.push_back(std::move(col));
  }
  return columns;
}

}  // namespace

Mod2Chain::Mod2Chain(ComplexPtr base, int dimension, std::vector<SimplexIndex> simplices)
    : base_(std::move(base)), dimension_(dimension) {
  if (!base_) fail("chain on a null complex");
  if (dimension_ < 0) fail("chain of negative dimension");
  for (SimplexIndex s : simplices) {
    if (s >= base_->size()) fail("chain references a simplex outside the complex");
    if (base_->dimension_of(s) != dimension_)
      fail("simplex {" + base_->label(s) + "} does not have dimension " + std::to_string(dimension_));
  }
  support_ = cancel_pairs(std::move(simplices));
}

Mod2Chain Mod2Chain::from_ids(ComplexPtr base, int dimension, const std::vector<std::vector<VertexId>>& simplices) {
  std::vector<SimplexIndex> indices;
  indices.reserve(simplices.size());
  for (const auto& ids : simplices) {
    auto found = base->find_ids(ids);
    if (!found) {
      std::string label;
      for (std::size_t k = 0; k < ids.size(); ++k) label += (k ? "," : "") + ids[k];
      fail("simplex {" + label + "} is not in the complex");
    }
    indices.push_back(*found);
  }
  return Mod2Chain(std::move(base), dimension, std::move(indices));
}

bool Mod2Chain::contains(SimplexIndex s) const { return std::binary_search(support_.begin(), support_.end(), s); }

std::vector<std::vector<VertexId>> Mod2Chain::simplex_ids() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(support_.size());
  for (SimplexIndex s : support_) out.push_back(base_->simplex_ids(s));
  return out;
}

Mod2Chain operator+(const Mod2Chain& a, const Mod2Chain& b) {
  require_same_base(a, b, "chain sum");
  std::vector<SimplexIndex> out;
  std::set_symmetric_difference(a.support_.begin(), a.support_.end(), b.support_.begin(), b.support_.end(),
                                std::back_inserter(out));
  return Mod2Chain(a.base_, a.dimension_, std::move(out));
}

bool operator==(const Mod2Chain& a, const Mod2Chain& b) {
  return a.dimension_ == b.dimension_ && a.support_ == b.support_ && same_complex(a.base_, b.base_);
}

Mod2Chain boundary(const Mod2Chain& c) {
  if (c.dimension() == 0) return Mod2Chain::zero(c.base(), 0);
  std::vector<SimplexIndex> faces;
  for (SimplexIndex s : c.support())
    for (SimplexIndex f : c.base()->facets(s)) faces.push_back(f);
  return Mod2Chain(c.base(), c.dimension() - 1, std::move(faces));
}

bool is_cycle(const Mod2Chain& c) { return boundary(c).empty(); }

HomologySummary betti_mod2(const SimplicialComplex& k) {
  HomologySummary summary;
  const int top = k.dimension();
  if (top < 0) return summary;
  summary.boundary_rank.assign(static_cast<std::size_t>(top + 2), 0);
  for (int d = 1; d <= top; ++d) {
    auto columns = boundary_columns(k, d);
    summary.boundary_rank[static_cast<std::size_t>(d)] = gf2::rank(k.count(d - 1), columns);
  }
  summary.betti.resize(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    const auto ud = static_cast<std::size_t>(d);
    summary.betti[ud] = k.count(d) - summary.boundary_rank[ud] - summary.boundary_rank[ud + 1];
  }
  summary.boundary_rank.pop_back();
  return summary;
}

BoundaryDecision is_boundary(const Mod2Chain& c) {
  if (!is_cycle(c)) fail("is_boundary: the chain is not a cycle");
  const SimplicialComplex& k = *c.base();
  const int d = c.dimension();
  BoundaryDecision decision;
  if (c.empty()) {
    decision.bounds = true;
    decision.witness = Mod2Chain::zero(c.base(), d + 1);
    return decision;
  }
  if (d + 1 > k.dimension()) return decision;

  auto columns = boundary_columns(k, d + 1);
  gf2::SparseColumn rhs;
  for (SimplexIndex s : c.support()) rhs.push_back(k.position_in_dimension(s));
  auto solution = gf2::solve(k.count(d), columns, rhs);
  if (!solution) return decision;

  const auto cells = k.simplices_of_dimension(d + 1);
  std::vector<SimplexIndex> witness;
  witness.reserve(solution->size());
  for (std::size_t j : *solution) witness.push_back(cells[j]);
  decision.bounds = true;
  decision.witness = Mod2Chain(c.base(), d + 1, std::move(witness));
  return decision;
}

bool homologous(const Mod2Chain& a, const Mod2Chain& b) {
  require_same_base(a, b, "homologous");
  if (!is_cycle(a) || !is_cycle(b)) fail("homologous: inputs must be cycles");
  return is_boundary(a + b).bounds;
}

Mod2Chain chain_pushforward(const SimplicialMap& f, const Mod2Chain& c) {
  if (!same_complex(f.domain(), c.base())) fail("chain pushforward: chain is not on the domain of the map");
  std::vector<SimplexIndex> images;
  for (SimplexIndex s : c.support()) {
    const SimplexIndex t = f.image(s);
    if (f.codomain()->dimension_of(t) == c.dimension()) images.push_back(t);
  }
  return Mod2Chain(f.codomain(), c.dimension(), std::move(images));
}

Mod2Chain fundamental_cycle(const ComplexPtr& k) {
  if (k->empty()) fail("fundamental cycle of the empty complex");
  if (!k->is_pure()) fail("fundamental cycle: complex is not pure-dimensional");
  const int d = k->dimension();
  auto top = k->simplices_of_dimension(d);
  Mod2Chain c(k, d, std::vector<SimplexIndex>(top.begin(), top.end()));
  if (!is_cycle(c)) fail("fundamental cycle: the sum of top simplices is not a cycle");
  return c;
}

}  // namespace whitney
