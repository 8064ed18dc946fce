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

#include "whitney/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "random.hpp"
#include "whitney/corpus.hpp"
#include "whitney/error.hpp"
#include "whitney/homology.hpp"
#include "whitney/sw_classes.hpp"

namespace whitney::verify {

namespace {

using detail::Rng;

template <class T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw Error(ErrorKind::Verify, std::string("instance is missing ") + what);
  return *v;
}

const ComplexPtr& need(const ComplexPtr& k, const char* what) {
  if (!k) throw Error(ErrorKind::Verify, std::string("instance is missing ") + what);
  return k;
}

ConstructibleFunction one(const ComplexPtr& k, Ring ring = Ring::Mod2) {
  return ConstructibleFunction::constant(k, ring, 1);
}

std::vector<SimplexIndex> generator_indices(const SimplicialComplex& k, const std::vector<std::vector<VertexId>>& ids) {
  std::vector<SimplexIndex> out;
  for (const auto& s : ids) {
    auto idx = k.find_ids(s);
    if (!idx) throw Error(ErrorKind::Verify, "subcomplex generator is not a simplex of the complex");
    out.push_back(*idx);
  }
  return out;
}

// ---- property checks ------------------------------------------------------

using Checker = std::function<CheckOutcome(const Instance&)>;

CheckOutcome ok(bool holds, std::string detail = {}) { return {holds, holds ? std::string() : std::move(detail)}; }

CheckOutcome dual_involution(const Instance& x) {
  const auto& a = need(x.alpha, "alpha");
  return ok(dual(dual(a)) == a, "D(D(a)) != a");
}

CheckOutcome dual_chi(const Instance& x) {
  const auto& a = need(x.alpha, "alpha");
  const auto lhs = chi(dual(a)), rhs = chi(a);
  return ok(lhs == rhs, "chi(Da) = " + std::to_string(lhs) + ", chi(a) = " + std::to_string(rhs));
}

CheckOutcome push_chi(const Instance& x) {
  const auto& a = need(x.alpha, "alpha");
  const auto lhs = chi(pushforward(need(x.f, "f"), a)), rhs = chi(a);
  return ok(lhs == rhs, "chi(f_* a) = " + std::to_string(lhs) + ", chi(a) = " + std::to_string(rhs));
}

CheckOutcome push_functorial(const Instance& x) {
  const auto& f = need(x.f, "f");
  const auto& g = need(x.g, "g");
  const auto& a = need(x.alpha, "alpha");
  return ok(pushforward(compose(g, f), a) == pushforward(g, pushforward(f, a)), "(g o f)_* a != g_* f_* a");
}

CheckOutcome dual_push(const Instance& x) {
  const auto& f = need(x.f, "f");
  const auto& a = need(x.alpha, "alpha");
  return ok(dual(pushforward(f, a)) == pushforward(f, dual(a)), "D f_* a != f_* D a");
}

CheckOutcome pull_functorial(const Instance& x) {
  const auto& f = need(x.f, "f");
  const auto& g = need(x.g, "g");
  const auto& b = need(x.beta, "beta");
  return ok(pullback(compose(g, f), b) == pullback(f, pullback(g, b)), "(g o f)^* b != f^* g^* b");
}

CheckOutcome fiber_integral(const Instance& x) {
  const auto& f = need(x.f, "f");
  const auto pushed = pushforward(f, one(f.domain(), Ring::Integers));
  const SimplicialComplex& l = *f.codomain();
  for (Vertex q = 0; q < l.vertex_count(); ++q) {
    const auto lhs = pushed[l.vertex_simplex(q)];
    const auto rhs = fiber_chi_oracle(f, q);
    if (lhs != rhs)
      return ok(false, "at vertex " + l.vertex_id(q) + ": f_* 1 = " + std::to_string(lhs) + ", fibre chi = " +
                           std::to_string(rhs));
  }
  return ok(true);
}

// D 1_X (s) = (-1)^dim s (1 - chi(Lk_X s)) on X and 0 off X.
CheckOutcome link_formula(const Instance& x) {
  const ComplexPtr& k = need(x.complex, "complex");
  const auto closed = face_closure(*k, generator_indices(*k, x.subcomplex));
  const auto d = dual(indicator(k, closed, Ring::Integers));
  const ComplexPtr sub = share(k->subcomplex(closed));
  std::vector<char> in_x(k->size(), 0);
  for (SimplexIndex s : closed) in_x[s] = 1;
  for (SimplexIndex s = 0; s < k->size(); ++s) {
    std::int64_t expected = 0;
    if (in_x[s]) {
      std::vector<Vertex> v;
      for (Vertex u : k->simplex(s).vertices()) v.push_back(*sub->find_vertex(k->vertex_id(u)));
      const std::int64_t sign = k->dimension_of(s) % 2 == 0 ? 1 : -1;
      expected = sign * (1 - euler_characteristic(link(*sub, sub->index_of(Simplex(std::move(v))))));
    }
    if (d[s] != expected)
      return ok(false, "at {" + k->label(s) + "}: D 1_X = " + std::to_string(d[s]) + ", link formula gives " +
                           std::to_string(expected));
  }
  return ok(true);
}

CheckOutcome euler_generator(const Instance& x) {
  return ok(is_euler_function(need(x.alpha, "alpha")), "generated function is not Euler");
}

CheckOutcome stiefel_cycle(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  return ok(is_cycle(stiefel_chain(sd, x.i)), "boundary of s_" + std::to_string(x.i) + " is nonzero");
}

CheckOutcome negative_control(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  return ok(!is_cycle(stiefel_chain(sd, x.i)), "s_" + std::to_string(x.i) + " is a cycle on a non-Euler complex");
}

CheckOutcome normalization(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  return ok(sw_representative(sd, one(sd.base()), x.i) == stiefel_chain(sd, x.i),
            "w_" + std::to_string(x.i) + "(1) != s_" + std::to_string(x.i));
}

CheckOutcome top_class(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  const int d = sd.base()->dimension();
  return ok(stiefel_chain(sd, d) == subdivision_chain_map(sd, fundamental_cycle(sd.base())),
            "s_top != sd_#(fundamental cycle)");
}

CheckOutcome subdivision_invariance(const Instance& x) {
  const Subdivision sd1(need(x.complex, "complex"));
  const Subdivision sd2(sd1.subdivided());
  const Mod2Chain lhs = subdivision_chain_map(sd2, stiefel_chain(sd1, x.i));
  return ok(homologous(lhs, stiefel_chain(sd2, x.i)), "sd_#(s_i(K)) is not homologous to s_i(K')");
}

CheckOutcome degree_law(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  const auto r = w0_degree(sd, need(x.alpha, "alpha"));
  return ok(r.degree == r.chi_mod2,
            "degree " + std::to_string(r.degree) + " != chi mod 2 = " + std::to_string(r.chi_mod2));
}

CheckOutcome additivity(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  const auto& a = need(x.alpha, "alpha");
  const auto& b = need(x.beta, "beta");
  return ok(sw_representative(sd, a + b, x.i) == sw_representative(sd, a, x.i) + sw_representative(sd, b, x.i),
            "w_i(a + b) != w_i(a) + w_i(b)");
}

CheckOutcome representative_cycle(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  return ok(is_cycle(sw_representative(sd, need(x.alpha, "alpha"), x.i)), "w_i(a) representative is not a cycle");
}

CheckOutcome census(const Instance& x) {
  const bool expected = need(x.expected, "expected");
  const auto c = check_euler_space(need(x.complex, "complex"));
  if (c.euler != expected)
    return ok(false, std::string("Euler check says ") + (c.euler ? "Euler" : "non-Euler") + ", documented " +
                         (expected ? "Euler" : "non-Euler"));
  return ok(c.euler || !c.offenders.empty(), "non-Euler verdict without an offending simplex");
}

CheckOutcome manifold_value(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  const Mod2Chain s = stiefel_chain(sd, x.i);
  if (!is_cycle(s)) return ok(false, "s_i is not a cycle");
  const bool bounds = is_boundary(s).bounds;
  return ok(bounds == need(x.expected, "expected"),
            std::string("s_") + std::to_string(x.i) + (bounds ? " bounds" : " does not bound"));
}

CheckOutcome pushforward_axiom(const Instance& x) {
  return ok(verify_pushforward_axiom(need(x.f, "f"), need(x.alpha, "alpha"), x.i),
            "f'_# w_i(a) is not homologous to w_i(f_* a)");
}

CheckOutcome moment_identity(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  const AffineVertexMap f = moment_map(sd, x.i);
  if (auto r = check_nondegenerate(f, x.i); !r.nondegenerate) return ok(false, "moment map degenerate: " + r.reason);
  return ok(singularity_chain(f, one(sd.subdivided()), x.i) == stiefel_chain(sd, x.i),
            "Sigma(f_i, 1) != s_i as chains");
}

// Off Euler spaces the constant function is not Euler and the chain is
// undefined; the computation must refuse.
CheckOutcome moment_precondition(const Instance& x) {
  const Subdivision sd(need(x.complex, "complex"));
  try {
    euler_singularity_chain(moment_map(sd, x.i), one(sd.subdivided()), x.i);
  } catch (const Error& e) {
    return ok(e.kind() == ErrorKind::Polar, e.what());
  }
  return ok(false, "Euler singularity chain accepted a non-Euler function");
}

CheckOutcome parity(const Instance& x) {
  const auto& f = need(x.map_a, "map_a");
  if (auto r = check_nondegenerate(f, x.i); !r.nondegenerate) return ok(false, "map degenerate: " + r.reason);
  const auto a = one(f.domain());
  for (SimplexIndex s : f.domain()->simplices_of_dimension(x.i)) {
    const auto r = half_link(a, s, f);
    if ((r.chi_plus - r.chi_minus) % 2 != 0)
      return ok(false, "at {" + f.domain()->label(s) + "}: chi+ = " + std::to_string(r.chi_plus) +
                           ", chi- = " + std::to_string(r.chi_minus));
  }
  return ok(true);
}

CheckOutcome projection_independence(const Instance& x) {
  const ComplexPtr& k = need(x.complex, "complex");
  const auto a = one(k);
  const Mod2Chain sa = euler_singularity_chain(need(x.map_a, "map_a"), a, x.i);
  const Mod2Chain sb = euler_singularity_chain(need(x.map_b, "map_b"), a, x.i);
  if (!homologous(sa, sb)) return ok(false, "the two polar chains are not homologous");
  const Subdivision sd(k);
  return ok(homologous(subdivision_chain_map(sd, sa), stiefel_chain(sd, x.i)),
            "polar chain is not homologous to s_i");
}

CheckOutcome restriction(const Instance& x) {
  const ComplexPtr& k = need(x.complex, "complex");
  const auto& f = need(x.map_a, "map_a");
  const auto closed = face_closure(*k, generator_indices(*k, x.subcomplex));
  const ComplexPtr sub = share(k->subcomplex(closed));
  const Mod2Chain whole = singularity_chain(f, indicator(k, closed, Ring::Mod2), x.i);
  const Mod2Chain restricted = singularity_chain(f.restricted_to(sub), one(sub), x.i);
  return ok(whole.simplex_ids() == restricted.simplex_ids(), "Sigma(f, 1_X) != Sigma(f restricted to X, 1)");
}

CheckOutcome singularity_cycle(const Instance& x) {
  return ok(is_cycle(euler_singularity_chain(need(x.map_a, "map_a"), need(x.alpha, "alpha"), x.i)),
            "Sigma(f, a) is not a cycle");
}

CheckOutcome polar_degree(const Instance& x) {
  const auto& a = need(x.alpha, "alpha");
  const Mod2Chain s = euler_singularity_chain(need(x.map_a, "map_a"), a, 0);
  const auto c = ((chi(a) % 2) + 2) % 2;
  return ok(static_cast<std::int64_t>(s.size() % 2) == c, "|Sigma| mod 2 != chi(a) mod 2");
}

const std::map<std::string, Checker>& registry() {
  static const std::map<std::string, Checker> r = {
      {"calculus.dual_involution", dual_involution},
      {"calculus.dual_chi", dual_chi},
      {"calculus.push_chi", push_chi},
      {"calculus.push_functorial", push_functorial},
      {"calculus.dual_push", dual_push},
      {"calculus.pull_functorial", pull_functorial},
      {"calculus.fiber_integral", fiber_integral},
      {"calculus.link_formula", link_formula},
      {"calculus.euler_generator", euler_generator},
      {"stiefel.cycle", stiefel_cycle},
      {"stiefel.negative_control", negative_control},
      {"stiefel.normalization", normalization},
      {"stiefel.top_class", top_class},
      {"stiefel.subdivision", subdivision_invariance},
      {"stiefel.degree", degree_law},
      {"stiefel.representative_cycle", representative_cycle},
      {"stiefel.census", census},
      {"polar.moment_identity", moment_identity},
      {"polar.moment_precondition", moment_precondition},
      {"polar.parity", parity},
      {"polar.projection_independence", projection_independence},
      {"polar.restriction", restriction},
      {"polar.singularity_cycle", singularity_cycle},
      {"polar.degree", polar_degree},
      {"axioms.additivity", additivity},
      {"axioms.pushforward", pushforward_axiom},
      {"axioms.manifold_values", manifold_value},
  };
  return r;
}

// ---- random generation ----------------------------------------------------

SimplexIndex random_simplex(const SimplicialComplex& k, Rng& rng) { return rng.below(k.size()); }

std::vector<std::vector<VertexId>> random_generators(const SimplicialComplex& k, Rng& rng) {
  std::vector<std::vector<VertexId>> out;
  const auto n = 1 + rng.below(3);
  for (std::uint64_t j = 0; j < n; ++j) out.push_back(k.simplex_ids(random_simplex(k, rng)));
  return out;
}

ConstructibleFunction random_function(const ComplexPtr& k, Ring ring, Rng& rng) {
  std::vector<IndicatorTerm> terms;
  const auto n = 1 + rng.below(3);
  for (std::uint64_t j = 0; j < n; ++j) {
    IndicatorTerm t;
    t.coefficient = rng.between(-3, 3);
    const auto m = 1 + rng.below(2);
    for (std::uint64_t q = 0; q < m; ++q) t.generators.push_back(random_simplex(*k, rng));
    terms.push_back(std::move(t));
  }
  return indicator_sum(k, ring, terms);
}

// b + Db is fixed by D because D is an involution; vertex indicators and the
// constant 1 on an Euler space are Euler too, and they change chi mod 2.
ConstructibleFunction random_euler(const ComplexPtr& k, bool euler_space, Rng& rng) {
  const auto b = random_function(k, Ring::Integers, rng);
  ConstructibleFunction a = (b + dual(b)).reduced();
  const auto points = rng.below(3);
  for (std::uint64_t j = 0; j < points; ++j) {
    const SimplexIndex v = k->vertex_simplex(static_cast<Vertex>(rng.below(k->vertex_count())));
    a = a + indicator(k, std::span<const SimplexIndex>(&v, 1), Ring::Mod2);
  }
  if (euler_space && rng.coin()) a = a + one(k);
  return a;
}

SimplicialMap random_map_to_simplex(const ComplexPtr& k, ComplexPtr target, Rng& rng) {
  std::vector<Vertex> assignment(k->vertex_count());
  for (auto& v : assignment) v = static_cast<Vertex>(rng.below(target->vertex_count()));
  return SimplicialMap(k, std::move(target), std::move(assignment));
}

// Random integer vertex images in R^(i+1); nullopt if no draw is nondegenerate.
std::optional<AffineVertexMap> random_affine_map(const ComplexPtr& k, int i, Rng& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Point> images(k->vertex_count(), Point(static_cast<std::size_t>(i) + 1));
    for (auto& p : images)
      for (auto& c : p) c = static_cast<long>(rng.between(-50, 50));
    AffineVertexMap f(k, static_cast<std::size_t>(i) + 1, std::move(images));
    if (is_nondegenerate(f, i)) return f;
  }
  return std::nullopt;
}

int random_degree(const SimplicialComplex& k, Rng& rng) { return static_cast<int>(rng.below(k.dimension() + 1)); }

// ---- suites ---------------------------------------------------------------

struct Item {
  std::string name;
  std::optional<bool> documented;
  bool euler;
  ComplexPtr complex;
};

class Runner {
 public:
  Runner(const Options& o, std::vector<Item> items, bool bundled)
      : options_(o), items_(std::move(items)), bundled_(bundled), rng_(o.seed) {
    report_.suite = o.suite;
    report_.seed = o.seed;
    report_.trials = o.trials;
  }

  void run(Instance x) {
    PropertyTally& t = tally(x.property);
    ++t.checks;
    const CheckOutcome r = check(x);
    if (r.holds) return;
    ++t.failures;
    if (t.counterexample) return;
    io::Json record = instance_to_json(x);
    record["seed"] = options_.seed;
    record["detail"] = r.detail;
    t.detail = r.detail;
    if (options_.counterexample_directory) {
      std::filesystem::create_directories(*options_.counterexample_directory);
      const auto path = (std::filesystem::path(*options_.counterexample_directory) / (x.property + ".json")).string();
      io::write_json_file(path, record);
      t.counterexample_path = path;
    }
    t.counterexample = std::move(record);
  }

  // Registers a property so it is reported even with zero checks.
  void declare(const std::string& name) { tally(name); }

  Rng& rng() { return rng_; }
  const std::vector<Item>& items() const { return items_; }
  bool bundled() const { return bundled_; }
  std::size_t trials() const { return options_.trials; }
  const Item& pick() { return items_[rng_.below(items_.size())]; }

  std::vector<const Item*> euler_items() const {
    std::vector<const Item*> out;
    for (const auto& it : items_)
      if (it.euler) out.push_back(&it);
    return out;
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  PropertyTally& tally(const std::string& name) {
    for (auto& t : report_.properties)
      if (t.name == name) return t;
    PropertyTally t;
    t.name = name;
    report_.properties.push_back(std::move(t));
    return report_.properties.back();
  }

  Options options_;
  std::vector<Item> items_;
  bool bundled_;
  Rng rng_;
  SuiteReport report_;
};

Instance make(const std::string& property, const Item& it) {
  Instance x;
  x.property = property;
  x.complex_name = it.name;
  x.complex = it.complex;
  return x;
}

void calculus_suite(Runner& r) {
  static const char* names[] = {"calculus.dual_involution", "calculus.dual_chi",       "calculus.push_chi",
                                "calculus.push_functorial", "calculus.dual_push",      "calculus.pull_functorial",
                                "calculus.fiber_integral",  "calculus.link_formula",   "calculus.euler_generator"};
  for (const char* n : names) r.declare(n);
  const auto& maps = corpus::map_suite();
  for (std::size_t t = 0; t < r.trials(); ++t) {
    Rng& rng = r.rng();
    const Ring ring = t % 2 == 0 ? Ring::Integers : Ring::Mod2;
    // Every fourth trial uses a bundled map; the rest map a corpus complex
    // into a full simplex.
    std::optional<SimplicialMap> f;
    const Item* item = nullptr;
    Item map_item;
    if (r.bundled() && t % 4 == 3) {
      const auto& m = maps[rng.below(maps.size())];
      f = m.map;
      map_item = {m.name, std::nullopt, false, m.map.domain()};
      item = &map_item;
    } else {
      item = &r.pick();
      f = random_map_to_simplex(item->complex, corpus::full_simplex(static_cast<int>(rng.below(4))), rng);
    }
    const ComplexPtr& k = item->complex;
    const SimplicialMap g = random_map_to_simplex(f->codomain(), corpus::full_simplex(static_cast<int>(rng.below(4)), "u"), rng);
    const ConstructibleFunction a = random_function(k, ring, rng);
    const ConstructibleFunction b = random_function(g.codomain(), ring, rng);

    auto base = [&](const char* p) {
      Instance x = make(p, *item);
      x.codomain = f->codomain();
      x.alpha = a;
      return x;
    };
    r.run(base("calculus.dual_involution"));
    r.run(base("calculus.dual_chi"));
    {
      Instance x = base("calculus.push_chi");
      x.f = f;
      r.run(x);
      x.property = "calculus.dual_push";
      r.run(x);
      x.property = "calculus.fiber_integral";
      x.alpha.reset();
      r.run(x);
      x.property = "calculus.push_functorial";
      x.alpha = a;
      x.third = g.codomain();
      x.g = g;
      r.run(x);
      x.property = "calculus.pull_functorial";
      x.alpha.reset();
      x.beta = b;
      r.run(x);
    }
    {
      Instance x = make("calculus.link_formula", *item);
      x.subcomplex = random_generators(*k, rng);
      r.run(x);
    }
    {
      Instance x = make("calculus.euler_generator", *item);
      x.alpha = random_euler(k, item->euler, rng);
      r.run(x);
    }
  }
}

void stiefel_suite(Runner& r) {
  static const char* names[] = {"stiefel.cycle",     "stiefel.negative_control", "stiefel.normalization",
                                "stiefel.top_class", "stiefel.subdivision",      "stiefel.degree",
                                "stiefel.representative_cycle", "stiefel.census"};
  for (const char* n : names) r.declare(n);
  for (const auto& it : r.items()) {
    const int d = it.complex->dimension();
    for (int i = 0; i <= d && it.euler; ++i) {
      Instance x = make("stiefel.subdivision", it);
      x.i = i;
      r.run(x);
      x.property = "stiefel.cycle";
      r.run(x);
      x.property = "stiefel.normalization";
      r.run(x);
    }
    if (it.euler) {
      Instance x = make("stiefel.degree", it);
      x.alpha = one(it.complex);
      r.run(x);
      if (it.complex->is_pure()) {
        x = make("stiefel.top_class", it);
        r.run(x);
      }
    }
    if (it.documented) {
      Instance x = make("stiefel.census", it);
      x.expected = *it.documented;
      r.run(x);
    }
  }
  {
    const auto& tri = corpus::get("closed_triangle");
    Instance x = make("stiefel.negative_control", {tri.name, tri.euler, tri.euler, tri.complex});
    x.i = 1;
    r.run(x);
  }
  for (std::size_t t = 0; t < r.trials(); ++t) {
    Rng& rng = r.rng();
    const Item& it = r.pick();
    Instance x = make("stiefel.degree", it);
    x.alpha = random_euler(it.complex, it.euler, rng);
    r.run(x);
    x.property = "stiefel.representative_cycle";
    x.i = random_degree(*it.complex, rng);
    r.run(x);
  }
}

void polar_suite(Runner& r) {
  static const char* names[] = {"polar.moment_identity", "polar.moment_precondition", "polar.parity",           "polar.projection_independence",
                                "polar.restriction",     "polar.singularity_cycle", "polar.degree"};
  for (const char* n : names) r.declare(n);
  for (const auto& it : r.items()) {
    for (int i = 0; i <= it.complex->dimension(); ++i) {
      Instance x = make(it.euler ? "polar.moment_identity" : "polar.moment_precondition", it);
      x.i = i;
      r.run(x);
      if (!it.euler) continue;
      const Subdivision sd(it.complex);
      Instance p = make("polar.parity", it);
      p.complex_name = it.name + "'";
      p.complex = sd.subdivided();
      p.map_a = moment_map(sd, i);
      p.i = i;
      r.run(p);
    }
  }
  const auto euler = r.euler_items();
  if (euler.empty()) return;
  for (std::size_t t = 0; t < r.trials(); ++t) {
    Rng& rng = r.rng();
    const Item& it = *euler[t % euler.size()];
    const int i = random_degree(*it.complex, rng);
    // Generic projections of the complex placed on the vertices of a simplex.
    {
      const ComplexPtr emb = corpus::embed_on_simplex_vertices(*it.complex);
      const auto rank = static_cast<std::size_t>(i) + 1;
      const AffineVertexMap fa = projection_map(emb, sample_generic_subspace(emb, rank, rng.next()));
      const AffineVertexMap fb = projection_map(emb, sample_generic_subspace(emb, rank, rng.next()));
      Instance x = make("polar.projection_independence", it);
      x.complex = emb;
      x.map_a = fa;
      x.map_b = fb;
      x.i = i;
      r.run(x);
      x.property = "polar.parity";
      x.map_b.reset();
      r.run(x);
    }
    // Random integer vertex images.
    if (auto f = random_affine_map(it.complex, i, rng)) {
      Instance x = make("polar.parity", it);
      x.map_a = f;
      x.i = i;
      r.run(x);
      x.property = "polar.singularity_cycle";
      x.alpha = random_euler(it.complex, true, rng);
      r.run(x);
    }
    {
      const Item& any = r.pick();
      const int j = random_degree(*any.complex, rng);
      if (auto f = random_affine_map(any.complex, j, rng)) {
        Instance x = make("polar.restriction", any);
        x.map_a = f;
        x.i = j;
        x.subcomplex = random_generators(*any.complex, rng);
        r.run(x);
      }
    }
    {
      const Item& any = r.pick();
      if (auto f = random_affine_map(any.complex, 0, rng)) {
        Instance x = make("polar.degree", any);
        x.map_a = f;
        x.alpha = random_euler(any.complex, any.euler, rng);
        r.run(x);
      }
    }
  }
}

void axioms_suite(Runner& r) {
  static const char* names[] = {"axioms.pushforward", "axioms.additivity", "axioms.manifold_values"};
  for (const char* n : names) r.declare(n);
  auto push = [&](const std::string& name, const SimplicialMap& f, const ConstructibleFunction& a, int i) {
    Instance x;
    x.property = "axioms.pushforward";
    x.complex_name = name;
    x.complex = f.domain();
    x.codomain = f.codomain();
    x.f = f;
    x.alpha = a;
    x.i = i;
    r.run(x);
  };
  if (r.bundled()) {
    const auto& maps = corpus::map_suite();
    for (const auto& m : maps)
      if (is_euler_space(m.map.domain()))
        for (int i = 0; i <= m.map.domain()->dimension(); ++i) push(m.name, m.map, one(m.map.domain()), i);
    for (std::size_t t = 0; t < r.trials(); ++t) {
      Rng& rng = r.rng();
      const auto& m = maps[t % maps.size()];
      const ComplexPtr& k = m.map.domain();
      push(m.name, m.map, random_euler(k, is_euler_space(k), rng), random_degree(*k, rng));
    }
    const std::pair<const char*, std::pair<int, bool>> classical[] = {
        {"rp2_6", {1, false}}, {"torus_7", {1, true}}, {"boundary_tetrahedron", {1, true}}};
    for (const auto& [name, v] : classical) {
      const auto& e = corpus::get(name);
      Instance x = make("axioms.manifold_values", {e.name, e.euler, e.euler, e.complex});
      x.i = v.first;
      x.expected = v.second;
      r.run(x);
    }
  }
  for (std::size_t t = 0; t < r.trials(); ++t) {
    Rng& rng = r.rng();
    const Item& it = r.pick();
    const SimplicialMap f = random_map_to_simplex(it.complex, corpus::full_simplex(static_cast<int>(rng.below(3))), rng);
    push(it.name, f, random_euler(it.complex, it.euler, rng), random_degree(*it.complex, rng));
    Instance x = make("axioms.additivity", it);
    x.alpha = random_euler(it.complex, it.euler, rng);
    x.beta = random_euler(it.complex, it.euler, rng);
    x.i = random_degree(*it.complex, rng);
    r.run(x);
  }
}

const char* base_name(const Instance& x, const ComplexPtr& k) {
  if (k == x.complex) return "complex";
  if (k == x.codomain) return "codomain";
  if (k == x.third) return "third";
  throw Error(ErrorKind::Verify, "instance function lives on an unrecorded complex");
}

ComplexPtr base_from(const Instance& x, const std::string& name) {
  if (name == "complex") return need(x.complex, "complex");
  if (name == "codomain") return need(x.codomain, "codomain");
  if (name == "third") return need(x.third, "third");
  throw Error(ErrorKind::Parse, "counterexample: unknown function base \"" + name + "\"");
}

}  // namespace

ConstructibleFunction random_euler_function(const ComplexPtr& k, std::uint64_t seed) {
  Rng rng(seed);
  return random_euler(k, is_euler_space(k), rng);
}

std::vector<CorpusComplex> bundled_corpus() {
  std::vector<CorpusComplex> out;
  for (const auto& e : corpus::bundled()) out.push_back({e.name, e.euler, e.complex});
  return out;
}

std::vector<CorpusComplex> load_corpus(const std::string& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) throw Error(ErrorKind::Usage, "not a directory: " + directory);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusComplex> out;
  for (const auto& p : files) {
    const io::Json j = io::read_json_file(p.string());
    std::optional<bool> euler;
    if (j.contains("euler_space")) euler = j.at("euler_space").get<bool>();
    out.push_back({p.stem().string(), euler, share(io::parse_complex(j))});
  }
  if (out.empty()) throw Error(ErrorKind::Usage, "no complex files in " + directory);
  return out;
}

io::Json instance_to_json(const Instance& x) {
  io::Json j = io::Json::object();
  j["property"] = x.property;
  j["complex_name"] = x.complex_name;
  j["i"] = x.i;
  if (x.expected) j["expected"] = *x.expected;
  if (x.complex) j["complex"] = io::complex_to_json(*x.complex);
  if (x.codomain) j["codomain"] = io::complex_to_json(*x.codomain);
  if (x.third) j["third"] = io::complex_to_json(*x.third);
  if (x.f) j["f"] = io::map_to_json(*x.f);
  if (x.g) j["g"] = io::map_to_json(*x.g);
  if (x.alpha) {
    j["alpha"] = io::function_to_json(*x.alpha);
    j["alpha_on"] = base_name(x, x.alpha->base());
  }
  if (x.beta) {
    j["beta"] = io::function_to_json(*x.beta);
    j["beta_on"] = base_name(x, x.beta->base());
  }
  if (x.map_a) j["map_a"] = io::affine_map_to_json(*x.map_a);
  if (x.map_b) j["map_b"] = io::affine_map_to_json(*x.map_b);
  if (!x.subcomplex.empty()) j["subcomplex"] = x.subcomplex;
  return j;
}

Instance instance_from_json(const io::Json& j) {
  try {
    Instance x;
    x.property = j.at("property").get<std::string>();
    x.complex_name = j.value("complex_name", std::string());
    x.i = j.value("i", 0);
    if (j.contains("expected")) x.expected = j.at("expected").get<bool>();
    if (j.contains("complex")) x.complex = share(io::parse_complex(j.at("complex")));
    if (j.contains("codomain")) x.codomain = share(io::parse_complex(j.at("codomain")));
    if (j.contains("third")) x.third = share(io::parse_complex(j.at("third")));
    if (j.contains("f")) x.f = io::parse_map(j.at("f"), need(x.complex, "complex"), need(x.codomain, "codomain"));
    if (j.contains("g")) x.g = io::parse_map(j.at("g"), need(x.codomain, "codomain"), need(x.third, "third"));
    if (j.contains("alpha"))
      x.alpha = io::parse_function(j.at("alpha"), base_from(x, j.value("alpha_on", std::string("complex"))));
    if (j.contains("beta"))
      x.beta = io::parse_function(j.at("beta"), base_from(x, j.value("beta_on", std::string("complex"))));
    if (j.contains("map_a")) x.map_a = io::parse_affine_map(j.at("map_a"), need(x.complex, "complex"));
    if (j.contains("map_b")) x.map_b = io::parse_affine_map(j.at("map_b"), need(x.complex, "complex"));
    if (j.contains("subcomplex")) x.subcomplex = j.at("subcomplex").get<std::vector<std::vector<VertexId>>>();
    return x;
  } catch (const io::Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("counterexample: ") + e.what());
  }
}

CheckOutcome check(const Instance& x) {
  const auto& r = registry();
  const auto it = r.find(x.property);
  if (it == r.end()) throw Error(ErrorKind::Usage, "unknown property \"" + x.property + "\"");
  try {
    return it->second(x);
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, checker] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"calculus", "stiefel", "polar", "axioms"};
  return names;
}

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& t) { return t.failures == 0; });
}

SuiteReport run_suite(const Options& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), options.suite) == names.end())
    throw Error(ErrorKind::Usage, "unknown suite \"" + options.suite + "\" (expected calculus, stiefel, polar or axioms)");
  const bool bundled = !options.complexes_directory;
  const auto corpus = bundled ? bundled_corpus() : load_corpus(*options.complexes_directory);
  std::vector<Item> items;
  for (const auto& c : corpus) items.push_back({c.name, c.euler, is_euler_space(c.complex), c.complex});
  Runner r(options, std::move(items), bundled);
  if (options.suite == "calculus") calculus_suite(r);
  else if (options.suite == "stiefel") stiefel_suite(r);
  else if (options.suite == "polar") polar_suite(r);
  else axioms_suite(r);
  return r.finish();
}

io::Json report_to_json(const SuiteReport& r) {
  io::Json j = io::Json::object();
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed();
  io::Json props = io::Json::array();
  for (const auto& t : r.properties) {
    io::Json p = io::Json::object();
    p["name"] = t.name;
    p["checks"] = t.checks;
    p["failures"] = t.failures;
    if (t.failures) {
      p["detail"] = t.detail;
      if (t.counterexample_path) p["counterexample_file"] = *t.counterexample_path;
      p["counterexample"] = *t.counterexample;
    }
    props.push_back(std::move(p));
  }
  j["properties"] = std::move(props);
  return j;
}

std::string report_to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " seed " << r.seed << " trials " << r.trials << "\n";
  for (const auto& t : r.properties) {
    out << (t.failures ? "FAIL " : "PASS ") << t.name << " " << (t.checks - t.failures) << "/" << t.checks;
    if (t.failures) {
      out << " (" << t.detail << ")";
      if (t.counterexample_path) out << " counterexample: " << *t.counterexample_path;
    }
    out << "\n";
  }
  out << (r.passed() ? "passed" : "failed") << "\n";
  return out.str();
}

CheckOutcome replay(const io::Json& counterexample) { return check(instance_from_json(counterexample)); }

}  // namespace whitney::verify
