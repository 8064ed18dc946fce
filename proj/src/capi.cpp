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

#include "whitney/whitney.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "whitney/corpus.hpp"
#include "whitney/error.hpp"
#include "whitney/euler_calculus.hpp"
#include "whitney/homology.hpp"
#include "whitney/io.hpp"
#include "whitney/polar.hpp"
#include "whitney/simplicial.hpp"
#include "whitney/sw_classes.hpp"
#include "whitney/verify.hpp"

struct whitney_complex {
  whitney::ComplexPtr k;
};
struct whitney_function {
  whitney::ConstructibleFunction f;
};
struct whitney_map {
  whitney::SimplicialMap m;
};
struct whitney_chain {
  whitney::Mod2Chain c;
};
struct whitney_affine_map {
  whitney::AffineVertexMap f;
};

namespace {

using whitney::Error;
using whitney::ErrorKind;
using whitney::io::Json;

thread_local std::string last_error;

whitney_status status_of(ErrorKind kind) { return static_cast<whitney_status>(static_cast<int>(kind)); }

template <class F>
whitney_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return WHITNEY_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WHITNEY_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WHITNEY_E_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) throw Error(ErrorKind::Usage, std::string(what) + " is NULL");
  return *p;
}

template <class T>
T* need_out(T* p, const char* what) {
  if (!p) throw Error(ErrorKind::Usage, std::string(what) + " is NULL");
  return p;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const Json& j) { *need_out(out, "output") = copy_string(whitney::io::dump(j)); }

std::string read_text(const char* p, const char* what) {
  if (!p) throw Error(ErrorKind::Usage, std::string(what) + " is NULL");
  return std::string(p);
}

std::string detect_kind(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "artifact is not a JSON object");
  if (j.contains("property")) return "counterexample";
  if (j.contains("maximal_simplices") || j.contains("vertices")) return "complex";
  if (j.contains("vertex_map")) return "map";
  if (j.contains("ring")) return "function";
  if (j.contains("carriers")) return "manifest";
  if (j.contains("vectors")) return "basis";
  if (j.contains("images")) return "affine_map";
  if (j.contains("simplices")) return "chain";
  throw Error(ErrorKind::Parse, "unrecognised artifact (no known top-level key)");
}

const whitney::ComplexPtr& need_complex(const whitney_complex* k, const std::string& kind) {
  if (!k) throw Error(ErrorKind::Usage, "validating a " + kind + " file needs --complex");
  return k->k;
}

void validate_manifest(const Json& j, const whitney_complex* k) {
  const Json& carriers = j.at("carriers");
  if (!carriers.is_object()) throw Error(ErrorKind::Parse, "\"carriers\" must be an object");
  for (const auto& [key, value] : carriers.items()) {
    if (!value.is_array()) throw Error(ErrorKind::Parse, "carrier of \"" + key + "\" must be an array");
    for (const auto& id : value)
      if (!id.is_string()) throw Error(ErrorKind::Parse, "carrier of \"" + key + "\" must list vertex ids");
  }
  if (k) {
    const whitney::Subdivision sd(k->k);
    if (whitney::io::subdivision_manifest(sd) != j)
      throw Error(ErrorKind::Simplicial, "manifest does not match the subdivision of the given complex");
  }
}

}  // namespace

extern "C" {

const char* whitney_version(void) { return "0.1.0"; }

const char* whitney_last_error(void) { return last_error.c_str(); }

const char* whitney_status_name(whitney_status status) {
  if (status == WHITNEY_OK) return "ok";
  if (status < WHITNEY_E_USAGE || status > WHITNEY_E_INTERNAL) return "unknown";
  return whitney::to_string(static_cast<ErrorKind>(status));
}

void whitney_string_free(char* s) { std::free(s); }

// ---- complexes

whitney_status whitney_complex_from_json(const char* json, whitney_complex** out) {
  return guard([&] {
    auto k = whitney::share(whitney::io::parse_complex(whitney::io::parse_json(read_text(json, "json"))));
    *need_out(out, "output") = new whitney_complex{std::move(k)};
  });
}

whitney_status whitney_complex_load(const char* path, whitney_complex** out) {
  return guard([&] {
    auto k = whitney::share(whitney::io::parse_complex(whitney::io::read_json_file(read_text(path, "path"))));
    *need_out(out, "output") = new whitney_complex{std::move(k)};
  });
}

whitney_status whitney_complex_bundled(const char* name, whitney_complex** out) {
  return guard([&] { *need_out(out, "output") = new whitney_complex{whitney::corpus::get(read_text(name, "name")).complex}; });
}

void whitney_complex_free(whitney_complex* k) { delete k; }

whitney_status whitney_complex_to_json(const whitney_complex* k, char** out) {
  return guard([&] { put(out, whitney::io::complex_to_json(*need(k, "complex").k)); });
}

whitney_status whitney_complex_dimension(const whitney_complex* k, int* out) {
  return guard([&] { *need_out(out, "output") = need(k, "complex").k->dimension(); });
}

whitney_status whitney_complex_size(const whitney_complex* k, size_t* out) {
  return guard([&] { *need_out(out, "output") = need(k, "complex").k->size(); });
}

whitney_status whitney_complex_euler_characteristic(const whitney_complex* k, int64_t* out) {
  return guard([&] { *need_out(out, "output") = whitney::euler_characteristic(*need(k, "complex").k); });
}

whitney_status whitney_subdivide(const whitney_complex* k, whitney_complex** out_subdivided, char** out_manifest) {
  return guard([&] {
    const whitney::Subdivision sd(need(k, "complex").k);
    need_out(out_subdivided, "output");
    if (out_manifest) put(out_manifest, whitney::io::subdivision_manifest(sd));
    *out_subdivided = new whitney_complex{sd.subdivided()};
  });
}

whitney_status whitney_homology(const whitney_complex* k, char** out) {
  return guard([&] { put(out, whitney::io::homology_to_json(whitney::betti_mod2(*need(k, "complex").k))); });
}

whitney_status whitney_euler_check(const whitney_complex* k, const whitney_function* fn, char** out) {
  return guard([&] {
    const auto& base = need(k, "complex").k;
    if (fn && !whitney::same_complex(fn->f.base(), base))
      throw Error(ErrorKind::Calculus, "function is not based on the given complex");
    const auto check = fn ? whitney::check_euler_function(fn->f) : whitney::check_euler_space(base);
    put(out, whitney::io::euler_check_to_json(*base, check));
  });
}

whitney_status whitney_corpus_list(char** out) {
  return guard([&] {
    Json list = Json::array();
    for (const auto& e : whitney::corpus::bundled()) {
      Json entry = Json::object();
      entry["name"] = e.name;
      entry["description"] = e.description;
      entry["euler_space"] = e.euler;
      list.push_back(std::move(entry));
    }
    put(out, list);
  });
}

// ---- functions

whitney_status whitney_function_from_json(const whitney_complex* k, const char* json, whitney_function** out) {
  return guard([&] {
    auto f = whitney::io::parse_function(whitney::io::parse_json(read_text(json, "json")), need(k, "complex").k);
    *need_out(out, "output") = new whitney_function{std::move(f)};
  });
}

whitney_status whitney_function_load(const whitney_complex* k, const char* path, whitney_function** out) {
  return guard([&] {
    auto f = whitney::io::parse_function(whitney::io::read_json_file(read_text(path, "path")), need(k, "complex").k);
    *need_out(out, "output") = new whitney_function{std::move(f)};
  });
}

whitney_status whitney_function_constant(const whitney_complex* k, int mod2, int64_t value, whitney_function** out) {
  return guard([&] {
    auto f = whitney::ConstructibleFunction::constant(need(k, "complex").k,
                                                      mod2 ? whitney::Ring::Mod2 : whitney::Ring::Integers, value);
    *need_out(out, "output") = new whitney_function{std::move(f)};
  });
}

void whitney_function_free(whitney_function* fn) { delete fn; }

whitney_status whitney_function_to_json(const whitney_function* fn, char** out) {
  return guard([&] { put(out, whitney::io::function_to_json(need(fn, "function").f)); });
}

whitney_status whitney_function_chi(const whitney_function* fn, int64_t* out) {
  return guard([&] { *need_out(out, "output") = whitney::chi(need(fn, "function").f); });
}

whitney_status whitney_function_dual(const whitney_function* fn, whitney_function** out) {
  return guard([&] { *need_out(out, "output") = new whitney_function{whitney::dual(need(fn, "function").f)}; });
}

whitney_status whitney_function_is_euler(const whitney_function* fn, int* out) {
  return guard([&] { *need_out(out, "output") = whitney::is_euler_function(need(fn, "function").f) ? 1 : 0; });
}

whitney_status whitney_function_lift(const whitney_function* fn, whitney_function** out) {
  return guard([&] {
    const auto& f = need(fn, "function").f;
    const whitney::Subdivision sd(f.base());
    *need_out(out, "output") = new whitney_function{whitney::lift_to_subdivision(sd, f)};
  });
}

// ---- maps

whitney_status whitney_map_from_json(const whitney_complex* domain, const whitney_complex* codomain, const char* json,
                                     whitney_map** out) {
  return guard([&] {
    auto m = whitney::io::parse_map(whitney::io::parse_json(read_text(json, "json")), need(domain, "domain").k,
                                    need(codomain, "codomain").k);
    *need_out(out, "output") = new whitney_map{std::move(m)};
  });
}

whitney_status whitney_map_load(const whitney_complex* domain, const whitney_complex* codomain, const char* path,
                                whitney_map** out) {
  return guard([&] {
    auto m = whitney::io::parse_map(whitney::io::read_json_file(read_text(path, "path")), need(domain, "domain").k,
                                    need(codomain, "codomain").k);
    *need_out(out, "output") = new whitney_map{std::move(m)};
  });
}

void whitney_map_free(whitney_map* f) { delete f; }

whitney_status whitney_pushforward(const whitney_map* f, const whitney_function* fn, whitney_function** out) {
  return guard([&] {
    *need_out(out, "output") = new whitney_function{whitney::pushforward(need(f, "map").m, need(fn, "function").f)};
  });
}

whitney_status whitney_pullback(const whitney_map* f, const whitney_function* fn, whitney_function** out) {
  return guard([&] {
    *need_out(out, "output") = new whitney_function{whitney::pullback(need(f, "map").m, need(fn, "function").f)};
  });
}

// ---- chains

whitney_status whitney_chain_from_json(const whitney_complex* k, const char* json, whitney_chain** out) {
  return guard([&] {
    auto c = whitney::io::parse_chain(whitney::io::parse_json(read_text(json, "json")), need(k, "complex").k);
    *need_out(out, "output") = new whitney_chain{std::move(c)};
  });
}

whitney_status whitney_chain_load(const whitney_complex* k, const char* path, whitney_chain** out) {
  return guard([&] {
    auto c = whitney::io::parse_chain(whitney::io::read_json_file(read_text(path, "path")), need(k, "complex").k);
    *need_out(out, "output") = new whitney_chain{std::move(c)};
  });
}

void whitney_chain_free(whitney_chain* c) { delete c; }

whitney_status whitney_chain_to_json(const whitney_chain* c, const char* provenance, char** out) {
  return guard([&] {
    const Json p = provenance ? whitney::io::parse_json(provenance) : Json::object();
    if (!p.is_object()) throw Error(ErrorKind::Usage, "provenance must be a JSON object");
    put(out, whitney::io::chain_to_json(need(c, "chain").c, p));
  });
}

whitney_status whitney_chain_size(const whitney_chain* c, size_t* out) {
  return guard([&] { *need_out(out, "output") = need(c, "chain").c.size(); });
}

whitney_status whitney_chain_equal(const whitney_chain* a, const whitney_chain* b, int* out) {
  return guard([&] { *need_out(out, "output") = need(a, "chain").c == need(b, "chain").c ? 1 : 0; });
}

whitney_status whitney_chain_is_cycle(const whitney_chain* c, int* out) {
  return guard([&] { *need_out(out, "output") = whitney::is_cycle(need(c, "chain").c) ? 1 : 0; });
}

whitney_status whitney_chain_bounds(const whitney_chain* c, int* out_bounds, whitney_chain** out_witness) {
  return guard([&] {
    auto decision = whitney::is_boundary(need(c, "chain").c);
    *need_out(out_bounds, "output") = decision.bounds ? 1 : 0;
    if (out_witness) *out_witness = decision.witness ? new whitney_chain{std::move(*decision.witness)} : nullptr;
  });
}

whitney_status whitney_chain_homologous(const whitney_chain* a, const whitney_chain* b, int* out) {
  return guard([&] { *need_out(out, "output") = whitney::homologous(need(a, "chain").c, need(b, "chain").c) ? 1 : 0; });
}

whitney_status whitney_stiefel_chain(const whitney_complex* k, int i, const whitney_function* fn, whitney_chain** out) {
  return guard([&] {
    const whitney::Subdivision sd(need(k, "complex").k);
    need_out(out, "output");
    if (fn) {
      if (!whitney::same_complex(fn->f.base(), sd.base()))
        throw Error(ErrorKind::Classes, "function is not based on the given complex");
      *out = new whitney_chain{whitney::sw_representative(sd, fn->f, i)};
    } else {
      if (i < 0 || i > sd.base()->dimension())
        throw Error(ErrorKind::Classes, "Stiefel chain dimension " + std::to_string(i) + " outside [0, " +
                                            std::to_string(sd.base()->dimension()) + "]");
      *out = new whitney_chain{whitney::stiefel_chain(sd, i)};
    }
  });
}

whitney_status whitney_subdivide_chain(const whitney_chain* c, whitney_chain** out) {
  return guard([&] {
    const auto& chain = need(c, "chain").c;
    const whitney::Subdivision sd(chain.base());
    *need_out(out, "output") = new whitney_chain{whitney::subdivision_chain_map(sd, chain)};
  });
}

// ---- affine maps

whitney_status whitney_affine_map_from_json(const whitney_complex* k, const char* json, whitney_affine_map** out) {
  return guard([&] {
    auto f = whitney::io::parse_affine_map(whitney::io::parse_json(read_text(json, "json")), need(k, "complex").k);
    *need_out(out, "output") = new whitney_affine_map{std::move(f)};
  });
}

whitney_status whitney_affine_map_load(const whitney_complex* k, const char* path, whitney_affine_map** out) {
  return guard([&] {
    auto f = whitney::io::parse_affine_map(whitney::io::read_json_file(read_text(path, "path")), need(k, "complex").k);
    *need_out(out, "output") = new whitney_affine_map{std::move(f)};
  });
}

void whitney_affine_map_free(whitney_affine_map* f) { delete f; }

whitney_status whitney_affine_map_to_json(const whitney_affine_map* f, char** out) {
  return guard([&] { put(out, whitney::io::affine_map_to_json(need(f, "affine map").f)); });
}

whitney_status whitney_moment_map(const whitney_complex* k, int i, whitney_affine_map** out) {
  return guard([&] {
    const whitney::Subdivision sd(need(k, "complex").k);
    *need_out(out, "output") = new whitney_affine_map{whitney::moment_map(sd, i)};
  });
}

whitney_status whitney_projection_map(const whitney_complex* k, const char* basis_json, whitney_affine_map** out) {
  return guard([&] {
    const auto basis = whitney::io::parse_basis(whitney::io::parse_json(read_text(basis_json, "basis")));
    *need_out(out, "output") = new whitney_affine_map{whitney::projection_map(need(k, "complex").k, basis)};
  });
}

whitney_status whitney_random_projection(const whitney_complex* k, int i, uint64_t seed, whitney_affine_map** out,
                                         char** out_basis) {
  return guard([&] {
    const auto& base = need(k, "complex").k;
    if (i < 0) throw Error(ErrorKind::Polar, "projection rank must be positive");
    if (!base->has_coordinates()) throw Error(ErrorKind::Polar, "random projection needs vertex coordinates");
    const auto basis = whitney::sample_generic_subspace(base, static_cast<std::size_t>(i) + 1, seed);
    need_out(out, "output");
    if (out_basis) put(out_basis, whitney::io::basis_to_json(basis, base->ambient_dimension()));
    *out = new whitney_affine_map{whitney::projection_map(base, basis)};
  });
}

whitney_status whitney_nondegeneracy(const whitney_affine_map* f, int i, char** out) {
  return guard([&] {
    const auto& map = need(f, "affine map").f;
    const auto& k = *map.domain();
    Json j = Json::object();
    j["per_simplex"] = whitney::io::nondegeneracy_to_json(k, whitney::check_nondegenerate(map, i));
    j["rank_generic"] = whitney::io::nondegeneracy_to_json(k, whitney::check_rank_generic(map));
    j["star_general_position"] =
        whitney::io::nondegeneracy_to_json(k, whitney::check_star_general_position(map, i));
    put(out, j);
  });
}

whitney_status whitney_polar_chain(const whitney_affine_map* f, const whitney_function* fn, int i, whitney_chain** out,
                                   char** out_report) {
  return guard([&] {
    const auto& map = need(f, "affine map").f;
    const auto a = fn ? fn->f : whitney::ConstructibleFunction::constant(map.domain(), whitney::Ring::Mod2, 1);
    std::vector<whitney::HalfLinkReport> reports;
    auto chain = whitney::euler_singularity_chain(map, a, i, out_report ? &reports : nullptr);
    need_out(out, "output");
    if (out_report) {
      Json j = Json::object();
      j["i"] = i;
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(whitney::io::half_link_report_to_json(*map.domain(), r));
      j["simplices"] = std::move(list);
      put(out_report, j);
    }
    *out = new whitney_chain{std::move(chain)};
  });
}

// ---- verification

whitney_status whitney_verify(const char* suite, uint64_t seed, size_t trials, const char* complexes_dir,
                              const char* counterexample_dir, int* out_passed, char** out_report_json,
                              char** out_report_text) {
  return guard([&] {
    whitney::verify::Options o;
    o.suite = read_text(suite, "suite");
    o.seed = seed;
    o.trials = trials;
    if (complexes_dir) o.complexes_directory = complexes_dir;
    if (counterexample_dir) o.counterexample_directory = counterexample_dir;
    const auto report = whitney::verify::run_suite(o);
    *need_out(out_passed, "output") = report.passed() ? 1 : 0;
    if (out_report_json) put(out_report_json, whitney::verify::report_to_json(report));
    if (out_report_text) *out_report_text = copy_string(whitney::verify::report_to_text(report));
  });
}

whitney_status whitney_replay(const char* counterexample_json, int* out_holds, char** out_detail) {
  return guard([&] {
    const auto r = whitney::verify::replay(whitney::io::parse_json(read_text(counterexample_json, "json")));
    *need_out(out_holds, "output") = r.holds ? 1 : 0;
    if (out_detail) *out_detail = copy_string(r.detail);
  });
}

whitney_status whitney_validate_file(const char* path, const whitney_complex* complex,
                                     const whitney_complex* codomain, char** out) {
  Json diag = Json::object();
  diag["path"] = path ? path : "";
  const whitney_status status = guard([&] {
    const Json j = whitney::io::read_json_file(read_text(path, "path"));
    const std::string kind = detect_kind(j);
    diag["kind"] = kind;
    if (kind == "complex") {
      whitney::io::parse_complex(j);
    } else if (kind == "map") {
      need_complex(complex, kind);
      if (!codomain) throw Error(ErrorKind::Usage, "validating a map file needs --codomain");
      whitney::io::parse_map(j, complex->k, codomain->k);
    } else if (kind == "function") {
      whitney::io::parse_function(j, need_complex(complex, kind));
    } else if (kind == "chain") {
      whitney::io::parse_chain(j, need_complex(complex, kind));
    } else if (kind == "basis") {
      whitney::io::parse_basis(j);
    } else if (kind == "affine_map") {
      whitney::io::parse_affine_map(j, need_complex(complex, kind));
    } else if (kind == "manifest") {
      validate_manifest(j, complex);
    } else {
      whitney::verify::instance_from_json(j);
    }
  });
  diag["valid"] = status == WHITNEY_OK;
  if (status != WHITNEY_OK) {
    Json error = Json::object();
    error["code"] = static_cast<int>(status);
    error["family"] = whitney_status_name(status);
    error["message"] = last_error;
    diag["error"] = std::move(error);
  }
  const std::string saved = last_error;
  const whitney_status put_status = guard([&] { put(out, diag); });
  if (put_status != WHITNEY_OK) return put_status;
  last_error = saved;
  return status;
}

}  // extern "C"
