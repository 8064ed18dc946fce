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

#include "whitney/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "whitney/error.hpp"

namespace whitney::io {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Parse, message); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::int64_t as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<VertexId> as_id_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of vertex ids");
  std::vector<VertexId> ids;
  for (const auto& x : j) ids.push_back(as_string(x, "vertex id"));
  return ids;
}

Point as_point(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of rationals");
  Point p;
  for (const auto& x : j) p.push_back(parse_rational(as_string(x, "rational")));
  return p;
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(format_rational(x));
  return out;
}

Json ids_json(const std::vector<VertexId>& ids) {
  Json out = Json::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

template <class Fn>
auto wrap_json_errors(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  return wrap_json_errors([&] { return Json::parse(text.begin(), text.end()); });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const Error& e) {
    fail(path + ": " + e.what());
  }
}

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write \"" + path + "\"");
  out << dump(value);
}

std::vector<std::string> split_simplex_key(std::string_view key) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : key) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  parts.push_back(current);
  return parts;
}

SimplicialComplex parse_complex(const Json& j) {
  return wrap_json_errors([&] {
    std::vector<VertexId> vertices = as_id_list(member(j, "vertices"), "\"vertices\"");
    const Json& maximal = member(j, "maximal_simplices");
    if (!maximal.is_array()) fail("\"maximal_simplices\" must be an array");
    std::vector<std::vector<VertexId>> simplices;
    for (const auto& s : maximal) simplices.push_back(as_id_list(s, "simplex"));
    std::optional<std::map<VertexId, Point>> coords;
    if (auto it = j.find("coordinates"); it != j.end()) {
      if (!it->is_object()) fail("\"coordinates\" must be an object");
      coords.emplace();
      for (const auto& [id, p] : it->items()) coords->emplace(id, as_point(p, "coordinate"));
    }
    return SimplicialComplex::build(std::move(vertices), simplices, std::move(coords));
  });
}

Json complex_to_json(const SimplicialComplex& k) {
  Json out = Json::object();
  Json vertices = Json::array();
  for (const auto& id : k.vertex_ids()) vertices.push_back(id);
  out["vertices"] = std::move(vertices);
  Json maximal = Json::array();
  for (SimplexIndex s : k.maximal_simplices()) maximal.push_back(ids_json(k.simplex_ids(s)));
  out["maximal_simplices"] = std::move(maximal);
  if (k.has_coordinates()) {
    Json coords = Json::object();
    for (Vertex v = 0; v < k.vertex_count(); ++v) coords[k.vertex_id(v)] = point_json(k.coordinate(v));
    out["coordinates"] = std::move(coords);
  }
  return out;
}

SimplicialMap parse_map(const Json& j, ComplexPtr domain, ComplexPtr codomain) {
  return wrap_json_errors([&] {
    const Json& vm = member(j, "vertex_map");
    if (!vm.is_object()) fail("\"vertex_map\" must be an object");
    std::map<VertexId, VertexId> assignment;
    for (const auto& [id, image] : vm.items()) assignment.emplace(id, as_string(image, "vertex image"));
    return validate_map(std::move(domain), std::move(codomain), assignment);
  });
}

Json map_to_json(const SimplicialMap& f) {
  Json vm = Json::object();
  for (Vertex v = 0; v < f.domain()->vertex_count(); ++v) vm[f.domain()->vertex_id(v)] = f.codomain()->vertex_id(f(v));
  Json out = Json::object();
  out["vertex_map"] = std::move(vm);
  return out;
}

ConstructibleFunction parse_function(const Json& j, ComplexPtr k) {
  return wrap_json_errors([&] {
    const std::string ring_name = as_string(member(j, "ring"), "\"ring\"");
    Ring ring;
    if (ring_name == "Z") ring = Ring::Integers;
    else if (ring_name == "Z2") ring = Ring::Mod2;
    else fail("unknown ring \"" + ring_name + "\" (expected Z or Z2)");

    const bool has_terms = j.contains("terms");
    const bool has_values = j.contains("values");
    if (has_terms == has_values) fail("function file needs exactly one of \"terms\" or \"values\"");

    if (has_terms) {
      const Json& terms = j.at("terms");
      if (!terms.is_array()) fail("\"terms\" must be an array");
      std::vector<IndicatorTerm> parsed;
      for (const auto& term : terms) {
        IndicatorTerm t;
        t.coefficient = as_integer(member(term, "coeff"), "\"coeff\"");
        const Json& support = member(term, "closed_support");
        if (!support.is_array()) fail("\"closed_support\" must be an array of simplices");
        for (const auto& s : support) {
          const auto ids = as_id_list(s, "simplex");
          auto found = k->find_ids(ids);
          if (!found) {
            // Name the smallest missing face so the report points at the gap.
            std::vector<VertexId> missing = ids;
            for (std::size_t size = 1; size <= ids.size(); ++size) {
              bool hit = false;
              for (std::uint32_t mask = 1; mask < (1u << ids.size()) && !hit; ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
                std::vector<VertexId> face;
                for (std::size_t b = 0; b < ids.size(); ++b)
                  if (mask & (1u << b)) face.push_back(ids[b]);
                if (!k->find_ids(face)) {
                  missing = face;
                  hit = true;
                }
              }
              if (hit) break;
            }
            std::string label;
            for (const auto& id : missing) label += (label.empty() ? "" : ",") + id;
            throw Error(ErrorKind::Calculus, "closed support is not a subcomplex: face {" + label + "} is missing");
          }
          t.generators.push_back(*found);
        }
        parsed.push_back(std::move(t));
      }
      return indicator_sum(k, ring, parsed);
    }

    const Json& values = j.at("values");
    if (!values.is_object()) fail("\"values\" must be an object");
    std::vector<std::int64_t> table(k->size(), 0);
    std::vector<bool> seen(k->size(), false);
    for (const auto& [key, value] : values.items()) {
      const auto ids = split_simplex_key(key);
      auto found = k->find_ids(ids);
      if (!found) throw Error(ErrorKind::Calculus, "value given for {" + key + "}, which is not a simplex");
      if (seen[*found]) fail("simplex {" + key + "} is given twice");
      seen[*found] = true;
      const std::int64_t v = as_integer(value, "function value");
      if (ring == Ring::Mod2 && v != 0 && v != 1) fail("value " + std::to_string(v) + " at {" + key + "} is not in Z2");
      table[*found] = v;
    }
    return ConstructibleFunction(k, ring, std::move(table));
  });
}

Json function_to_json(const ConstructibleFunction& a) {
  const SimplicialComplex& k = *a.base();
  Json values = Json::object();
  for (SimplexIndex s = 0; s < k.size(); ++s) values[k.label(s)] = a[s];
  Json out = Json::object();
  out["ring"] = to_string(a.ring());
  out["values"] = std::move(values);
  return out;
}

Mod2Chain parse_chain(const Json& j, ComplexPtr k) {
  return wrap_json_errors([&] {
    const std::int64_t dim = as_integer(member(j, "dim"), "\"dim\"");
    if (dim < 0) fail("\"dim\" must be non-negative");
    const Json& simplices = member(j, "simplices");
    if (!simplices.is_array()) fail("\"simplices\" must be an array");
    std::vector<std::vector<VertexId>> list;
    for (const auto& s : simplices) list.push_back(as_id_list(s, "simplex"));
    Mod2Chain c = Mod2Chain::from_ids(k, static_cast<int>(dim), list);
    if (c.size() != list.size()) fail("chain lists a simplex more than once");
    return c;
  });
}

Json chain_to_json(const Mod2Chain& c, const Json& provenance) {
  Json out = Json::object();
  for (const auto& [key, value] : provenance.items())
    if (key != "dim" && key != "simplices") out[key] = value;
  out["dim"] = c.dimension();
  Json simplices = Json::array();
  for (SimplexIndex s : c.support()) simplices.push_back(ids_json(c.base()->simplex_ids(s)));
  out["simplices"] = std::move(simplices);
  return out;
}

std::vector<Point> parse_basis(const Json& j) {
  return wrap_json_errors([&] {
    const std::int64_t n = as_integer(member(j, "ambient_dim"), "\"ambient_dim\"");
    if (n < 1) fail("\"ambient_dim\" must be positive");
    const Json& vectors = member(j, "vectors");
    if (!vectors.is_array() || vectors.empty()) fail("\"vectors\" must be a non-empty array");
    std::vector<Point> basis;
    for (const auto& v : vectors) {
      Point p = as_point(v, "basis vector");
      if (p.size() != static_cast<std::size_t>(n))
        fail("basis vector has " + std::to_string(p.size()) + " components, expected " + std::to_string(n));
      basis.push_back(std::move(p));
    }
    return basis;
  });
}

Json basis_to_json(const std::vector<Point>& basis, std::size_t ambient_dimension) {
  Json out = Json::object();
  out["ambient_dim"] = ambient_dimension;
  Json vectors = Json::array();
  for (const auto& b : basis) vectors.push_back(point_json(b));
  out["vectors"] = std::move(vectors);
  return out;
}

AffineVertexMap parse_affine_map(const Json& j, ComplexPtr k) {
  return wrap_json_errors([&] {
    const std::int64_t m = as_integer(member(j, "target_dim"), "\"target_dim\"");
    if (m < 1) fail("\"target_dim\" must be positive");
    const Json& images = member(j, "images");
    if (!images.is_object()) fail("\"images\" must be an object");
    std::map<VertexId, Point> table;
    for (const auto& [id, p] : images.items()) table.emplace(id, as_point(p, "image"));
    return AffineVertexMap::from_ids(std::move(k), static_cast<std::size_t>(m), table);
  });
}

Json affine_map_to_json(const AffineVertexMap& f) {
  Json images = Json::object();
  for (Vertex v = 0; v < f.domain()->vertex_count(); ++v) images[f.domain()->vertex_id(v)] = point_json(f.image(v));
  Json out = Json::object();
  out["target_dim"] = f.target_dimension();
  out["images"] = std::move(images);
  return out;
}

Json subdivision_manifest(const Subdivision& sd) {
  const SimplicialComplex& kp = *sd.subdivided();
  Json carriers = Json::object();
  for (Vertex v = 0; v < kp.vertex_count(); ++v)
    carriers[kp.vertex_id(v)] = ids_json(sd.base()->simplex_ids(sd.carrier_of_vertex(v)));
  Json out = Json::object();
  out["carriers"] = std::move(carriers);
  return out;
}

Json homology_to_json(const HomologySummary& h) {
  Json out = Json::object();
  out["betti"] = h.betti;
  out["boundary_rank"] = h.boundary_rank;
  return out;
}

Json euler_check_to_json(const SimplicialComplex& k, const EulerCheck& check) {
  Json out = Json::object();
  out["euler"] = check.euler;
  Json offenders = Json::array();
  for (SimplexIndex s : check.offenders) offenders.push_back(ids_json(k.simplex_ids(s)));
  out["offenders"] = std::move(offenders);
  return out;
}

Json half_link_report_to_json(const SimplicialComplex& k, const HalfLinkReport& r) {
  Json out = Json::object();
  out["simplex"] = ids_json(k.simplex_ids(r.simplex));
  Json plane = Json::object();
  plane["normal"] = point_json(r.plane.normal);
  plane["offset"] = format_rational(r.plane.offset);
  out["plane"] = std::move(plane);
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cell = Json::object();
    cell["link_simplex"] = ids_json(k.simplex_ids(c.link_simplex));
    cell["positive"] = c.positive;
    cell["negative"] = c.negative;
    cell["slice"] = c.slice;
    cells.push_back(std::move(cell));
  }
  out["cells"] = std::move(cells);
  out["chi_plus"] = r.chi_plus;
  out["chi_minus"] = r.chi_minus;
  out["weighted_plus"] = r.weighted_plus;
  out["weighted_minus"] = r.weighted_minus;
  return out;
}

Json nondegeneracy_to_json(const SimplicialComplex& k, const NondegeneracyReport& r) {
  Json out = Json::object();
  out["holds"] = r.nondegenerate;
  if (r.offending) out["offending"] = ids_json(k.simplex_ids(*r.offending));
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

}  // namespace whitney::io
