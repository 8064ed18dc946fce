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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "whitney/euler_calculus.hpp"
#include "whitney/homology.hpp"
#include "whitney/polar.hpp"
#include "whitney/simplicial.hpp"

// Readers and writers for the JSON artifact files. Writers emit keys and
// simplices in canonical order so equal values serialize to equal bytes.
namespace whitney::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
Json parse_json(std::string_view text);
void write_json_file(const std::string& path, const Json& value);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& value);

/// Splits "a,b(c,d),e" at top-level commas.
std::vector<std::string> split_simplex_key(std::string_view key);

// {"vertices":[...], "maximal_simplices":[[...]], "coordinates":{id:["p/q",...]}}
SimplicialComplex parse_complex(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

// {"vertex_map":{id:id}}
SimplicialMap parse_map(const Json& j, ComplexPtr domain, ComplexPtr codomain);
Json map_to_json(const SimplicialMap& f);

// {"ring":"Z","terms":[{"coeff":n,"closed_support":[[...]]}]} or
// {"ring":"Z2","values":{"a,b":v}}. Missing values are 0.
ConstructibleFunction parse_function(const Json& j, ComplexPtr k);
Json function_to_json(const ConstructibleFunction& a);

// {"dim":i,"simplices":[[...]]}; other keys are provenance and are ignored.
Mod2Chain parse_chain(const Json& j, ComplexPtr k);
/// Provenance keys come first, then "dim" and "simplices".
Json chain_to_json(const Mod2Chain& c, const Json& provenance = Json::object());

// {"ambient_dim":n,"vectors":[["p/q",...]]}
std::vector<Point> parse_basis(const Json& j);
Json basis_to_json(const std::vector<Point>& basis, std::size_t ambient_dimension);

// {"target_dim":m,"images":{id:["p/q",...]}}
AffineVertexMap parse_affine_map(const Json& j, ComplexPtr k);
Json affine_map_to_json(const AffineVertexMap& f);

// {"carriers":{"b(...)":[ids]}}
Json subdivision_manifest(const Subdivision& sd);

Json homology_to_json(const HomologySummary& h);
Json euler_check_to_json(const SimplicialComplex& k, const EulerCheck& check);
Json half_link_report_to_json(const SimplicialComplex& k, const HalfLinkReport& r);
Json nondegeneracy_to_json(const SimplicialComplex& k, const NondegeneracyReport& r);

}  // namespace whitney::io
