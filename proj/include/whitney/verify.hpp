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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "whitney/euler_calculus.hpp"
#include "whitney/io.hpp"
#include "whitney/polar.hpp"
#include "whitney/simplicial.hpp"

namespace whitney::verify {

/// One complex of the verification corpus. `euler` is the documented status,
/// when there is one.
struct CorpusComplex {
  std::string name;
  std::optional<bool> euler;
  ComplexPtr complex;
};

std::vector<CorpusComplex> bundled_corpus();
/// Every *.json complex file in `directory`, by file name. An optional
/// boolean "euler_space" key documents the expected status.
std::vector<CorpusComplex> load_corpus(const std::string& directory);

/// Everything a property check reads. Unused members stay empty.
struct Instance {
  std::string property;
  std::string complex_name;
  ComplexPtr complex;   // K
  ComplexPtr codomain;  // L
  ComplexPtr third;     // M
  std::optional<SimplicialMap> f;  // K -> L
  std::optional<SimplicialMap> g;  // L -> M
  std::optional<ConstructibleFunction> alpha;
  std::optional<ConstructibleFunction> beta;
  std::optional<AffineVertexMap> map_a;
  std::optional<AffineVertexMap> map_b;
  std::vector<std::vector<VertexId>> subcomplex;  // generators of a closed subcomplex of K
  int i = 0;
  std::optional<bool> expected;
};

/// Full reproduction record of an instance.
io::Json instance_to_json(const Instance& x);
Instance instance_from_json(const io::Json& j);

/// Runs the named property. Exceptions thrown by the computation count as
/// failures and are reported in `detail`.
struct CheckOutcome {
  bool holds = false;
  std::string detail;
};
CheckOutcome check(const Instance& x);

const std::vector<std::string>& property_names();
const std::vector<std::string>& suite_names();

struct PropertyTally {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<io::Json> counterexample;
  std::string detail;
  std::optional<std::string> counterexample_path;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<PropertyTally> properties;
  bool passed() const;
};

struct Options {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  /// Empty: the bundled corpus together with the bundled map suite.
  std::optional<std::string> complexes_directory;
  /// Where the first counterexample of each failing property is written.
  std::optional<std::string> counterexample_directory;
};

/// Throws Error(Usage) for an unknown suite.
SuiteReport run_suite(const Options& options);

io::Json report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

/// A random mod 2 Euler function on K, as drawn by the suites: (b + Db) for a
/// random integer indicator sum b, plus vertex indicators, plus 1_K when K is
/// an Euler space.
ConstructibleFunction random_euler_function(const ComplexPtr& k, std::uint64_t seed);

/// Re-runs a counterexample record.
CheckOutcome replay(const io::Json& counterexample);

}  // namespace whitney::verify
