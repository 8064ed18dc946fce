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

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "whitney/io.hpp"
#include "whitney/verify.hpp"

using namespace support;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("whitney_test_verify_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("suites pass on the bundled corpus") {
  for (const auto& suite : verify::suite_names()) {
    CAPTURE(suite);
    const auto r = verify::run_suite({suite, 5, 40, std::nullopt, std::nullopt});
    CHECK(r.passed());
    CHECK(r.seed == 5);
    CHECK(!r.properties.empty());
    for (const auto& p : r.properties) {
      CAPTURE(p.name);
      CHECK(p.checks > 0);
      CHECK(p.failures == 0);
    }
  }
}

TEST_CASE("suite reports are deterministic") {
  const auto a = verify::run_suite({"calculus", 11, 60, std::nullopt, std::nullopt});
  const auto b = verify::run_suite({"calculus", 11, 60, std::nullopt, std::nullopt});
  CHECK(io::dump(verify::report_to_json(a)) == io::dump(verify::report_to_json(b)));
  CHECK(verify::report_to_text(a) == verify::report_to_text(b));
  const auto text = verify::report_to_text(a);
  CHECK(text.rfind("suite calculus seed 11 trials 60", 0) == 0);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("negative control is expected to fail") {
  const auto r = verify::run_suite({"stiefel", 1, 5, std::nullopt, std::nullopt});
  const auto it = std::find_if(r.properties.begin(), r.properties.end(),
                               [](const auto& p) { return p.name == "stiefel.negative_control"; });
  REQUIRE(it != r.properties.end());
  CHECK(it->checks >= 1);
  CHECK(it->failures == 0);
}

TEST_CASE("unknown suite") {
  CHECK(error_kind([] { verify::run_suite({"nope", 1, 1, std::nullopt, std::nullopt}); }) == ErrorKind::Usage);
}

TEST_CASE("instances round trip") {
  const auto& fold = corpus::map_suite()[3];
  verify::Instance x;
  x.property = "calculus.push_chi";
  x.complex_name = "square";
  x.complex = fold.map.domain();
  x.codomain = fold.map.codomain();
  x.f = fold.map;
  x.alpha = one(x.complex, Ring::Integers);
  const auto j = verify::instance_to_json(x);
  const auto y = verify::instance_from_json(j);
  CHECK(io::dump(verify::instance_to_json(y)) == io::dump(j));
  CHECK(verify::check(y).holds);
}

TEST_CASE("a mislabeled corpus yields a replayable counterexample") {
  const auto corpus_dir = scratch("corpus");
  const auto out_dir = scratch("cex");
  auto j = io::complex_to_json(*bundled("closed_triangle"));
  j["euler_space"] = true;
  io::write_json_file((corpus_dir / "triangle.json").string(), j);
  io::write_json_file((corpus_dir / "circle.json").string(), io::complex_to_json(*bundled("s1_3")));

  const auto r = verify::run_suite({"stiefel", 2, 3, corpus_dir.string(), out_dir.string()});
  CHECK(!r.passed());
  const auto it = std::find_if(r.properties.begin(), r.properties.end(),
                               [](const auto& p) { return p.name == "stiefel.census"; });
  REQUIRE(it != r.properties.end());
  CHECK(it->failures == 1);
  REQUIRE(it->counterexample_path.has_value());
  CHECK(fs::exists(*it->counterexample_path));

  const auto record = io::read_json_file(*it->counterexample_path);
  CHECK(record["seed"] == 2);
  CHECK(!verify::replay(record).holds);

  // Correcting the documented status makes the same record hold.
  auto fixed = record;
  fixed["expected"] = false;
  CHECK(verify::replay(fixed).holds);

  for (const auto& p : r.properties) {
    if (p.name == "stiefel.census") continue;
    CAPTURE(p.name);
    CHECK(p.failures == 0);
  }
  fs::remove_all(corpus_dir);
  fs::remove_all(out_dir);
}
