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

#include <cstdlib>
#include <stdexcept>

#include "parallel.hpp"
#include "support.hpp"
#include "whitney/io.hpp"

using namespace support;

namespace {

struct Threads {
  explicit Threads(const char* n) { setenv("WHITNEY_THREADS", n, 1); }
  ~Threads() { unsetenv("WHITNEY_THREADS"); }
  Threads(const Threads&) = delete;
  Threads& operator=(const Threads&) = delete;
};

// Serialized outputs that go through the parallel kernels.
std::string outputs() {
  std::string out;
  for (const auto& name : {"rp2_6", "torus_7", "pinched_torus"}) {
    const Subdivision sd(bundled(name));
    const Subdivision twice(sd.subdivided());
    out += io::dump(io::function_to_json(dual(one(twice.subdivided(), Ring::Integers))));
    for (int i = 0; i <= 2; ++i) {
      std::vector<HalfLinkReport> reports;
      const auto c = euler_singularity_chain(moment_map(twice, i), one(twice.subdivided()), i, &reports);
      out += io::dump(io::chain_to_json(c));
      for (const auto& r : reports) out += io::dump(io::half_link_report_to_json(*twice.subdivided(), r));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("worker count") {
  {
    Threads t("3");
    CHECK(detail::worker_count() == 3);
  }
  {
    Threads t("zero");
    CHECK(detail::worker_count() >= 1);
  }
}

TEST_CASE("results do not depend on the worker count") {
  std::string one_worker, four_workers;
  {
    Threads t("1");
    one_worker = outputs();
  }
  {
    Threads t("4");
    four_workers = outputs();
  }
  CHECK(one_worker.size() > 0);
  CHECK(one_worker == four_workers);
}

TEST_CASE("the smallest failing index wins") {
  Threads t("4");
  std::string what;
  try {
    detail::parallel_for(1000, [](std::size_t k) {
      if (k == 700 || k == 300) throw std::runtime_error(std::to_string(k));
    });
  } catch (const std::runtime_error& e) {
    what = e.what();
  }
  CHECK(what == "300");
}
