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

#include "support.hpp"
#include "whitney/io.hpp"
#include "whitney/verify.hpp"

using namespace support;
namespace fs = std::filesystem;

namespace {

template <typename T, typename Parse, typename Write>
void round_trip(const T& value, Parse parse, Write write) {
  const auto text = io::dump(write(value));
  const auto again = parse(io::parse_json(text));
  CHECK(io::dump(write(again)) == text);
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/1") == Rational(-4));
  CHECK(error_kind([] { parse_rational("-4"); }) == ErrorKind::Parse);
  CHECK(format_rational(Rational(-2, 4)) == "-1/2");
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(error_kind([] { parse_rational("p/0"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_rational("1/0"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_rational(""); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_rational("1.5"); }) == ErrorKind::Parse);
}

TEST_CASE("simplex keys") {
  CHECK(io::split_simplex_key("a,b,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(io::split_simplex_key("b(1,2),b(1)") == std::vector<std::string>{"b(1,2)", "b(1)"});
  CHECK(io::split_simplex_key("b(b(1,2),3)") == std::vector<std::string>{"b(b(1,2),3)"});
  CHECK(io::split_simplex_key("x") == std::vector<std::string>{"x"});
}

TEST_CASE("complex files") {
  const auto k = io::parse_complex(io::parse_json(R"({"vertices":["1","2","3"],"maximal_simplices":[["1","2"],["2","3"],["1","3"]]})"));
  CHECK(k == *bundled("s1_3"));
  CHECK(error_kind([] { io::parse_complex(io::parse_json(R"({"vertices":["1"],"maximal_simplices":[["1","9"]]})")); }) ==
        ErrorKind::Simplicial);
  CHECK(error_kind([] { io::parse_complex(io::parse_json(R"({"vertices":["1","2"],"maximal_simplices":[["1","1"]]})")); }) ==
        ErrorKind::Simplicial);
  CHECK(error_kind([] { io::parse_complex(io::parse_json(R"({"vertices":["1"]})")); }) == ErrorKind::Parse);
  CHECK(error_kind([] { io::parse_json("{not json"); }) == ErrorKind::Parse);
  CHECK(error_kind([] {
          io::parse_complex(io::parse_json(
              R"({"vertices":["1","2"],"maximal_simplices":[["1","2"]],"coordinates":{"1":["0/1"],"2":["p/0"]}})"));
        }) == ErrorKind::Parse);
  CHECK(error_kind([] {
          io::parse_complex(io::parse_json(
              R"({"vertices":["1","2"],"maximal_simplices":[["1","2"]],"coordinates":{"1":["0/1"],"2":["0/1"]}})"));
        }) == ErrorKind::Simplicial);

  for (const auto& e : corpus::bundled())
    round_trip(*e.complex, [](const io::Json& j) { return io::parse_complex(j); },
               [](const SimplicialComplex& c) { return io::complex_to_json(c); });
  round_trip(*corpus::embed_on_simplex_vertices(*bundled("rp2_6")),
             [](const io::Json& j) { return io::parse_complex(j); },
             [](const SimplicialComplex& c) { return io::complex_to_json(c); });
}

TEST_CASE("function files") {
  const auto k = bundled("closed_triangle");
  const auto f = io::parse_function(
      io::parse_json(R"({"ring":"Z","terms":[{"coeff":2,"closed_support":[["1","2"],["1"],["2"]]},{"coeff":-1,"closed_support":[["3"]]}]})"),
      k);
  CHECK(f[at(k, {"1", "2"})] == 2);
  CHECK(f[at(k, {"3"})] == -1);
  CHECK(f[at(k, {"1", "3"})] == 0);

  CHECK(error_kind([&] { io::parse_function(io::parse_json(R"({"ring":"Z2","values":{"1,2":3}})"), k); }) ==
        ErrorKind::Parse);
  const auto v = io::parse_function(io::parse_json(R"({"ring":"Z2","values":{"1,2":1,"3":1}})"), k);
  CHECK(v.ring() == Ring::Mod2);
  CHECK(v[at(k, {"1", "2"})] == 1);
  CHECK(v[at(k, {"1"})] == 0);

  const auto lollipop = complex({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}, {"1", "4"}});
  const auto missing = error_message([&] {
    io::parse_function(io::parse_json(R"({"ring":"Z","terms":[{"coeff":1,"closed_support":[["1","2","4"]]}]})"),
                       lollipop);
  });
  CHECK(missing.find("face {2,4} is missing") != std::string::npos);
  CHECK(error_kind([&] { io::parse_function(io::parse_json(R"({"ring":"Q","values":{}})"), k); }) == ErrorKind::Parse);
  CHECK(error_kind([&] { io::parse_function(io::parse_json(R"({"ring":"Z","values":{"1,9":1}})"), k); }) ==
        ErrorKind::Calculus);

  for (const auto& g : {f, v, dual(f)})
    round_trip(g, [&](const io::Json& j) { return io::parse_function(j, k); },
               [](const ConstructibleFunction& a) { return io::function_to_json(a); });
}

TEST_CASE("map files") {
  const auto fold = corpus::map_suite()[3];
  REQUIRE(fold.name == "fold");
  round_trip(fold.map, [&](const io::Json& j) { return io::parse_map(j, fold.map.domain(), fold.map.codomain()); },
             [](const SimplicialMap& f) { return io::map_to_json(f); });
  const auto s1 = bundled("s1_3");
  CHECK(error_kind([&] { io::parse_map(io::parse_json(R"({"vertex_map":{"1":"1","2":"2"}})"), s1, s1); }) ==
        ErrorKind::Simplicial);
  CHECK(error_kind([&] {
          io::parse_map(io::parse_json(R"({"vertex_map":{"1":"1","2":"2","3":"3"}})"), bundled("closed_triangle"), s1);
        }) == ErrorKind::Simplicial);
}

TEST_CASE("chain files") {
  const Subdivision sd(bundled("rp2_6"));
  const auto s = stiefel_chain(sd, 1);
  round_trip(s, [&](const io::Json& j) { return io::parse_chain(j, sd.subdivided()); },
             [](const Mod2Chain& c) { return io::chain_to_json(c); });
  const io::Json prov{{"construction", "stiefel"}, {"complex", "rp2_6"}, {"i", 1}};
  const auto j = io::chain_to_json(s, prov);
  CHECK(j.begin().key() == "construction");
  CHECK(io::parse_chain(j, sd.subdivided()) == s);

  const auto k = bundled("s1_3");
  CHECK(error_kind([&] { io::parse_chain(io::parse_json(R"({"dim":1,"simplices":[["1","2"],["2","1"]]})"), k); }) ==
        ErrorKind::Parse);
  CHECK(error_kind([&] { io::parse_chain(io::parse_json(R"({"dim":1,"simplices":[["1"]]})"), k); }) ==
        ErrorKind::Homology);
  CHECK(error_kind([&] { io::parse_chain(io::parse_json(R"({"dim":2,"simplices":[["1","2","3"]]})"), k); }) ==
        ErrorKind::Homology);
}

TEST_CASE("basis and affine map files") {
  const std::vector<Point> b{point({1, 0, 0}), Point{Rational(1, 3), Rational(-2), Rational(0)}};
  round_trip(b, [](const io::Json& j) { return io::parse_basis(j); },
             [](const std::vector<Point>& x) { return io::basis_to_json(x, 3); });
  CHECK(io::basis_to_json(b, 3)["vectors"][1][0] == "1/3");
  CHECK(error_kind([] { io::parse_basis(io::parse_json(R"({"ambient_dim":2,"vectors":[["1/1"]]})")); }) ==
        ErrorKind::Parse);

  const Subdivision sd(bundled("closed_triangle"));
  const auto m = moment_map(sd, 1);
  const auto j = io::affine_map_to_json(m);
  CHECK(j["images"]["b(1,2)"] == io::Json::array({"1/1", "1/1"}));
  round_trip(m, [&](const io::Json& x) { return io::parse_affine_map(x, sd.subdivided()); },
             [](const AffineVertexMap& f) { return io::affine_map_to_json(f); });
  CHECK(error_kind([&] { io::parse_affine_map(io::parse_json(R"({"target_dim":1,"images":{"1":["0/1"]}})"), bundled("interval")); }) ==
        ErrorKind::Polar);
}

TEST_CASE("manifest") {
  const Subdivision sd(bundled("interval"));
  const auto m = io::subdivision_manifest(sd);
  CHECK(m["carriers"]["b(1,2)"] == io::Json::array({"1", "2"}));
  CHECK(m["carriers"].size() == 3);
}

TEST_CASE("half link report json") {
  const auto f = AffineVertexMap::from_ids(bundled("s1_3"), 1, {{"1", point({0})}, {"2", point({1})}, {"3", point({2})}});
  const auto r = half_link(one(f.domain(), Ring::Integers), at(f.domain(), {"2"}), f);
  const auto j = io::half_link_report_to_json(*f.domain(), r);
  CHECK(j["chi_plus"] == 1);
  CHECK(j["chi_minus"] == 1);
  CHECK(io::dump(j) == io::dump(io::half_link_report_to_json(*f.domain(), r)));
}

TEST_CASE("shipped corpus matches the bundled one") {
  const auto shipped = verify::load_corpus(std::string(WHITNEY_DATA_DIR) + "/corpus");
  const auto bundled_list = corpus::bundled();
  REQUIRE(shipped.size() == bundled_list.size());
  for (const auto& e : bundled_list) {
    CAPTURE(e.name);
    const auto it = std::find_if(shipped.begin(), shipped.end(), [&](const auto& c) { return c.name == e.name; });
    REQUIRE(it != shipped.end());
    CHECK(*it->complex == *e.complex);
    REQUIRE(it->euler.has_value());
    CHECK(*it->euler == e.euler);
  }
  const auto embedded = io::read_json_file(std::string(WHITNEY_DATA_DIR) + "/embedded/rp2_6_delta5.json");
  CHECK(io::parse_complex(embedded) == *corpus::embed_on_simplex_vertices(*bundled("rp2_6")));
}

TEST_CASE("file round trip") {
  const auto dir = fs::temp_directory_path() / "whitney_test_io";
  fs::create_directories(dir);
  const auto path = (dir / "k.json").string();
  const auto j = io::complex_to_json(*bundled("torus_7"));
  io::write_json_file(path, j);
  CHECK(io::dump(io::read_json_file(path)) == io::dump(j));
  CHECK(error_kind([&] { io::read_json_file((dir / "absent.json").string()); }) == ErrorKind::Parse);
  fs::remove_all(dir);
}
