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

// Command-line front end. Everything goes through the C interface.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "whitney/whitney.h"

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  whitney_status status;
  std::string message;
};

void check(whitney_status s) {
  if (s != WHITNEY_OK) throw Failure{s, whitney_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw Failure{WHITNEY_E_USAGE, message}; }

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Complex = std::unique_ptr<whitney_complex, Deleter<whitney_complex, whitney_complex_free>>;
using Function = std::unique_ptr<whitney_function, Deleter<whitney_function, whitney_function_free>>;
using Map = std::unique_ptr<whitney_map, Deleter<whitney_map, whitney_map_free>>;
using Chain = std::unique_ptr<whitney_chain, Deleter<whitney_chain, whitney_chain_free>>;
using AffineMap = std::unique_ptr<whitney_affine_map, Deleter<whitney_affine_map, whitney_affine_map_free>>;

// Owns a library-allocated string.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { whitney_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? std::string(p_) : std::string(); }
  Json json() const { return Json::parse(str()); }

 private:
  char* p_ = nullptr;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{WHITNEY_E_PARSE, "cannot write \"" + path + "\""};
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

Complex load_complex(const std::string& path) {
  whitney_complex* k = nullptr;
  check(whitney_complex_load(path.c_str(), &k));
  return Complex(k);
}

Function load_function(const whitney_complex* k, const std::string& path) {
  whitney_function* f = nullptr;
  check(whitney_function_load(k, path.c_str(), &f));
  return Function(f);
}

std::string function_json(const whitney_function* f) {
  Text t;
  check(whitney_function_to_json(f, t.out()));
  return t.str();
}

std::string chain_json(const whitney_chain* c, const Json& provenance) {
  Text t;
  const std::string p = provenance.dump();
  check(whitney_chain_to_json(c, p.c_str(), t.out()));
  return t.str();
}

std::string simplex_label(const Json& ids) {
  std::string out = "{";
  for (std::size_t j = 0; j < ids.size(); ++j) out += (j ? "," : "") + ids[j].get<std::string>();
  return out + "}";
}

struct Settings {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stiefel-Whitney homology classes of triangulated mod 2 Euler spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_option("--format", settings.format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string complex_path, fn_path, out_path, domain_path, codomain_path, map_path, manifest_path, chain_path,
      witness_path, project_path, report_path, suite, complexes_dir, counterexample_dir, replay_path;
  int dim = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  bool moment = false, random_plane = false;
  std::vector<std::string> paths;

  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a complex or Euler integral of a function");
  chi_cmd->add_option("--complex", complex_path)->required();
  chi_cmd->add_option("--fn", fn_path);

  auto* dual_cmd = app.add_subcommand("dual", "Duality operator D");
  dual_cmd->add_option("--complex", complex_path)->required();
  dual_cmd->add_option("--fn", fn_path)->required();
  dual_cmd->add_option("--out", out_path);

  auto* push_cmd = app.add_subcommand("push", "Pushforward along a simplicial map");
  auto* pull_cmd = app.add_subcommand("pull", "Pullback along a simplicial map");
  for (auto* c : {push_cmd, pull_cmd}) {
    c->add_option("--domain", domain_path)->required();
    c->add_option("--codomain", codomain_path)->required();
    c->add_option("--map", map_path)->required();
    c->add_option("--fn", fn_path)->required();
    c->add_option("--out", out_path);
  }

  auto* euler_cmd = app.add_subcommand("euler-check", "Euler space / Euler function test");
  euler_cmd->add_option("--complex", complex_path)->required();
  euler_cmd->add_option("--fn", fn_path);

  auto* sub_cmd = app.add_subcommand("subdivide", "Barycentric subdivision");
  sub_cmd->add_option("--complex", complex_path)->required();
  sub_cmd->add_option("--out", out_path);
  sub_cmd->add_option("--manifest", manifest_path);

  auto* stiefel_cmd = app.add_subcommand("stiefel", "Stiefel chain s_i(K) or the representative of w_i(fn)");
  stiefel_cmd->add_option("--complex", complex_path)->required();
  stiefel_cmd->add_option("--dim", dim)->required();
  stiefel_cmd->add_option("--fn", fn_path);
  stiefel_cmd->add_option("--out", out_path);

  auto* hom_cmd = app.add_subcommand("homology", "Mod 2 Betti numbers");
  hom_cmd->add_option("--complex", complex_path)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Decide whether a cycle bounds");
  bounds_cmd->add_option("--complex", complex_path)->required();
  bounds_cmd->add_option("--chain", chain_path)->required();
  bounds_cmd->add_option("--witness", witness_path);

  auto* polar_cmd = app.add_subcommand("polar", "Euler singularity chain of a simplexwise-linear map");
  polar_cmd->add_option("--complex", complex_path)->required();
  polar_cmd->add_option("--dim", dim)->required();
  auto* o_moment = polar_cmd->add_flag("--moment", moment);
  auto* o_map = polar_cmd->add_option("--map", map_path);
  auto* o_project = polar_cmd->add_option("--project", project_path);
  auto* o_random = polar_cmd->add_flag("--random-plane", random_plane);
  polar_cmd->add_option("--seed", seed);
  polar_cmd->add_option("--fn", fn_path);
  polar_cmd->add_option("--out", out_path);
  polar_cmd->add_option("--report", report_path);
  o_moment->excludes(o_map)->excludes(o_project)->excludes(o_random);
  o_map->excludes(o_project)->excludes(o_random);
  o_project->excludes(o_random);

  auto* verify_cmd = app.add_subcommand("verify", "Seeded property suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"calculus", "stiefel", "polar", "axioms"}));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--complexes", complexes_dir);
  verify_cmd->add_option("--counterexamples", counterexample_dir, "Directory for counterexample files")
      ->default_val("counterexamples");
  verify_cmd->add_option("--replay", replay_path, "Re-run a counterexample file");

  auto* validate_cmd = app.add_subcommand("validate", "Parse and check artifact files");
  validate_cmd->add_option("paths", paths)->required();
  validate_cmd->add_option("--complex", complex_path);
  validate_cmd->add_option("--codomain", codomain_path);

  auto* corpus_cmd = app.add_subcommand("corpus", "List or export the bundled complexes");
  corpus_cmd->add_option("--out", out_path, "Directory to write one file per complex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(WHITNEY_E_USAGE);
  }

  try {
    if (chi_cmd->parsed()) {
      const Complex k = load_complex(complex_path);
      std::int64_t value = 0;
      if (fn_path.empty()) {
        check(whitney_complex_euler_characteristic(k.get(), &value));
      } else {
        const Function f = load_function(k.get(), fn_path);
        check(whitney_function_chi(f.get(), &value));
      }
      if (settings.json()) {
        Json j = Json::object();
        j["chi"] = value;
        std::cout << dump(j);
      } else {
        std::cout << value << "\n";
      }
    } else if (dual_cmd->parsed()) {
      const Complex k = load_complex(complex_path);
      const Function f = load_function(k.get(), fn_path);
      whitney_function* d = nullptr;
      check(whitney_function_dual(f.get(), &d));
      const Function g(d);
      emit(function_json(g.get()), out_path);
    } else if (push_cmd->parsed() || pull_cmd->parsed()) {
      const Complex dom = load_complex(domain_path);
      const Complex cod = load_complex(codomain_path);
      whitney_map* m = nullptr;
      check(whitney_map_load(dom.get(), cod.get(), map_path.c_str(), &m));
      const Map f(m);
      const bool push = push_cmd->parsed();
      const Function a = load_function(push ? dom.get() : cod.get(), fn_path);
      whitney_function* r = nullptr;
      check(push ? whitney_pushforward(f.get(), a.get(), &r) : whitney_pullback(f.get(), a.get(), &r));
      const Function b(r);
      emit(function_json(b.get()), out_path);
    } else if (euler_cmd->parsed()) {
      const Complex k = load_complex(complex_path);
      const Function f = fn_path.empty() ? Function() : load_function(k.get(), fn_path);
      Text t;
      check(whitney_euler_check(k.get(), f.get(), t.out()));
      if (settings.json()) {
        std::cout << t.str();
      } else {
        const Json j = t.json();
        std::cout << (j["euler"].get<bool>() ? "euler\n" : "not euler\n");
        for (const auto& s : j["offenders"]) std::cout << "offending simplex " << simplex_label(s) << "\n";
      }
    } else if (sub_cmd->parsed()) {
      const Complex k = load_complex(complex_path);
      whitney_complex* sd = nullptr;
      Text manifest;
      check(whitney_subdivide(k.get(), &sd, manifest.out()));
      const Complex kp(sd);
      Text body;
      check(whitney_complex_to_json(kp.get(), body.out()));
      emit(body.str(), out_path);
      if (!manifest_path.empty()) emit(manifest.str(), manifest_path);
    } else if (stiefel_cmd->parsed()) {
      const Complex k = load_complex(complex_path);
      const Function f = fn_path.empty() ? Function() : load_function(k.get(), fn_path);
      whitney_chain* c = nullptr;
      check(whitney_stiefel_chain(k.get(), dim, f.get(), &c));
      const Chain chain(c);
      Json provenance = Json::object();
      provenance["construction"] = "stiefel";
      provenance["complex"] = stem(complex_path);
      provenance["i"] = dim;
      if (!fn_path.empty()) provenance["function"] = stem(fn_path);
      emit(chain_json(chain.get(), provenance), out_path);
    } else if (hom_cmd->parsed()) {
      const Complex k = load_complex(complex_path);
      Text t;
      check(whitney_homology(k.get(), t.out()));
      if (settings.json()) {
        std::cout << t.str();
      } else {
        const Json j = t.json();
        std::cout << "betti";
        for (const auto& b : j["betti"]) std::cout << " " << b.get<std::size_t>();
        std::cout << "\n";
      }
    } else if (bounds_cmd->parsed()) {
      const Complex k = load_complex(complex_path);
      whitney_chain* c = nullptr;
      check(whitney_chain_load(k.get(), chain_path.c_str(), &c));
      const Chain chain(c);
      int bounds = 0;
      whitney_chain* w = nullptr;
      check(whitney_chain_bounds(chain.get(), &bounds, &w));
      const Chain witness(w);
      if (witness && !witness_path.empty()) {
        Json provenance = Json::object();
        provenance["construction"] = "witness";
        provenance["complex"] = stem(complex_path);
        provenance["boundary_of"] = stem(chain_path);
        emit(chain_json(witness.get(), provenance), witness_path);
      }
      if (settings.json()) {
        Json j = Json::object();
        j["bounds"] = bounds != 0;
        std::cout << dump(j);
      } else {
        std::cout << (bounds ? "bounds\n" : "does not bound\n");
      }
    } else if (polar_cmd->parsed()) {
      if (!moment && map_path.empty() && project_path.empty() && !random_plane)
        usage("polar needs one of --moment, --map, --project, --random-plane");
      const Complex k = load_complex(complex_path);
      Function f = fn_path.empty() ? Function() : load_function(k.get(), fn_path);
      whitney_affine_map* raw = nullptr;
      Json provenance = Json::object();
      if (moment) {
        check(whitney_moment_map(k.get(), dim, &raw));
        provenance["construction"] = "moment";
        if (f) {
          whitney_function* lifted = nullptr;
          check(whitney_function_lift(f.get(), &lifted));
          f.reset(lifted);
        }
      } else if (!map_path.empty()) {
        check(whitney_affine_map_load(k.get(), map_path.c_str(), &raw));
        provenance["construction"] = "map";
      } else if (!project_path.empty()) {
        std::ifstream in(project_path);
        if (!in) throw Failure{WHITNEY_E_PARSE, "cannot read \"" + project_path + "\""};
        const std::string basis((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        check(whitney_projection_map(k.get(), basis.c_str(), &raw));
        provenance["construction"] = "projection";
      } else {
        check(whitney_random_projection(k.get(), dim, seed, &raw, nullptr));
        provenance["construction"] = "projection";
        provenance["seed"] = seed;
      }
      const AffineMap map(raw);
      provenance["complex"] = stem(complex_path);
      provenance["i"] = dim;
      if (!fn_path.empty()) provenance["function"] = stem(fn_path);
      whitney_chain* c = nullptr;
      Text report;
      check(whitney_polar_chain(map.get(), f.get(), dim, &c, report_path.empty() ? nullptr : report.out()));
      const Chain chain(c);
      emit(chain_json(chain.get(), provenance), out_path);
      if (!report_path.empty()) emit(report.str(), report_path);
    } else if (verify_cmd->parsed()) {
      if (!replay_path.empty()) {
        std::ifstream in(replay_path);
        if (!in) throw Failure{WHITNEY_E_PARSE, "cannot read \"" + replay_path + "\""};
        const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        int holds = 0;
        Text detail;
        check(whitney_replay(body.c_str(), &holds, detail.out()));
        if (settings.json()) {
          Json j = Json::object();
          j["holds"] = holds != 0;
          if (!holds) j["detail"] = detail.str();
          std::cout << dump(j);
        } else {
          std::cout << (holds ? "holds\n" : "fails: " + detail.str() + "\n");
        }
        return holds ? 0 : static_cast<int>(WHITNEY_E_VERIFY);
      }
      if (suite.empty()) usage("verify needs --suite or --replay");
      int passed = 0;
      Text report_json, report_text;
      check(whitney_verify(suite.c_str(), seed, trials, complexes_dir.empty() ? nullptr : complexes_dir.c_str(),
                           counterexample_dir.empty() ? nullptr : counterexample_dir.c_str(), &passed,
                           report_json.out(), report_text.out()));
      std::cout << (settings.json() ? report_json.str() : report_text.str());
      return passed ? 0 : static_cast<int>(WHITNEY_E_VERIFY);
    } else if (validate_cmd->parsed()) {
      const Complex k = complex_path.empty() ? Complex() : load_complex(complex_path);
      const Complex l = codomain_path.empty() ? Complex() : load_complex(codomain_path);
      Json files = Json::array();
      whitney_status first = WHITNEY_OK;
      for (const auto& p : paths) {
        Text t;
        const whitney_status s = whitney_validate_file(p.c_str(), k.get(), l.get(), t.out());
        if (s != WHITNEY_OK && first == WHITNEY_OK) first = s;
        files.push_back(t.json());
      }
      if (settings.json()) {
        Json j = Json::object();
        j["valid"] = first == WHITNEY_OK;
        j["files"] = std::move(files);
        std::cout << dump(j);
      } else {
        for (const auto& d : files) {
          if (d["valid"].get<bool>())
            std::cout << "ok " << d["path"].get<std::string>() << " (" << d["kind"].get<std::string>() << ")\n";
          else
            std::cout << "invalid " << d["path"].get<std::string>() << ": " << d["error"]["family"].get<std::string>()
                      << ": " << d["error"]["message"].get<std::string>() << "\n";
        }
      }
      return static_cast<int>(first);
    } else if (corpus_cmd->parsed()) {
      Text list;
      check(whitney_corpus_list(list.out()));
      const Json entries = list.json();
      if (out_path.empty()) {
        if (settings.json()) {
          std::cout << dump(entries);
        } else {
          for (const auto& e : entries)
            std::cout << e["name"].get<std::string>() << (e["euler_space"].get<bool>() ? " euler " : " non-euler ")
                      << e["description"].get<std::string>() << "\n";
        }
      } else {
        std::filesystem::create_directories(out_path);
        for (const auto& e : entries) {
          const std::string name = e["name"].get<std::string>();
          whitney_complex* raw = nullptr;
          check(whitney_complex_bundled(name.c_str(), &raw));
          const Complex k(raw);
          Text body;
          check(whitney_complex_to_json(k.get(), body.out()));
          Json j = e;
          const Json complex = body.json();
          for (const auto& [key, value] : complex.items()) j[key] = value;
          emit(dump(j), (std::filesystem::path(out_path) / (name + ".json")).string());
        }
      }
    }
  } catch (const Failure& f) {
    if (settings.json()) {
      Json j = Json::object();
      j["error"] = {{"code", static_cast<int>(f.status)}, {"family", whitney_status_name(f.status)}, {"message", f.message}};
      std::cerr << dump(j);
    } else {
      std::cerr << "whitney: " << whitney_status_name(f.status) << " error: " << f.message << "\n";
    }
    return static_cast<int>(f.status);
  } catch (const std::exception& e) {
    std::cerr << "whitney: internal error: " << e.what() << "\n";
    return static_cast<int>(WHITNEY_E_INTERNAL);
  }
  return 0;
}
