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

/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "whitney/whitney.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define OK(call) EXPECT((call) == WHITNEY_OK)

static int contains(const char* haystack, const char* needle) {
  return haystack != NULL && strstr(haystack, needle) != NULL;
}

static void complexes(void) {
  whitney_complex* k = NULL;
  int dim = -1;
  size_t size = 0;
  int64_t chi = 0;
  char* text = NULL;

  OK(whitney_complex_bundled("rp2_6", &k));
  OK(whitney_complex_dimension(k, &dim));
  OK(whitney_complex_size(k, &size));
  OK(whitney_complex_euler_characteristic(k, &chi));
  EXPECT(dim == 2);
  EXPECT(size == 31);
  EXPECT(chi == 1);
  OK(whitney_homology(k, &text));
  EXPECT(contains(text, "\"betti\""));
  whitney_string_free(text);
  whitney_complex_free(k);

  EXPECT(whitney_complex_bundled("nope", &k) == WHITNEY_E_USAGE);
  EXPECT(contains(whitney_last_error(), "nope"));
  EXPECT(whitney_complex_from_json("{\"vertices\":[\"1\"],\"maximal_simplices\":[[\"1\",\"2\"]]}", &k) ==
         WHITNEY_E_SIMPLICIAL);
  EXPECT(whitney_complex_from_json("{", &k) == WHITNEY_E_PARSE);
  EXPECT(whitney_complex_load("/nonexistent/k.json", &k) == WHITNEY_E_PARSE);
  EXPECT(whitney_complex_dimension(NULL, &dim) == WHITNEY_E_USAGE);
  EXPECT(strcmp(whitney_status_name(WHITNEY_E_POLAR), "polar") == 0);
}

static void calculus(void) {
  whitney_complex* k = NULL;
  whitney_function* one = NULL;
  whitney_function* d = NULL;
  int64_t chi = 0;
  int euler = 0;
  char* text = NULL;

  OK(whitney_complex_bundled("bowtie", &k));
  OK(whitney_function_constant(k, 0, 1, &one));
  OK(whitney_function_dual(one, &d));
  OK(whitney_function_chi(d, &chi));
  EXPECT(chi == 1);
  OK(whitney_function_is_euler(one, &euler));
  EXPECT(!euler);
  OK(whitney_euler_check(k, NULL, &text));
  EXPECT(contains(text, "\"euler\": false"));
  EXPECT(contains(text, "\"offenders\""));
  whitney_string_free(text);
  whitney_function_free(d);
  whitney_function_free(one);
  whitney_complex_free(k);

  whitney_complex* sq = NULL;
  whitney_complex* path = NULL;
  whitney_map* fold = NULL;
  whitney_function* f = NULL;
  whitney_function* pushed = NULL;
  OK(whitney_complex_from_json(
      "{\"vertices\":[\"a\",\"b\",\"c\",\"d\"],\"maximal_simplices\":[[\"a\",\"b\"],[\"b\",\"c\"],[\"c\",\"d\"],[\"a\",\"d\"]]}",
      &sq));
  OK(whitney_complex_from_json("{\"vertices\":[\"x\",\"y\"],\"maximal_simplices\":[[\"x\",\"y\"]]}", &path));
  OK(whitney_map_from_json(sq, path, "{\"vertex_map\":{\"a\":\"x\",\"b\":\"y\",\"c\":\"x\",\"d\":\"y\"}}", &fold));
  OK(whitney_function_constant(sq, 0, 1, &f));
  OK(whitney_pushforward(fold, f, &pushed));
  OK(whitney_function_to_json(pushed, &text));
  EXPECT(contains(text, "\"x,y\": 4"));
  whitney_string_free(text);
  EXPECT(whitney_pushforward(fold, pushed, &d) == WHITNEY_E_CALCULUS);
  whitney_function_free(pushed);
  whitney_function_free(f);
  whitney_map_free(fold);
  EXPECT(whitney_map_from_json(path, sq, "{\"vertex_map\":{\"x\":\"a\",\"y\":\"c\"}}", &fold) == WHITNEY_E_SIMPLICIAL);
  whitney_complex_free(path);
  whitney_complex_free(sq);
}

static void chains(void) {
  whitney_complex* k = NULL;
  whitney_chain* s = NULL;
  whitney_chain* w = NULL;
  size_t n = 0;
  int cycle = 0;
  int bounds = 1;
  char* text = NULL;

  OK(whitney_complex_bundled("rp2_6", &k));
  OK(whitney_stiefel_chain(k, 1, NULL, &s));
  OK(whitney_chain_size(s, &n));
  EXPECT(n == 90);
  OK(whitney_chain_is_cycle(s, &cycle));
  EXPECT(cycle);
  OK(whitney_chain_bounds(s, &bounds, &w));
  EXPECT(!bounds);
  EXPECT(w == NULL);
  OK(whitney_chain_to_json(s, "{\"construction\":\"stiefel\",\"complex\":\"rp2_6\",\"i\":1}", &text));
  EXPECT(strncmp(text, "{\n  \"construction\": \"stiefel\"", 29) == 0);
  whitney_string_free(text);
  EXPECT(whitney_stiefel_chain(k, 3, NULL, &w) == WHITNEY_E_CLASSES);
  whitney_chain_free(s);
  whitney_complex_free(k);

  whitney_complex* torus = NULL;
  OK(whitney_complex_bundled("torus_7", &torus));
  OK(whitney_stiefel_chain(torus, 1, NULL, &s));
  OK(whitney_chain_bounds(s, &bounds, &w));
  EXPECT(bounds);
  EXPECT(w != NULL);
  whitney_chain_free(w);
  whitney_chain_free(s);
  whitney_complex_free(torus);

  whitney_complex* tri = NULL;
  OK(whitney_complex_bundled("closed_triangle", &tri));
  OK(whitney_stiefel_chain(tri, 1, NULL, &s));
  OK(whitney_chain_is_cycle(s, &cycle));
  EXPECT(!cycle);
  EXPECT(whitney_chain_bounds(s, &bounds, NULL) == WHITNEY_E_HOMOLOGY);
  whitney_chain_free(s);
  whitney_complex_free(tri);
}

static void polar(void) {
  whitney_complex* k = NULL;
  whitney_affine_map* m = NULL;
  whitney_chain* sigma = NULL;
  whitney_chain* s = NULL;
  int equal = 0;
  char* report = NULL;

  OK(whitney_complex_bundled("s1_3", &k));
  OK(whitney_moment_map(k, 1, &m));
  OK(whitney_polar_chain(m, NULL, 1, &sigma, &report));
  OK(whitney_stiefel_chain(k, 1, NULL, &s));
  OK(whitney_chain_equal(sigma, s, &equal));
  EXPECT(equal);
  EXPECT(contains(report, "chi_plus"));
  whitney_string_free(report);
  OK(whitney_nondegeneracy(m, 1, &report));
  EXPECT(contains(report, "\"per_simplex\""));
  whitney_string_free(report);
  EXPECT(whitney_nondegeneracy(m, 0, &report) == WHITNEY_E_POLAR);
  whitney_chain_free(s);
  whitney_chain_free(sigma);
  whitney_affine_map_free(m);

  EXPECT(whitney_projection_map(k, "{\"ambient_dim\":1,\"vectors\":[[\"1/1\"]]}", &m) == WHITNEY_E_POLAR);
  whitney_complex_free(k);

  whitney_complex* x = NULL;
  char* basis = NULL;
  char* again = NULL;
  OK(whitney_complex_load(WHITNEY_DATA_DIR "/embedded/rp2_6_delta5.json", &x));
  OK(whitney_random_projection(x, 1, 42, &m, &basis));
  whitney_affine_map_free(m);
  OK(whitney_random_projection(x, 1, 42, &m, &again));
  EXPECT(strcmp(basis, again) == 0);
  OK(whitney_polar_chain(m, NULL, 1, &sigma, NULL));
  int bounds = 1;
  OK(whitney_chain_bounds(sigma, &bounds, NULL));
  EXPECT(!bounds);
  whitney_chain_free(sigma);
  whitney_string_free(again);
  whitney_string_free(basis);
  whitney_affine_map_free(m);
  whitney_complex_free(x);
}

static void verification(void) {
  int passed = 0;
  char* json = NULL;
  char* text = NULL;
  OK(whitney_verify("calculus", 7, 20, NULL, NULL, &passed, &json, &text));
  EXPECT(passed);
  EXPECT(contains(text, "suite calculus seed 7 trials 20"));
  whitney_string_free(json);
  whitney_string_free(text);
  EXPECT(whitney_verify("bogus", 7, 20, NULL, NULL, &passed, NULL, NULL) == WHITNEY_E_USAGE);

  char* out = NULL;
  EXPECT(whitney_validate_file(WHITNEY_DATA_DIR "/corpus/s1_3.json", NULL, NULL, &out) == WHITNEY_OK);
  whitney_string_free(out);
}

int main(void) {
  EXPECT(whitney_version() != NULL);
  complexes();
  calculus();
  chains();
  polar();
  verification();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  printf("all C API expectations hold\n");
  return 0;
}
