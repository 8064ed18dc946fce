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

/* C interface to the whitney library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a whitney_status;
 * on failure whitney_last_error() describes the problem for the calling
 * thread. Strings returned through char** are allocated by the library and
 * released with whitney_string_free. Structured results are JSON documents
 * in the artifact formats documented under docs/.
 */
#ifndef WHITNEY_H
#define WHITNEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(WHITNEY_BUILDING_LIBRARY)
#define WHITNEY_API __attribute__((visibility("default")))
#else
#define WHITNEY_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* One code per error family; the CLI uses the same values as exit codes. */
typedef enum whitney_status {
  WHITNEY_OK = 0,
  WHITNEY_E_USAGE = 1,
  WHITNEY_E_PARSE = 2,
  WHITNEY_E_SIMPLICIAL = 3,
  WHITNEY_E_HOMOLOGY = 4,
  WHITNEY_E_CALCULUS = 5,
  WHITNEY_E_CLASSES = 6,
  WHITNEY_E_POLAR = 7,
  WHITNEY_E_VERIFY = 8,
  WHITNEY_E_INTERNAL = 9
} whitney_status;

typedef struct whitney_complex whitney_complex;
typedef struct whitney_function whitney_function;
typedef struct whitney_map whitney_map;
typedef struct whitney_chain whitney_chain;
typedef struct whitney_affine_map whitney_affine_map;

WHITNEY_API const char* whitney_version(void);
/* Message of the last failed call on this thread ("" if none). */
WHITNEY_API const char* whitney_last_error(void);
/* "usage", "parse", "simplicial", ... */
WHITNEY_API const char* whitney_status_name(whitney_status status);
WHITNEY_API void whitney_string_free(char* s);

/* Complexes */
WHITNEY_API whitney_status whitney_complex_from_json(const char* json, whitney_complex** out);
WHITNEY_API whitney_status whitney_complex_load(const char* path, whitney_complex** out);
WHITNEY_API whitney_status whitney_complex_bundled(const char* name, whitney_complex** out);
WHITNEY_API void whitney_complex_free(whitney_complex* k);
WHITNEY_API whitney_status whitney_complex_to_json(const whitney_complex* k, char** out);
WHITNEY_API whitney_status whitney_complex_dimension(const whitney_complex* k, int* out);
WHITNEY_API whitney_status whitney_complex_size(const whitney_complex* k, size_t* out);
WHITNEY_API whitney_status whitney_complex_euler_characteristic(const whitney_complex* k, int64_t* out);
/* Barycentric subdivision and its carrier manifest. */
WHITNEY_API whitney_status whitney_subdivide(const whitney_complex* k, whitney_complex** out_subdivided,
                                             char** out_manifest);
/* {"betti":[...],"boundary_rank":[...]} */
WHITNEY_API whitney_status whitney_homology(const whitney_complex* k, char** out);
/* Euler check of fn, or of the space when fn is NULL:
 * {"euler":bool,"offenders":[[ids]]} */
WHITNEY_API whitney_status whitney_euler_check(const whitney_complex* k, const whitney_function* fn, char** out);
/* Bundled corpus: [{"name","description","euler_space"}] */
WHITNEY_API whitney_status whitney_corpus_list(char** out);

/* Constructible functions */
WHITNEY_API whitney_status whitney_function_from_json(const whitney_complex* k, const char* json,
                                                      whitney_function** out);
WHITNEY_API whitney_status whitney_function_load(const whitney_complex* k, const char* path, whitney_function** out);
/* mod2 != 0 selects Z/2. */
WHITNEY_API whitney_status whitney_function_constant(const whitney_complex* k, int mod2, int64_t value,
                                                     whitney_function** out);
WHITNEY_API void whitney_function_free(whitney_function* fn);
WHITNEY_API whitney_status whitney_function_to_json(const whitney_function* fn, char** out);
WHITNEY_API whitney_status whitney_function_chi(const whitney_function* fn, int64_t* out);
WHITNEY_API whitney_status whitney_function_dual(const whitney_function* fn, whitney_function** out);
WHITNEY_API whitney_status whitney_function_is_euler(const whitney_function* fn, int* out);
/* The function read on the barycentric subdivision (value of the carrier). */
WHITNEY_API whitney_status whitney_function_lift(const whitney_function* fn, whitney_function** out);

/* Simplicial maps */
WHITNEY_API whitney_status whitney_map_from_json(const whitney_complex* domain, const whitney_complex* codomain,
                                                 const char* json, whitney_map** out);
WHITNEY_API whitney_status whitney_map_load(const whitney_complex* domain, const whitney_complex* codomain,
                                            const char* path, whitney_map** out);
WHITNEY_API void whitney_map_free(whitney_map* f);
WHITNEY_API whitney_status whitney_pushforward(const whitney_map* f, const whitney_function* fn,
                                               whitney_function** out);
WHITNEY_API whitney_status whitney_pullback(const whitney_map* f, const whitney_function* fn, whitney_function** out);

/* Mod 2 chains */
WHITNEY_API whitney_status whitney_chain_from_json(const whitney_complex* k, const char* json, whitney_chain** out);
WHITNEY_API whitney_status whitney_chain_load(const whitney_complex* k, const char* path, whitney_chain** out);
WHITNEY_API void whitney_chain_free(whitney_chain* c);
/* provenance may be NULL or a JSON object whose keys precede "dim". */
WHITNEY_API whitney_status whitney_chain_to_json(const whitney_chain* c, const char* provenance, char** out);
WHITNEY_API whitney_status whitney_chain_size(const whitney_chain* c, size_t* out);
WHITNEY_API whitney_status whitney_chain_equal(const whitney_chain* a, const whitney_chain* b, int* out);
WHITNEY_API whitney_status whitney_chain_is_cycle(const whitney_chain* c, int* out);
/* out_witness may be NULL; it is set to NULL when the cycle does not bound. */
WHITNEY_API whitney_status whitney_chain_bounds(const whitney_chain* c, int* out_bounds, whitney_chain** out_witness);
WHITNEY_API whitney_status whitney_chain_homologous(const whitney_chain* a, const whitney_chain* b, int* out);
/* s_i(K) on K', or the representative of w_i(fn) when fn is not NULL. */
WHITNEY_API whitney_status whitney_stiefel_chain(const whitney_complex* k, int i, const whitney_function* fn,
                                                 whitney_chain** out);
/* sd_#: chain on K to chain on K'. */
WHITNEY_API whitney_status whitney_subdivide_chain(const whitney_chain* c, whitney_chain** out);

/* Simplexwise-linear maps and polar chains */
WHITNEY_API whitney_status whitney_affine_map_from_json(const whitney_complex* k, const char* json,
                                                        whitney_affine_map** out);
WHITNEY_API whitney_status whitney_affine_map_load(const whitney_complex* k, const char* path,
                                                   whitney_affine_map** out);
WHITNEY_API void whitney_affine_map_free(whitney_affine_map* f);
WHITNEY_API whitney_status whitney_affine_map_to_json(const whitney_affine_map* f, char** out);
/* Moment map f_i; its domain is the barycentric subdivision of k. */
WHITNEY_API whitney_status whitney_moment_map(const whitney_complex* k, int i, whitney_affine_map** out);
WHITNEY_API whitney_status whitney_projection_map(const whitney_complex* k, const char* basis_json,
                                                  whitney_affine_map** out);
/* Seeded generic basis of rank i+1; out_basis (may be NULL) receives the basis file. */
WHITNEY_API whitney_status whitney_random_projection(const whitney_complex* k, int i, uint64_t seed,
                                                     whitney_affine_map** out, char** out_basis);
/* {"per_simplex":R,"rank_generic":R,"star_general_position":R} with
 * R = {"holds":bool[,"offending":[ids],"reason":...]}. The first one decides
 * whether polar chains can be computed. */
WHITNEY_API whitney_status whitney_nondegeneracy(const whitney_affine_map* f, int i, char** out);
/* Euler singularity chain of f weighted by fn (NULL: the constant 1).
 * out_report (may be NULL) receives the half-link reports. */
WHITNEY_API whitney_status whitney_polar_chain(const whitney_affine_map* f, const whitney_function* fn, int i,
                                               whitney_chain** out, char** out_report);

/* Verification */
/* complexes_dir and counterexample_dir may be NULL. */
WHITNEY_API whitney_status whitney_verify(const char* suite, uint64_t seed, size_t trials, const char* complexes_dir,
                                          const char* counterexample_dir, int* out_passed, char** out_report_json,
                                          char** out_report_text);
WHITNEY_API whitney_status whitney_replay(const char* counterexample_json, int* out_holds, char** out_detail);
/* Parses and checks one artifact file. Function, chain and affine map files
 * need complex; a map file needs complex and codomain. Returns the status of
 * the file itself; out receives a JSON diagnostic in every case. */
WHITNEY_API whitney_status whitney_validate_file(const char* path, const whitney_complex* complex,
                                                 const whitney_complex* codomain, char** out);

#ifdef __cplusplus
}
#endif

#endif
