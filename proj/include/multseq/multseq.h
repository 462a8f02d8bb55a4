// Copyright 2026 The multseq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MULTSEQ_MULTSEQ_H_
#define MULTSEQ_MULTSEQ_H_

#include <stdint.h>

#if defined(MULTSEQ_BUILDING_LIBRARY)
#define MULTSEQ_API __attribute__((visibility("default")))
#else
#define MULTSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct multseq_sequence multseq_sequence;
typedef struct multseq_basis multseq_basis;
typedef struct multseq_report multseq_report;

typedef enum {
  MULTSEQ_OK = 0,
  MULTSEQ_E_INVALID_ARGUMENT = 1,
  MULTSEQ_E_DOMAIN = 2,
  MULTSEQ_E_INSUFFICIENT_PREFIX = 3,
  MULTSEQ_E_ZERO_POLYNOMIAL = 4,
  MULTSEQ_E_PARSE = 5,
  MULTSEQ_E_INTERNAL = 6
} multseq_status;

typedef enum {
  MULTSEQ_BASIS_MONOMIAL = 0,
  MULTSEQ_BASIS_LAGUERRE = 1,
  MULTSEQ_BASIS_HERMITE = 2
} multseq_basis_kind;

typedef enum {
  MULTSEQ_VERDICT_NONE = 0, /* apply, symbol */
  MULTSEQ_VERDICT_YES = 1,
  MULTSEQ_VERDICT_NO = 2,
  MULTSEQ_VERDICT_UNDETERMINED = 3
} multseq_verdict;

/* Message for the last failed call on this thread; "" if none. */
MULTSEQ_API const char* multseq_last_error(void);

/* "poly:c0,c1,..." or "list:v0,v1,..."; complete != 0 makes unlisted entries zero. */
MULTSEQ_API multseq_status multseq_sequence_parse(const char* text, int complete,
                                                  multseq_sequence** out);
MULTSEQ_API void multseq_sequence_free(multseq_sequence* s);

/* alpha ("p/q" or an integer) is required for Laguerre and ignored otherwise. */
MULTSEQ_API multseq_status multseq_basis_create(multseq_basis_kind kind, const char* alpha,
                                                multseq_basis** out);
/* name is "monomial", "laguerre" or "hermite". */
MULTSEQ_API multseq_status multseq_basis_parse(const char* name, const char* alpha,
                                               multseq_basis** out);
MULTSEQ_API void multseq_basis_free(multseq_basis* b);

typedef struct {
  const char* tolerance; /* isolating interval width; NULL for 2^-30 */
  int degree_cap;        /* bounded test cap for lists; -1 for the default */
} multseq_classify_options;

MULTSEQ_API void multseq_classify_options_init(multseq_classify_options* opts);

typedef struct {
  uint64_t seed;
  int trials;
  int max_degree;
} multseq_fuzz_options;

MULTSEQ_API void multseq_fuzz_options_init(multseq_fuzz_options* opts);

/* opts may be NULL for defaults. */
MULTSEQ_API multseq_status multseq_classify(const multseq_sequence* s, const multseq_basis* b,
                                            const multseq_classify_options* opts,
                                            multseq_report** out);
MULTSEQ_API multseq_status multseq_verify(const multseq_sequence* s, const multseq_basis* b,
                                          const multseq_classify_options* classify_opts,
                                          const multseq_fuzz_options* fuzz_opts,
                                          multseq_report** out);
/* poly is "c0,c1,..." in the monomial basis. */
MULTSEQ_API multseq_status multseq_apply(const multseq_sequence* s, const multseq_basis* b,
                                         const char* poly, multseq_report** out);
MULTSEQ_API multseq_status multseq_symbol(const multseq_sequence* s, const multseq_basis* b,
                                          int order, multseq_report** out);
/* *valid is set to 1 or 0; *out (may be NULL) receives {"verb":"certify",...}. */
MULTSEQ_API multseq_status multseq_certify(const char* report_json, int* valid,
                                           multseq_report** out);

MULTSEQ_API multseq_verdict multseq_report_verdict(const multseq_report* r);
/* Indented JSON owned by the report. */
MULTSEQ_API const char* multseq_report_json(const multseq_report* r);
MULTSEQ_API void multseq_report_free(multseq_report* r);

#ifdef __cplusplus
}
#endif

#endif /* MULTSEQ_MULTSEQ_H_ */
