// Copyright 2026 The indeg Authors.
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

/* C interface to the indeg solvers. All reports are UTF-8 JSON strings owned
 * by the caller and released with indeg_string_free. On any status other
 * than INDEG_OK (and INDEG_MISMATCH, which still yields a report),
 * indeg_last_error() describes the failure for the calling thread. */
#ifndef INDEG_INDEG_H_
#define INDEG_INDEG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define INDEG_API __declspec(dllexport)
#elif defined(__GNUC__)
#define INDEG_API __attribute__((visibility("default")))
#else
#define INDEG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum indeg_status {
  INDEG_OK = 0,
  INDEG_MISMATCH = 1,         /* compare: solver and oracle disagree */
  INDEG_PARSE_ERROR = 2,      /* malformed graph, objective or request */
  INDEG_PRECONDITION = 3,     /* input outside the chosen solver's domain */
  INDEG_INVALID_ARGUMENT = 4, /* null pointer, unknown mode */
  INDEG_INTERNAL = 5
} indeg_status;

typedef struct indeg_graph indeg_graph;

typedef struct indeg_options {
  uint64_t seed;
  uint64_t trials;        /* random mode */
  const char* tie_break;  /* acyclic-greedy: "lowest-id", "random", "worst" */
  const char* fixed_arcs; /* cyclic-flow: "edge:head,edge:head" or NULL */
  unsigned dp_cap;        /* acyclic-exact vertex cap */
} indeg_options;

INDEG_API void indeg_options_init(indeg_options* options);

INDEG_API const char* indeg_version(void);
INDEG_API const char* indeg_last_error(void);
INDEG_API void indeg_string_free(char* s);

/* Edge-list text or JSON. */
INDEG_API indeg_status indeg_graph_parse(const char* text, indeg_graph** out);
/* k5, c6, p4, fig4, gk:3 */
INDEG_API indeg_status indeg_graph_named(const char* name, indeg_graph** out);
/* A file path, falling back to a named graph. */
INDEG_API indeg_status indeg_graph_load(const char* path_or_name, indeg_graph** out);
/* endpoints holds 2*m vertex ids. */
INDEG_API indeg_status indeg_graph_from_edges(size_t n, size_t m, const uint32_t* endpoints,
                                              int allow_loops, indeg_graph** out);
INDEG_API void indeg_graph_free(indeg_graph* graph);
INDEG_API size_t indeg_graph_vertex_count(const indeg_graph* graph);
INDEG_API size_t indeg_graph_edge_count(const indeg_graph* graph);
INDEG_API indeg_status indeg_graph_to_text(const indeg_graph* graph, char** out);

/* objective: a bare name ("square", "dec_min", ...) or a JSON document.
 * options may be NULL for defaults. */
INDEG_API indeg_status indeg_solve(const indeg_graph* graph, const char* objective,
                                   const char* mode, const indeg_options* options,
                                   char** report);
/* regime: "cyclic" or "acyclic". */
INDEG_API indeg_status indeg_oracle(const indeg_graph* graph, const char* objective,
                                    const char* regime, char** report);
/* Returns INDEG_MISMATCH, with the report filled in, when a check fails. */
INDEG_API indeg_status indeg_compare(const indeg_graph* graph, const char* objective,
                                     const char* mode, const indeg_options* options,
                                     char** report);
INDEG_API indeg_status indeg_bench(const indeg_graph* graph, const char* objective,
                                   const char* mode, const indeg_options* options,
                                   unsigned repeat, char** report);
/* Scores the order or orientation in a solve/oracle report. */
INDEG_API indeg_status indeg_evaluate(const indeg_graph* graph, const char* objective,
                                      const char* report, char** key);
/* request: JSON {"family": "fig4"|"gk"|"random"|"scheduling", ...}.
 * objective receives NULL unless the family carries one. */
INDEG_API indeg_status indeg_generate(const char* request, char** graph_text, char** objective);

#ifdef __cplusplus
}
#endif

#endif /* INDEG_INDEG_H_ */
