/*
 * Copyright 2026 The edgecover Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libedgecover.
 *
 * Every fallible call returns an ec_status. On failure the message of the
 * most recent error on the calling thread is available from ec_last_error()
 * until the next failing call on that thread. Output handles are written only
 * on success. Handles are owned by the caller and released with the matching
 * *_destroy function; passing NULL to a destroy function is a no-op.
 *
 * Graph handles are immutable once created (ec_graph_set_param and
 * ec_graph_set_random_weights replace the contents of the handle and must not
 * race with readers of the same handle).
 */

#ifndef EDGECOVER_EDGECOVER_C_H_
#define EDGECOVER_EDGECOVER_C_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EC_API __declspec(dllexport)
#else
#define EC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ec_status {
  EC_OK = 0,
  EC_ERR_INPUT = 1,
  EC_ERR_PARSE = 2,
  EC_ERR_INFEASIBLE = 3,
  EC_ERR_CAP_REFUSAL = 4,
  EC_ERR_NO_CANDIDATE = 5,
  EC_ERR_OVERFLOW = 6,
  EC_ERR_INTERNAL = 7
} ec_status;

typedef struct ec_graph ec_graph;
typedef struct ec_solution ec_solution;

EC_API const char* ec_last_error(void);
EC_API const char* ec_status_name(ec_status status);
EC_API const char* ec_version(void);

/* ---- graphs ------------------------------------------------------------ */

/* weights may be NULL for unit weights; endpoints holds 2*m vertex ids. */
EC_API ec_status ec_graph_create(int32_t n, const int64_t* weights, int64_t m,
                                 const int32_t* endpoints, ec_graph** out);
EC_API ec_status ec_graph_load(const char* path, ec_graph** out);
EC_API ec_status ec_graph_parse(const char* text, size_t len, ec_graph** out);
EC_API ec_status ec_graph_save(const ec_graph* g, const char* path);
/* Writes at most cap bytes of the instance text, NUL-terminated when it fits;
 * *needed receives the full length without the terminator. */
EC_API ec_status ec_graph_to_text(const ec_graph* g, char* buf, size_t cap,
                                  size_t* needed);
/* kind: "path" (n vertices), "star" (n leaves), "complete" (n vertices) or
 * "gnp" (n vertices, edge probability p_num/p_den, seed). */
EC_API ec_status ec_graph_generate(const char* kind, int32_t n, int64_t p_num,
                                   int64_t p_den, uint64_t seed,
                                   ec_graph** out);
EC_API ec_status ec_graph_set_random_weights(ec_graph* g, int64_t max_weight,
                                             uint64_t seed);
/* Instance parameters, stored as "# @key = value" lines. */
EC_API ec_status ec_graph_set_param(ec_graph* g, const char* key,
                                    const char* value);
/* EC_ERR_INPUT when the key is absent. Same buffer contract as to_text. */
EC_API ec_status ec_graph_get_param(const ec_graph* g, const char* key,
                                    char* buf, size_t cap, size_t* needed);
EC_API void ec_graph_destroy(ec_graph* g);

EC_API int32_t ec_graph_num_vertices(const ec_graph* g);
EC_API int64_t ec_graph_num_edges(const ec_graph* g);
EC_API int64_t ec_graph_total_weight(const ec_graph* g);
EC_API int64_t ec_graph_weight(const ec_graph* g, int32_t v);
EC_API int64_t ec_graph_degree(const ec_graph* g, int32_t v);
EC_API int ec_graph_uniform_weights(const ec_graph* g);

/* ---- counting primitives ----------------------------------------------- */

typedef enum ec_count_kind {
  EC_COUNT_DEG_SUM = 0,
  EC_COUNT_INTERNAL_EDGES = 1,
  EC_COUNT_TOUCHED = 2,
  EC_COUNT_WEIGHT = 3
} ec_count_kind;

EC_API ec_status ec_count(const ec_graph* g, ec_count_kind kind,
                          const int32_t* ids, size_t len, int64_t* out);
EC_API ec_status ec_cross_edges(const ec_graph* g, const int32_t* x,
                                size_t x_len, const int32_t* y, size_t y_len,
                                int64_t* out);
EC_API ec_status ec_mwec_feasibility_audit(const ec_graph* g,
                                           const int32_t* ids, size_t len,
                                           int64_t edge_budget, int* out);

/* ---- solvers ----------------------------------------------------------- */

typedef struct ec_reduction_options {
  int64_t alpha_num, alpha_den; /* FCEC approximation factor, >= 1 */
  int64_t tau_num, tau_den;     /* > 0 */
  int32_t retries;
  uint64_t seed;
  int32_t threads;
} ec_reduction_options;

/* alpha = 2, tau = 1/2, retries = 64, seed = 1, threads = 1. */
EC_API void ec_reduction_options_init(ec_reduction_options* options);

EC_API ec_status ec_solve_fcec(const ec_graph* g, int64_t target_weight,
                               ec_solution** out);
EC_API ec_status ec_solve_min_degree_knapsack(const ec_graph* g,
                                              int64_t target_weight,
                                              ec_solution** out);
EC_API ec_status ec_solve_k_lowest_degree(const ec_graph* g, int64_t k,
                                          ec_solution** out);
EC_API ec_status ec_solve_mwec(const ec_graph* g, int64_t edge_budget,
                               int32_t threads, ec_solution** out);
/* Uses the knapsack FCEC solver as the black box. */
EC_API ec_status ec_solve_mwec_via_fcec(const ec_graph* g, int64_t edge_budget,
                                        const ec_reduction_options* options,
                                        ec_solution** out);
EC_API ec_status ec_solve_density(const ec_graph* g, const int32_t* u,
                                  size_t u_len, ec_solution** out);

/* ---- exhaustive oracles ------------------------------------------------ */

EC_API ec_status ec_oracle_fcec(const ec_graph* g, int64_t target_weight,
                                int32_t cap, ec_solution** out);
EC_API ec_status ec_oracle_mwec(const ec_graph* g, int64_t edge_budget,
                                int32_t cap, ec_solution** out);
EC_API ec_status ec_oracle_min_degree_knapsack(const ec_graph* g,
                                               int64_t target_weight,
                                               int32_t cap, ec_solution** out);
EC_API ec_status ec_oracle_density(const ec_graph* g, const int32_t* u,
                                   size_t u_len, int32_t cap,
                                   ec_solution** out);

/* ---- solutions --------------------------------------------------------- */

typedef struct ec_solution_info {
  int64_t weight;
  int64_t touched;
  int64_t deg_sum;
  int64_t internal_edges;
  /* Density results and density oracles; 0/1 otherwise. */
  int64_t rho_num, rho_den;
  /* Oracles: subsets examined. */
  uint64_t enumerated;
  /* Reduction: 1 when no sample avoided both bad events. */
  int32_t warning;
  int64_t best_guess;
  int64_t guesses;
  /* Density: the cut at the optimum (capacities scaled by cut_scale). */
  int64_t cut_value;
  int64_t cut_scale;
  int64_t edge_nodes;
  int64_t edge_nodes_source;
  int32_t probes;
} ec_solution_info;

EC_API size_t ec_solution_size(const ec_solution* s);
EC_API int32_t ec_solution_vertex(const ec_solution* s, size_t i);
EC_API void ec_solution_get_info(const ec_solution* s, ec_solution_info* out);
EC_API void ec_solution_destroy(ec_solution* s);

/* ---- integrality-gap experiment ---------------------------------------- */

typedef struct ec_gap_report {
  int64_t n;
  int64_t k;
  uint64_t seed;
  int64_t m;
  int64_t lp_num, lp_den;
  int64_t integral_value;
  int32_t has_ratio; /* 0 when m = 0 */
  int64_t ratio_num, ratio_den;
} ec_gap_report;

EC_API ec_status ec_gap_experiment(int64_t n, uint64_t seed,
                                   ec_gap_report* out);

/* ---- weight rescaling -------------------------------------------------- */

/* Same topology with rescaled weights; truncated vertices get weight 0.
 * Vertices of degree above edge_budget are truncated too; pass a negative
 * edge_budget for no limit. */
EC_API ec_status ec_rescale_weights(const ec_graph* g, int64_t edge_budget,
                                    ec_graph** out, int32_t* pivot);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* EDGECOVER_EDGECOVER_C_H_ */
