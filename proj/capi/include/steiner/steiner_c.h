/* Copyright 2026 The SteinerKit Authors
 *
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

/* C interface to the Steiner-tree toolkit. Every object is an opaque
 * handle created and destroyed by this library; every fallible call
 * returns an stk_status, with a human-readable message available from
 * stk_last_error() (thread-local, valid until the next failing call on
 * the same thread). Strings returned through char** out-parameters are
 * owned by the caller and released with stk_string_free().
 */

#ifndef STEINER_STEINER_C_H_
#define STEINER_STEINER_C_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stk_status {
  STK_OK = 0,
  STK_ERROR_INVALID_ARGUMENT = 1, /* bad inputs, unsupported sizes, ... */
  STK_ERROR_PARSE = 2,            /* malformed instance/model file */
  STK_ERROR_IO = 3,               /* filesystem failure */
  STK_ERROR_INTERNAL = 4,         /* unexpected failure inside the library */
} stk_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* stk_last_error(void);

const char* stk_version(void);

void stk_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Instances                                                          */

typedef struct stk_instance stk_instance;

/* Builds an instance from edge arrays (0-based endpoints). Weights are
 * integer numerators over a common positive denominator, so exact decimal
 * weights are representable (e.g. 25/10 = 2.5). Pass denominator 1 for
 * integer weights. The graph must be connected and carry >= 2 terminals. */
stk_status stk_instance_create(int node_count, int edge_count, const int* us,
                               const int* vs, const int64_t* weights,
                               int64_t weight_denominator,
                               const int* terminals, int terminal_count,
                               const char* id, stk_instance** out);

/* Reads a SteinLib-style STP file. Warnings about skipped sections are
 * joined into *warnings when non-NULL (NULL when there were none). */
stk_status stk_instance_load(const char* path, char** warnings,
                             stk_instance** out);

stk_status stk_instance_parse(const char* text, char** warnings,
                              stk_instance** out);

/* Canonical STP serialization (byte-deterministic). */
stk_status stk_instance_serialize(const stk_instance* instance, char** text);
stk_status stk_instance_save(const stk_instance* instance, const char* path);

int stk_instance_node_count(const stk_instance* instance);
int stk_instance_edge_count(const stk_instance* instance);
int stk_instance_terminal_count(const stk_instance* instance);
/* Fills `out` with the sorted terminal ids (terminal_count entries). */
void stk_instance_terminals(const stk_instance* instance, int* out);
/* Borrowed pointer, valid while the instance lives. */
const char* stk_instance_id(const stk_instance* instance);
int64_t stk_instance_weight_denominator(const stk_instance* instance);
/* Graph density and hop radius. */
stk_status stk_instance_stats(const stk_instance* instance, double* density,
                              int* radius);

void stk_instance_free(stk_instance* instance);

/* ------------------------------------------------------------------ */
/* Trees                                                              */

typedef struct stk_tree stk_tree;

int stk_tree_edge_count(const stk_tree* tree);
void stk_tree_edge(const stk_tree* tree, int index, int* u, int* v);
/* Exact cost numerator; divide by the instance's weight denominator. */
int64_t stk_tree_cost_numerator(const stk_tree* tree);
double stk_tree_cost(const stk_tree* tree);

void stk_tree_free(stk_tree* tree);

/* ------------------------------------------------------------------ */
/* Models                                                             */

typedef struct stk_model stk_model;

stk_status stk_model_load(const char* path, stk_model** out);
stk_status stk_model_save(const stk_model* model, const char* path);
/* "ff", "gnn", "gcn" or "gat"; borrowed pointer. */
const char* stk_model_variant(const stk_model* model);
/* Per-node inclusion scores in [0, 1]; `scores` must hold node_count
 * doubles. */
stk_status stk_model_score(const stk_model* model,
                           const stk_instance* instance, double* scores);

void stk_model_free(stk_model* model);

/* ------------------------------------------------------------------ */
/* Solvers                                                            */

/* method: "exact" (subset dynamic program, refuses more than
 * exact_terminal_cap terminals), "2approx" (distance-network heuristic,
 * cost <= 2x optimal), "h1" or "h2" (score-guided heuristics; require a
 * model). */
stk_status stk_solve(const stk_instance* instance, const char* method,
                     const stk_model* model_or_null, int exact_terminal_cap,
                     stk_tree** out);

/* Per-node probabilities -> tree, without going through a model handle. */
stk_status stk_solve_with_scores(const stk_instance* instance,
                                 const char* method, const double* scores,
                                 stk_tree** out);

/* ------------------------------------------------------------------ */
/* Datasets                                                           */

typedef struct stk_dataset stk_dataset;

typedef struct stk_dataset_spec {
  /* Comma-separated family list out of ER, WS, BA, GE. */
  const char* families;
  const int* node_counts;
  int node_count_len;
  const double* terminal_fractions;
  int terminal_fraction_len;
  int seeds_per_cell;
  int weighted; /* 0/1 */
  uint64_t base_seed;
  /* Family knobs; see the generator documentation. */
  double er_p;
  int ws_k;
  double ws_p;
  int ba_m;
  double ge_eps;
} stk_dataset_spec;

/* Fills the spec with defaults (all four families, n=20, fraction 0.2,
 * one seed per cell, unweighted, seed 0, standard family knobs). */
void stk_dataset_spec_init(stk_dataset_spec* spec);

stk_status stk_dataset_generate(const stk_dataset_spec* spec,
                                stk_dataset** out);
stk_status stk_dataset_load(const char* dir, stk_dataset** out);
stk_status stk_dataset_save(const stk_dataset* dataset, const char* dir);

/* Exact-labels every unlabeled entry within the terminal cap. Entries over
 * the cap stay unlabeled; entries where the solver fails are dropped. The
 * per-entry diagnostics are joined into *log when non-NULL. */
stk_status stk_dataset_label(stk_dataset* dataset, int terminal_cap,
                             int* labeled, int* skipped_over_cap, int* dropped,
                             char** log);

int stk_dataset_size(const stk_dataset* dataset);
int stk_dataset_train_count(const stk_dataset* dataset);
int stk_dataset_labeled_count(const stk_dataset* dataset);

void stk_dataset_free(stk_dataset* dataset);

/* ------------------------------------------------------------------ */
/* Training                                                           */

typedef struct stk_train_options {
  int epochs;
  double learning_rate;
  uint64_t seed;
  int use_dropout; /* 0/1 */
  /* Architecture overrides; see the model documentation for defaults. */
  int ff_max_nodes;
  int ff_hidden;
  int gnn_state_dim;
  int gnn_hidden;
  int gnn_max_iters;
  int conv_hidden;
  int mlp_hidden;
  double dropout_rate;
} stk_train_options;

void stk_train_options_init(stk_train_options* options);

/* Trains `variant` on the labeled train split of `dataset`. */
stk_status stk_model_train(const stk_dataset* dataset, const char* variant,
                           const stk_train_options* options, stk_model** out);

/* Final per-epoch mean training loss values. Returns the curve length;
 * fills up to `capacity` leading entries when `out` is non-NULL. */
int stk_model_loss_curve(const stk_model* model, double* out, int capacity);

/* ------------------------------------------------------------------ */
/* Evaluation                                                         */

/* Runs comma-separated methods (out of exact,2approx,h1,h2) on the labeled
 * test split, writing a JSON report to json_path and CSV tables to
 * csv_path (plus "<stem>_rows.csv"); either path may be NULL to skip that
 * format. A short text summary is returned through *summary when non-NULL. */
stk_status stk_evaluate(const stk_dataset* dataset, const char* methods,
                        const stk_model* model_or_null, int exact_terminal_cap,
                        const char* json_path, const char* csv_path,
                        char** summary);

/* Density/radius histogram CSV (20 bins per family and metric). */
stk_status stk_distribution_stats(const stk_dataset* dataset, char** csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STEINER_STEINER_C_H_ */
