#ifndef FAIRENUM_H
#define FAIRENUM_H

/* C interface to the fairenum library. All handles are opaque; every call
 * that can fail returns an fe_status and leaves a message for
 * fe_last_error() on the calling thread. Strings returned through char**
 * out-parameters are owned by the caller and released with
 * fe_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(FAIRENUM_BUILDING_LIBRARY)
#define FE_API __attribute__((visibility("default")))
#else
#define FE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fe_status {
  FE_OK = 0,
  FE_ERR_DOMAIN = 1,           /* parameter outside its mathematical domain */
  FE_ERR_INVALID_ARGUMENT = 2, /* bad handle, index, or option */
  FE_ERR_PARSE = 3,            /* malformed graph, model, or JSON text */
  FE_ERR_LIMIT = 4,            /* instance too large for the requested method */
  FE_ERR_SAMPLER = 5,          /* sampler could not produce a feasible draw */
  FE_ERR_INTERNAL = 6
} fe_status;

/* Message for the last failed call on this thread; "" if none. */
FE_API const char* fe_last_error(void);
FE_API const char* fe_version(void);
FE_API const char* fe_status_name(fe_status status);
FE_API void fe_string_free(char* s);

/* Counter-based seed of job `index` in `stream` under a master seed. */
FE_API uint64_t fe_derive_seed(uint64_t master, uint64_t stream, uint64_t index);

/* Tolerance bounds. */
FE_API fe_status fe_kappa1(double epsilon, double* out);
FE_API fe_status fe_kappa2(double epsilon, double* out);
FE_API fe_status fe_deadline(uint64_t m, double kappa, double epsilon, uint64_t* out);
FE_API fe_status fe_sample_budget(uint64_t n, double epsilon, double kappa, uint64_t* out);

/* Graphs. */
typedef struct fe_graph fe_graph;

FE_API fe_status fe_graph_parse(const char* dimacs, fe_graph** out);
FE_API fe_status fe_graph_erdos_renyi(uint64_t n, double density, uint64_t seed, fe_graph** out);
FE_API void fe_graph_free(fe_graph* g);
FE_API uint64_t fe_graph_vertices(const fe_graph* g);
FE_API uint64_t fe_graph_edges(const fe_graph* g);
FE_API fe_status fe_graph_to_dimacs(const fe_graph* g, char** out);
/* Exact maximum cliques as a JSON object. budget_seconds <= 0 means no
 * budget; when the budget runs out "solved" is false and no cliques are
 * listed. */
FE_API fe_status fe_graph_max_cliques_json(const fe_graph* g, double budget_seconds, char** out);
/* The max-clique QUBO of g in the model text format. */
FE_API fe_status fe_graph_clique_qubo(const fe_graph* g, double penalty, char** out);

/* QUBO / Ising models in the text format. */
typedef struct fe_model fe_model;

FE_API fe_status fe_model_parse(const char* text, fe_model** out);
FE_API void fe_model_free(fe_model* m);
FE_API uint64_t fe_model_variables(const fe_model* m);
FE_API int fe_model_is_qubo(const fe_model* m);
FE_API fe_status fe_model_to_text(const fe_model* m, char** out);
/* Ising image of the model (identity for Ising input). */
FE_API fe_status fe_model_to_ising_text(const fe_model* m, char** out);

/* Annealing schedule. */
typedef struct fe_anneal_params {
  uint64_t sweeps;
  double beta_initial;
  double beta_final;
  int linear;       /* 0: geometric interpolation, 1: linear */
  int random_order; /* 0: sequential sweeps, 1: random spin order */
} fe_anneal_params;

typedef struct fe_enum_params {
  double epsilon;
  double penalty;      /* graph enumeration only */
  fe_anneal_params anneal;
  uint64_t seed;
  uint64_t budget_cap; /* raw draws; 0 = none */
  int record_trace;
} fe_enum_params;

FE_API void fe_enum_params_default(fe_enum_params* p);

/* One run of the optimization enumerator on an annealing sampler. */
typedef struct fe_result fe_result;

FE_API fe_status fe_enumerate_cliques(const fe_graph* g, const fe_enum_params* p, fe_result** out);
FE_API fe_status fe_enumerate_model(const fe_model* m, const fe_enum_params* p, fe_result** out);
FE_API void fe_result_free(fe_result* r);
FE_API uint64_t fe_result_count(const fe_result* r);
FE_API double fe_result_theta(const fe_result* r);
FE_API uint64_t fe_result_accepted_samples(const fe_result* r);
FE_API uint64_t fe_result_raw_draws(const fe_result* r);
/* 1 when the raw-draw cap ended the run (no tolerance guarantee). */
FE_API int fe_result_budget_capped(const fe_result* r);
/* Bit string of solution i, variable 0 first. */
FE_API fe_status fe_result_solution(const fe_result* r, uint64_t i, char** bits, double* cost);
FE_API fe_status fe_result_to_json(const fe_result* r, char** out);

/* JSON-level harness entry points. Inputs and outputs are JSON text. */

/* config: experiment config object. dimacs: optional graph text; NULL means
 * generate the Erdos-Renyi graph described by the config. */
FE_API fe_status fe_run_experiment_json(const char* config, const char* dimacs, char** out);
/* sweep: {"sizes": [...], "densities": [...], "instances": k, "base": {config}}.
 * Returns an array of experiment configs. */
FE_API fe_status fe_plan_sweep_json(const char* sweep, char** out);
FE_API fe_status fe_validate_bounds_json(const char* config, char** out);
/* Removes every "*_seconds" member, recursively. */
FE_API fe_status fe_strip_timings_json(const char* json, char** out);

/* Least-squares fit of log y = a + b x, reported as y ~ prefactor * base^x.
 * Points with y <= 0 are skipped. */
FE_API fe_status fe_fit_exponential(const double* x, const double* y, size_t count,
                                    double* base, double* prefactor, double* r_squared);

#ifdef __cplusplus
}
#endif

#endif
