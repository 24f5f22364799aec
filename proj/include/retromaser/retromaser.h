/*
 * Copyright 2026 The retromaser Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to retromaser: micromaser field POM elements and retrodictive
 * photon-number distributions from sequences of atomic detections.
 *
 * Conventions:
 *  - Every function returning rm_status reports failure through its return
 *    value; on failure rm_last_error() holds a message for the calling
 *    thread and output handles are left untouched.
 *  - Handles are opaque, immutable once created and safe to share between
 *    threads. Each *_create / producing call must be paired with the
 *    matching *_destroy. Destroying NULL is a no-op.
 *  - Pointers returned into a handle (rm_weights_data, strings) stay valid
 *    until that handle is destroyed.
 *  - Detection sequences are strings over {'e','g'}, first atom first.
 */

#ifndef RETROMASER_RETROMASER_H_
#define RETROMASER_RETROMASER_H_

#include <stddef.h>

#if defined(RETROMASER_BUILDING_LIBRARY)
#define RETROMASER_API __attribute__((visibility("default")))
#else
#define RETROMASER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rm_status {
    RM_OK = 0,
    RM_ERR_INVALID_ARGUMENT = 1,
    /* The conditioning event is impossible (no photon number survives). */
    RM_ERR_EMPTY_SUPPORT = 2,
    /* An enumeration or dense-matrix size limit was exceeded. */
    RM_ERR_BOUND_EXCEEDED = 3,
    RM_ERR_INTERNAL = 4
} rm_status;

typedef enum rm_outcome { RM_EXCITED = 0, RM_GROUND = 1 } rm_outcome;

typedef struct rm_params_s *rm_params_t;
typedef struct rm_sequence_s *rm_sequence_t;
typedef struct rm_prior_s *rm_prior_t;
typedef struct rm_weights_s *rm_weights_t;
typedef struct rm_state_s *rm_state_t;
typedef struct rm_report_s *rm_report_t;

RETROMASER_API const char *rm_version(void);
RETROMASER_API const char *rm_status_string(rm_status status);
/* Message of the last failed call on this thread ("" if none). */
RETROMASER_API const char *rm_last_error(void);

/* ---- parameters ---------------------------------------------------------- */

/* theta = coupling * interaction time (radians), finite and >= 0;
 * n_max >= 1; detuning must be 0. */
RETROMASER_API rm_status rm_params_create(double theta, size_t n_max,
                                          double detuning, rm_params_t *out);
RETROMASER_API void rm_params_destroy(rm_params_t params);
RETROMASER_API double rm_params_theta(rm_params_t params);
RETROMASER_API size_t rm_params_n_max(rm_params_t params);

/* ---- detection sequences -------------------------------------------------- */

RETROMASER_API rm_status rm_sequence_parse(const char *text, rm_sequence_t *out);
RETROMASER_API void rm_sequence_destroy(rm_sequence_t seq);
RETROMASER_API size_t rm_sequence_length(rm_sequence_t seq);
RETROMASER_API size_t rm_sequence_ground_count(rm_sequence_t seq);
/* NUL-terminated {e,g} string. */
RETROMASER_API const char *rm_sequence_string(rm_sequence_t seq);

/* ---- photon-number weights ------------------------------------------------ */

/* Copies `size` (>= 2) non-negative finite values. */
RETROMASER_API rm_status rm_weights_create(const double *values, size_t size,
                                           rm_weights_t *out);
RETROMASER_API void rm_weights_destroy(rm_weights_t weights);
RETROMASER_API size_t rm_weights_size(rm_weights_t weights);
RETROMASER_API const double *rm_weights_data(rm_weights_t weights);
RETROMASER_API double rm_weights_total(rm_weights_t weights);
/* 1 when every entry is exactly zero (impossible event), else 0. */
RETROMASER_API int rm_weights_empty_support(rm_weights_t weights);
/* RM_ERR_EMPTY_SUPPORT when the total is zero. */
RETROMASER_API rm_status rm_weights_normalized(rm_weights_t weights,
                                               rm_weights_t *out);

/* ---- priors over the initial photon number ------------------------------- */

RETROMASER_API rm_status rm_prior_uniform(rm_prior_t *out);
/* Uniform on 0..max_n. */
RETROMASER_API rm_status rm_prior_cap(size_t max_n, rm_prior_t *out);
/* Copies the weights; length must equal n_max + 1 where used. */
RETROMASER_API rm_status rm_prior_explicit(rm_weights_t weights, rm_prior_t *out);
RETROMASER_API void rm_prior_destroy(rm_prior_t prior);
/* "uniform", "cap:K" or "explicit". */
RETROMASER_API const char *rm_prior_describe(rm_prior_t prior);

/* ---- Rabi factors --------------------------------------------------------- */

/* theta * sqrt(n + m), m >= 1 */
RETROMASER_API rm_status rm_rabi_frequency_factor(rm_params_t params, size_t n,
                                                  unsigned m, double *out);
/* cos^2(theta sqrt(n + m)) */
RETROMASER_API rm_status rm_c_factor(rm_params_t params, size_t n, unsigned m,
                                     double *out);
/* sin^2(theta sqrt(n + m)) */
RETROMASER_API rm_status rm_s_factor(rm_params_t params, size_t n, unsigned m,
                                     double *out);

/* ---- POM elements --------------------------------------------------------- */

/* Coefficients C_n, n = 0..n_max, of the field POM element. */
RETROMASER_API rm_status rm_build_pom(rm_params_t params, rm_sequence_t seq,
                                      rm_weights_t *coefficients);
/* max_n |sum over all 2^length elements - 1|; length <= 16. */
RETROMASER_API rm_status rm_completeness_check(rm_params_t params, size_t length,
                                               double *deviation);
/* row is "ee", "gg", "eg" or "ge": max_n |build_pom - closed form|. */
RETROMASER_API rm_status rm_table1_deviation(rm_params_t params, const char *row,
                                             double *deviation);

/* ---- retrodiction --------------------------------------------------------- */

/* One atom traced backwards; result unnormalized, may be all zero. */
RETROMASER_API rm_status rm_backward_update(rm_params_t params, rm_weights_t after,
                                            rm_outcome outcome, rm_weights_t *before);
RETROMASER_API rm_status rm_retrodict_with_final(rm_params_t params,
                                                 rm_weights_t final_weights,
                                                 rm_sequence_t seq,
                                                 rm_weights_t *initial);
/* RM_ERR_EMPTY_SUPPORT when the prior excludes every consistent n. */
RETROMASER_API rm_status rm_retrodict_state(rm_params_t params, rm_sequence_t seq,
                                            rm_prior_t prior, rm_state_t *out);
RETROMASER_API void rm_state_destroy(rm_state_t state);
/* Borrowed handle owned by the state; do not destroy. */
RETROMASER_API rm_weights_t rm_state_distribution(rm_state_t state);
RETROMASER_API void rm_state_support(rm_state_t state, size_t *min_n,
                                     size_t *implied_final_min, size_t *gap_count);
RETROMASER_API rm_status rm_state_gap(rm_state_t state, size_t index, size_t *first,
                                      size_t *last);

/* ---- forward oracle ------------------------------------------------------- */

/* P(seq | n photons initially), n = 0..n_max. */
RETROMASER_API rm_status rm_sequence_likelihood(rm_params_t params, rm_sequence_t seq,
                                                rm_weights_t *likelihood);
RETROMASER_API rm_status rm_bayes_posterior(rm_params_t params, rm_sequence_t seq,
                                            rm_prior_t prior, rm_weights_t *posterior);
/* Closed-form unitary vs dense exponential; max_photons <= 60. */
RETROMASER_API rm_status rm_matrix_exponential_check(rm_params_t params,
                                                     size_t max_photons,
                                                     double *deviation);

/* ---- preset figure scenarios ---------------------------------------------- */

RETROMASER_API size_t rm_figure_count(void);
/* prior_cap is set to -1 for a uniform prior. Strings are static. */
RETROMASER_API rm_status rm_figure_info(size_t index, const char **id,
                                        const char **sequence, long *prior_cap);
RETROMASER_API rm_status rm_figure_find(const char *id, size_t *index);

/* ---- verification suite --------------------------------------------------- */

RETROMASER_API rm_status rm_verify(rm_params_t params, rm_report_t *out);
RETROMASER_API void rm_report_destroy(rm_report_t report);
RETROMASER_API size_t rm_report_count(rm_report_t report);
RETROMASER_API int rm_report_passed(rm_report_t report);
RETROMASER_API rm_status rm_report_check(rm_report_t report, size_t index,
                                         const char **name, int *passed,
                                         double *value, double *tolerance,
                                         const char **detail);

#ifdef __cplusplus
}
#endif

#endif /* RETROMASER_RETROMASER_H_ */
