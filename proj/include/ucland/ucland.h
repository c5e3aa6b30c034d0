/* Copyright 2026 The ucland developers
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

/* C interface to the ucland landscape laboratory.
 *
 * All functions return a ucland_status; UCLAND_OK means success.  On any
 * failure ucland_last_error() describes what went wrong (thread-local,
 * valid until the next call on the same thread).  Strings returned through
 * char** out-parameters are owned by the caller and released with
 * ucland_string_free.  Reports are opaque handles released with
 * ucland_report_free.
 */

#ifndef UCLAND_UCLAND_H_
#define UCLAND_UCLAND_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ucland_status {
  UCLAND_OK = 0,
  UCLAND_ERR_INVALID_ARGUMENT = 1,
  UCLAND_ERR_DIMENSION = 2,
  UCLAND_ERR_DOMAIN = 3,
  UCLAND_ERR_NUMERICAL = 4,
  UCLAND_ERR_IO = 5,
  UCLAND_ERR_INTERNAL = 6
} ucland_status;

/* Library version, e.g. "0.1.0".  Static storage; do not free. */
const char* ucland_version(void);

/* Message for the most recent failure on this thread; "" when the last
 * call succeeded.  Static storage; do not free. */
const char* ucland_last_error(void);

/* Suite inputs.  domain is "sym", "sympl" or "full"; dim is the structural
 * parameter N (self-dual matrices are 2N x 2N).  samples == 0 and h == 0
 * select per-suite defaults.  command_line, when non-NULL, is recorded in
 * the report manifest. */
typedef struct ucland_options {
  const char* domain;
  int dim;
  uint64_t seed;
  int trials;
  int samples;
  double h;
  double zero_tol;
  int jobs;
  int max_iters; /* trials suite ascent cap; 0 selects the default */
  const char* command_line;
} ucland_options;

/* Fill every field with its default (domain "sym", dim 4, seed 1,
 * trials 100, samples 0, h 0, zero_tol 1e-4, jobs 1, max_iters 0,
 * command_line NULL). */
void ucland_options_init(ucland_options* options);

typedef struct ucland_report ucland_report;

/* Run one verification suite: "gradcheck", "critvals", "signatures",
 * "trials" or "target-invariance".  On success *out owns the report. */
ucland_status ucland_run_suite(const char* suite, const ucland_options* options,
                               ucland_report** out);

/* 1 if every suite check passed, 0 if any failed, -1 on NULL report. */
int ucland_report_passed(const ucland_report* report);

/* Serialize the full report as a JSON document. */
ucland_status ucland_report_json(const ucland_report* report, char** out);

/* Human-readable summary (tables, checks, verdict). */
ucland_status ucland_report_summary(const ucland_report* report, char** out);

/* Write one CSV file per report table into `dir` (created if missing). */
ucland_status ucland_report_write_csv(const ucland_report* report,
                                      const char* dir);

void ucland_report_free(ucland_report* report);
void ucland_string_free(char* s);

/* ---- direct numeric surface ---- */

/* Matrix size: dim for "sym"/"full", 2*dim for "sympl". */
ucland_status ucland_matrix_size(const char* domain, int dim, int* out);

/* Manifold dimension: dim(dim+1)/2, dim(2 dim - 1), dim^2. */
ucland_status ucland_domain_dim(const char* domain, int dim, int* out);

/* The dim+1 critical values in ascending order; `out` must hold dim+1
 * doubles. */
ucland_status ucland_critical_values(const char* domain, int dim, double* out);

/* Closed-form Hessian signature at the rank-n critical manifold. */
ucland_status ucland_closed_form_signature(const char* domain, int dim,
                                           int n_plus, int* d_plus,
                                           int* d_minus, int* d_zero);

/* Draw the domain's natural ensemble sample (COE, CSE, or Haar) for
 * (seed, stream).  `out` must hold 2 * size * size doubles and receives the
 * matrix column-major as interleaved (re, im) pairs; *size_out gets the
 * matrix size. */
ucland_status ucland_sample(const char* domain, int dim, uint64_t seed,
                            uint64_t stream, double* out, int* size_out);

/* Classify a critical point given column-major interleaved (re, im) data of
 * the domain's matrix size.  *n_out receives the critical rank, or -1 when
 * the gradient norm exceeds tol. */
ucland_status ucland_classify(const char* domain, int dim, const double* matrix,
                              double tol, int* n_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UCLAND_UCLAND_H_ */
