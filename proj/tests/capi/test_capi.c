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

/* Exercises the shared-library C interface from plain C: error codes and
 * messages, report lifecycle, and the direct numeric surface. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include <ucland/ucland.h>

static int failures = 0;

#define EXPECT(cond)                                                      \
  do {                                                                    \
    if (!(cond)) {                                                        \
      ++failures;                                                         \
      fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);     \
    }                                                                     \
  } while (0)

static void test_version_and_defaults(void) {
  const char* version = ucland_version();
  EXPECT(version != NULL);
  EXPECT(strlen(version) >= 5);

  ucland_options options;
  ucland_options_init(&options);
  EXPECT(strcmp(options.domain, "sym") == 0);
  EXPECT(options.dim == 4);
  EXPECT(options.seed == 1);
  EXPECT(options.trials == 100);
  EXPECT(options.samples == 0);
  EXPECT(options.h == 0.0);
  EXPECT(options.zero_tol == 1e-4);
  EXPECT(options.jobs == 1);
  EXPECT(options.max_iters == 0);
  EXPECT(options.command_line == NULL);
}

static void test_run_suite_lifecycle(void) {
  ucland_options options;
  ucland_options_init(&options);
  options.dim = 3;
  options.samples = 2;
  options.command_line = "capi-test critvals";

  ucland_report* report = NULL;
  EXPECT(ucland_run_suite("critvals", &options, &report) == UCLAND_OK);
  EXPECT(report != NULL);
  EXPECT(ucland_report_passed(report) == 1);

  char* json = NULL;
  EXPECT(ucland_report_json(report, &json) == UCLAND_OK);
  EXPECT(json != NULL);
  EXPECT(strstr(json, "\"suite\": \"critvals\"") != NULL);
  EXPECT(strstr(json, "capi-test critvals") != NULL);
  ucland_string_free(json);

  char* summary = NULL;
  EXPECT(ucland_report_summary(report, &summary) == UCLAND_OK);
  EXPECT(summary != NULL);
  EXPECT(strstr(summary, "PASS") != NULL);
  ucland_string_free(summary);

  EXPECT(ucland_report_write_csv(report, "/tmp/ucland_capi_csv") == UCLAND_OK);
  ucland_report_free(report);
  ucland_report_free(NULL); /* must be a no-op */
}

static void test_error_paths(void) {
  ucland_options options;
  ucland_options_init(&options);

  ucland_report* report = NULL;
  EXPECT(ucland_run_suite(NULL, &options, &report) ==
         UCLAND_ERR_INVALID_ARGUMENT);
  EXPECT(ucland_run_suite("critvals", NULL, &report) ==
         UCLAND_ERR_INVALID_ARGUMENT);
  EXPECT(ucland_run_suite("critvals", &options, NULL) ==
         UCLAND_ERR_INVALID_ARGUMENT);

  EXPECT(ucland_run_suite("bogus-suite", &options, &report) ==
         UCLAND_ERR_DOMAIN);
  EXPECT(strlen(ucland_last_error()) > 0);

  options.domain = "bogus";
  EXPECT(ucland_run_suite("critvals", &options, &report) == UCLAND_ERR_DOMAIN);
  EXPECT(strlen(ucland_last_error()) > 0);

  options.domain = "sym";
  options.dim = 0;
  EXPECT(ucland_run_suite("critvals", &options, &report) ==
         UCLAND_ERR_DIMENSION);

  EXPECT(ucland_report_passed(NULL) == -1);
  int size = 0;
  EXPECT(ucland_matrix_size("nope", 3, &size) == UCLAND_ERR_DOMAIN);
  EXPECT(ucland_matrix_size("sym", 3, NULL) == UCLAND_ERR_INVALID_ARGUMENT);

  /* A clean call resets the error message. */
  EXPECT(ucland_matrix_size("sym", 3, &size) == UCLAND_OK);
  EXPECT(strlen(ucland_last_error()) == 0);
}

static void test_numeric_surface(void) {
  int size = 0;
  EXPECT(ucland_matrix_size("sym", 5, &size) == UCLAND_OK && size == 5);
  EXPECT(ucland_matrix_size("sympl", 3, &size) == UCLAND_OK && size == 6);
  EXPECT(ucland_matrix_size("full", 4, &size) == UCLAND_OK && size == 4);

  int dim = 0;
  EXPECT(ucland_domain_dim("sym", 4, &dim) == UCLAND_OK && dim == 10);
  EXPECT(ucland_domain_dim("sympl", 3, &dim) == UCLAND_OK && dim == 15);
  EXPECT(ucland_domain_dim("full", 4, &dim) == UCLAND_OK && dim == 16);

  double values[5];
  EXPECT(ucland_critical_values("sym", 4, values) == UCLAND_OK);
  {
    const double expect[5] = {-4.0, -2.0, 0.0, 2.0, 4.0};
    int i;
    for (i = 0; i < 5; ++i) EXPECT(values[i] == expect[i]);
  }
  EXPECT(ucland_critical_values("sympl", 2, values) == UCLAND_OK);
  EXPECT(values[0] == -4.0 && values[1] == 0.0 && values[2] == 4.0);

  int dp = 0, dm = 0, dz = 0;
  EXPECT(ucland_closed_form_signature("sym", 4, 1, &dp, &dm, &dz) ==
         UCLAND_OK);
  EXPECT(dp == 6 && dm == 1 && dz == 3);
  EXPECT(ucland_closed_form_signature("sympl", 3, 1, &dp, &dm, &dz) ==
         UCLAND_OK);
  EXPECT(dp == 6 && dm == 1 && dz == 8);
  EXPECT(ucland_closed_form_signature("sym", 4, 9, &dp, &dm, &dz) ==
         UCLAND_ERR_DOMAIN);
}

static void test_sampling_and_classification(void) {
  /* sym dim 4: 4x4 complex, 32 doubles. */
  double a[32], b[32];
  int size = 0;
  EXPECT(ucland_sample("sym", 4, 77, 3, a, &size) == UCLAND_OK);
  EXPECT(size == 4);
  EXPECT(ucland_sample("sym", 4, 77, 3, b, &size) == UCLAND_OK);
  EXPECT(memcmp(a, b, sizeof(a)) == 0); /* bitwise reproducible */
  {
    int i;
    for (i = 0; i < 32; ++i) {
      EXPECT(isfinite(a[i]));
      EXPECT(fabs(a[i]) <= 1.0 + 1e-12); /* unitary entries */
    }
  }
  /* A different stream gives a different draw. */
  EXPECT(ucland_sample("sym", 4, 77, 4, b, &size) == UCLAND_OK);
  EXPECT(memcmp(a, b, sizeof(a)) != 0);

  /* A generic ensemble sample is not critical. */
  int n = 0;
  EXPECT(ucland_classify("sym", 4, a, 1e-8, &n) == UCLAND_OK);
  EXPECT(n == -1);

  /* The identity is the n = N global maximum. */
  {
    double identity[32];
    int i;
    memset(identity, 0, sizeof(identity));
    for (i = 0; i < 4; ++i) identity[2 * (i * 4 + i)] = 1.0;
    EXPECT(ucland_classify("sym", 4, identity, 1e-8, &n) == UCLAND_OK);
    EXPECT(n == 4);
    /* -I is the n = 0 global minimum. */
    for (i = 0; i < 4; ++i) identity[2 * (i * 4 + i)] = -1.0;
    EXPECT(ucland_classify("sym", 4, identity, 1e-8, &n) == UCLAND_OK);
    EXPECT(n == 0);
  }

  EXPECT(ucland_sample("sym", 4, 77, 3, NULL, &size) ==
         UCLAND_ERR_INVALID_ARGUMENT);
  EXPECT(ucland_classify("sym", 4, NULL, 1e-8, &n) ==
         UCLAND_ERR_INVALID_ARGUMENT);
}

int main(void) {
  test_version_and_defaults();
  test_run_suite_lifecycle();
  test_error_paths();
  test_numeric_surface();
  test_sampling_and_classification();
  if (failures == 0) {
    printf("capi: all checks passed\n");
  } else {
    printf("capi: %d check(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
