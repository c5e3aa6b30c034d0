// Copyright 2026 The ucland developers
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

#include "ucland/ucland.h"

#include <cstddef>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "ucland/errors.hpp"
#include "ucland/hessian.hpp"
#include "ucland/landscape.hpp"
#include "ucland/report.hpp"
#include "ucland/sampling.hpp"
#include "ucland/version.hpp"

struct ucland_report {
  ucland::ReportDocument doc;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
ucland_status wrap(F&& f) {
  try {
    f();
    g_last_error.clear();
    return UCLAND_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return UCLAND_ERR_INVALID_ARGUMENT;
  } catch (const ucland::DimensionError& e) {
    g_last_error = e.what();
    return UCLAND_ERR_DIMENSION;
  } catch (const ucland::DomainError& e) {
    g_last_error = e.what();
    return UCLAND_ERR_DOMAIN;
  } catch (const ucland::NumericalError& e) {
    g_last_error = e.what();
    return UCLAND_ERR_NUMERICAL;
  } catch (const ucland::IoError& e) {
    g_last_error = e.what();
    return UCLAND_ERR_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return UCLAND_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UCLAND_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return UCLAND_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ucland::LandscapeDomain resolve_domain(const char* domain, int dim) {
  require(domain != nullptr, "domain must not be NULL");
  ucland::SuiteOptions options;
  options.domain = domain;
  options.dim = dim;
  return ucland::domain_from_options(options);
}

ucland::SuiteOptions to_suite_options(const ucland_options& o) {
  require(o.domain != nullptr, "options.domain must not be NULL");
  ucland::SuiteOptions options;
  options.domain = o.domain;
  options.dim = o.dim;
  options.seed = o.seed;
  options.trials = o.trials;
  options.samples = o.samples;
  options.h = o.h;
  options.zero_tol = o.zero_tol;
  options.jobs = o.jobs;
  options.max_iters = o.max_iters;
  return options;
}

ucland::ComplexMatrix matrix_from_interleaved(const double* data, int size) {
  ucland::ComplexMatrix m(size, size);
  for (int c = 0; c < size; ++c) {
    for (int r = 0; r < size; ++r) {
      const double* p = data + 2 * (static_cast<std::ptrdiff_t>(c) * size + r);
      m(r, c) = ucland::Complex(p[0], p[1]);
    }
  }
  return m;
}

}  // namespace

extern "C" {

const char* ucland_version(void) { return ucland::kVersionString; }

const char* ucland_last_error(void) { return g_last_error.c_str(); }

void ucland_options_init(ucland_options* options) {
  if (!options) return;
  options->domain = "sym";
  options->dim = 4;
  options->seed = 1;
  options->trials = 100;
  options->samples = 0;
  options->h = 0.0;
  options->zero_tol = 1e-4;
  options->jobs = 1;
  options->max_iters = 0;
  options->command_line = nullptr;
}

ucland_status ucland_run_suite(const char* suite, const ucland_options* options,
                               ucland_report** out) {
  return wrap([&] {
    require(suite != nullptr, "suite must not be NULL");
    require(options != nullptr, "options must not be NULL");
    require(out != nullptr, "out must not be NULL");
    auto report = std::make_unique<ucland_report>();
    report->doc = ucland::run_suite(suite, to_suite_options(*options));
    report->doc.manifest["command_line"] =
        options->command_line ? options->command_line : "";
    *out = report.release();
  });
}

int ucland_report_passed(const ucland_report* report) {
  if (!report) return -1;
  return report->doc.passed ? 1 : 0;
}

ucland_status ucland_report_json(const ucland_report* report, char** out) {
  return wrap([&] {
    require(report != nullptr, "report must not be NULL");
    require(out != nullptr, "out must not be NULL");
    *out = copy_string(report->doc.to_json().dump(2));
  });
}

ucland_status ucland_report_summary(const ucland_report* report, char** out) {
  return wrap([&] {
    require(report != nullptr, "report must not be NULL");
    require(out != nullptr, "out must not be NULL");
    *out = copy_string(report->doc.summary_text());
  });
}

ucland_status ucland_report_write_csv(const ucland_report* report,
                                      const char* dir) {
  return wrap([&] {
    require(report != nullptr, "report must not be NULL");
    require(dir != nullptr, "dir must not be NULL");
    report->doc.write_csv(dir);
  });
}

void ucland_report_free(ucland_report* report) { delete report; }

void ucland_string_free(char* s) { std::free(s); }

ucland_status ucland_matrix_size(const char* domain, int dim, int* out) {
  return wrap([&] {
    require(out != nullptr, "out must not be NULL");
    *out = resolve_domain(domain, dim).matrix_size();
  });
}

ucland_status ucland_domain_dim(const char* domain, int dim, int* out) {
  return wrap([&] {
    require(out != nullptr, "out must not be NULL");
    *out = resolve_domain(domain, dim).dimension();
  });
}

ucland_status ucland_critical_values(const char* domain, int dim, double* out) {
  return wrap([&] {
    require(out != nullptr, "out must not be NULL");
    const auto values = ucland::critical_values(resolve_domain(domain, dim));
    for (size_t i = 0; i < values.size(); ++i) out[i] = values[i];
  });
}

ucland_status ucland_closed_form_signature(const char* domain, int dim,
                                           int n_plus, int* d_plus,
                                           int* d_minus, int* d_zero) {
  return wrap([&] {
    require(d_plus && d_minus && d_zero, "output pointers must not be NULL");
    const auto sig =
        ucland::closed_form_signature(resolve_domain(domain, dim), n_plus);
    *d_plus = sig.d_plus;
    *d_minus = sig.d_minus;
    *d_zero = sig.d_zero;
  });
}

ucland_status ucland_sample(const char* domain, int dim, uint64_t seed,
                            uint64_t stream, double* out, int* size_out) {
  return wrap([&] {
    require(out != nullptr, "out must not be NULL");
    require(size_out != nullptr, "size_out must not be NULL");
    const auto dom = resolve_domain(domain, dim);
    const ucland::DomainPoint point =
        ucland::ensemble_sample(dom, ucland::SeededStream{seed, stream});
    const int size = dom.matrix_size();
    for (int c = 0; c < size; ++c) {
      for (int r = 0; r < size; ++r) {
        double* p = out + 2 * (static_cast<std::ptrdiff_t>(c) * size + r);
        p[0] = point.matrix(r, c).real();
        p[1] = point.matrix(r, c).imag();
      }
    }
    *size_out = size;
  });
}

ucland_status ucland_classify(const char* domain, int dim, const double* matrix,
                              double tol, int* n_out) {
  return wrap([&] {
    require(matrix != nullptr, "matrix must not be NULL");
    require(n_out != nullptr, "n_out must not be NULL");
    const auto dom = resolve_domain(domain, dim);
    const ucland::ComplexMatrix m =
        matrix_from_interleaved(matrix, dom.matrix_size());
    const ucland::DomainPoint point = ucland::make_domain_point(dom, m);
    const auto n = ucland::classify_critical_point(point, tol);
    *n_out = n.has_value() ? *n : -1;
  });
}

}  // extern "C"
