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

// Command-line front end.  Talks to the library through the C interface
// only, exactly as an external embedder would.
//
// Exit codes: 0 all checks passed, 1 a check or run failed, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucland/ucland.h"

namespace {

struct CliValues {
  std::string domain = "sym";
  int dim = 4;
  std::uint64_t seed = 1;
  int trials = 100;
  int samples = 0;
  double h = 0.0;
  double zero_tol = 1e-4;
  int jobs = 1;
  int max_iters = 0;
  std::string out_path;
  std::string csv_dir;
};

void add_common_flags(CLI::App* sub, CliValues* v) {
  // --h is a real flag here, so help keeps only its long spelling.
  sub->set_help_flag("--help", "Print this help message and exit");
  sub->add_option("--domain", v->domain,
                  "Landscape domain: sym, sympl or full")
      ->capture_default_str();
  sub->add_option("--dim", v->dim, "Structural parameter N")
      ->capture_default_str();
  sub->add_option("--seed", v->seed, "Random seed")->capture_default_str();
  sub->add_option("--trials", v->trials, "Trial count (trials suite)")
      ->capture_default_str();
  sub->add_option("--samples", v->samples,
                  "Sample count; 0 selects the suite default");
  sub->add_option("--h", v->h,
                  "Finite-difference step; 0 selects the suite default");
  sub->add_option("--zero-tol", v->zero_tol,
                  "Relative eigenvalue threshold for signature kernels")
      ->capture_default_str();
  sub->add_option("--jobs", v->jobs, "Worker threads (trials suite)")
      ->capture_default_str();
  sub->add_option("--max-iters", v->max_iters,
                  "Ascent iteration cap (trials suite); 0 selects the default");
  sub->add_option("--out", v->out_path, "Write the JSON report here");
  sub->add_option("--csv-dir", v->csv_dir,
                  "Write one CSV per report table into this directory");
}

std::string join_command_line(int argc, char** argv) {
  std::string joined;
  for (int i = 0; i < argc; ++i) {
    if (i) joined += ' ';
    joined += argv[i];
  }
  return joined;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ucland: verification suites for constrained-unitary "
               "control landscapes"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", ucland_version());
  app.require_subcommand(1);

  CliValues values;
  const std::vector<std::string> suites = {
      "gradcheck", "critvals", "signatures", "trials", "target-invariance"};
  const std::vector<std::string> descriptions = {
      "Analytic vs finite-difference gradients at random points",
      "Critical-value enumeration with gradient-norm certificates",
      "Hessian signatures vs published and corrected closed forms",
      "Seeded gradient-ascent trials from ensemble starts",
      "Transported critical points of the metric landscape J(., W)"};
  for (size_t i = 0; i < suites.size(); ++i) {
    add_common_flags(app.add_subcommand(suites[i], descriptions[i]), &values);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  const std::string suite = app.get_subcommands().front()->get_name();
  const std::string command_line = join_command_line(argc, argv);

  ucland_options options;
  ucland_options_init(&options);
  options.domain = values.domain.c_str();
  options.dim = values.dim;
  options.seed = values.seed;
  options.trials = values.trials;
  options.samples = values.samples;
  options.h = values.h;
  options.zero_tol = values.zero_tol;
  options.jobs = values.jobs;
  options.max_iters = values.max_iters;
  options.command_line = command_line.c_str();

  ucland_report* report = nullptr;
  const ucland_status status = ucland_run_suite(suite.c_str(), &options, &report);
  if (status != UCLAND_OK) {
    std::cerr << "error: " << ucland_last_error() << "\n";
    if (status == UCLAND_ERR_DOMAIN || status == UCLAND_ERR_INVALID_ARGUMENT ||
        status == UCLAND_ERR_DIMENSION) {
      std::cerr << "\n" << app.help() << std::flush;
      return 2;
    }
    return 1;
  }

  char* summary = nullptr;
  if (ucland_report_summary(report, &summary) == UCLAND_OK) {
    std::cout << summary;
    ucland_string_free(summary);
  }

  int exit_code = ucland_report_passed(report) == 1 ? 0 : 1;

  if (!values.out_path.empty()) {
    char* json_text = nullptr;
    if (ucland_report_json(report, &json_text) != UCLAND_OK) {
      std::cerr << "error: " << ucland_last_error() << "\n";
      exit_code = 1;
    } else {
      std::ofstream out(values.out_path);
      out << json_text << "\n";
      ucland_string_free(json_text);
      if (!out) {
        std::cerr << "error: cannot write '" << values.out_path << "'\n";
        exit_code = 1;
      }
    }
  }
  if (!values.csv_dir.empty()) {
    if (ucland_report_write_csv(report, values.csv_dir.c_str()) != UCLAND_OK) {
      std::cerr << "error: " << ucland_last_error() << "\n";
      exit_code = 1;
    }
  }

  ucland_report_free(report);
  return exit_code;
}
