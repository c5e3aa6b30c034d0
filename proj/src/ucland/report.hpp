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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucland/domains.hpp"

namespace ucland {

using json = nlohmann::ordered_json;

// Options shared by all suites.  Zero-valued samples/h fall back to the
// suite's own default so the CLI can expose one flag per knob.
struct SuiteOptions {
  std::string domain = "sym";  // sym | sympl | full
  int dim = 4;                 // structural parameter N
  std::uint64_t seed = 1;
  int trials = 100;   // trials suite
  int samples = 0;    // gradcheck pairs / invariance targets / rotations per n
  double h = 0.0;     // finite-difference step
  double zero_tol = 1e-4;
  int jobs = 1;
  int max_iters = 0;  // trials suite ascent cap; 0 = optimizer default
};

LandscapeDomain domain_from_options(const SuiteOptions& options);

// A conflict between a published claim and this laboratory's measurement.
struct Discrepancy {
  std::string published_claim;
  std::string published_location;
  std::string measured;
  std::string verdict;
};

// Suite output: a manifest (what ran, with what inputs), named tables of
// flat records, discrepancy notices, and the overall verdict.  Numeric
// content is a pure function of build + options; only the manifest
// timestamp varies between identical runs.
struct ReportDocument {
  json manifest;
  json tables;  // name -> array of flat objects
  std::vector<Discrepancy> discrepancies;
  bool passed = false;
  // Wall-clock time is shown in summary_text only; it is kept out of the
  // JSON document so identical runs serialize identically up to timestamp.
  double wall_seconds = -1.0;

  json to_json() const;
  std::string summary_text() const;
  void write_json(const std::string& path) const;
  // One <table>.csv per table (plus discrepancies.csv when non-empty).
  void write_csv(const std::string& dir) const;
};

ReportDocument run_gradcheck(const SuiteOptions& options);
ReportDocument run_critvals(const SuiteOptions& options);
ReportDocument run_signatures(const SuiteOptions& options);
ReportDocument run_trials_suite(const SuiteOptions& options);
ReportDocument run_target_invariance(const SuiteOptions& options);

// Dispatch by suite name: gradcheck | critvals | signatures | trials |
// target-invariance.  Unknown names raise DomainError.
ReportDocument run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace ucland
