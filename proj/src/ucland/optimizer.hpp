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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ucland/landscape.hpp"
#include "ucland/sampling.hpp"

namespace ucland {

enum class EscapeMode { RandomTangent, HessianGuided };

struct AscentConfig {
  int max_iters = 5000;
  double grad_tol = 1e-8;
  double initial_step = 0.5;
  double backtrack_factor = 0.5;
  double armijo_c = 1e-4;
  int saddle_window = 50;        // consecutive small-gradient iterations
  double saddle_grad_band = 1e-6;  // ... below this band trigger an escape
  double escape_norm = 1e-2;
  int max_escapes = 20;
  EscapeMode escape_mode = EscapeMode::RandomTangent;
};

struct StepStats {
  bool converged = false;  // gradient already below grad_tol, no step taken
  double grad_norm = 0.0;
  double step = 0.0;
  double gain = 0.0;
};

// One backtracked ascent step along the chart gradient direction.  The
// Armijo condition J(new) >= J(old) + c t ||g||^2 is enforced; sixty
// halvings without acceptance raise NumericalError.  Accepted points are
// renormalized.
std::pair<DomainPoint, StepStats> ascent_step(const DomainPoint& point,
                                              const AscentConfig& config);

enum class Termination { ConvergedGlobal, ConvergedCritical, MaxIters, NumericalFailure };

const char* termination_name(Termination t);

struct TrialTrace {
  std::vector<double> j_values;
  std::vector<double> grad_norms;
  std::vector<std::pair<int, double>> escapes;     // (iteration, perturbation norm)
  std::vector<std::pair<int, int>> saddle_visits;  // (iteration, classified n)
  Termination termination = Termination::MaxIters;
  int critical_n = -1;  // classification at termination, when available
  int iterations = 0;   // accepted ascent steps
  DomainPoint final_point;
  std::string failure_message;
};

// Gradient ascent until the global manifold (n = N) is reached, with
// classify-then-escape at saddles.  Points that crawl inside the
// saddle_grad_band for saddle_window iterations are treated as saddle
// visits too.
TrialTrace run_trial(const DomainPoint& start, const AscentConfig& config,
                     const SeededStream& stream);

struct BatchSummary {
  struct TrialRecord {
    std::uint64_t stream_id = 0;
    Termination termination = Termination::MaxIters;
    int iterations = 0;
    int escapes = 0;
    double final_j = 0.0;
    int final_n = -1;
  };
  std::vector<TrialRecord> trials;
  std::map<int, int> saddle_histogram;  // classified n -> visits
  int converged_global = 0;
  int zero_escape_trials = 0;
  double wall_seconds = 0.0;
};

// `trials` independent runs from ensemble starts (stream_id = trial index),
// optionally spread over `jobs` worker threads.  Results are identical for
// any job count.
BatchSummary run_batch(const LandscapeDomain& domain, int trials,
                       const AscentConfig& config, std::uint64_t seed,
                       int jobs = 1);

}  // namespace ucland
