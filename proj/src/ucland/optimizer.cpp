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

#include "ucland/optimizer.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "ucland/errors.hpp"
#include "ucland/hessian.hpp"

namespace ucland {

namespace {

constexpr int kMaxHalvings = 60;
constexpr std::uint64_t kEscapeTag = 0xE5CA9EULL;

struct StepOutcome {
  DomainPoint point;
  StepStats stats;
  // The line search ran out of halvings: the remaining ascent is below the
  // floating-point resolution of J, or the point is not on the landscape.
  bool exhausted = false;
};

// Single ascent step with a prebuilt chart (the basis does not depend on the
// base point, so trials reuse it across iterations).
StepOutcome step_with_chart(const DomainPoint& point, const TangentChart& chart,
                            const AscentConfig& config) {
  TangentChart local{point, chart.basis};
  const RealVector g = gradient_canonical(point, local);
  const double gn = g.norm();
  if (gn < config.grad_tol) {
    return StepOutcome{point, StepStats{true, gn, 0.0, 0.0}, false};
  }
  const ComplexMatrix a = local.direction(g);
  const CurveFamily family(point);
  const double j0 = j_canonical(point.matrix);
  double t = config.initial_step;
  for (int halving = 0; halving < kMaxHalvings; ++halving) {
    // J along the curve collapses to Re Tr(e^{iAt} S) by cyclicity.
    const ComplexMatrix e =
        exp_i_generator(a, t, point.domain.generator_structure());
    const double j1 = trace_product(e, point.matrix).real();
    if (j1 >= j0 + config.armijo_c * t * gn * gn) {
      DomainPoint next = renormalize(family.at(a, t));
      const double gain = j_canonical(next.matrix) - j0;
      return StepOutcome{std::move(next), StepStats{false, gn, t, gain}, false};
    }
    t *= config.backtrack_factor;
  }
  return StepOutcome{point, StepStats{false, gn, 0.0, 0.0}, true};
}

DomainPoint apply_escape(const DomainPoint& point, const TangentChart& chart,
                         const AscentConfig& config, const SeededStream& stream,
                         int escape_index) {
  TangentChart local{point, chart.basis};
  RealVector coords;
  if (config.escape_mode == EscapeMode::HessianGuided) {
    const RealMatrix h = numerical_hessian(point, local);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(h);
    // most positive curvature direction
    coords = es.eigenvectors().col(h.rows() - 1) * config.escape_norm;
  } else {
    coords = random_tangent(local, stream.substream(kEscapeTag + escape_index),
                            config.escape_norm);
  }
  return renormalize(curve(point, local.direction(coords), 1.0));
}

}  // namespace

std::pair<DomainPoint, StepStats> ascent_step(const DomainPoint& point,
                                              const AscentConfig& config) {
  const TangentChart chart = standard_tangent_chart(point);
  StepOutcome out = step_with_chart(point, chart, config);
  if (out.exhausted) {
    throw NumericalError("ascent_step: line search exhausted 60 halvings");
  }
  return {std::move(out.point), out.stats};
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::ConvergedGlobal:
      return "ConvergedGlobal";
    case Termination::ConvergedCritical:
      return "ConvergedCritical";
    case Termination::MaxIters:
      return "MaxIters";
    case Termination::NumericalFailure:
      return "NumericalFailure";
  }
  return "?";
}

TrialTrace run_trial(const DomainPoint& start, const AscentConfig& config,
                     const SeededStream& stream) {
  TrialTrace trace;
  trace.final_point = start;
  const TangentChart chart = standard_tangent_chart(start);

  DomainPoint current = start;
  int iter = 0;
  int escapes_used = 0;
  int stall = 0;

  trace.j_values.push_back(j_canonical(current.matrix));
  trace.grad_norms.push_back(
      gradient_canonical(current, TangentChart{current, chart.basis}).norm());

  auto record = [&](const DomainPoint& p) {
    trace.j_values.push_back(j_canonical(p.matrix));
    trace.grad_norms.push_back(
        gradient_canonical(p, TangentChart{p, chart.basis}).norm());
  };

  auto finish = [&](Termination t, int n) {
    trace.termination = t;
    trace.critical_n = n;
    trace.iterations = iter;
    trace.final_point = current;
    return trace;
  };

  try {
    while (true) {
      const double gn =
          gradient_canonical(current, TangentChart{current, chart.basis}).norm();

      if (gn < config.grad_tol) {
        const auto n = classify_critical_point(current, config.grad_tol);
        if (n.has_value() && *n == current.domain.n) {
          return finish(Termination::ConvergedGlobal, *n);
        }
        if (n.has_value()) {
          trace.saddle_visits.emplace_back(iter, *n);
          if (escapes_used >= config.max_escapes) {
            return finish(Termination::ConvergedCritical, *n);
          }
          current = apply_escape(current, chart, config, stream,
                                 escapes_used);
          ++escapes_used;
          trace.escapes.emplace_back(iter, config.escape_norm);
          record(current);
          stall = 0;
          continue;
        }
      }

      if (iter >= config.max_iters) {
        return finish(Termination::MaxIters, -1);
      }

      // Crawling inside the saddle band signals an approach to a saddle
      // whose unstable directions are too weak; classify and jump.
      stall = gn < config.saddle_grad_band ? stall + 1 : 0;
      if (stall >= config.saddle_window && escapes_used < config.max_escapes) {
        stall = 0;
        bool escaped = false;
        try {
          const auto n = classify_critical_point(current, config.saddle_grad_band);
          if (n.has_value() && *n < current.domain.n) {
            trace.saddle_visits.emplace_back(iter, *n);
            escaped = true;
          }
        } catch (const InconsistentCriticalPoint&) {
          escaped = true;  // jump anyway, without a saddle label
        }
        if (escaped) {
          current = apply_escape(current, chart, config, stream,
                                 escapes_used);
          ++escapes_used;
          trace.escapes.emplace_back(iter, config.escape_norm);
          record(current);
          continue;
        }
      }

      StepOutcome out = step_with_chart(current, chart, config);
      if (out.exhausted) {
        // No representable improvement left.  Near a critical point that is
        // the floating-point noise floor, not a failure; classify and act.
        if (out.stats.grad_norm < config.saddle_grad_band) {
          const auto n =
              classify_critical_point(current, config.saddle_grad_band);
          if (n.has_value() && *n == current.domain.n) {
            return finish(Termination::ConvergedGlobal, *n);
          }
          if (n.has_value()) {
            trace.saddle_visits.emplace_back(iter, *n);
            if (escapes_used >= config.max_escapes) {
              return finish(Termination::ConvergedCritical, *n);
            }
            current = apply_escape(current, chart, config, stream,
                                   escapes_used);
            ++escapes_used;
            trace.escapes.emplace_back(iter, config.escape_norm);
            record(current);
            stall = 0;
            continue;
          }
        }
        throw NumericalError(
            "run_trial: line search exhausted away from criticality");
      }
      current = std::move(out.point);
      ++iter;
      record(current);
    }
  } catch (const NumericalError& e) {
    trace.failure_message = e.what();
    return finish(Termination::NumericalFailure, -1);
  }
}

BatchSummary run_batch(const LandscapeDomain& domain, int trials,
                       const AscentConfig& config, std::uint64_t seed, int jobs) {
  if (trials < 0) throw DomainError("run_batch: trial count must be non-negative");
  if (jobs < 1) jobs = 1;
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<BatchSummary::TrialRecord> records(trials);
  std::vector<std::vector<std::pair<int, int>>> visits(trials);

  auto run_one = [&](int i) {
    const SeededStream start_stream{seed, static_cast<std::uint64_t>(i)};
    const DomainPoint start = ensemble_sample(domain, start_stream);
    const TrialTrace trace =
        run_trial(start, config, start_stream.substream(kEscapeTag));
    BatchSummary::TrialRecord rec;
    rec.stream_id = static_cast<std::uint64_t>(i);
    rec.termination = trace.termination;
    rec.iterations = trace.iterations;
    rec.escapes = static_cast<int>(trace.escapes.size());
    rec.final_j = j_canonical(trace.final_point.matrix);
    rec.final_n = trace.critical_n;
    records[i] = rec;
    visits[i] = trace.saddle_visits;
  };

  if (jobs == 1 || trials <= 1) {
    for (int i = 0; i < trials; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    const int worker_count = std::min(jobs, trials);
    workers.reserve(worker_count);
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&]() {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
          run_one(i);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  BatchSummary summary;
  summary.trials = std::move(records);
  for (int i = 0; i < trials; ++i) {
    for (const auto& [it, n] : visits[i]) {
      (void)it;
      ++summary.saddle_histogram[n];
    }
    if (summary.trials[i].termination == Termination::ConvergedGlobal) {
      ++summary.converged_global;
    }
    if (summary.trials[i].escapes == 0) ++summary.zero_escape_trials;
  }
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

}  // namespace ucland
