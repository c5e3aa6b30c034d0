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

// Full-scale verification gate: ten numbered criteria, one PASS/FAIL line
// each, exit code = number of failures.  Each criterion re-derives its
// expectations inline instead of trusting the library's own pass flags
// wherever that is practical.

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ucland/hessian.hpp"
#include "ucland/optimizer.hpp"
#include "ucland/report.hpp"

namespace {

using namespace ucland;

int g_failures = 0;

void verdict(int index, const std::string& label, bool ok,
             const std::string& detail) {
  if (ok) {
    std::printf("PASS  criterion %2d  %s\n", index, label.c_str());
  } else {
    ++g_failures;
    std::printf("FAIL  criterion %2d  %s%s%s\n", index, label.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
  }
  std::fflush(stdout);
}

SuiteOptions options_for(const std::string& domain, int dim,
                         std::uint64_t seed) {
  SuiteOptions options;
  options.domain = domain;
  options.dim = dim;
  options.seed = seed;
  return options;
}

HessianSignature row_signature(const json& row, const std::string& prefix) {
  return HessianSignature{row[prefix + "_d_plus"].get<int>(),
                          row[prefix + "_d_minus"].get<int>(),
                          row[prefix + "_d_zero"].get<int>()};
}

// ---- criterion 1: critical-value enumeration, symmetric N = 2..8 ----

void criterion_1() {
  std::ostringstream why;
  bool ok = true;
  for (int bign = 2; bign <= 8; ++bign) {
    const SuiteOptions options = options_for("sym", bign, 100 + bign);
    // The suite itself checks 5 random rotations per n.
    const ReportDocument doc = run_critvals(options);
    if (!doc.passed) {
      ok = false;
      why << " suite failed at N=" << bign;
      continue;
    }
    const json& values = doc.manifest["values"];
    if (static_cast<int>(values.size()) != bign + 1) {
      ok = false;
      why << " wrong count at N=" << bign;
      continue;
    }
    for (int n = 0; n <= bign; ++n) {
      if (values[n].get<double>() != static_cast<double>(2 * n - bign)) {
        ok = false;
        why << " value mismatch at N=" << bign << " n=" << n;
      }
    }
    for (const auto& row : doc.tables["critical_values"]) {
      if (!(row["grad_norm"].get<double>() < 1e-10)) {
        ok = false;
        why << " gradient above 1e-10 at N=" << bign;
      }
    }
  }
  verdict(1, "critical values are {-N,-N+2,...,N} with vanishing gradients "
             "(symmetric, N = 2..8, 5 rotations per n)",
          ok, why.str());
}

// ---- criteria 2-5 share the measured signature suites ----

struct SignatureRuns {
  std::map<int, ReportDocument> sym;    // N -> suite document, N = 2..6
  std::map<int, ReportDocument> sympl;  // N = 2..4
  std::map<int, ReportDocument> full;   // N = 2..4
};

SignatureRuns run_signature_suites() {
  SignatureRuns runs;
  for (int bign = 2; bign <= 6; ++bign) {
    runs.sym.emplace(bign, run_signatures(options_for("sym", bign, 200 + bign)));
  }
  for (int bign = 2; bign <= 4; ++bign) {
    runs.sympl.emplace(bign,
                       run_signatures(options_for("sympl", bign, 300 + bign)));
    runs.full.emplace(bign,
                      run_signatures(options_for("full", bign, 400 + bign)));
  }
  return runs;
}

void criterion_2(const SignatureRuns& runs) {
  std::ostringstream why;
  bool ok = true;
  for (const auto& [bign, doc] : runs.sym) {
    for (const auto& row : doc.tables["signatures"]) {
      const int n = row["n"].get<int>();
      const HessianSignature expected{((bign - n) * (bign - n) + bign - n) / 2,
                                      (n * n + n) / 2, n * (bign - n)};
      if (row_signature(row, "measured") != expected) {
        ok = false;
        why << " triple mismatch at N=" << bign << " n=" << n;
      }
      if (row_signature(row, "measured_half_h") != expected) {
        ok = false;
        why << " unstable under h/2 at N=" << bign << " n=" << n;
      }
    }
    if (!doc.passed) {
      ok = false;
      why << " suite failed at N=" << bign;
    }
  }
  verdict(2, "symmetric-domain Hessian signatures match the closed forms "
             "exactly and survive h -> h/2 (N = 2..6, zero_tol 1e-4, h 1e-3)",
          ok, why.str());
}

void criterion_3(const SignatureRuns& runs) {
  std::ostringstream why;
  bool ok = true;
  for (const auto& [bign, doc] : runs.sym) {
    for (const auto& row : doc.tables["signatures"]) {
      const int n = row["n"].get<int>();
      if (row["measured_d_zero"].get<int>() != n * (bign - n)) {
        ok = false;
        why << " sym kernel mismatch at N=" << bign << " n=" << n;
      }
    }
  }
  for (const auto& [bign, doc] : runs.sympl) {
    for (const auto& row : doc.tables["signatures"]) {
      const int n = row["n"].get<int>();
      if (row["measured_d_zero"].get<int>() != 4 * n * (bign - n)) {
        ok = false;
        why << " self-dual kernel mismatch at N=" << bign << " n=" << n;
      }
    }
  }
  verdict(3, "measured kernel dimensions equal the Grassmannian dimensions "
             "n(N-n) and 4n(N-n)",
          ok, why.str());
}

void criterion_4(const SignatureRuns& runs) {
  std::ostringstream why;
  bool ok = true;
  const auto scan = [&](const std::map<int, ReportDocument>& docs,
                        const char* tag) {
    for (const auto& [bign, doc] : docs) {
      for (const auto& row : doc.tables["signatures"]) {
        const int n = row["n"].get<int>();
        if (n == 0 || n == bign) continue;
        const HessianSignature m = row_signature(row, "measured");
        if (!(m.d_plus > 0 && m.d_minus > 0)) {
          ok = false;
          why << " " << tag << " N=" << bign << " n=" << n << " is not a saddle";
        }
      }
    }
  };
  scan(runs.sym, "sym");
  scan(runs.sympl, "sympl");
  scan(runs.full, "full");
  verdict(4, "every interior critical point (0 < n < N) shows both ascent "
             "and descent directions in all three domains",
          ok, why.str());
}

void criterion_5(const SignatureRuns& runs) {
  std::ostringstream why;
  bool ok = true;
  for (const auto& [bign, doc] : runs.sympl) {
    const LandscapeDomain domain = self_dual_domain(bign);
    if (doc.discrepancies.size() != 3) {
      ok = false;
      why << " expected 3 notices at N=" << bign << ", got "
          << doc.discrepancies.size();
    }
    for (int n = 0; n <= bign; ++n) {
      if (published_signature(domain, n).sum() == domain.dimension()) {
        ok = false;
        why << " published triple satisfies the sum rule at N=" << bign
            << " n=" << n;
      }
      const HessianSignature corrected{(bign - n) * (2 * (bign - n) - 1),
                                       n * (2 * n - 1), 4 * n * (bign - n)};
      if (closed_form_signature(domain, n) != corrected) {
        ok = false;
        why << " corrected triple mismatch at N=" << bign << " n=" << n;
      }
    }
    for (const auto& row : doc.tables["signatures"]) {
      if (!row["agree_corrected"].get<bool>()) {
        ok = false;
        why << " measurement disagrees with corrected triple at N=" << bign;
      }
      if (row["agree_published"].get<bool>()) {
        ok = false;
        why << " measurement matches the published triple at N=" << bign;
      }
    }
    if (!doc.passed) {
      ok = false;
      why << " suite failed at N=" << bign;
    }
  }
  verdict(5, "self-dual adjudication: published triples break the sum rule, "
             "corrected triples match measurement (N = 2..4)",
          ok, why.str());
}

// ---- criterion 6: trap-free ascent trials ----

void criterion_6() {
  std::ostringstream why;
  bool ok = true;
  struct Plan {
    const char* domain;
    int dim;
    int trials;
    std::uint64_t seed;
  };
  const Plan plans[] = {{"sym", 4, 100, 601},
                        {"sym", 6, 100, 602},
                        {"sympl", 2, 50, 603},
                        {"sympl", 3, 50, 604}};
  for (const Plan& plan : plans) {
    const LandscapeDomain domain = std::string(plan.domain) == "sym"
                                       ? symmetric_domain(plan.dim)
                                       : self_dual_domain(plan.dim);
    const BatchSummary summary =
        run_batch(domain, plan.trials, AscentConfig{}, plan.seed, 4);
    if (summary.converged_global != plan.trials) {
      ok = false;
      why << " " << plan.domain << " N=" << plan.dim << ": only "
          << summary.converged_global << "/" << plan.trials << " global";
    }
    const double size = domain.matrix_size();
    for (const auto& trial : summary.trials) {
      if (trial.termination != Termination::ConvergedGlobal ||
          trial.final_j < size - 1e-6 || trial.final_n != domain.n) {
        ok = false;
        why << " " << plan.domain << " N=" << plan.dim << " trial "
            << trial.stream_id << " ended " << termination_name(trial.termination)
            << " at J=" << trial.final_j;
        break;
      }
    }
  }
  verdict(6, "all ascent trials reach the global maximum: 100 COE starts at "
             "N = 4 and 6, 50 CSE starts at N = 2 and 3",
          ok, why.str());
}

// ---- criterion 7: target invariance ----

void criterion_7() {
  SuiteOptions options = options_for("sym", 4, 700);
  options.samples = 20;
  const ReportDocument doc = run_target_invariance(options);
  std::ostringstream why;
  bool ok = doc.passed;
  if (!ok) why << " suite failed";
  int rows = 0;
  for (const auto& row : doc.tables["target_invariance"]) {
    ++rows;
    if (!(row["grad_norm"].get<double>() < 1e-8)) {
      ok = false;
      why << " transported gradient above 1e-8";
    }
    if (!row["signature_match"].get<bool>()) {
      ok = false;
      why << " transported signature differs from canonical";
    }
    if (!(row["reduce_dev"].get<double>() < 1e-10)) {
      ok = false;
      why << " reduction identity above 1e-10";
    }
    if (!(row["generic_reduce_dev"].get<double>() < 1e-10)) {
      ok = false;
      why << " generic-point reduction identity above 1e-10";
    }
  }
  if (rows != 20 * 5) {
    ok = false;
    why << " expected 100 rows, got " << rows;
  }
  verdict(7, "20 random symmetric targets at N = 4: transported critical "
             "points keep gradients < 1e-8, canonical signatures, and the "
             "reduction identity to 1e-10",
          ok, why.str());
}

// ---- criterion 8: gradient vs finite differences ----

void criterion_8() {
  std::ostringstream why;
  bool ok = true;
  struct Plan {
    const char* domain;
    int dim;
  };
  for (const Plan& plan :
       {Plan{"sym", 4}, Plan{"sympl", 2}, Plan{"full", 3}}) {
    SuiteOptions options = options_for(plan.domain, plan.dim, 800);
    options.samples = 100;
    const ReportDocument doc = run_gradcheck(options);
    const double worst = doc.manifest["max_rel_dev"].get<double>();
    if (!doc.passed || !(worst < 1e-6)) {
      ok = false;
      why << " " << plan.domain << " worst relative deviation " << worst;
    }
  }
  verdict(8, "analytic gradients match central differences to relative 1e-6 "
             "over 100 (point, direction) pairs per domain",
          ok, why.str());
}

// ---- criterion 9: ensemble sanity ----

bool kramers_paired(const ComplexMatrix& s, double tol) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(s);
  const int size = static_cast<int>(s.rows());
  std::vector<double> phases(size);
  for (int i = 0; i < size; ++i) phases[i] = std::arg(solver.eigenvalues()[i]);
  std::sort(phases.begin(), phases.end());
  const auto paired_from = [&](int offset) {
    for (int i = 0; i < size; i += 2) {
      const double a = phases[(offset + i) % size];
      double b = phases[(offset + i + 1) % size];
      // A degenerate pair may straddle the branch cut at +-pi.
      double gap = std::abs(a - b);
      gap = std::min(gap, std::abs(gap - 2 * M_PI));
      if (gap > tol) return false;
    }
    return true;
  };
  return paired_from(0) || paired_from(1);
}

void criterion_9() {
  std::ostringstream why;
  bool ok = true;
  const LandscapeDomain sym6 = symmetric_domain(6);
  const LandscapeDomain sd3 = self_dual_domain(3);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const DomainPoint coe = coe_sample(6, SeededStream{900, k});
    if (!(domain_residual(sym6, coe.matrix) < 1e-10)) {
      ok = false;
      why << " COE membership failure at sample " << k;
      break;
    }
  }
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const DomainPoint cse = cse_sample(3, SeededStream{901, k});
    if (!(domain_residual(sd3, cse.matrix) < 1e-10)) {
      ok = false;
      why << " CSE membership failure at sample " << k;
      break;
    }
    if (!kramers_paired(cse.matrix, 1e-10)) {
      ok = false;
      why << " CSE spectrum not Kramers-paired at sample " << k;
      break;
    }
  }
  double acc = 0.0;
  for (std::uint64_t k = 0; k < 2000; ++k) {
    acc += std::norm(haar_unitary(6, SeededStream{902, k}).trace());
  }
  const double moment = acc / 2000.0;
  if (!(std::abs(moment - 1.0) < 0.1)) {
    ok = false;
    why << " Haar moment E|Tr U|^2 = " << moment;
  }
  verdict(9, "1000 COE/CSE samples pass membership at 1e-10, CSE spectra are "
             "Kramers-paired at 1e-10, Haar E|Tr U|^2 within 0.1 of 1 over "
             "2000 samples at N = 6",
          ok, why.str());
}

// ---- criterion 10: determinism ----

std::string stripped_dump(const ReportDocument& doc) {
  json j = doc.to_json();
  j["manifest"].erase("timestamp");
  return j.dump();
}

void criterion_10() {
  std::ostringstream why;
  bool ok = true;
  {
    const SuiteOptions options = options_for("sympl", 3, 1001);
    if (stripped_dump(run_critvals(options)) !=
        stripped_dump(run_critvals(options))) {
      ok = false;
      why << " critvals documents differ";
    }
  }
  {
    const SuiteOptions options = options_for("sym", 4, 1002);
    if (stripped_dump(run_signatures(options)) !=
        stripped_dump(run_signatures(options))) {
      ok = false;
      why << " signatures documents differ";
    }
  }
  {
    SuiteOptions options = options_for("sym", 4, 1003);
    options.trials = 25;
    options.jobs = 4;
    if (stripped_dump(run_trials_suite(options)) !=
        stripped_dump(run_trials_suite(options))) {
      ok = false;
      why << " trials documents differ";
    }
  }
  verdict(10, "identical seeds reproduce byte-identical report numeric "
              "fields across consecutive runs",
          ok, why.str());
}

}  // namespace

int main() {
  std::printf("acceptance gate: 10 criteria\n");
  criterion_1();
  const SignatureRuns runs = run_signature_suites();
  criterion_2(runs);
  criterion_3(runs);
  criterion_4(runs);
  criterion_5(runs);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("acceptance gate: all 10 criteria passed\n");
  } else {
    std::printf("acceptance gate: %d criterion(s) failed\n", g_failures);
  }
  return g_failures;
}
