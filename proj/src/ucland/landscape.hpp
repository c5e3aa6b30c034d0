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

#include <optional>
#include <vector>

#include "ucland/domains.hpp"
#include "ucland/matrix.hpp"

namespace ucland {

// The landscape functions
//
//   J(S, W)  = Re Tr(W^dag S)          (metric form; ||S - W||^2 = 2N - 2J)
//   Jc(S)    = Re Tr(S)                (canonical form, target reduced to I)
//
// and the conjugation S -> sqrt(W^dag) S sqrt(W^dag) carrying one into the
// other.

// A target transformation: an on-domain point W.
struct TargetTransformation {
  DomainPoint point;
};

TargetTransformation make_target(const DomainPoint& w);

double j_metric(const ComplexMatrix& s, const ComplexMatrix& w);
double j_canonical(const ComplexMatrix& s);

// ||S - W||_F^2 = 2N - 2 Re Tr(W^dag S), N the matrix size.
double metric_distance_squared(const DomainPoint& s, const TargetTransformation& w);

// sqrt(W^dag) S sqrt(W^dag); maps W itself to the identity.
DomainPoint reduce_to_canonical(const DomainPoint& s, const TargetTransformation& w);

// Critical values of the canonical landscape, ascending in n:
//   symmetric / full   2n - N      for n = 0..N
//   self-dual          2(2n - N)   for n = 0..N (Kramers doubling)
std::vector<double> critical_values(const LandscapeDomain& domain);

// A critical submanifold representative: S~ = X^T Omega~ X (or the dual /
// adjoint sandwich for the other domains) with Omega~ carrying n phases 0
// and N-n phases pi.
struct CriticalPointSpec {
  LandscapeDomain domain;
  int n_plus;              // number of +1 eigenvalues (pairs on self-dual)
  ComplexMatrix rotation;  // SO(N), Sp(2N) or U(N) element per domain
};

CriticalPointSpec identity_critical_spec(const LandscapeDomain& domain, int n_plus);
DomainPoint make_critical_point(const CriticalPointSpec& spec);

// Gradient of Jc in the standard chart: k-th coordinate -Im Tr(A_k S).
RealVector gradient_canonical(const DomainPoint& point);
RealVector gradient_canonical(const DomainPoint& point, const TangentChart& chart);

// Gradient of J(., W) along the same curves: -Im Tr(A_k sqrt(S) W^dag sqrt(S)).
RealVector gradient_metric(const DomainPoint& point, const TargetTransformation& w,
                           const TangentChart& chart);

// If the gradient norm is <= tol, identify which critical submanifold the
// point sits on by rounding its eigenphases to multiples of pi (0.1 rad
// consistency band) and return n = #(+1 eigenvalues, pairs counted once on
// the self-dual domain).  Returns nullopt when the gradient says the point
// is not critical; throws InconsistentCriticalPoint when the gradient and
// the phases disagree.
std::optional<int> classify_critical_point(const DomainPoint& point, double tol);

}  // namespace ucland
