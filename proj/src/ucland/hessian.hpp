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

#include <vector>

#include "ucland/landscape.hpp"

namespace ucland {

// Inertia of a symmetric bilinear form: counts of positive, negative and
// (numerically) zero eigenvalues.
struct HessianSignature {
  int d_plus = 0;
  int d_minus = 0;
  int d_zero = 0;

  int sum() const { return d_plus + d_minus + d_zero; }
  bool operator==(const HessianSignature&) const = default;
};

// One diagonal monomial of the Hessian quadratic form at a canonical
// critical point.  Components: 0 = scalar (alpha / real part / diagonal),
// 1 = beta (imaginary part on the full domain), 2 = gamma, 3 = delta.
struct HqfTerm {
  int i = 0;
  int j = 0;
  int component = 0;
  double coefficient = 0.0;
};

// The diagonalized Hessian quadratic form.  Term order matches the standard
// tangent chart: diagonal monomials first, then pairs (i<j) with their
// components.  Coefficients follow the analytic convention
//   -(w_i + w_j)  per off-diagonal monomial,   -w_i  per diagonal monomial.
struct QuadraticFormDiagonal {
  LandscapeDomain domain;
  std::vector<HqfTerm> terms;
};

// Analytic Hessian quadratic form of the canonical landscape at the critical
// point described by `spec` (the rotation only re-labels coordinates; the
// coefficients depend on n alone).
QuadraticFormDiagonal hqf_at_critical(const CriticalPointSpec& spec);

// Expected numerical-Hessian diagonal in the orthonormal chart, term by term
// (off-diagonal monomial coefficients are halved by the chart normalization).
RealVector chart_diagonal(const QuadraticFormDiagonal& q);
// Same values sorted ascending, for spectrum comparisons.
std::vector<double> chart_spectrum(const QuadraticFormDiagonal& q);

// Numerical Hessian of Jc at `point` in chart coordinates: mixed central
// second differences of Jc along two-parameter curves
// sqrt(S) e^{i(s A_a + t A_b)} sqrt(S), symmetrized.  h must lie in
// [1e-6, 1e-2].
RealMatrix numerical_hessian(const DomainPoint& point, const TangentChart& chart,
                             double h = 1e-3);

// Numerical Hessian of J(., W) along the same curves.
RealMatrix numerical_hessian_metric(const DomainPoint& point,
                                    const TargetTransformation& w,
                                    const TangentChart& chart, double h = 1e-3);

// Signature of a real symmetric matrix; eigenvalues of magnitude below
// zero_tol * max(1, |lambda|_max) count as zero.
HessianSignature signature(const RealMatrix& h, double zero_tol = 1e-4);

// Closed-form signatures at the rank-n critical submanifold:
//   symmetric   ( ((N-n)^2+N-n)/2, (n^2+n)/2, n(N-n) )
//   self-dual   ( (N-n)(2(N-n)-1), n(2n-1), 4n(N-n) )
//   full        ( (N-n)^2, n^2, 2n(N-n) )
HessianSignature closed_form_signature(const LandscapeDomain& domain, int n_plus);

// The as-published triples.  They agree with the closed forms on the
// symmetric and full domains; on the self-dual domain the published triple
// ( 2(N-n)^2+2(N-n), 2n^2+2n, 4N(N-n) ) violates the sum rule and is kept
// only so reports can show the conflict.
HessianSignature published_signature(const LandscapeDomain& domain, int n_plus);

// Dimension of the critical submanifold (a Grassmannian):
// n(N-n), 4n(N-n), 2n(N-n) per domain; equals d_zero of the closed form.
int grassmannian_dim(const LandscapeDomain& domain, int n_plus);

}  // namespace ucland
