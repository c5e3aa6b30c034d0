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

#include <string>
#include <vector>

#include "ucland/linalg.hpp"
#include "ucland/matrix.hpp"

namespace ucland {

// The three landscape domains.
//
//   SymmetricUnitary: N x N unitary S with S = S^T   (U(N)/O(N))
//   SelfDualUnitary:  2N x 2N unitary S with S = S^R (U(2N)/Sp(2N))
//   FullUnitary:      N x N unitary, unconstrained baseline
enum class DomainKind { SymmetricUnitary, SelfDualUnitary, FullUnitary };

struct LandscapeDomain {
  DomainKind kind;
  int n;  // structural parameter N (self-dual matrices are 2N x 2N)

  int matrix_size() const { return kind == DomainKind::SelfDualUnitary ? 2 * n : n; }
  int dimension() const;
  GeneratorStructure generator_structure() const;
  std::string name() const;  // "sym" | "sympl" | "full"
};

LandscapeDomain symmetric_domain(int n);
LandscapeDomain self_dual_domain(int n);
LandscapeDomain full_domain(int n);

// Real manifold dimension: (N^2+N)/2, N(2N-1), N^2 respectively.
int domain_dim(const LandscapeDomain& domain);

double domain_residual(const LandscapeDomain& domain, const ComplexMatrix& m);
bool contains(const LandscapeDomain& domain, const ComplexMatrix& m, double tol);

// A matrix on a landscape domain.  make_domain_point validates membership.
struct DomainPoint {
  LandscapeDomain domain;
  ComplexMatrix matrix;
};

DomainPoint make_domain_point(const LandscapeDomain& domain, ComplexMatrix m,
                              double tol = 1e-9);

// Orthonormal basis of tangent generators, fixed per domain: directions A
// such that t -> sqrt(S) e^{iAt} sqrt(S) stays on the domain.  Ordering is
// diagonal units first, then index pairs (i<j) lexicographically; the
// self-dual domain carries four Pauli-component units per pair.
std::vector<ComplexMatrix> tangent_basis(const LandscapeDomain& domain);

struct TangentChart {
  DomainPoint base;
  std::vector<ComplexMatrix> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  // Sum_k coords[k] * A_k
  ComplexMatrix direction(const RealVector& coords) const;
  // inner products <A_k, a> with <x, y> = Re Tr(x^dag y)
  RealVector coordinates(const ComplexMatrix& a) const;
};

TangentChart standard_tangent_chart(const DomainPoint& point);

// The geodesic-style curve through S: sqrt(S) e^{iAt} sqrt(S).  Transpose or
// dual symmetry is preserved exactly by the sandwich construction.
DomainPoint curve(const DomainPoint& point, const ComplexMatrix& a, double t);

// Curve evaluator with the square root precomputed (one factorization,
// many parameter values).
class CurveFamily {
 public:
  explicit CurveFamily(const DomainPoint& point);
  const DomainPoint& base() const { return base_; }
  const ComplexMatrix& sqrt_matrix() const { return sqrt_; }
  DomainPoint at(const ComplexMatrix& a, double t) const;

 private:
  DomainPoint base_;
  ComplexMatrix sqrt_;
};

// Principal square root of the point (phases halved on (-pi, pi], -1 -> +i);
// stays on the domain.
DomainPoint principal_sqrt(const DomainPoint& point);

// Projects a slightly off-domain matrix back: alternating structural
// symmetrization and unitary polar projection, at most five rounds, until
// all residuals drop below 1e-12.  Exact points are returned unchanged.
DomainPoint renormalize(const DomainPoint& point);

}  // namespace ucland
