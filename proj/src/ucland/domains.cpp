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

#include "ucland/domains.hpp"

#include <cmath>
#include <sstream>

#include "ucland/errors.hpp"

namespace ucland {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kSqrt2Inv = 0.70710678118654752440;

LandscapeDomain make_domain(DomainKind kind, int n) {
  if (n < 1) throw DimensionError("landscape domain: N must be positive");
  return LandscapeDomain{kind, n};
}

}  // namespace

LandscapeDomain symmetric_domain(int n) {
  return make_domain(DomainKind::SymmetricUnitary, n);
}
LandscapeDomain self_dual_domain(int n) {
  return make_domain(DomainKind::SelfDualUnitary, n);
}
LandscapeDomain full_domain(int n) {
  return make_domain(DomainKind::FullUnitary, n);
}

int LandscapeDomain::dimension() const {
  switch (kind) {
    case DomainKind::SymmetricUnitary:
      return n * (n + 1) / 2;
    case DomainKind::SelfDualUnitary:
      return n * (2 * n - 1);
    case DomainKind::FullUnitary:
      return n * n;
  }
  throw DomainError("LandscapeDomain::dimension: unknown kind");
}

GeneratorStructure LandscapeDomain::generator_structure() const {
  switch (kind) {
    case DomainKind::SymmetricUnitary:
      return GeneratorStructure::RealSymmetric;
    case DomainKind::SelfDualUnitary:
      return GeneratorStructure::HermitianSelfDual;
    case DomainKind::FullUnitary:
      return GeneratorStructure::Hermitian;
  }
  throw DomainError("LandscapeDomain::generator_structure: unknown kind");
}

std::string LandscapeDomain::name() const {
  switch (kind) {
    case DomainKind::SymmetricUnitary:
      return "sym";
    case DomainKind::SelfDualUnitary:
      return "sympl";
    case DomainKind::FullUnitary:
      return "full";
  }
  return "?";
}

int domain_dim(const LandscapeDomain& domain) { return domain.dimension(); }

double domain_residual(const LandscapeDomain& domain, const ComplexMatrix& m) {
  if (m.rows() != domain.matrix_size() || m.cols() != domain.matrix_size()) {
    throw DimensionError("domain_residual: matrix size does not match the domain");
  }
  double r = unitarity_residual(m);
  switch (domain.kind) {
    case DomainKind::SymmetricUnitary:
      r = std::max(r, transpose_symmetry_residual(m));
      break;
    case DomainKind::SelfDualUnitary:
      r = std::max(r, self_dual_residual(m));
      break;
    case DomainKind::FullUnitary:
      break;
  }
  return r;
}

bool contains(const LandscapeDomain& domain, const ComplexMatrix& m, double tol) {
  if (m.rows() != domain.matrix_size() || m.cols() != domain.matrix_size()) {
    return false;
  }
  return all_finite(m) && domain_residual(domain, m) <= tol;
}

DomainPoint make_domain_point(const LandscapeDomain& domain, ComplexMatrix m,
                              double tol) {
  if (m.rows() != domain.matrix_size() || m.cols() != domain.matrix_size()) {
    throw DimensionError("make_domain_point: matrix size does not match the domain");
  }
  if (!all_finite(m)) throw DomainError("make_domain_point: non-finite entries");
  if (double r = domain_residual(domain, m); r > tol) {
    std::ostringstream os;
    os << "make_domain_point: matrix is off the " << domain.name()
       << " domain (residual " << r << ")";
    throw DomainError(os.str());
  }
  return DomainPoint{domain, std::move(m)};
}

namespace {

std::vector<ComplexMatrix> symmetric_basis(int n) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(n * (n + 1) / 2);
  for (int i = 0; i < n; ++i) {
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    a(i, i) = 1.0;
    basis.push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(i, j) = a(j, i) = kSqrt2Inv;
      basis.push_back(a);
    }
  }
  return basis;
}

std::vector<ComplexMatrix> full_basis(int n) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    a(i, i) = 1.0;
    basis.push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ComplexMatrix re = ComplexMatrix::Zero(n, n);
      re(i, j) = re(j, i) = kSqrt2Inv;
      basis.push_back(re);
      ComplexMatrix im = ComplexMatrix::Zero(n, n);
      im(i, j) = kI * kSqrt2Inv;
      im(j, i) = -kI * kSqrt2Inv;
      basis.push_back(im);
    }
  }
  return basis;
}

// Hermitian self-dual units in the half layout (rows/columns i and N+i form
// the i-th Kramers pair):
//   diagonal   (E_ii + E_{N+i,N+i}) / sqrt(2)
//   pair i<j   alpha, beta, gamma, delta components, each of norm one.
std::vector<ComplexMatrix> self_dual_basis(int n) {
  const int size = 2 * n;
  std::vector<ComplexMatrix> basis;
  basis.reserve(n * (2 * n - 1));
  for (int i = 0; i < n; ++i) {
    ComplexMatrix a = ComplexMatrix::Zero(size, size);
    a(i, i) = a(n + i, n + i) = kSqrt2Inv;
    basis.push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // alpha: P = (E_ij + E_ji)/2, T = P^T
      ComplexMatrix alpha = ComplexMatrix::Zero(size, size);
      alpha(i, j) = alpha(j, i) = 0.5;
      alpha(n + i, n + j) = alpha(n + j, n + i) = 0.5;
      basis.push_back(alpha);
      // beta: Q = i(E_ij - E_ji)/2, R = Q
      ComplexMatrix beta = ComplexMatrix::Zero(size, size);
      beta(i, n + j) = kI * 0.5;
      beta(j, n + i) = -kI * 0.5;
      beta(n + i, j) = kI * 0.5;
      beta(n + j, i) = -kI * 0.5;
      basis.push_back(beta);
      // gamma: Q = (E_ij - E_ji)/2, R = -Q
      ComplexMatrix gamma = ComplexMatrix::Zero(size, size);
      gamma(i, n + j) = 0.5;
      gamma(j, n + i) = -0.5;
      gamma(n + i, j) = -0.5;
      gamma(n + j, i) = 0.5;
      basis.push_back(gamma);
      // delta: P = i(E_ij - E_ji)/2, T = P^T
      ComplexMatrix delta = ComplexMatrix::Zero(size, size);
      delta(i, j) = kI * 0.5;
      delta(j, i) = -kI * 0.5;
      delta(n + i, n + j) = -kI * 0.5;
      delta(n + j, n + i) = kI * 0.5;
      basis.push_back(delta);
    }
  }
  return basis;
}

}  // namespace

std::vector<ComplexMatrix> tangent_basis(const LandscapeDomain& domain) {
  switch (domain.kind) {
    case DomainKind::SymmetricUnitary:
      return symmetric_basis(domain.n);
    case DomainKind::SelfDualUnitary:
      return self_dual_basis(domain.n);
    case DomainKind::FullUnitary:
      return full_basis(domain.n);
  }
  throw DomainError("tangent_basis: unknown domain kind");
}

ComplexMatrix TangentChart::direction(const RealVector& coords) const {
  if (coords.size() != dim()) {
    throw DimensionError("TangentChart::direction: coordinate count mismatch");
  }
  ComplexMatrix a = ComplexMatrix::Zero(base.matrix.rows(), base.matrix.cols());
  for (int k = 0; k < dim(); ++k) a += coords[k] * basis[k];
  return a;
}

RealVector TangentChart::coordinates(const ComplexMatrix& a) const {
  RealVector c(dim());
  for (int k = 0; k < dim(); ++k) {
    c[k] = trace_product(basis[k].adjoint(), a).real();
  }
  return c;
}

TangentChart standard_tangent_chart(const DomainPoint& point) {
  if (!contains(point.domain, point.matrix, 1e-8)) {
    throw DomainError("standard_tangent_chart: base point is off the domain");
  }
  return TangentChart{point, tangent_basis(point.domain)};
}

DomainPoint principal_sqrt(const DomainPoint& point) {
  switch (point.domain.kind) {
    case DomainKind::SymmetricUnitary:
      return DomainPoint{point.domain, sqrt_symmetric_unitary(point.matrix)};
    case DomainKind::SelfDualUnitary:
      return DomainPoint{point.domain, sqrt_self_dual_unitary(point.matrix)};
    case DomainKind::FullUnitary:
      return DomainPoint{point.domain, sqrt_unitary(point.matrix)};
  }
  throw DomainError("principal_sqrt: unknown domain kind");
}

DomainPoint curve(const DomainPoint& point, const ComplexMatrix& a, double t) {
  return CurveFamily(point).at(a, t);
}

CurveFamily::CurveFamily(const DomainPoint& point)
    : base_(point), sqrt_(principal_sqrt(point).matrix) {}

DomainPoint CurveFamily::at(const ComplexMatrix& a, double t) const {
  const ComplexMatrix e =
      exp_i_generator(a, t, base_.domain.generator_structure());
  return DomainPoint{base_.domain, sqrt_ * e * sqrt_};
}

DomainPoint renormalize(const DomainPoint& point) {
  const LandscapeDomain& domain = point.domain;
  const double r0 = domain_residual(domain, point.matrix);
  if (r0 <= 1e-12) return point;
  if (r0 > 1e-6) {
    std::ostringstream os;
    os << "renormalize: matrix is too far off the domain (residual " << r0 << ")";
    throw DomainError(os.str());
  }
  ComplexMatrix m = point.matrix;
  for (int round = 0; round < 5; ++round) {
    switch (domain.kind) {
      case DomainKind::SymmetricUnitary:
        m = ((m + m.transpose()) / 2.0).eval();
        break;
      case DomainKind::SelfDualUnitary:
        m = ((m + symplectic_dual(m)) / 2.0).eval();
        break;
      case DomainKind::FullUnitary:
        break;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    m = svd.matrixU() * svd.matrixV().adjoint();
    if (domain_residual(domain, m) <= 1e-12) {
      if (double moved = max_abs_diff(m, point.matrix); moved >= 10.0 * r0) {
        std::ostringstream os;
        os << "renormalize: projection moved the point too far (" << moved
           << " vs residual " << r0 << ")";
        throw NumericalError(os.str());
      }
      return DomainPoint{domain, std::move(m)};
    }
  }
  throw NumericalError("renormalize: residual did not converge in 5 rounds");
}

}  // namespace ucland
