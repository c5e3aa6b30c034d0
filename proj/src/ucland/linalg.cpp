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

#include "ucland/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "ucland/errors.hpp"

namespace ucland {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(who) + ": matrix must be square and non-empty");
  }
}

void require_even(const ComplexMatrix& m, const char* who) {
  if (m.rows() % 2 != 0) {
    throw DimensionError(std::string(who) + ": matrix size must be even, got " +
                         std::to_string(m.rows()));
  }
}

std::string residual_message(const char* who, const char* what, double r) {
  std::ostringstream os;
  os << who << ": " << what << " (residual " << r << ")";
  return os.str();
}

// Contiguous index ranges [first, second) whose ascending values differ by
// less than the gap from their neighbour.
std::vector<std::pair<int, int>> cluster_ranges(const RealVector& v, double gap) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(v.size());
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && v[j] - v[j - 1] < gap) ++j;
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

// Joint eigensystem of a commuting pair of self-adjoint matrices.  The first
// matrix is diagonalized outright; the second is projected into each
// eigenvalue cluster and diagonalized there.  Joint clusters are the
// degenerate groups of the resulting (a, b) eigenvalue pairs.
template <typename Matrix>
struct JointDiagonalization {
  Matrix vectors;  // orthonormal columns
  RealVector a, b;
  std::vector<std::pair<int, int>> clusters;
};

template <typename Matrix>
JointDiagonalization<Matrix> simultaneous_diagonalize(const Matrix& ma,
                                                      const Matrix& mb,
                                                      double gap,
                                                      const char* who) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(ma);
  if (es.info() != Eigen::Success) {
    throw NumericalError(std::string(who) + ": eigensolver failed");
  }
  JointDiagonalization<Matrix> out;
  out.vectors = es.eigenvectors();
  out.a = es.eigenvalues();
  out.b = RealVector::Zero(out.a.size());
  for (auto [c0, c1] : cluster_ranges(out.a, gap)) {
    const int m = c1 - c0;
    Matrix blk = out.vectors.middleCols(c0, m);
    Matrix proj = blk.adjoint() * mb * blk;
    proj = ((proj + proj.adjoint()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es2(proj);
    if (es2.info() != Eigen::Success) {
      throw NumericalError(std::string(who) + ": projected eigensolver failed");
    }
    out.vectors.middleCols(c0, m) = blk * es2.eigenvectors();
    RealVector mu = es2.eigenvalues();
    out.b.segment(c0, m) = mu;
    for (auto [d0, d1] : cluster_ranges(mu, gap)) {
      out.clusters.emplace_back(c0 + d0, c0 + d1);
    }
  }
  return out;
}

// Phase of the cluster representative (mean of the joint eigenvalue pair),
// shared by every member so that degenerate phases halve consistently.
template <typename Matrix>
RealVector cluster_phases(const JointDiagonalization<Matrix>& jd) {
  RealVector phases(jd.a.size());
  for (auto [c0, c1] : jd.clusters) {
    const int m = c1 - c0;
    const double ra = jd.a.segment(c0, m).mean();
    const double rb = jd.b.segment(c0, m).mean();
    const double phi = canonical_phase(std::atan2(rb, ra));
    for (int k = c0; k < c1; ++k) phases[k] = phi;
  }
  return phases;
}

bool lex_less_real(const RealMatrix& v, int x, int y) {
  for (int i = 0; i < v.rows(); ++i) {
    if (v(i, x) != v(i, y)) return v(i, x) < v(i, y);
  }
  return false;
}

bool lex_less_complex(const ComplexMatrix& v, int x, int y) {
  for (int i = 0; i < v.rows(); ++i) {
    const Complex cx = v(i, x), cy = v(i, y);
    if (cx.real() != cy.real()) return cx.real() < cy.real();
    if (cx.imag() != cy.imag()) return cx.imag() < cy.imag();
  }
  return false;
}

double reconstruction_bound(double tol) { return std::max(1e-10, 10.0 * tol); }

}  // namespace

ComplexMatrix symplectic_form(int half_dim) {
  if (half_dim <= 0) throw DimensionError("symplectic_form: half dimension must be positive");
  ComplexMatrix j = ComplexMatrix::Zero(2 * half_dim, 2 * half_dim);
  for (int k = 0; k < half_dim; ++k) {
    j(k, half_dim + k) = 1.0;
    j(half_dim + k, k) = -1.0;
  }
  return j;
}

ComplexMatrix symplectic_dual(const ComplexMatrix& m) {
  require_square(m, "symplectic_dual");
  require_even(m, "symplectic_dual");
  const int h = static_cast<int>(m.rows()) / 2;
  // With M = [[P, Q], [R, T]]:  -J M^T J = [[T^T, -Q^T], [-R^T, P^T]].
  ComplexMatrix out(2 * h, 2 * h);
  out.topLeftCorner(h, h) = m.bottomRightCorner(h, h).transpose();
  out.topRightCorner(h, h) = -m.topRightCorner(h, h).transpose();
  out.bottomLeftCorner(h, h) = -m.bottomLeftCorner(h, h).transpose();
  out.bottomRightCorner(h, h) = m.topLeftCorner(h, h).transpose();
  return out;
}

double self_dual_residual(const ComplexMatrix& m) {
  return max_abs_diff(m, symplectic_dual(m));
}

bool is_self_dual(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && m.rows() % 2 == 0 && self_dual_residual(m) <= tol;
}

double quaternion_real_residual(const ComplexMatrix& m) {
  require_square(m, "quaternion_real_residual");
  require_even(m, "quaternion_real_residual");
  const int h = static_cast<int>(m.rows()) / 2;
  // conj(M) = J^{-1} M J blockwise: conj(P) = T, conj(Q) = -R.
  const double r1 =
      max_abs_diff(m.topLeftCorner(h, h).conjugate(), m.bottomRightCorner(h, h));
  const double r2 =
      max_abs_diff(m.topRightCorner(h, h).conjugate(), -m.bottomLeftCorner(h, h));
  return std::max(r1, r2);
}

bool is_quaternion_real(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && m.rows() % 2 == 0 &&
         quaternion_real_residual(m) <= tol;
}

QuaternionBlockView::QuaternionBlockView(const ComplexMatrix& m) : m_(m) {
  require_square(m, "QuaternionBlockView");
  require_even(m, "QuaternionBlockView");
  half_ = static_cast<int>(m.rows()) / 2;
}

Eigen::Matrix2cd QuaternionBlockView::block(int i, int j) const {
  if (i < 0 || j < 0 || i >= half_ || j >= half_) {
    throw DimensionError("QuaternionBlockView::block: index out of range");
  }
  Eigen::Matrix2cd b;
  b << m_(i, j), m_(i, half_ + j), m_(half_ + i, j), m_(half_ + i, half_ + j);
  return b;
}

PauliCoefficients QuaternionBlockView::pauli(int i, int j) const {
  const Eigen::Matrix2cd b = block(i, j);
  PauliCoefficients c;
  c.scalar = (b(0, 0) + b(1, 1)) / 2.0;
  c.z = (b(0, 0) - b(1, 1)) / 2.0;
  c.x = (b(0, 1) + b(1, 0)) / 2.0;
  c.y = kI * (b(0, 1) - b(1, 0)) / 2.0;
  return c;
}

ComplexMatrix SpectralFactorization::omega() const {
  ComplexVector d = (kI * phases.cast<Complex>().array()).exp();
  return d.asDiagonal();
}

ComplexMatrix SpectralFactorization::reconstruct() const {
  const ComplexMatrix x = rotation.cast<Complex>();
  return x.transpose() * omega() * x;
}

ComplexMatrix SymplecticFactorization::omega() const {
  const int n = static_cast<int>(phases.size());
  ComplexVector d(2 * n);
  for (int k = 0; k < n; ++k) {
    d[k] = std::exp(kI * phases[k]);
    d[n + k] = d[k];
  }
  return d.asDiagonal();
}

ComplexMatrix SymplecticFactorization::reconstruct() const {
  return symplectic_dual(rotation) * omega() * rotation;
}

ComplexMatrix UnitaryFactorization::omega() const {
  ComplexVector d = (kI * phases.cast<Complex>().array()).exp();
  return d.asDiagonal();
}

ComplexMatrix UnitaryFactorization::reconstruct() const {
  return rotation.adjoint() * omega() * rotation;
}

SpectralFactorization factor_symmetric_unitary(const ComplexMatrix& s, double tol) {
  const char* who = "factor_symmetric_unitary";
  require_square(s, who);
  if (!all_finite(s)) throw DomainError(std::string(who) + ": non-finite entries");
  if (double r = unitarity_residual(s); r > tol) {
    throw DomainError(residual_message(who, "input is not unitary", r));
  }
  if (double r = transpose_symmetry_residual(s); r > tol) {
    throw DomainError(residual_message(who, "input is not symmetric", r));
  }
  const int n = static_cast<int>(s.rows());
  // Re S and Im S commute for a symmetric unitary; diagonalize them jointly.
  RealMatrix ra = ((s.real() + s.real().transpose()) / 2.0).eval();
  RealMatrix rb = ((s.imag() + s.imag().transpose()) / 2.0).eval();
  auto jd = simultaneous_diagonalize(ra, rb, kClusterGap, who);
  RealVector phases = cluster_phases(jd);

  // Deterministic eigenvector convention: each column's largest entry is
  // positive, columns ordered by ascending phase then lexicographically.
  RealMatrix v = jd.vectors;
  for (int k = 0; k < n; ++k) {
    int imax = 0;
    v.col(k).cwiseAbs().maxCoeff(&imax);
    if (v(imax, k) < 0) v.col(k) = -v.col(k);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if (phases[x] != phases[y]) return phases[x] < phases[y];
    return lex_less_real(v, x, y);
  });
  RealMatrix v2(n, n);
  RealVector ph2(n);
  for (int k = 0; k < n; ++k) {
    v2.col(k) = v.col(perm[k]);
    ph2[k] = phases[perm[k]];
  }
  if (v2.determinant() < 0) v2.col(n - 1) = -v2.col(n - 1);

  SpectralFactorization f{v2.transpose(), ph2};
  if (double r = max_abs_diff(f.reconstruct(), s); r > reconstruction_bound(tol)) {
    throw NumericalError(residual_message(who, "simultaneous diagonalization failed", r));
  }
  return f;
}

UnitaryFactorization factor_unitary(const ComplexMatrix& s, double tol) {
  const char* who = "factor_unitary";
  require_square(s, who);
  if (!all_finite(s)) throw DomainError(std::string(who) + ": non-finite entries");
  if (double r = unitarity_residual(s); r > tol) {
    throw DomainError(residual_message(who, "input is not unitary", r));
  }
  const int n = static_cast<int>(s.rows());
  ComplexMatrix h1 = ((s + s.adjoint()) / 2.0).eval();
  ComplexMatrix h2 = ((s - s.adjoint()) / (2.0 * kI)).eval();
  auto jd = simultaneous_diagonalize(h1, h2, kClusterGap, who);
  RealVector phases = cluster_phases(jd);

  ComplexMatrix v = jd.vectors;
  for (int k = 0; k < n; ++k) {
    int imax = 0;
    v.col(k).cwiseAbs().maxCoeff(&imax);
    const Complex lead = v(imax, k);
    if (std::abs(lead) > 0) v.col(k) *= std::conj(lead) / std::abs(lead);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if (phases[x] != phases[y]) return phases[x] < phases[y];
    return lex_less_complex(v, x, y);
  });
  ComplexMatrix v2(n, n);
  RealVector ph2(n);
  for (int k = 0; k < n; ++k) {
    v2.col(k) = v.col(perm[k]);
    ph2[k] = phases[perm[k]];
  }

  UnitaryFactorization f{v2.adjoint(), ph2};
  if (double r = max_abs_diff(f.reconstruct(), s); r > reconstruction_bound(tol)) {
    throw NumericalError(residual_message(who, "diagonalization failed", r));
  }
  return f;
}

SymplecticFactorization factor_self_dual_unitary(const ComplexMatrix& s, double tol) {
  const char* who = "factor_self_dual_unitary";
  require_square(s, who);
  require_even(s, who);
  if (!all_finite(s)) throw DomainError(std::string(who) + ": non-finite entries");
  if (double r = unitarity_residual(s); r > tol) {
    throw DomainError(residual_message(who, "input is not unitary", r));
  }
  if (double r = self_dual_residual(s); r > tol) {
    throw DomainError(residual_message(who, "input is not self-dual", r));
  }
  const int size = static_cast<int>(s.rows());
  const int n = size / 2;
  const ComplexMatrix j = symplectic_form(n);

  ComplexMatrix h1 = ((s + s.adjoint()) / 2.0).eval();
  ComplexMatrix h2 = ((s - s.adjoint()) / (2.0 * kI)).eval();
  auto jd = simultaneous_diagonalize(h1, h2, kClusterGap, who);

  // Kramers pairing inside every joint eigenspace: the partner of an
  // eigenvector v is -J conj(v), orthogonal to v and degenerate with it.
  struct Pair {
    ComplexVector v, w;
    double phase;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n);
  for (auto [c0, c1] : jd.clusters) {
    const int m = c1 - c0;
    if (m % 2 != 0) {
      throw NumericalError(std::string(who) +
                           ": unpaired eigenphase (odd multiplicity " +
                           std::to_string(m) + ")");
    }
    const double ra = jd.a.segment(c0, m).mean();
    const double rb = jd.b.segment(c0, m).mean();
    const double phi = canonical_phase(std::atan2(rb, ra));

    ComplexMatrix basis = jd.vectors.middleCols(c0, m);
    ComplexMatrix work = basis;
    for (int p = 0; p < m / 2; ++p) {
      // pick the residual column of largest norm
      int best = 0;
      double best_norm = -1.0;
      for (int t = 0; t < m; ++t) {
        const double nt = work.col(t).norm();
        if (nt > best_norm) {
          best_norm = nt;
          best = t;
        }
      }
      if (best_norm < 1e-6) {
        throw NumericalError(std::string(who) + ": unpaired eigenphase (span exhausted)");
      }
      Pair pr;
      pr.v = work.col(best).normalized();
      pr.w = -(j * pr.v.conjugate());
      pr.phase = phi;
      // the partner must stay inside the eigenspace
      const double leak = (pr.w - basis * (basis.adjoint() * pr.w)).norm();
      if (leak > 1e-6) {
        throw NumericalError(residual_message(
            who, "unpaired eigenphase (Kramers partner leaves the eigenspace)", leak));
      }
      work -= pr.v * (pr.v.adjoint() * work);
      work -= pr.w * (pr.w.adjoint() * work);
      pairs.push_back(std::move(pr));
    }
  }

  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& x, const Pair& y) { return x.phase < y.phase; });

  ComplexMatrix v(size, size);
  RealVector phases(n);
  for (int k = 0; k < n; ++k) {
    v.col(k) = pairs[k].v;
    v.col(n + k) = pairs[k].w;
    phases[k] = pairs[k].phase;
  }

  SymplecticFactorization f{v.adjoint(), phases};
  if (double r = quaternion_real_residual(f.rotation); r > 1e-9) {
    throw NumericalError(residual_message(who, "rotation is not symplectic", r));
  }
  if (double r = max_abs_diff(f.reconstruct(), s); r > reconstruction_bound(tol)) {
    throw NumericalError(residual_message(who, "diagonalization failed", r));
  }
  return f;
}

namespace {

RealVector halved(const RealVector& phases) {
  RealVector h(phases.size());
  for (int k = 0; k < phases.size(); ++k) h[k] = canonical_phase(phases[k]) / 2.0;
  return h;
}

}  // namespace

ComplexMatrix sqrt_symmetric_unitary(const ComplexMatrix& s) {
  SpectralFactorization f = factor_symmetric_unitary(s);
  SpectralFactorization r{f.rotation, halved(f.phases)};
  return r.reconstruct();
}

ComplexMatrix sqrt_self_dual_unitary(const ComplexMatrix& s) {
  SymplecticFactorization f = factor_self_dual_unitary(s);
  SymplecticFactorization r{f.rotation, halved(f.phases)};
  return r.reconstruct();
}

ComplexMatrix sqrt_unitary(const ComplexMatrix& s) {
  UnitaryFactorization f = factor_unitary(s);
  UnitaryFactorization r{f.rotation, halved(f.phases)};
  return r.reconstruct();
}

ComplexMatrix exp_ih(const ComplexMatrix& a, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
  if (es.info() != Eigen::Success) {
    throw NumericalError("exp_ih: eigensolver failed");
  }
  ComplexVector d = (kI * t * es.eigenvalues().cast<Complex>().array()).exp();
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix exp_i_generator(const ComplexMatrix& a, double t,
                              GeneratorStructure structure) {
  const char* who = "exp_i_generator";
  require_square(a, who);
  constexpr double struct_tol = 1e-10;
  switch (structure) {
    case GeneratorStructure::RealSymmetric: {
      if (!is_real(a, struct_tol) || !is_complex_symmetric(a, struct_tol)) {
        throw DomainError(std::string(who) + ": generator is not real-symmetric");
      }
      RealMatrix ar = ((a.real() + a.real().transpose()) / 2.0).eval();
      Eigen::SelfAdjointEigenSolver<RealMatrix> es(ar);
      if (es.info() != Eigen::Success) {
        throw NumericalError(std::string(who) + ": eigensolver failed");
      }
      ComplexVector d = (kI * t * es.eigenvalues().cast<Complex>().array()).exp();
      const ComplexMatrix v = es.eigenvectors().cast<Complex>();
      return v * d.asDiagonal() * v.transpose();
    }
    case GeneratorStructure::HermitianSelfDual: {
      if (!is_hermitian(a, struct_tol)) {
        throw DomainError(std::string(who) + ": generator is not Hermitian");
      }
      if (!is_self_dual(a, struct_tol)) {
        throw DomainError(std::string(who) + ": generator is not self-dual");
      }
      return exp_ih(a, t);
    }
    case GeneratorStructure::Hermitian: {
      if (!is_hermitian(a, struct_tol)) {
        throw DomainError(std::string(who) + ": generator is not Hermitian");
      }
      return exp_ih(a, t);
    }
  }
  throw DomainError(std::string(who) + ": unknown generator structure");
}

}  // namespace ucland
