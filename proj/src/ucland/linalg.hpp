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

#include "ucland/matrix.hpp"

namespace ucland {

// --------------------------------------------------------------------------
// Symplectic structure.
//
// The antisymmetric form J is the block matrix [[0, I_N], [-I_N, 0]] and the
// dual of a 2N x 2N matrix is M^R = -J M^T J.  The dual is an involution and
// an anti-automorphism: (M N)^R = N^R M^R.  Symplectic pairs are the index
// pairs (k, N+k); the 2x2 "quaternion block" (i, j) collects the entries
// at rows {i, N+i} and columns {j, N+j}.
// --------------------------------------------------------------------------

// J for half-dimension N (a 2N x 2N matrix).
ComplexMatrix symplectic_form(int half_dim);

// M^R = -J M^T J, computed blockwise (exact, no rounding).
// Throws DimensionError for odd-sized input.
ComplexMatrix symplectic_dual(const ComplexMatrix& m);

// max |M - M^R|
double self_dual_residual(const ComplexMatrix& m);
bool is_self_dual(const ComplexMatrix& m, double tol);

// Quaternion reality: conj(M) = J^{-1} M J.  Equivalently every quaternion
// block lies in the real span of {s0, i sx, i sy, i sz}.  For Hermitian
// matrices this is the same condition as self-duality; unitary matrices
// satisfying it are exactly the compact symplectic group (X^R X = I).
double quaternion_real_residual(const ComplexMatrix& m);
bool is_quaternion_real(const ComplexMatrix& m, double tol);

// Complex coefficients of a quaternion block in the Pauli basis
// B = scalar*s0 + x*sx + y*sy + z*sz.
struct PauliCoefficients {
  Complex scalar, x, y, z;
};

// Read-only quaternion-block view of a 2N x 2N matrix.
class QuaternionBlockView {
 public:
  explicit QuaternionBlockView(const ComplexMatrix& m);
  int block_dim() const { return half_; }
  // 2x2 block (i, j), 0 <= i, j < block_dim()
  Eigen::Matrix2cd block(int i, int j) const;
  PauliCoefficients pauli(int i, int j) const;

 private:
  const ComplexMatrix& m_;
  int half_;
};

// --------------------------------------------------------------------------
// Spectral factorizations over the constrained domains.
// --------------------------------------------------------------------------

// Symmetric unitary: S = X^T diag(e^{i phi}) X with X in SO(N).
// Obtained by simultaneously diagonalizing the commuting real symmetric
// pair (Re S, Im S).  Phases lie in (-pi, pi]; members of a degenerate
// cluster share one phase taken from the cluster representative.
struct SpectralFactorization {
  RealMatrix rotation;  // X, special orthogonal; rows are eigenvectors
  RealVector phases;    // phi_j in (-pi, pi], ascending

  ComplexMatrix omega() const;        // diag(e^{i phi})
  ComplexMatrix reconstruct() const;  // X^T omega X
};

// Self-dual unitary: S = X^R Omega X with X symplectic (X^R X = I) and
// Omega = diag(e^{i phi_1..phi_N}; e^{i phi_1..phi_N}) in the half layout,
// i.e. each eigenphase carried by a Kramers pair.
struct SymplecticFactorization {
  ComplexMatrix rotation;  // X in Sp(2N)
  RealVector phases;       // N pair phases in (-pi, pi], ascending

  ComplexMatrix omega() const;        // 2N x 2N, doubled phases
  ComplexMatrix reconstruct() const;  // X^R omega X
};

// Plain unitary: S = X^dag diag(e^{i phi}) X with X unitary.
struct UnitaryFactorization {
  ComplexMatrix rotation;  // X, unitary
  RealVector phases;       // phi_j in (-pi, pi], ascending

  ComplexMatrix omega() const;
  ComplexMatrix reconstruct() const;  // X^dag omega X
};

// Eigenvalue clustering gap used when grouping degenerate phases.
inline constexpr double kClusterGap = 1e-8;

// Factor a symmetric unitary matrix.  Throws DomainError when the input is
// not unitary-symmetric to `tol`, NumericalError (with the residual in the
// message) when the reconstruction residual exceeds its bound.
SpectralFactorization factor_symmetric_unitary(const ComplexMatrix& s,
                                               double tol = 1e-8);

// Factor a self-dual unitary matrix.  Eigenphases must pair up (Kramers);
// an unpaired phase beyond the pairing tolerance raises NumericalError.
SymplecticFactorization factor_self_dual_unitary(const ComplexMatrix& s,
                                                 double tol = 1e-8);

// Factor an arbitrary unitary matrix.
UnitaryFactorization factor_unitary(const ComplexMatrix& s, double tol = 1e-8);

// --------------------------------------------------------------------------
// Principal square roots and exponentials.
// --------------------------------------------------------------------------

// Principal square root of a unitary in one of the three structured classes:
// every eigenphase is halved on the branch (-pi, pi], so -1 maps to +i.
// The root stays in the same structured class.
ComplexMatrix sqrt_symmetric_unitary(const ComplexMatrix& s);
ComplexMatrix sqrt_self_dual_unitary(const ComplexMatrix& s);
ComplexMatrix sqrt_unitary(const ComplexMatrix& s);

// Tangent structure classes for generators.
enum class GeneratorStructure {
  RealSymmetric,      // A real, A = A^T
  HermitianSelfDual,  // A = A^dag = A^R (quaternion-real Hermitian)
  Hermitian,          // A = A^dag
};

// e^{i A t} via eigendecomposition of the Hermitian generator A.
// The structure of A is checked to 1e-10; violations raise DomainError.
ComplexMatrix exp_i_generator(const ComplexMatrix& a, double t,
                              GeneratorStructure structure);

// Unchecked kernel used by the checked wrapper (A assumed Hermitian).
ComplexMatrix exp_ih(const ComplexMatrix& a, double t);

}  // namespace ucland
