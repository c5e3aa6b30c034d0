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

#include <Eigen/Dense>
#include <complex>

namespace ucland {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(a - b);
}

// max |M M^dag - I|, the unitarity residual
double unitarity_residual(const ComplexMatrix& m);

// max |M - M^T|
double transpose_symmetry_residual(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& m, double tol);
bool is_complex_symmetric(const ComplexMatrix& m, double tol);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_real(const ComplexMatrix& m, double tol);
bool all_finite(const ComplexMatrix& m);

// Tr(a b) accumulated entrywise, O(n^2)
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// wraps an angle into the canonical branch (-pi, pi]; -pi maps to +pi
double canonical_phase(double phi);

}  // namespace ucland
