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

#include "ucland/matrix.hpp"

#include <cmath>
#include <numbers>

namespace ucland {

double unitarity_residual(const ComplexMatrix& m) {
  ComplexMatrix g = m * m.adjoint();
  g.diagonal().array() -= 1.0;
  return max_abs(g);
}

double transpose_symmetry_residual(const ComplexMatrix& m) {
  return max_abs_diff(m, m.transpose());
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && unitarity_residual(m) <= tol;
}

bool is_complex_symmetric(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && transpose_symmetry_residual(m) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_real(const ComplexMatrix& m, double tol) {
  return m.size() == 0 || m.imag().cwiseAbs().maxCoeff() <= tol;
}

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

double canonical_phase(double phi) {
  constexpr double pi = std::numbers::pi;
  phi = std::remainder(phi, 2.0 * pi);  // lands in [-pi, pi]
  if (phi <= -pi) phi += 2.0 * pi;
  return phi;
}

}  // namespace ucland
