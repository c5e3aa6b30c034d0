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

#include "ucland/sampling.hpp"

#include <cmath>

#include "ucland/errors.hpp"

namespace ucland {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_positive(int n, const char* who) {
  if (n < 1) throw DimensionError(std::string(who) + ": N must be positive");
}

}  // namespace

SeededStream SeededStream::substream(std::uint64_t tag) const {
  std::uint64_t state = stream_id ^ (tag * 0xD1B54A32D192ED03ULL);
  return SeededStream{seed, splitmix64(state)};
}

RandomSource::RandomSource(const SeededStream& stream) : normal_(0.0, 1.0) {
  std::uint64_t state = stream.seed;
  const std::uint64_t k1 = splitmix64(state);
  state ^= stream.stream_id + 0x9E3779B97F4A7C15ULL;
  const std::uint64_t k2 = splitmix64(state);
  const std::uint64_t k3 = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(k1), static_cast<std::uint32_t>(k1 >> 32),
                    static_cast<std::uint32_t>(k2), static_cast<std::uint32_t>(k2 >> 32),
                    static_cast<std::uint32_t>(k3), static_cast<std::uint32_t>(k3 >> 32)};
  engine_.seed(seq);
}

double RandomSource::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double RandomSource::gaussian() { return normal_(engine_); }

Complex RandomSource::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

ComplexMatrix haar_unitary(int n, const SeededStream& stream) {
  require_positive(n, "haar_unitary");
  RandomSource rng(stream);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  // Divide out the triangular factor's diagonal phases to land on Haar.
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= a > 0 ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

DomainPoint coe_sample(int n, const SeededStream& stream) {
  const ComplexMatrix u = haar_unitary(n, stream);
  return DomainPoint{symmetric_domain(n), u.transpose() * u};
}

DomainPoint cse_sample(int n, const SeededStream& stream) {
  const ComplexMatrix u = haar_unitary(2 * n, stream);
  return DomainPoint{self_dual_domain(n), symplectic_dual(u) * u};
}

namespace {

RealMatrix haar_special_orthogonal(int n, const SeededStream& stream) {
  RandomSource rng(stream);
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  }
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  }
  if (q.determinant() < 0) q.col(n - 1) = -q.col(n - 1);
  return q;
}

// Haar Sp(2N): Kramers-pair Gram-Schmidt on complex Gaussian vectors.  Each
// chosen unit vector v is completed by its partner w = -J conj(v), which is
// automatically orthonormal to everything chosen so far.
ComplexMatrix haar_symplectic(int n, const SeededStream& stream) {
  RandomSource rng(stream);
  const int size = 2 * n;
  const ComplexMatrix j = symplectic_form(n);
  ComplexMatrix v(size, size);
  for (int k = 0; k < n; ++k) {
    ComplexVector u(size);
    double norm = 0.0;
    do {
      for (int i = 0; i < size; ++i) u[i] = rng.complex_gaussian();
      for (int p = 0; p < k; ++p) {
        u -= v.col(p) * (v.col(p).dot(u));
        u -= v.col(n + p) * (v.col(n + p).dot(u));
      }
      norm = u.norm();
    } while (norm < 1e-8);
    v.col(k) = u / norm;
    v.col(n + k) = -(j * v.col(k).conjugate());
  }
  return v.adjoint();
}

}  // namespace

ComplexMatrix random_rotation(const LandscapeDomain& domain,
                              const SeededStream& stream) {
  switch (domain.kind) {
    case DomainKind::SymmetricUnitary:
      return haar_special_orthogonal(domain.n, stream).cast<Complex>();
    case DomainKind::SelfDualUnitary:
      return haar_symplectic(domain.n, stream);
    case DomainKind::FullUnitary:
      return haar_unitary(domain.n, stream);
  }
  throw DomainError("random_rotation: unknown domain kind");
}

RealVector random_tangent(const TangentChart& chart, const SeededStream& stream,
                          double norm) {
  if (!(norm > 0.0)) throw DomainError("random_tangent: norm must be positive");
  RandomSource rng(stream);
  RealVector c(chart.dim());
  double len = 0.0;
  do {
    for (int k = 0; k < chart.dim(); ++k) c[k] = rng.gaussian();
    len = c.norm();
  } while (len < 1e-12);
  return c * (norm / len);
}

DomainPoint ensemble_sample(const LandscapeDomain& domain, const SeededStream& stream) {
  switch (domain.kind) {
    case DomainKind::SymmetricUnitary:
      return coe_sample(domain.n, stream);
    case DomainKind::SelfDualUnitary:
      return cse_sample(domain.n, stream);
    case DomainKind::FullUnitary:
      return DomainPoint{domain, haar_unitary(domain.n, stream)};
  }
  throw DomainError("ensemble_sample: unknown domain kind");
}

}  // namespace ucland
