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

#include <cstdint>
#include <random>

#include "ucland/domains.hpp"
#include "ucland/matrix.hpp"

namespace ucland {

// Counter-based stream splitting: (seed, stream_id) fully determines a
// random sequence, so parallel trials reproduce bit-for-bit on the same
// build regardless of scheduling.
struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  SeededStream substream(std::uint64_t tag) const;
};

class RandomSource {
 public:
  explicit RandomSource(const SeededStream& stream);

  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  Complex complex_gaussian();

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

// Haar-distributed U(n): QR of a complex Ginibre matrix with the triangular
// factor's diagonal phases divided out.
ComplexMatrix haar_unitary(int n, const SeededStream& stream);

// U^T U for Haar U: the circular orthogonal ensemble on the symmetric domain.
DomainPoint coe_sample(int n, const SeededStream& stream);

// U^R U for Haar U in U(2n): the circular symplectic ensemble on the
// self-dual domain (eigenphases doubled).
DomainPoint cse_sample(int n, const SeededStream& stream);

// Stabilizer-group rotation for the domain: Haar SO(N) (symmetric),
// Haar Sp(2N) via Kramers-pair Gram-Schmidt (self-dual), Haar U(N) (full).
ComplexMatrix random_rotation(const LandscapeDomain& domain,
                              const SeededStream& stream);

// Uniform direction on the chart sphere of the given norm, as coordinates.
RealVector random_tangent(const TangentChart& chart, const SeededStream& stream,
                          double norm);

// The domain's natural random start for optimization trials
// (COE / CSE / Haar per kind).
DomainPoint ensemble_sample(const LandscapeDomain& domain, const SeededStream& stream);

}  // namespace ucland
