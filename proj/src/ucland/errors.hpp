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

#include <stdexcept>
#include <string>

namespace ucland {

// Wrong matrix or vector shape (odd size where even is required, mismatched
// operands, out-of-range block index).
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a structural precondition (not unitary, not symmetric, not
// self-dual, invalid rotation, off-manifold point).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A computation failed to meet its accuracy contract (factorization residual,
// unpaired eigenphase, exhausted line search, non-converging projection).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Gradient says critical but the eigenphases are not near multiples of pi.
class InconsistentCriticalPoint : public NumericalError {
 public:
  explicit InconsistentCriticalPoint(const std::string& what)
      : NumericalError(what) {}
};

// Report or table output could not be written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ucland
