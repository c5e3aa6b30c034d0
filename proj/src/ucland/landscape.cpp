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

#include "ucland/landscape.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ucland/errors.hpp"

namespace ucland {

namespace {

void require_same_size(const ComplexMatrix& a, const ComplexMatrix& b,
                       const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(who) + ": operand sizes differ");
  }
}

void require_valid_n(const LandscapeDomain& domain, int n_plus, const char* who) {
  if (n_plus < 0 || n_plus > domain.n) {
    throw DomainError(std::string(who) + ": n must lie in [0, N], got " +
                      std::to_string(n_plus));
  }
}

// +1 for the first n_plus slots, -1 for the rest.
RealVector sign_pattern(int n, int n_plus) {
  RealVector w(n);
  for (int k = 0; k < n; ++k) w[k] = k < n_plus ? 1.0 : -1.0;
  return w;
}

void check_rotation(const LandscapeDomain& domain, const ComplexMatrix& x,
                    const char* who) {
  const int size = domain.matrix_size();
  if (x.rows() != size || x.cols() != size) {
    throw DimensionError(std::string(who) + ": rotation size does not match the domain");
  }
  constexpr double tol = 1e-8;
  switch (domain.kind) {
    case DomainKind::SymmetricUnitary: {
      if (!is_real(x, tol) || !is_unitary(x, tol)) {
        throw DomainError(std::string(who) + ": rotation must be real orthogonal");
      }
      if (x.real().determinant() < 0) {
        throw DomainError(std::string(who) + ": rotation must have determinant +1");
      }
      break;
    }
    case DomainKind::SelfDualUnitary: {
      if (!is_unitary(x, tol) || !is_quaternion_real(x, tol)) {
        throw DomainError(std::string(who) + ": rotation must be unitary symplectic");
      }
      break;
    }
    case DomainKind::FullUnitary: {
      if (!is_unitary(x, tol)) {
        throw DomainError(std::string(who) + ": rotation must be unitary");
      }
      break;
    }
  }
}

}  // namespace

TargetTransformation make_target(const DomainPoint& w) {
  if (!contains(w.domain, w.matrix, 1e-8)) {
    throw DomainError("make_target: target is off the domain");
  }
  return TargetTransformation{w};
}

double j_metric(const ComplexMatrix& s, const ComplexMatrix& w) {
  require_same_size(s, w, "j_metric");
  return trace_product(w.adjoint(), s).real();
}

double j_canonical(const ComplexMatrix& s) {
  if (s.rows() != s.cols()) throw DimensionError("j_canonical: matrix must be square");
  return s.trace().real();
}

double metric_distance_squared(const DomainPoint& s, const TargetTransformation& w) {
  require_same_size(s.matrix, w.point.matrix, "metric_distance_squared");
  const double size = static_cast<double>(s.matrix.rows());
  return 2.0 * size - 2.0 * j_metric(s.matrix, w.point.matrix);
}

DomainPoint reduce_to_canonical(const DomainPoint& s, const TargetTransformation& w) {
  require_same_size(s.matrix, w.point.matrix, "reduce_to_canonical");
  const DomainPoint w_adj{w.point.domain, w.point.matrix.adjoint()};
  const ComplexMatrix r = principal_sqrt(w_adj).matrix;
  return DomainPoint{s.domain, r * s.matrix * r};
}

std::vector<double> critical_values(const LandscapeDomain& domain) {
  const double scale = domain.kind == DomainKind::SelfDualUnitary ? 2.0 : 1.0;
  std::vector<double> values;
  values.reserve(domain.n + 1);
  for (int n = 0; n <= domain.n; ++n) {
    values.push_back(scale * (2.0 * n - domain.n));
  }
  return values;
}

CriticalPointSpec identity_critical_spec(const LandscapeDomain& domain, int n_plus) {
  require_valid_n(domain, n_plus, "identity_critical_spec");
  const int size = domain.matrix_size();
  return CriticalPointSpec{domain, n_plus, ComplexMatrix::Identity(size, size)};
}

DomainPoint make_critical_point(const CriticalPointSpec& spec) {
  const char* who = "make_critical_point";
  require_valid_n(spec.domain, spec.n_plus, who);
  check_rotation(spec.domain, spec.rotation, who);
  const int n = spec.domain.n;
  const RealVector w = sign_pattern(n, spec.n_plus);
  ComplexMatrix m;
  switch (spec.domain.kind) {
    case DomainKind::SymmetricUnitary: {
      const RealMatrix x = spec.rotation.real();
      m = (x.transpose() * w.asDiagonal() * x).cast<Complex>();
      break;
    }
    case DomainKind::SelfDualUnitary: {
      RealVector w2(2 * n);
      w2 << w, w;
      m = symplectic_dual(spec.rotation) * w2.cast<Complex>().asDiagonal() *
          spec.rotation;
      break;
    }
    case DomainKind::FullUnitary: {
      m = spec.rotation.adjoint() * w.cast<Complex>().asDiagonal() * spec.rotation;
      break;
    }
  }
  return DomainPoint{spec.domain, std::move(m)};
}

RealVector gradient_canonical(const DomainPoint& point) {
  return gradient_canonical(point, standard_tangent_chart(point));
}

RealVector gradient_canonical(const DomainPoint& point, const TangentChart& chart) {
  RealVector g(chart.dim());
  for (int k = 0; k < chart.dim(); ++k) {
    g[k] = -trace_product(chart.basis[k], point.matrix).imag();
  }
  return g;
}

RealVector gradient_metric(const DomainPoint& point, const TargetTransformation& w,
                           const TangentChart& chart) {
  require_same_size(point.matrix, w.point.matrix, "gradient_metric");
  const ComplexMatrix r = principal_sqrt(point).matrix;
  const ComplexMatrix m = r * w.point.matrix.adjoint() * r;
  RealVector g(chart.dim());
  for (int k = 0; k < chart.dim(); ++k) {
    g[k] = -trace_product(chart.basis[k], m).imag();
  }
  return g;
}

std::optional<int> classify_critical_point(const DomainPoint& point, double tol) {
  constexpr double pi = std::numbers::pi;
  constexpr double band = 0.1;
  const double grad_norm = gradient_canonical(point).norm();
  if (grad_norm > tol) return std::nullopt;

  RealVector phases;
  switch (point.domain.kind) {
    case DomainKind::SymmetricUnitary:
      phases = factor_symmetric_unitary(point.matrix).phases;
      break;
    case DomainKind::SelfDualUnitary:
      phases = factor_self_dual_unitary(point.matrix).phases;
      break;
    case DomainKind::FullUnitary:
      phases = factor_unitary(point.matrix).phases;
      break;
  }

  int n_plus = 0;
  for (int k = 0; k < phases.size(); ++k) {
    const double m = std::round(phases[k] / pi);
    if (std::abs(phases[k] - m * pi) > band) {
      std::ostringstream os;
      os << "classify_critical_point: gradient norm " << grad_norm
         << " is below tolerance but eigenphase " << phases[k]
         << " is not near a multiple of pi";
      throw InconsistentCriticalPoint(os.str());
    }
    if (static_cast<long long>(std::llround(m)) % 2 == 0) ++n_plus;
  }
  return n_plus;
}

}  // namespace ucland
