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

#include "ucland/hessian.hpp"

#include <algorithm>
#include <cmath>

#include "ucland/errors.hpp"

namespace ucland {

namespace {

void require_valid_n(const LandscapeDomain& domain, int n_plus, const char* who) {
  if (n_plus < 0 || n_plus > domain.n) {
    throw DomainError(std::string(who) + ": n must lie in [0, N], got " +
                      std::to_string(n_plus));
  }
}

int components_per_pair(const LandscapeDomain& domain) {
  switch (domain.kind) {
    case DomainKind::SymmetricUnitary:
      return 1;
    case DomainKind::SelfDualUnitary:
      return 4;
    case DomainKind::FullUnitary:
      return 2;
  }
  throw DomainError("components_per_pair: unknown domain kind");
}

// Value of Jc on the curve through S with generator A: Re Tr(e^{iA} S),
// by cyclicity of the trace (the square roots cancel).
double curve_value(const ComplexMatrix& effective, const ComplexMatrix& a,
                   GeneratorStructure structure) {
  const ComplexMatrix e = exp_i_generator(a, 1.0, structure);
  return trace_product(e, effective).real();
}

RealMatrix hessian_of_trace(const ComplexMatrix& effective,
                            const TangentChart& chart, double h) {
  if (h < 1e-6 || h > 1e-2) {
    throw DomainError("numerical_hessian: step h must lie in [1e-6, 1e-2]");
  }
  const GeneratorStructure structure = chart.base.domain.generator_structure();
  const int dim = chart.dim();
  const double f0 = effective.trace().real();
  RealMatrix out(dim, dim);
  for (int a = 0; a < dim; ++a) {
    const ComplexMatrix& aa = chart.basis[a];
    const double fp = curve_value(effective, h * aa, structure);
    const double fm = curve_value(effective, -h * aa, structure);
    out(a, a) = (fp - 2.0 * f0 + fm) / (h * h);
    for (int b = a + 1; b < dim; ++b) {
      const ComplexMatrix& ab = chart.basis[b];
      const double fpp = curve_value(effective, h * aa + h * ab, structure);
      const double fpm = curve_value(effective, h * aa - h * ab, structure);
      const double fmp = curve_value(effective, -h * aa + h * ab, structure);
      const double fmm = curve_value(effective, -h * aa - h * ab, structure);
      const double mixed = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      out(a, b) = mixed;
      out(b, a) = mixed;
    }
  }
  return ((out + out.transpose()) / 2.0).eval();
}

}  // namespace

QuadraticFormDiagonal hqf_at_critical(const CriticalPointSpec& spec) {
  require_valid_n(spec.domain, spec.n_plus, "hqf_at_critical");
  const int n = spec.domain.n;
  const int comps = components_per_pair(spec.domain);
  QuadraticFormDiagonal q{spec.domain, {}};
  q.terms.reserve(domain_dim(spec.domain));
  auto sign = [&](int k) { return k < spec.n_plus ? 1.0 : -1.0; };
  for (int i = 0; i < n; ++i) {
    q.terms.push_back(HqfTerm{i, i, 0, -sign(i)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int c = 0; c < comps; ++c) {
        q.terms.push_back(HqfTerm{i, j, c, -(sign(i) + sign(j))});
      }
    }
  }
  return q;
}

RealVector chart_diagonal(const QuadraticFormDiagonal& q) {
  RealVector d(q.terms.size());
  for (std::size_t k = 0; k < q.terms.size(); ++k) {
    const HqfTerm& t = q.terms[k];
    d[static_cast<int>(k)] = t.i == t.j ? t.coefficient : t.coefficient / 2.0;
  }
  return d;
}

std::vector<double> chart_spectrum(const QuadraticFormDiagonal& q) {
  const RealVector d = chart_diagonal(q);
  std::vector<double> s(d.data(), d.data() + d.size());
  std::sort(s.begin(), s.end());
  return s;
}

RealMatrix numerical_hessian(const DomainPoint& point, const TangentChart& chart,
                             double h) {
  if (!contains(point.domain, point.matrix, 1e-8)) {
    throw DomainError("numerical_hessian: point is off the domain");
  }
  return hessian_of_trace(point.matrix, chart, h);
}

RealMatrix numerical_hessian_metric(const DomainPoint& point,
                                    const TargetTransformation& w,
                                    const TangentChart& chart, double h) {
  if (!contains(point.domain, point.matrix, 1e-8)) {
    throw DomainError("numerical_hessian_metric: point is off the domain");
  }
  if (point.matrix.rows() != w.point.matrix.rows()) {
    throw DimensionError("numerical_hessian_metric: target size mismatch");
  }
  const ComplexMatrix r = principal_sqrt(point).matrix;
  const ComplexMatrix effective = r * w.point.matrix.adjoint() * r;
  return hessian_of_trace(effective, chart, h);
}

HessianSignature signature(const RealMatrix& h, double zero_tol) {
  if (h.rows() != h.cols()) throw DimensionError("signature: matrix must be square");
  if (h.size() > 0 && (h - h.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw DomainError("signature: matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("signature: eigensolver failed");
  const RealVector lam = es.eigenvalues();
  const double lam_max = lam.size() > 0 ? lam.cwiseAbs().maxCoeff() : 0.0;
  const double threshold = zero_tol * std::max(1.0, lam_max);
  HessianSignature sig;
  for (int k = 0; k < lam.size(); ++k) {
    if (std::abs(lam[k]) < threshold) {
      ++sig.d_zero;
    } else if (lam[k] > 0) {
      ++sig.d_plus;
    } else {
      ++sig.d_minus;
    }
  }
  return sig;
}

HessianSignature closed_form_signature(const LandscapeDomain& domain, int n_plus) {
  require_valid_n(domain, n_plus, "closed_form_signature");
  const int n = n_plus;
  const int m = domain.n - n_plus;  // number of -1 eigenvalues (pairs)
  switch (domain.kind) {
    case DomainKind::SymmetricUnitary:
      return HessianSignature{(m * m + m) / 2, (n * n + n) / 2, n * m};
    case DomainKind::SelfDualUnitary:
      return HessianSignature{m * (2 * m - 1), n * (2 * n - 1), 4 * n * m};
    case DomainKind::FullUnitary:
      return HessianSignature{m * m, n * n, 2 * n * m};
  }
  throw DomainError("closed_form_signature: unknown domain kind");
}

HessianSignature published_signature(const LandscapeDomain& domain, int n_plus) {
  require_valid_n(domain, n_plus, "published_signature");
  if (domain.kind != DomainKind::SelfDualUnitary) {
    return closed_form_signature(domain, n_plus);
  }
  const int n = n_plus;
  const int m = domain.n - n_plus;
  return HessianSignature{2 * m * m + 2 * m, 2 * n * n + 2 * n,
                          4 * domain.n * m};
}

int grassmannian_dim(const LandscapeDomain& domain, int n_plus) {
  require_valid_n(domain, n_plus, "grassmannian_dim");
  const int n = n_plus;
  const int m = domain.n - n_plus;
  switch (domain.kind) {
    case DomainKind::SymmetricUnitary:
      return n * m;
    case DomainKind::SelfDualUnitary:
      return 4 * n * m;
    case DomainKind::FullUnitary:
      return 2 * n * m;
  }
  throw DomainError("grassmannian_dim: unknown domain kind");
}

}  // namespace ucland
