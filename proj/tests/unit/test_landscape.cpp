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

#include <cmath>

#include <doctest.h>

#include "ucland/errors.hpp"
#include "ucland/landscape.hpp"
#include "ucland/sampling.hpp"

namespace {

using namespace ucland;

// Finite-difference directional derivative along the domain curve itself,
// an oracle independent of the analytic gradient's trace identities.
double fd_directional(const DomainPoint& point, const ComplexMatrix& a,
                      double h) {
  const double fp = j_canonical(curve(point, a, h).matrix);
  const double fm = j_canonical(curve(point, a, -h).matrix);
  return (fp - fm) / (2 * h);
}

double fd_directional_metric(const DomainPoint& point,
                             const TargetTransformation& w,
                             const ComplexMatrix& a, double h) {
  const double fp = j_metric(curve(point, a, h).matrix, w.point.matrix);
  const double fm = j_metric(curve(point, a, -h).matrix, w.point.matrix);
  return (fp - fm) / (2 * h);
}

}  // namespace

TEST_SUITE("landscape") {

TEST_CASE("objectives and the distance identity") {
  const LandscapeDomain sym = symmetric_domain(4);
  const DomainPoint s = ensemble_sample(sym, SeededStream{5, 0});
  const DomainPoint w = ensemble_sample(sym, SeededStream{5, 1});
  CHECK(j_canonical(s.matrix) ==
        doctest::Approx(s.matrix.trace().real()).epsilon(1e-14));
  CHECK(j_metric(s.matrix, ComplexMatrix::Identity(4, 4)) ==
        doctest::Approx(j_canonical(s.matrix)).epsilon(1e-14));
  const double direct = (s.matrix - w.matrix).squaredNorm();
  CHECK(metric_distance_squared(s, make_target(w)) ==
        doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("reduction to canonical form preserves the objective") {
  for (const LandscapeDomain& domain :
       {symmetric_domain(4), self_dual_domain(2), full_domain(3)}) {
    const DomainPoint s = ensemble_sample(domain, SeededStream{9, 0});
    const DomainPoint w = ensemble_sample(domain, SeededStream{9, 1});
    const TargetTransformation target = make_target(w);
    const DomainPoint reduced = reduce_to_canonical(s, target);
    CHECK(domain_residual(domain, reduced.matrix) < 1e-11);
    CHECK(j_canonical(reduced.matrix) ==
          doctest::Approx(j_metric(s.matrix, w.matrix)).epsilon(1e-12));
    // W reduces to the identity.
    const DomainPoint wr = reduce_to_canonical(w, target);
    const int size = domain.matrix_size();
    CHECK(max_abs_diff(wr.matrix, ComplexMatrix::Identity(size, size)) < 1e-11);
  }
}

TEST_CASE("critical values are the frozen ascending lists") {
  const auto sym4 = critical_values(symmetric_domain(4));
  const std::vector<double> expect_sym{-4, -2, 0, 2, 4};
  REQUIRE(sym4.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(sym4[i] == expect_sym[i]);

  const auto sympl2 = critical_values(self_dual_domain(2));
  const std::vector<double> expect_sympl{-4, 0, 4};
  REQUIRE(sympl2.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(sympl2[i] == expect_sympl[i]);

  const auto full3 = critical_values(full_domain(3));
  const std::vector<double> expect_full{-3, -1, 1, 3};
  REQUIRE(full3.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(full3[i] == expect_full[i]);

  const auto scalar = critical_values(symmetric_domain(1));
  REQUIRE(scalar.size() == 2);
  CHECK(scalar[0] == -1);
  CHECK(scalar[1] == 1);
}

TEST_CASE("constructed critical points are critical with the right value") {
  for (const LandscapeDomain& domain :
       {symmetric_domain(4), self_dual_domain(2), full_domain(3)}) {
    const auto values = critical_values(domain);
    for (int n = 0; n <= domain.n; ++n) {
      const ComplexMatrix rot =
          random_rotation(domain, SeededStream{17, static_cast<std::uint64_t>(n)});
      const DomainPoint point =
          make_critical_point(CriticalPointSpec{domain, n, rot});
      CHECK(domain_residual(domain, point.matrix) < 1e-12);
      CHECK(gradient_canonical(point).norm() < 1e-12);
      CHECK(j_canonical(point.matrix) ==
            doctest::Approx(values[n]).epsilon(1e-13));
      const auto cls = classify_critical_point(point, 1e-10);
      REQUIRE(cls.has_value());
      CHECK(*cls == n);
    }
    // Identity-rotation specs hit the same values.
    const DomainPoint top =
        make_critical_point(identity_critical_spec(domain, domain.n));
    const int size = domain.matrix_size();
    CHECK(max_abs_diff(top.matrix, ComplexMatrix::Identity(size, size)) <
          1e-13);
  }
}

TEST_CASE("critical point construction rejects bad inputs") {
  const LandscapeDomain sym = symmetric_domain(3);
  CHECK_THROWS_AS(
      make_critical_point(CriticalPointSpec{sym, 4, RealMatrix::Identity(3, 3)
                                                        .cast<Complex>()}),
      DomainError);
  CHECK_THROWS_AS(
      make_critical_point(CriticalPointSpec{sym, -1, RealMatrix::Identity(3, 3)
                                                         .cast<Complex>()}),
      DomainError);
  // Non-orthogonal rotation.
  ComplexMatrix skew = ComplexMatrix::Identity(3, 3);
  skew(0, 1) = 0.5;
  CHECK_THROWS_AS(make_critical_point(CriticalPointSpec{sym, 1, skew}),
                  DomainError);
  // Complex rotation where a real one is required.
  ComplexMatrix cplx = ComplexMatrix::Identity(3, 3) * Complex(0, 1);
  CHECK_THROWS_AS(make_critical_point(CriticalPointSpec{sym, 1, cplx}),
                  DomainError);
}

TEST_CASE("analytic gradients match the curve finite difference") {
  for (const LandscapeDomain& domain :
       {symmetric_domain(4), self_dual_domain(2), full_domain(3)}) {
    const DomainPoint point = ensemble_sample(domain, SeededStream{33, 0});
    const TangentChart chart = standard_tangent_chart(point);
    const RealVector g = gradient_canonical(point, chart);
    const DomainPoint w = ensemble_sample(domain, SeededStream{33, 1});
    const TargetTransformation target = make_target(w);
    const RealVector gm = gradient_metric(point, target, chart);
    for (int k : {0, chart.dim() / 2, chart.dim() - 1}) {
      RealVector coords = RealVector::Zero(chart.dim());
      coords[k] = 1.0;
      const ComplexMatrix a = chart.direction(coords);
      const double fd = fd_directional(point, a, 1e-5);
      CHECK(g[k] == doctest::Approx(fd).epsilon(1e-6));
      const double fdm = fd_directional_metric(point, target, a, 1e-5);
      CHECK(gm[k] == doctest::Approx(fdm).epsilon(1e-6));
    }
    // Identity target makes both gradients coincide.
    const int size = domain.matrix_size();
    const TargetTransformation id = make_target(make_domain_point(
        domain, ComplexMatrix::Identity(size, size)));
    const RealVector gid = gradient_metric(point, id, chart);
    CHECK((gid - g).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("the identity target collapses the metric landscape onto the "
          "canonical one") {
  const LandscapeDomain sym = symmetric_domain(3);
  const TargetTransformation id = make_target(
      make_domain_point(sym, ComplexMatrix::Identity(3, 3)));
  const DomainPoint s = ensemble_sample(sym, SeededStream{45, 0});
  CHECK(max_abs_diff(reduce_to_canonical(s, id).matrix, s.matrix) < 1e-14);
  CHECK(j_metric(s.matrix, id.point.matrix) ==
        doctest::Approx(j_canonical(s.matrix)).epsilon(1e-14));
  const auto values = critical_values(sym);
  for (int n = 0; n <= sym.n; ++n) {
    const ComplexMatrix rot =
        random_rotation(sym, SeededStream{46, static_cast<std::uint64_t>(n)});
    const DomainPoint point =
        make_critical_point(CriticalPointSpec{sym, n, rot});
    const TangentChart chart = standard_tangent_chart(point);
    CHECK(gradient_metric(point, id, chart).norm() < 1e-12);
    CHECK(j_metric(point.matrix, id.point.matrix) ==
          doctest::Approx(values[n]).epsilon(1e-13));
  }
}

TEST_CASE("scalar symmetric case: J = cos(phi), gradient = -sin(phi)") {
  const LandscapeDomain sym = symmetric_domain(1);
  const double phi = 0.83;
  ComplexMatrix s(1, 1);
  s(0, 0) = std::polar(1.0, phi);
  const DomainPoint point = make_domain_point(sym, s);
  CHECK(j_canonical(point.matrix) == doctest::Approx(std::cos(phi)));
  const RealVector g = gradient_canonical(point);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == doctest::Approx(-std::sin(phi)).epsilon(1e-12));
}

TEST_CASE("classification separates critical from generic points") {
  const LandscapeDomain sym = symmetric_domain(4);
  const DomainPoint generic = ensemble_sample(sym, SeededStream{51, 0});
  CHECK(!classify_critical_point(generic, 1e-8).has_value());
  // An enormous tolerance lets the gradient gate pass at a generic point,
  // where the phase bands then expose the inconsistency.
  CHECK_THROWS_AS(classify_critical_point(generic, 1e3),
                  InconsistentCriticalPoint);
}

}  // TEST_SUITE
