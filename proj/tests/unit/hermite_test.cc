// Copyright 2026 The rpr2 Authors
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
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rpr2/errors.h"
#include "rpr2/hermite.h"
#include "rpr2/moments.h"

namespace rpr2 {
namespace {

using testing::OracleIntegrate;
using testing::OraclePdf;

// m_l(K_n) by the recursion on whether vertex n is matched.
double MatchingsRec(int l, int n) {
  if (l == 0) return 1.0;
  if (n < 2) return 0.0;
  return MatchingsRec(l, n - 1) + (n - 1) * MatchingsRec(l - 1, n - 2);
}

// Distance from p to the closed polyline through pts.
double PolylineDistance(const std::vector<BoundaryPoint>& pts, double x, double y) {
  double best = INFINITY;
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    const double dx = b.c1 - a.c1;
    const double dy = b.c3 - a.c3;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((x - a.c1) * dx + (y - a.c3) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::hypot(a.c1 + t * dx - x, a.c3 + t * dy - y));
  }
  return best;
}

TEST(MatchingsTest, Examples) {
  EXPECT_EQ(MatchingsCount(0, 7), 1.0);
  EXPECT_EQ(MatchingsCount(1, 3), 3.0);
  EXPECT_EQ(MatchingsCount(2, 4), 3.0);
  EXPECT_EQ(MatchingsCount(3, 5), 0.0);
  for (int n = 0; n <= 20; ++n) {
    for (int l = 0; 2 * l <= n; ++l) EXPECT_EQ(MatchingsCount(l, n), MatchingsRec(l, n));
  }
}

TEST(HermitePolyTest, Examples) {
  const HermitePoly h1(1);
  EXPECT_EQ(h1(0.7), 0.7);
  const HermitePoly h2(2);
  EXPECT_NEAR(h2(1.5), (1.5 * 1.5 - 1.0) / std::sqrt(2.0), 1e-15);
  const HermitePoly h3(3);
  EXPECT_NEAR(h3(1.0), -2.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(h3(1.0), -0.8165, 1e-4);
  EXPECT_EQ(h3.integer_coeffs(), (std::vector<double>{0, -3, 0, 1}));
  EXPECT_NEAR(h3.scale(), 1.0 / std::sqrt(6.0), 1e-16);
  EXPECT_THROW(HermitePoly(-1), DomainError);
}

TEST(HermitePolyTest, ParityAndRecurrence) {
  for (int n = 0; n <= 12; ++n) {
    const HermitePoly h(n);
    const auto& c = h.integer_coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
      if ((j + n) % 2) EXPECT_EQ(c[j], 0.0);
    }
    for (double x : {-2.3, -0.4, 0.0, 1.1, 3.0}) {
      EXPECT_NEAR(h(-x), (n % 2 ? -1.0 : 1.0) * h(x), 1e-12);
      EXPECT_NEAR(h(x), HermiteValues(12, x)[n], 1e-10 * std::max(1.0, std::abs(h(x))));
    }
  }
}

TEST(HermitePolyTest, Orthonormal) {
  for (int i = 0; i <= 9; ++i) {
    for (int j = 0; j <= i; ++j) {
      const HermitePoly hi(i);
      const HermitePoly hj(j);
      const double v = OracleIntegrate(
          [&](double x) { return hi(x) * hj(x) * OraclePdf(x); }, -12.0, 12.0, {0.0});
      EXPECT_NEAR(v, i == j ? 1.0 : 0.0, 1e-8) << i << "," << j;
    }
  }
}

TEST(HermiteCoeffsTest, Examples) {
  const auto c = HermiteCoeffs(StepFunction::Sign(), 5);
  EXPECT_NEAR(c[1], std::sqrt(2.0 / std::numbers::pi), 1e-14);
  EXPECT_NEAR(c[1], 0.7979, 1e-4);
  for (int i = 0; i <= 4; i += 2) EXPECT_NEAR(c[i], 0.0, 1e-10);
}

TEST(HermiteCoeffsTest, MatchQuadrature) {
  std::mt19937_64 eng(1);
  for (int t = 0; t < 10; ++t) {
    const StepFunction f = testing::RandomOddStep(eng, 5);
    const auto c = HermiteCoeffs(f, 15);
    std::vector<double> breaks{0.0};
    for (double a : f.breakpoints()) {
      breaks.push_back(a);
      breaks.push_back(-a);
    }
    for (int i = 0; i <= 15; ++i) {
      const HermitePoly h(i);
      const double q = OracleIntegrate(
          [&](double x) { return f(x) * h(x) * OraclePdf(x); }, -12.0, 12.0, breaks);
      EXPECT_NEAR(c[i], q, 1e-10) << i;
    }
  }
}

// Bessel's inequality holds at every truncation and the gap shrinks with
// the degree. Step functions converge slowly, so there is no small fixed
// gap at degree 41.
TEST(HermiteCoeffsTest, BesselAndShrinkingGap) {
  std::mt19937_64 eng(2);
  for (int t = 0; t < 10; ++t) {
    const StepFunction f = testing::RandomOddStep(eng, 4);
    const double norm = f.GaussianMoment(2);
    EXPECT_LE(norm, 1.0);
    double prev_gap = INFINITY;
    for (int deg : {11, 41, 161}) {
      double s = 0.0;
      for (double c : HermiteCoeffs(f, deg)) s += c * c;
      EXPECT_LE(s, norm + 1e-12);
      EXPECT_LE(norm - s, prev_gap + 1e-12);
      prev_gap = norm - s;
    }
  }
}

TEST(DampedTest, IdentityZeroAndReconstruction) {
  const StepFunction sign = StepFunction::Sign();
  const auto c = HermiteCoeffs(sign, 41);
  EXPECT_EQ(DampedCoeffs(c, 1.0), c);
  for (double v : DampedCoeffs(c, 0.0)) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(DampedCoeffs(c, 1.5), DomainError);
  const auto d = DampedCoeffs(c, 0.5);
  EXPECT_NEAR(HermiteSeries(d, 1.0), NoiseOperator(sign, 0.5, 1.0), 1e-4);

  std::mt19937_64 eng(3);
  const StepFunction f = testing::RandomOddStep(eng, 4);
  const auto e = DampedCoeffs(HermiteCoeffs(f, 41), 0.6);
  for (int i = 0; i < 20; ++i) {
    const double x = -3.0 + 6.0 * i / 19.0;
    EXPECT_NEAR(HermiteSeries(e, x), NoiseOperator(f, 0.6, x), 1e-4) << x;
  }
}

TEST(ExtremePointTest, Examples) {
  const ExtremePoint s = MaxCoeffExtremePoint({1.0, 0.0});
  EXPECT_EQ(s.f.breakpoints().size(), 0u);
  EXPECT_EQ(s.f.values(), std::vector<double>{1.0});
  EXPECT_NEAR(s.coeffs[0], std::sqrt(2.0 / std::numbers::pi), 1e-14);
  EXPECT_NEAR(s.coeffs[1], HermiteCoeffs(StepFunction::Sign(), 3)[3], 1e-14);

  const ExtremePoint h = MaxCoeffExtremePoint({0.0, 1.0});
  ASSERT_EQ(h.roots.size(), 1u);
  EXPECT_NEAR(h.roots[0], std::sqrt(3.0), 1e-12);
  EXPECT_EQ(h.f.values(), (std::vector<double>{-1.0, 1.0}));

  EXPECT_THROW(MaxCoeffExtremePoint({0.0, 0.0}), DomainError);
}

TEST(ExtremePointTest, MaximizesLinearFunctional) {
  std::mt19937_64 eng(4);
  std::normal_distribution<double> n;
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> alpha{n(eng), n(eng), n(eng)};
    const ExtremePoint e = MaxCoeffExtremePoint(alpha);
    EXPECT_LE(static_cast<int>(e.roots.size()), 3);
    EXPECT_LE(e.f.num_breakpoints(), 3);
    double best = 0.0;
    for (int i = 0; i < 3; ++i) best += alpha[i] * e.coeffs[i];
    for (int s = 0; s < 200; ++s) {
      const auto c = HermiteCoeffs(testing::RandomOddStep(eng, 5), 5);
      EXPECT_LE(alpha[0] * c[1] + alpha[1] * c[3] + alpha[2] * c[5], best + 1e-12);
    }
  }
}

TEST(BoundaryTest, ContainsConjecturedOptimum) {
  const auto pts = P2Boundary(720);
  ASSERT_EQ(pts.size(), 720u);
  const auto c = HermiteCoeffs(StepFunction({2.27519364977}, {-1.0, 1.0}), 3);
  EXPECT_LT(PolylineDistance(pts, c[1], c[3]), 1e-3);
  // Its outward normal points to smaller c1 and larger c3, so no step
  // function beats it on both.
  std::mt19937_64 eng(5);
  for (int t = 0; t < 10000; ++t) {
    const auto r = HermiteCoeffs(testing::RandomOddStep(eng, 4, false, t % 2 == 0), 3);
    EXPECT_FALSE(r[1] < c[1] - 1e-12 && r[3] > c[3] + 1e-12);
  }
}

TEST(BoundaryTest, SymmetricUnderNegation) {
  const auto pts = P2Boundary(8);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(pts[i].c1, -pts[i + 4].c1, 1e-12);
    EXPECT_NEAR(pts[i].c3, -pts[i + 4].c3, 1e-12);
  }
}

}  // namespace
}  // namespace rpr2
