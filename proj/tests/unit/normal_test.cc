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
#include "rpr2/normal.h"
#include "rpr2/quadrature.h"

namespace rpr2 {
namespace {

using testing::OracleBvn;
using testing::OracleCdf;
using testing::OracleProbit;

TEST(ProbitTest, Examples) {
  EXPECT_EQ(Probit(0.5), 0.0);
  EXPECT_NEAR(Probit(0.975), OracleProbit(0.975), 1e-9);
  EXPECT_NEAR(Probit(0.975), 1.959964, 1e-6);
  EXPECT_NEAR(Probit(OracleCdf(1.0)), 1.0, 1e-12);
  EXPECT_NEAR(Probit(0.8413447), 1.0, 1e-6);
  EXPECT_THROW(Probit(0.0), DomainError);
  EXPECT_THROW(Probit(1.0), DomainError);
  EXPECT_THROW(Probit(NAN), DomainError);
}

TEST(ProbitTest, AgreesWithBisectionAcrossRange) {
  for (double p : {1e-300, 1e-20, 1e-8, 1e-3, 0.02425, 0.1, 0.3, 0.49, 0.51,
                   0.7, 0.97575, 0.999, 1 - 1e-8}) {
    const double x = Probit(p);
    EXPECT_NEAR(x, OracleProbit(p), 1e-9 * std::max(1.0, std::abs(x))) << p;
  }
}

TEST(EqualProbGridTest, Examples) {
  EXPECT_EQ(EqualProbGrid(2), std::vector<double>{0.0});
  const auto g4 = EqualProbGrid(4);
  ASSERT_EQ(g4.size(), 3u);
  EXPECT_NEAR(g4[0], -0.6745, 1e-4);
  EXPECT_EQ(g4[1], 0.0);
  EXPECT_NEAR(g4[2], 0.6745, 1e-4);
  const auto g3 = EqualProbGrid(3);
  EXPECT_NEAR(g3[0], -0.4307, 1e-4);
  EXPECT_NEAR(g3[1], 0.4307, 1e-4);
  EXPECT_THROW(EqualProbGrid(1), DomainError);
}

TEST(EqualProbGridTest, AntisymmetricIncreasingEqualMass) {
  for (int n : {5, 100, 601}) {
    const auto a = EqualProbGrid(n);
    ASSERT_EQ(static_cast<int>(a.size()), n - 1);
    for (int i = 0; i + 1 < n - 1; ++i) EXPECT_LT(a[i], a[i + 1]);
    for (int i = 0; i < n - 1; ++i) {
      EXPECT_EQ(a[i], -a[n - 2 - i]);
      EXPECT_NEAR(OracleCdf(a[i]), (i + 1.0) / n, 1e-13);
    }
  }
}

TEST(BivariateTest, Examples) {
  const double inf = INFINITY;
  EXPECT_NEAR(BinormalRect(0.0, 0, inf, 0, inf), 0.25, 1e-15);
  EXPECT_NEAR(BinormalRect(1.0, 0, inf, -inf, 0), 0.0, 1e-15);
  EXPECT_NEAR(BinormalRect(0.5, 0, inf, 0, inf), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(BinormalRect(-1.0, 0, inf, -inf, 0), 0.5, 1e-15);
  EXPECT_THROW(BinormalRect(0.2, 1, 0, 0, 1), DomainError);
}

TEST(BivariateTest, OrthantIdentity) {
  for (double rho = -0.99; rho < 1.0; rho += 0.03) {
    EXPECT_NEAR(BivariateNormalCdf(0, 0, rho),
                0.25 + std::asin(rho) / (2 * std::numbers::pi), 1e-14);
  }
}

TEST(BivariateTest, AgreesWithOneDimensionalIntegral) {
  std::mt19937_64 eng(1);
  std::uniform_real_distribution<double> lim(-4.0, 4.0);
  for (double rho : {-0.999, -0.95, -0.7, -0.3, 0.0, 0.2, 0.6, 0.93, 0.9995}) {
    for (int t = 0; t < 20; ++t) {
      const double h = lim(eng);
      const double k = lim(eng);
      EXPECT_NEAR(BivariateNormalCdf(h, k, rho), OracleBvn(h, k, rho), 1e-12)
          << h << " " << k << " " << rho;
    }
  }
}

TEST(BivariateTest, Limits) {
  EXPECT_NEAR(BivariateNormalCdf(INFINITY, 0.3, 0.4), OracleCdf(0.3), 1e-15);
  EXPECT_EQ(BivariateNormalCdf(-INFINITY, 0.3, 0.4), 0.0);
  EXPECT_NEAR(BivariateNormalCdf(0.2, 0.5, 1.0), OracleCdf(0.2), 1e-15);
  EXPECT_NEAR(BivariateNormalCdf(0.2, 0.5, -1.0),
              std::max(0.0, OracleCdf(0.2) - OracleCdf(-0.5)), 1e-15);
}

TEST(BivariateTest, RectanglesSumToOne) {
  const std::vector<double> e{-INFINITY, -1.0, 0.0, 0.5, INFINITY};
  for (double rho : {-0.8, 0.1, 0.9}) {
    double total = 0.0;
    for (size_t i = 0; i + 1 < e.size(); ++i) {
      for (size_t j = 0; j + 1 < e.size(); ++j) {
        const double p = BinormalRect(rho, e[i], e[i + 1], e[j], e[j + 1]);
        EXPECT_GE(p, -1e-16);
        total += p;
      }
    }
    EXPECT_NEAR(total, 1.0, 1e-13);
  }
}

TEST(GaussLegendreTest, IntegratesPolynomialsExactly) {
  std::vector<double> x;
  std::vector<double> w;
  GaussLegendre(10, &x, &w);
  ASSERT_EQ(x.size(), 10u);
  for (int p = 0; p < 20; ++p) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], p);
    EXPECT_NEAR(s, p % 2 ? 0.0 : 2.0 / (p + 1), 1e-14) << p;
  }
}

TEST(QuadratureTest, BreaksAndSmoothIntegrands) {
  EXPECT_NEAR(Integrate([](double x) { return std::exp(x); }, 0, 1),
              std::numbers::e - 1, 1e-14);
  auto step = [](double x) { return x < 0.3 ? 1.0 : 2.0; };
  EXPECT_NEAR(Integrate(step, 0, 1, {0.3}), 0.3 + 1.4, 1e-14);
  auto pdf = [](double x) { return testing::OraclePdf(x); };
  EXPECT_NEAR(Integrate(pdf, -10, 10), 1.0, 1e-14);
}

}  // namespace
}  // namespace rpr2
