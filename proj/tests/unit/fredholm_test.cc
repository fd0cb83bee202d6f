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


#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rpr2/errors.h"
#include "rpr2/fredholm.h"
#include "rpr2/moments.h"
#include "rpr2/normal.h"

namespace rpr2 {
namespace {

using testing::OracleBvn;
using testing::OracleProbit;

const double kSignNae = (3.0 + 6.0 * std::asin(1.0 / 3.0) / std::numbers::pi) / 4.0;

HardDistribution NaeHard() {
  return {Problem::kNae3, 0.7381, -0.7420, Rho0Variant::kClamped};
}

// Cell [a_i, a_{i+1}) x [a_j, a_{j+1}) probability from the 1-D oracle.
double OracleCell(double rho, int n, int i, int j) {
  auto edge = [n](int k) -> double {
    if (k == 0) return -INFINITY;
    if (k == n) return INFINITY;
    return OracleProbit(static_cast<double>(k) / n);
  };
  auto cdf = [&](double h, double k) {
    if (h == -INFINITY || k == -INFINITY) return 0.0;
    return OracleBvn(h, k, rho);
  };
  const double x0 = edge(i), x1 = edge(i + 1), y0 = edge(j), y1 = edge(j + 1);
  return cdf(x1, y1) - cdf(x0, y1) - cdf(x1, y0) + cdf(x0, y0);
}

TEST(KernelMatrixTest, Examples) {
  const Eigen::MatrixXd z = KernelMatrix(0.0, 7);
  EXPECT_LT((z.array() - 1.0 / 49.0).abs().maxCoeff(), 1e-15);
  for (double rho : {-0.9, -0.3, 0.4, 0.8}) {
    const Eigen::MatrixXd m = KernelMatrix(rho, 2);
    const double want = 0.25 + std::asin(rho) / (2 * std::numbers::pi);
    EXPECT_NEAR(m(0, 0), want, 1e-14);
    EXPECT_NEAR(m(1, 1), want, 1e-14);
  }
  EXPECT_THROW(KernelMatrix(0.2, 1), DomainError);
}

TEST(KernelMatrixTest, MarginalsSymmetryAndOracle) {
  for (double rho : {-1.0, -0.742, -1.0 / 3.0, 0.5, 1.0}) {
    const int n = 40;
    const Eigen::MatrixXd m = KernelMatrix(rho, n);
    EXPECT_LT((m - m.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_GE(m.minCoeff(), -1e-16);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(m.row(i).sum(), 1.0 / n, 1e-13);
    EXPECT_NEAR(m.sum(), 1.0, 1e-12);
    // Central symmetry of the equal-mass grid.
    EXPECT_NEAR(m(3, 17), m(n - 4, n - 18), 1e-15);
    if (std::abs(rho) < 1.0) {
      for (auto [i, j] : {std::pair{0, 0}, {0, 39}, {5, 20}, {19, 20}, {33, 7}}) {
        EXPECT_NEAR(m(i, j), OracleCell(rho, n, i, j), 1e-12) << i << "," << j;
      }
    }
  }
}

TEST(KernelMatrixTest, DegenerateCorrelations) {
  const Eigen::MatrixXd p = KernelMatrix(1.0, 5);
  const Eigen::MatrixXd q = KernelMatrix(-1.0, 5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(p(i, j), i == j ? 0.2 : 0.0);
      EXPECT_EQ(q(i, j), i + j == 4 ? 0.2 : 0.0);
    }
  }
}

TEST(KernelMatrixTest, BuildSumsTerms) {
  KernelSpec spec;
  spec.lambda1 = 0.3;
  spec.terms = {{0.7, -0.5}, {2.0, 0.2}};
  const Eigen::MatrixXd m = BuildKernelMatrix(spec, 12);
  const Eigen::MatrixXd want =
      0.7 * KernelMatrix(-0.5, 12) + 2.0 * KernelMatrix(0.2, 12);
  EXPECT_LT((m - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(KernelForTest, Variants) {
  HardDistribution mc{Problem::kMaxCut, 0.6, -0.7, Rho0Variant::kClamped};
  KernelSpec k = KernelFor(mc);
  EXPECT_DOUBLE_EQ(k.lambda1, 0.4);
  ASSERT_EQ(k.terms.size(), 1u);
  EXPECT_DOUBLE_EQ(k.terms[0].rho, -0.7);

  HardDistribution nae{Problem::kNae3, 0.6, -0.7, Rho0Variant::kClamped};
  EXPECT_DOUBLE_EQ(nae.rho0(), -1.0 / 3.0);
  k = KernelFor(nae);
  ASSERT_EQ(k.terms.size(), 2u);
  // Ratio of the two F2 weights is (2 - 2 alpha) / (3 alpha).
  EXPECT_NEAR(k.terms[0].weight / k.terms[1].weight, 0.8 / 1.8, 1e-15);
  EXPECT_NEAR(k.lambda1 / k.terms[1].weight, 0.4 / 1.8, 1e-15);

  HardDistribution above{Problem::kNae3, 0.6, -0.2, Rho0Variant::kClamped};
  EXPECT_DOUBLE_EQ(above.rho0(), -0.2);
  HardDistribution one{Problem::kNae3, 0.6, -0.7, Rho0Variant::kOne};
  EXPECT_DOUBLE_EQ(one.rho0(), 1.0);

  HardDistribution bad{Problem::kNae3, 1.2, -0.7, Rho0Variant::kClamped};
  EXPECT_THROW(bad.Validate(), DomainError);
  bad = {Problem::kNae3, 0.5, 0.1, Rho0Variant::kClamped};
  EXPECT_THROW(bad.Validate(), DomainError);
}

TEST(SolveDiscreteTest, ZeroLambdaAndFullClamp) {
  const Eigen::MatrixXd m = KernelMatrix(-0.6, 20);
  const DiscreteSolution z = SolveDiscreteFredholm(m, 0.0, 3);
  ASSERT_TRUE(z.solved);
  const ReducedSystem sys = BuildReducedSystem(m, 0.0, 3);
  for (size_t r = 0; r < sys.interior.size(); ++r) {
    EXPECT_EQ(z.values[sys.interior[r]], sys.g[r]);
  }
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(z.values[i], -1.0);
    EXPECT_EQ(z.values[19 - i], 1.0);
  }

  const DiscreteSolution all = SolveDiscreteFredholm(m, 5.0, 10);
  ASSERT_TRUE(all.solved);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(all.values[i], i < 10 ? -1.0 : 1.0);

  EXPECT_THROW(SolveDiscreteFredholm(m, 1.0, 11), DomainError);
  EXPECT_THROW(SolveDiscreteFredholm(m, 1.0, -1), DomainError);
  EXPECT_THROW(SolveDiscreteFredholm(Eigen::MatrixXd::Zero(3, 4), 1.0, 0),
               StructuralError);
}

TEST(SolveDiscreteTest, SymmetricAndPlainSolvesAgree) {
  const KernelSpec spec = KernelFor(NaeHard());
  const int n = 60;
  const Eigen::MatrixXd m = BuildKernelMatrix(spec, n);
  const double lambda = n / spec.lambda1;
  for (int clamp : {0, 10, 24}) {
    const DiscreteSolution a = SolveDiscreteFredholm(m, lambda, clamp, true);
    const DiscreteSolution b = SolveDiscreteFredholm(m, lambda, clamp, false);
    ASSERT_TRUE(a.solved && b.solved);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-9);
    // Stationarity recomputed from scratch.
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f[i] = a.values[i];
    const Eigen::VectorXd r = f + lambda * (m * f);
    for (int i = clamp; i < n - clamp; ++i) EXPECT_LE(std::abs(r[i]), 1e-8);
  }
}

TEST(OptimalStepTest, MaxCutPerfectCompleteness) {
  HardDistribution d{Problem::kMaxCut, 1.0, -1.0, Rho0Variant::kClamped};
  const FredholmSolution s = OptimalStepFunction(d, 50);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(s.values[i], i < 25 ? -1.0 : 1.0);
  EXPECT_NEAR(s.soundness, 1.0, 1e-15);
  EXPECT_NEAR(s.completeness, 1.0, 1e-15);
}

TEST(OptimalStepTest, NaeCompletenessOnePicksSign) {
  HardDistribution d{Problem::kNae3, 1.0, -1.0 / 3.0, Rho0Variant::kClamped};
  const FredholmSolution s = OptimalStepFunction(d, 100);
  EXPECT_NEAR(s.completeness, 1.0, 1e-15);
  EXPECT_NEAR(s.soundness, kSignNae, 1e-12);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(s.values[i], i < 50 ? -1.0 : 1.0);
  // No interior solution does better.
  const Eigen::MatrixXd m = BuildKernelMatrix(KernelFor(d), 100);
  const double lambda = 100.0 / KernelFor(d).lambda1;
  for (int c = 0; c < 50; c += 7) {
    const DiscreteSolution t = SolveDiscreteFredholm(m, lambda, c);
    if (!t.Feasible()) continue;
    EXPECT_LE(Soundness(t.ToGridFunction(), d), kSignNae + 1e-12);
  }
}

TEST(OptimalStepTest, NaeHardPoint) {
  const FredholmSolution s = OptimalStepFunction(NaeHard(), 600);
  EXPECT_TRUE(s.consistent);
  EXPECT_NEAR(s.ratio(), 0.9089169, 5e-4);
  EXPECT_LE(s.residual, 1e-8 * 600);
  EXPECT_TRUE(s.f().IsMonotone());
  const FredholmSolution h = OptimalStepFunction(NaeHard(), 300);
  EXPECT_LT(std::abs(h.ratio() - s.ratio()), 2e-4);
}

TEST(OptimalStepTest, MaxCutHardPoint) {
  // The hardest MAX CUT distribution found by the grid search sits at
  // alpha = 1.
  HardDistribution d{Problem::kMaxCut, 1.0, -0.689, Rho0Variant::kClamped};
  const FredholmSolution s = OptimalStepFunction(d, 200);
  EXPECT_TRUE(s.consistent);
  EXPECT_NEAR(s.ratio(), 0.87856, 2e-3);
  EXPECT_TRUE(s.f().IsMonotone());
}

// Stationarity, oddness, monotonicity and local optimality against sign and
// s-linear grid functions.
TEST(OptimalStepTest, SolutionInvariants) {
  const int n = 120;
  const std::vector<double> mid = GridFunction(std::vector<double>(n, 0.0)).Midpoints();
  for (HardDistribution d :
       {NaeHard(), HardDistribution{Problem::kNae3, 0.4, -0.5, Rho0Variant::kClamped},
        HardDistribution{Problem::kNae3, 0.3, -0.9, Rho0Variant::kOne},
        HardDistribution{Problem::kNae3, 0.9, -0.2, Rho0Variant::kClamped},
        HardDistribution{Problem::kMaxCut, 0.8, -0.75, Rho0Variant::kClamped},
        HardDistribution{Problem::kMaxCut, 0.5, -0.95, Rho0Variant::kClamped}}) {
    const FredholmSolution s = OptimalStepFunction(d, n);
    const KernelSpec spec = KernelFor(d);
    const Eigen::MatrixXd m = BuildKernelMatrix(spec, n);
    ASSERT_TRUE(s.consistent) << d.alpha << " " << d.rho;
    EXPECT_NEAR(s.lambda, n / spec.lambda1, 1e-9 * s.lambda);
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f[i] = s.values[i];
    const Eigen::VectorXd r = f + s.lambda * (m * f);
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(s.values[i], -s.values[n - 1 - i], 1e-9);
      if (std::abs(s.values[i]) < 1.0) EXPECT_LE(std::abs(r[i]), 1e-8);
      if (i < s.clamp) EXPECT_EQ(s.values[i], -1.0);
      if (i >= n - s.clamp) EXPECT_EQ(s.values[i], 1.0);
    }
    EXPECT_TRUE(s.f().IsMonotone());
    EXPECT_NEAR(Soundness(s.f(), d), s.soundness, 1e-12);

    const double sign = Soundness(StepFunction::Sign(), d);
    EXPECT_GE(s.soundness, sign - 1e-12);
    for (int k = 1; k <= 50; ++k) {
      const double slope = 0.25 * k;
      std::vector<double> v(n);
      for (int i = 0; i < n; ++i) v[i] = std::clamp(slope * mid[i], -1.0, 1.0);
      EXPECT_GE(s.soundness, Soundness(GridFunction(v), d) - 1e-12) << slope;
    }
  }
}

TEST(CompletenessTest, Examples) {
  EXPECT_DOUBLE_EQ(Completeness({Problem::kNae3, 1.0, -0.5, Rho0Variant::kClamped}), 1.0);
  EXPECT_DOUBLE_EQ(Completeness({Problem::kMaxCut, 1.0, -1.0, Rho0Variant::kClamped}), 1.0);
  EXPECT_DOUBLE_EQ(Completeness({Problem::kNae3, 0.0, 0.0, Rho0Variant::kClamped}), 0.5);
  EXPECT_DOUBLE_EQ(Completeness({Problem::kMaxCut, 0.5, -0.6, Rho0Variant::kClamped}), 0.4);
  EXPECT_DOUBLE_EQ(Completeness({Problem::kNae3, 0.5, -0.6, Rho0Variant::kOne}), 0.4);
}

TEST(SoundnessTest, Examples) {
  const StepFunction zero = StepFunction::Zero();
  const StepFunction sign = StepFunction::Sign();
  HardDistribution mc{Problem::kMaxCut, 0.7, -0.8, Rho0Variant::kClamped};
  HardDistribution nae{Problem::kNae3, 0.7, -0.8, Rho0Variant::kClamped};
  EXPECT_NEAR(Soundness(zero, mc), 0.5, 1e-15);
  EXPECT_NEAR(Soundness(zero, nae), 0.75, 1e-15);
  EXPECT_NEAR(Soundness(sign, {Problem::kMaxCut, 1.0, -1.0, Rho0Variant::kClamped}), 1.0, 1e-15);
  EXPECT_NEAR(Soundness(sign, {Problem::kNae3, 1.0, -1.0 / 3.0, Rho0Variant::kClamped}),
              kSignNae, 1e-12);
  // Direct expectation over the support.
  const StepFunction f({0.5, 1.2}, {0.2, 0.6, 1.0});
  const double want =
      0.7 * (3.0 - 3.0 * F2(f, -1.0 / 3.0)) / 4.0 +
      0.3 * (3.0 - 2.0 * F2(f, -0.8) - F2(f, 1.0)) / 4.0;
  EXPECT_NEAR(Soundness(f, nae), want, 1e-14);
  const double cut = 0.7 * (1.0 - F2(f, -0.8)) / 2.0 + 0.3 * (1.0 - F2(f, 1.0)) / 2.0;
  EXPECT_NEAR(Soundness(f, mc), cut, 1e-14);
}

TEST(SoundnessTest, AffineInAlpha) {
  const StepFunction f({0.4, 0.9}, {0.1, 0.5, 1.0});
  for (Problem p : {Problem::kMaxCut, Problem::kNae3}) {
    for (Rho0Variant v : {Rho0Variant::kClamped, Rho0Variant::kOne}) {
      auto c = [&](double a) { return Completeness({p, a, -0.6, v}); };
      auto s = [&](double a) { return Soundness(f, HardDistribution{p, a, -0.6, v}); };
      EXPECT_NEAR(c(0.5), 0.5 * (c(0.2) + c(0.8)), 1e-14);
      EXPECT_NEAR(s(0.5), 0.5 * (s(0.2) + s(0.8)), 1e-14);
    }
  }
}

TEST(CurveTest, EnvelopeAndCompletenessOne) {
  std::vector<double> alphas;
  std::vector<double> rhos;
  for (int i = 0; i <= 40; ++i) {
    alphas.push_back(i / 40.0);
    rhos.push_back(-1.0 + i / 40.0);
  }
  const auto samples = CurveSamples(Problem::kNae3, alphas, rhos, 100);
  double best_one = INFINITY;
  for (const auto& p : samples) {
    EXPECT_GT(p.completeness, 0.0);
    if (p.completeness >= 1.0 - 1e-12) best_one = std::min(best_one, p.soundness);
  }
  EXPECT_NEAR(best_one, kSignNae, 1e-9);

  const auto env = LowerEnvelope(samples, 200);
  double ratio = INFINITY;
  for (size_t i = 0; i < env.size(); ++i) {
    ratio = std::min(ratio, env[i].soundness / env[i].completeness);
    if (i > 0) {
      EXPECT_GE(env[i].completeness, env[i - 1].completeness);
      EXPECT_GE(env[i].soundness, env[i - 1].soundness);
    }
  }
  EXPECT_NEAR(ratio, 0.9089, 1e-4);

  const auto cut = Curve(Problem::kMaxCut, alphas, rhos, 100);
  double cut_ratio = INFINITY;
  for (const auto& p : cut) cut_ratio = std::min(cut_ratio, p.soundness / p.completeness);
  EXPECT_NEAR(cut_ratio, 0.87856, 1e-3);
  EXPECT_THROW(CurveSamples(Problem::kNae3, {}, rhos, 10), DomainError);
}

TEST(ApproxRatioTest, SmallGrid) {
  RatioOptions o;
  o.coarse_alpha = o.coarse_rho = 60;
  o.coarse_n = 50;
  o.fine_n = 200;
  const RatioResult nae = ApproxRatio(Problem::kNae3, o);
  EXPECT_NEAR(nae.ratio, 0.9089, 5e-4);
  EXPECT_NEAR(nae.dist.alpha, 0.738, 0.01);
  EXPECT_NEAR(nae.dist.rho, -0.742, 0.01);
  EXPECT_EQ(nae.dist.variant, Rho0Variant::kClamped);
  EXPECT_LE(nae.ratio, nae.coarse_ratio + 1e-4);

  const RatioResult cut = ApproxRatio(Problem::kMaxCut, o);
  EXPECT_NEAR(cut.ratio, 0.8786, 1e-3);

  o.alpha_min = 1.0;
  const RatioResult one = ApproxRatio(Problem::kNae3, o);
  EXPECT_NEAR(one.ratio, kSignNae, 1e-9);
}

TEST(SLinearTest, ExactAndDegenerate) {
  const int n = 200;
  const std::vector<double> mid = GridFunction(std::vector<double>(n, 0.0)).Midpoints();
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = std::clamp(4.0 * mid[i], -1.0, 1.0);
  const SLinearFit fit = FitSLinear(GridFunction(v));
  EXPECT_FALSE(fit.degenerate);
  EXPECT_NEAR(fit.slope, 4.0, 1e-12);
  EXPECT_NEAR(fit.max_deviation, 0.0, 1e-12);
  EXPECT_GT(fit.interior_cells, 0);

  std::vector<double> sign(n);
  for (int i = 0; i < n; ++i) sign[i] = i < n / 2 ? -1.0 : 1.0;
  EXPECT_TRUE(FitSLinear(GridFunction(sign)).degenerate);
}

TEST(SLinearTest, NaeOptimumSlope) {
  const FredholmSolution s = OptimalStepFunction(NaeHard(), 600);
  const SLinearFit fit = FitSLinear(s.f());
  EXPECT_NEAR(fit.slope, 4.072, 0.01);
}

TEST(SuccessiveTest, ZeroLambdaAndContraction) {
  const int n = 40;
  const Eigen::MatrixXd m = KernelMatrix(0.5, n);
  Eigen::VectorXd g = Eigen::VectorXd::LinSpaced(n, -0.5, 0.5);
  const SuccessiveResult z = SuccessiveApproximation(m, g, 0.0, 1);
  for (int i = 0; i < n; ++i) EXPECT_EQ(z.values[i], g[i]);

  // |lambda| ||M|| = 1/2 here.
  const double lambda = 0.5 * n;
  const SuccessiveResult it = SuccessiveApproximation(m, g, lambda, 80);
  EXPECT_FALSE(it.diverged);
  const Eigen::VectorXd direct =
      (Eigen::MatrixXd::Identity(n, n) + lambda * m).lu().solve(g);
  for (int i = 0; i < n; ++i) EXPECT_NEAR(it.values[i], direct[i], 1e-6);

  // Same comparison through the reduced clamped system.
  const ReducedSystem sys = BuildReducedSystem(m, lambda, 5);
  const SuccessiveResult red = SuccessiveApproximation(sys.m, sys.g, lambda, 80);
  const DiscreteSolution sol = SolveDiscreteFredholm(m, lambda, 5);
  for (size_t r = 0; r < sys.interior.size(); ++r) {
    EXPECT_NEAR(red.values[r], sol.values[sys.interior[r]], 1e-6);
  }
  EXPECT_THROW(SuccessiveApproximation(m, g, 1.0, 0), DomainError);
}

TEST(SuccessiveTest, HardPointConvergesOrFlagsDivergence) {
  const int n = 100;
  const HardDistribution d = NaeHard();
  const FredholmSolution s = OptimalStepFunction(d, n);
  const Eigen::MatrixXd m = BuildKernelMatrix(KernelFor(d), n);
  const ReducedSystem sys = BuildReducedSystem(m, s.lambda, s.clamp);
  const SuccessiveResult it = SuccessiveApproximation(sys.m, sys.g, s.lambda, 200);
  if (!it.diverged) {
    for (size_t r = 0; r < sys.interior.size(); ++r) {
      EXPECT_NEAR(it.values[r], s.values[sys.interior[r]], 1e-4);
    }
  } else {
    EXPECT_LT(it.residuals.size(), 200u);
  }
}

}  // namespace
}  // namespace rpr2
