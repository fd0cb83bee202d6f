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


// Independent reference implementations used only by the tests. Nothing
// here calls into the library's numerics: normal probabilities come from
// std::erfc and integrals from Boost's Gauss-Kronrod rule.

#ifndef RPR2_TESTS_SUPPORT_ORACLES_H_
#define RPR2_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rpr2/step_function.h"

namespace rpr2::testing {

double OracleCdf(double x);
double OraclePdf(double x);

// Inverse CDF by bisection on OracleCdf, to about 1e-15.
double OracleProbit(double p);

// Adaptive Gauss-Kronrod over [lo, hi] split at `breaks`.
double OracleIntegrate(const std::function<double(double)>& f, double lo,
                       double hi, std::vector<double> breaks = {});

// P[X < h, Y < k] as the one-dimensional integral of
// phi(x) Phi((k - rho x) / sqrt(1 - rho^2)) over x < h. |rho| < 1.
double OracleBvn(double h, double k, double rho);

// E[f(eta x + sqrt(1 - eta^2) Z)] by quadrature over Z.
double OracleNoise(const StepFunction& f, double eta, double x);

// E[f(X) f(Y)] as the integral over x of f(x) E[f(rho x + s Z)] phi(x), with
// the inner expectation summed cell by cell.
double OracleF2(const StepFunction& f, double rho);

// E[f^p] summed cell by cell.
double OracleMoment(const StepFunction& f, int p);

// Random odd step function with 0..max_breaks breakpoints in (0.05, 3.5).
// monotone: values non-decreasing from b_0 >= 0. pm1: values in {-1, 1}.
StepFunction RandomOddStep(std::mt19937_64& eng, int max_breaks,
                           bool monotone = false, bool pm1 = false);

struct McResult {
  double mean = 0.0;
  double se = 0.0;
};
// E[f(X) f(Y)] by plain sampling with std::normal_distribution.
McResult OracleMcPair(const StepFunction& f, double rho, int64_t samples,
                      uint64_t seed);

}  // namespace rpr2::testing

#endif  // RPR2_TESTS_SUPPORT_ORACLES_H_
