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

// Moment functions of RPR2 rounding: F_k[f](B) = E[prod_i f(t_i)] where t is
// Gaussian with covariance B.

#ifndef RPR2_MOMENTS_H_
#define RPR2_MOMENTS_H_

#include <cstdint>

#include <Eigen/Dense>

#include "rpr2/gram.h"
#include "rpr2/step_function.h"

namespace rpr2 {

struct MomentEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int64_t samples = 0;  // 0 for exact values
};

// (U_eta f)(x) = E[f(eta x + sqrt(1 - eta^2) Z)] in closed form. Throws
// DomainError unless 0 <= eta <= 1.
double NoiseOperator(const StepFunction& f, double eta, double x);

// E[f(X) f(Y)] for rho-correlated standard normals, rho in [-1, 1]. Exact up
// to the bivariate CDF accuracy (about 1e-15 per term).
double F2(const StepFunction& f, double rho);

// F_{2l} at the symmetric configuration with all pairwise biases rho >= 0:
// integral of (U_{sqrt(rho)} f)^{2l} against phi over [-10, 10].
// Throws DomainError for rho < 0 (use MomentMc) or l < 1.
double F2lSymmetric(const StepFunction& f, double rho, int l);

// Probability that RPR2 with f satisfies a NAE_k clause whose vectors have
// all pairwise biases rho. k = 2, 3 work for every rho in [-1, 1]; k >= 4
// needs rho >= 0 and throws DomainError otherwise.
double SatProbSymmetric(const StepFunction& f, int k, double rho);

// Monte Carlo estimate of F_k[f](B), k = B.order(). Deterministic given seed
// and independent of the thread count.
MomentEstimate MomentMc(const StepFunction& f, const GramConfig& b,
                        int64_t samples, uint64_t seed);

// Four unit vectors with all pairwise biases positive whose fourth moment is
// negative under the rounding that keeps sign(t) when eps <= |t| < 1.5 eps
// and flips a fair coin otherwise.
struct F4Witness {
  Eigen::MatrixXd vectors;  // 4 x 3
  Eigen::MatrixXd gram;     // 4 x 4
  double bias_first = 0.0;  // v_1 . v_i = (2 - delta) / 3
  double bias_rest = 0.0;   // v_i . v_j = (1 - 4 delta + delta^2) / 6
  MomentEstimate estimate;  // E[x_1 x_2 x_3 x_4]
  int64_t hits = 0;         // samples with all four projections in the band
};

// Witness vectors only. Throws DomainError unless 0 < delta < 2 - sqrt(3).
F4Witness F4WitnessVectors(double delta);

// Estimates E[x_1 x_2 x_3 x_4] = E[prod f(t_i)] with f(t) = sign(t) on the
// band and 0 elsewhere. The coin flips are averaged out analytically, which
// leaves the same mean with far less variance.
F4Witness F4NegativeWitness(double delta, double eps, int64_t samples,
                            uint64_t seed);

}  // namespace rpr2

#endif  // RPR2_MOMENTS_H_
