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

// Univariate and bivariate standard normal distribution functions.

#ifndef RPR2_NORMAL_H_
#define RPR2_NORMAL_H_

#include <vector>

namespace rpr2 {

double NormalPdf(double x);
double NormalCdf(double x);

// Inverse of NormalCdf. Throws DomainError unless 0 < p < 1.
double Probit(double p);

// Breakpoints a_1 < ... < a_{n-1} with a_i = Probit(i / n), so every cell
// carries Gaussian mass 1/n. Exactly antisymmetric. Requires n >= 2.
std::vector<double> EqualProbGrid(int n);

// P[X < h, Y < k] for standard normals with correlation rho. Accepts
// infinite limits and rho in [-1, 1]; rho = +-1 are exact degenerate cases.
// Absolute error about 1e-15 (Gauss-Legendre quadrature of the
// Drezner-Genz integrand).
double BivariateNormalCdf(double h, double k, double rho);

// P[(X, Y) in [x_lo, x_hi] x [y_lo, y_hi]] by inclusion-exclusion.
double BinormalRect(double rho, double x_lo, double x_hi, double y_lo,
                    double y_hi);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void GaussLegendre(int n, std::vector<double>* nodes,
                   std::vector<double>* weights);

}  // namespace rpr2

#endif  // RPR2_NORMAL_H_
