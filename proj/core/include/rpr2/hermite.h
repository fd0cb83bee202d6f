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

// Normalized (probabilists') Hermite polynomials
//   H_n(x) = (1 / sqrt(n!)) sum_l (-1)^l m_l(K_n) x^(n - 2l),
// where m_l(K_n) counts l-matchings of the complete graph, and the Hermite
// coefficients of step rounding functions.

#ifndef RPR2_HERMITE_H_
#define RPR2_HERMITE_H_

#include <vector>

#include "rpr2/step_function.h"

namespace rpr2 {

// n! / (l! 2^l (n - 2l)!), or 0 when 2l > n. Exact while below 2^53.
double MatchingsCount(int l, int n);

class HermitePoly {
 public:
  // Throws DomainError for n < 0.
  explicit HermitePoly(int n);

  int degree() const { return n_; }
  // Monomial coefficients of sqrt(n!) H_n, which are integers; index j
  // multiplies x^j.
  const std::vector<double>& integer_coeffs() const { return ic_; }
  double scale() const { return scale_; }  // 1 / sqrt(n!)
  std::vector<double> coeffs() const;
  double operator()(double x) const;

 private:
  int n_;
  std::vector<double> ic_;
  double scale_;
};

// H_0(x) .. H_max(x) by the three-term recurrence, stable for large n.
std::vector<double> HermiteValues(int max_degree, double x);

// c_i = int f H_i phi for i = 0..max_degree, in closed form from
// int_a^b H_n phi = [-H_{n-1} phi / sqrt(n)]_a^b. Even entries vanish for
// odd f; NumericError if one exceeds 1e-12.
std::vector<double> HermiteCoeffs(const StepFunction& f, int max_degree);

// sum_i c_i H_i(x).
double HermiteSeries(const std::vector<double>& c, double x);

// c_i eta^i, the coefficients of U_eta f. Throws DomainError unless eta is
// in [0, 1].
std::vector<double> DampedCoeffs(const std::vector<double>& c, double eta);

struct ExtremePoint {
  StepFunction f = StepFunction::Zero();
  std::vector<double> coeffs;  // c_1, c_3, ..., c_{2k-1}
  std::vector<double> roots;   // positive sign changes of the polynomial
};

// f = sign(sum_i alpha_i H_{2i-1}), which maximizes sum_i alpha_i c_{2i-1}
// over odd f with |f| <= 1. Throws DomainError if alpha is all zero and
// NumericError if root isolation fails.
ExtremePoint MaxCoeffExtremePoint(const std::vector<double>& alpha);

struct BoundaryPoint {
  double angle = 0.0;
  double c1 = 0.0;
  double c3 = 0.0;
};

// Extreme points of the (c_1, c_3) region for the given number of equally
// spaced angles in [0, 2 pi).
std::vector<BoundaryPoint> P2Boundary(int angles);

}  // namespace rpr2

#endif  // RPR2_HERMITE_H_
