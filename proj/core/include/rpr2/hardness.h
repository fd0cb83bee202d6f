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

// The MAX NAE-{3,5} hardness bound: a mixture of 3-clauses with biases all
// -1/3 (weight 1 - p) and 5-clauses with biases 1/3 on six pairs and 0 on
// the rest (weight p). Any odd rounding scores
//   (1 - p)(3 + 3 F2)/4 + p (15 - 6 F2 - F4)/16
// with F2 = F2(1/3) in [0, 1/3] and F4 >= F2^2.

#ifndef RPR2_HARDNESS_H_
#define RPR2_HARDNESS_H_

namespace rpr2 {

struct MixtureBound {
  double p_star = 0.0;   // 3 / sqrt(21)
  double f2_star = 0.0;  // 2 sqrt(21) - 9
  double bound = 0.0;    // 3 (sqrt(21) - 4) / 2
  double residual = 0.0;  // |numeric minimax - bound|
};

// Throws DomainError unless p is in [0, 1].
double MixtureValue(double p, double f2, double f4);

struct InnerMaxResult {
  double f2 = 0.0;
  double value = 0.0;
};

// max over F2 in [0, 1/3] of MixtureValue(p, F2, F2^2). The maximand is a
// concave quadratic with vertex (6 - 9p)/p; p = 0 gives 1 at F2 = 1/3.
InnerMaxResult InnerMax(double p);

// Closed form, checked against a numeric minimax over p (grid then golden
// section). Throws NumericError if the two disagree by more than 1e-9.
MixtureBound Nae35Bound();

}  // namespace rpr2

#endif  // RPR2_HARDNESS_H_
