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

// Pairwise biases of three +-1 variables. A triple (b12, b13, b23) is
// realizable by a distribution on {-1,1}^3 iff it lies in the convex hull of
// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1).

#ifndef RPR2_BIAS_POLYTOPE_H_
#define RPR2_BIAS_POLYTOPE_H_

#include <array>

namespace rpr2 {

// Weights on the assignments (+,+,+), (+,-,-), (-,+,-), (-,-,+). Each of the
// other four assignments is the negation of one of these and contributes
// the same biases, so these four suffice.
struct TripleDistribution {
  double ppp = 0.0;
  double pmm = 0.0;
  double mpm = 0.0;
  double mmp = 0.0;
};

// Unnormalized facet slacks; the triple is feasible iff all are >= 0:
//   1 + b12 + b13 + b23, 1 - b12 - b13 + b23,
//   1 - b12 + b13 - b23, 1 + b12 - b13 - b23.
std::array<double, 4> TripleBiasSlacks(double b12, double b13, double b23);

// Tolerates rounding error up to 1e-12 in each slack.
bool TripleBiasFeasible(double b12, double b13, double b23);

// Throws DomainError naming the violated inequality when infeasible.
TripleDistribution TripleBiasDistribution(double b12, double b13, double b23);

}  // namespace rpr2

#endif  // RPR2_BIAS_POLYTOPE_H_
