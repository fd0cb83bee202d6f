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

#include "rpr2/bias_polytope.h"

#include <algorithm>

#include "rpr2/errors.h"

namespace rpr2 {
namespace {

constexpr double kSlackTol = 1e-12;

constexpr const char* kFacetNames[4] = {
    "b12 + b13 + b23 >= -1",
    "b12 + b13 - b23 <= 1",
    "b12 - b13 + b23 <= 1",
    "-b12 + b13 + b23 <= 1",
};

}  // namespace

std::array<double, 4> TripleBiasSlacks(double b12, double b13, double b23) {
  return {1 + b12 + b13 + b23, 1 - b12 - b13 + b23, 1 - b12 + b13 - b23,
          1 + b12 - b13 - b23};
}

bool TripleBiasFeasible(double b12, double b13, double b23) {
  for (double s : TripleBiasSlacks(b12, b13, b23)) {
    if (s < -kSlackTol) return false;
  }
  return true;
}

TripleDistribution TripleBiasDistribution(double b12, double b13, double b23) {
  const auto s = TripleBiasSlacks(b12, b13, b23);
  for (int i = 0; i < 4; ++i) {
    if (s[i] < -kSlackTol) {
      throw DomainError(std::string("infeasible bias triple: violates ") +
                        kFacetNames[i]);
    }
  }
  TripleDistribution d;
  d.ppp = std::max(0.0, s[0] / 4);
  d.pmm = std::max(0.0, s[1] / 4);
  d.mpm = std::max(0.0, s[2] / 4);
  d.mmp = std::max(0.0, s[3] / 4);
  return d;
}

}  // namespace rpr2
