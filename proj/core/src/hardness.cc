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

#include "rpr2/hardness.h"

#include <algorithm>
#include <cmath>

#include "rpr2/errors.h"

namespace rpr2 {

double MixtureValue(double p, double f2, double f4) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
  return (1.0 - p) * (3.0 + 3.0 * f2) / 4.0 +
         p * (15.0 - 6.0 * f2 - f4) / 16.0;
}

InnerMaxResult InnerMax(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
  InnerMaxResult r;
  if (p == 0.0) {
    r.f2 = 1.0 / 3.0;
  } else {
    r.f2 = std::clamp((6.0 - 9.0 * p) / p, 0.0, 1.0 / 3.0);
  }
  r.value = MixtureValue(p, r.f2, r.f2 * r.f2);
  return r;
}

MixtureBound Nae35Bound() {
  const double s = std::sqrt(21.0);
  MixtureBound b;
  b.p_star = 3.0 / s;
  b.f2_star = 2.0 * s - 9.0;
  b.bound = 3.0 * (s - 4.0) / 2.0;

  // Numeric minimax: coarse grid, then golden section on the best cell.
  const int grid = 2001;
  int best = 0;
  double best_v = InnerMax(0.0).value;
  for (int i = 1; i < grid; ++i) {
    const double v = InnerMax(static_cast<double>(i) / (grid - 1)).value;
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  double lo = std::max(0, best - 1) / static_cast<double>(grid - 1);
  double hi = std::min(grid - 1, best + 1) / static_cast<double>(grid - 1);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - phi * (hi - lo);
  double d = lo + phi * (hi - lo);
  double fc = InnerMax(c).value;
  double fd = InnerMax(d).value;
  while (hi - lo > 1e-13) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - phi * (hi - lo);
      fc = InnerMax(c).value;
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + phi * (hi - lo);
      fd = InnerMax(d).value;
    }
  }
  const double numeric = std::min({fc, fd, best_v});
  b.residual = std::abs(numeric - b.bound);
  if (b.residual > 1e-9) {
    throw NumericError("numeric minimax disagrees with the closed form");
  }
  return b;
}

}  // namespace rpr2
