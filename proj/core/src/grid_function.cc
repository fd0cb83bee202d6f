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

#include "rpr2/grid_function.h"

#include <algorithm>
#include <cmath>

#include "rpr2/errors.h"
#include "rpr2/normal.h"

namespace rpr2 {

GridFunction::GridFunction(std::vector<double> values)
    : values_(std::move(values)) {
  const int n = cells();
  if (n < 1) throw DomainError("grid function needs at least one cell");
  for (int i = 0; i < n; ++i) {
    if (!(std::abs(values_[i]) <= 1.0 + 1e-12)) {
      throw DomainError("grid function value outside [-1,1]");
    }
    if (std::abs(values_[i] + values_[n - 1 - i]) > 1e-9) {
      throw DomainError("grid function is not odd");
    }
    values_[i] = std::clamp(values_[i], -1.0, 1.0);
  }
}

std::vector<double> GridFunction::Edges() const {
  return cells() >= 2 ? EqualProbGrid(cells()) : std::vector<double>{};
}

std::vector<double> GridFunction::Midpoints() const {
  const int n = cells();
  std::vector<double> m(n);
  for (int i = 0; 2 * i < n; ++i) {
    m[i] = Probit((i + 0.5) / n);
    m[n - 1 - i] = -m[i];
  }
  if (n % 2 == 1) m[n / 2] = 0.0;
  return m;
}

bool GridFunction::IsMonotone(double tol) const {
  for (int i = 1; i < cells(); ++i) {
    if (values_[i] < values_[i - 1] - tol) return false;
  }
  return true;
}

double GridFunction::SquaredMass() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return s / cells();
}

StepFunction GridFunction::ToStepFunction() const {
  const int n = cells();
  if (n == 1) return StepFunction::Zero();
  const std::vector<double> edges = Edges();
  std::vector<double> a;
  std::vector<double> b;
  int first;
  if (n % 2 == 0) {
    first = n / 2;
  } else {
    if (std::abs(values_[n / 2]) > 1e-9) {
      throw DomainError("middle cell of an odd grid must be zero");
    }
    b.push_back(0.0);
    first = n / 2 + 1;
    a.push_back(edges[first - 1]);
  }
  for (int i = first; i < n; ++i) {
    if (i > first) a.push_back(edges[i - 1]);
    b.push_back(values_[i]);
  }
  return StepFunction(std::move(a), std::move(b));
}

}  // namespace rpr2
