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

#ifndef RPR2_GRID_FUNCTION_H_
#define RPR2_GRID_FUNCTION_H_

#include <vector>

#include "rpr2/step_function.h"

namespace rpr2 {

// Piecewise-constant function on the N-cell partition of the real line into
// cells of equal Gaussian mass 1/N. values()[i] is the value on cell i
// (0-based, left to right).
class GridFunction {
 public:
  // Throws DomainError if some |f_i| > 1 + 1e-12 or if the values are not odd
  // (f_i = -f_{N-1-i}) to 1e-9.
  explicit GridFunction(std::vector<double> values);

  int cells() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  double operator[](int i) const { return values_[i]; }

  // Interior breakpoints a_1..a_{N-1}.
  std::vector<double> Edges() const;
  // Cell medians Probit((i + 1/2) / N).
  std::vector<double> Midpoints() const;

  bool IsMonotone(double tol = 1e-12) const;
  double SquaredMass() const;

  // The same function as a StepFunction. For odd N the middle cell must be 0.
  StepFunction ToStepFunction() const;

 private:
  std::vector<double> values_;
};

}  // namespace rpr2

#endif  // RPR2_GRID_FUNCTION_H_
