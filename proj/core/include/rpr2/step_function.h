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

#ifndef RPR2_STEP_FUNCTION_H_
#define RPR2_STEP_FUNCTION_H_

#include <string>
#include <vector>

namespace rpr2 {

// Odd piecewise-constant rounding function. With positive breakpoints
// a_1 < ... < a_l and values b_0, ..., b_l:
//   f(x) = b_i   for a_i <= x < a_{i+1}   (a_0 = 0, a_{l+1} = inf)
//   f(-x) = -f(x)
// f(0) is b_0. Nothing integrates against a single point, so the clash with
// oddness at 0 is harmless.
class StepFunction {
 public:
  // Throws DomainError unless breakpoints are strictly increasing and
  // positive, values.size() == breakpoints.size() + 1 and every |b_i| <= 1.
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction Sign() { return StepFunction({}, {1.0}); }
  static StepFunction Zero() { return StepFunction({}, {0.0}); }
  // x -> clamp(s x, -1, 1), approximated by `steps` equal-width steps per
  // unit slope segment. Only used as a comparison family.
  static StepFunction SLinear(double s, int steps);

  double operator()(double x) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  int num_breakpoints() const { return static_cast<int>(breakpoints_.size()); }

  // Full-line cell edges -inf, -a_l, ..., -a_1, 0, a_1, ..., a_l, +inf and
  // the 2l+2 cell values in the same order.
  std::vector<double> LineEdges() const;
  std::vector<double> LineValues() const;

  // Integral of f^p against the standard normal density.
  double GaussianMoment(int p) const;

  // Same function with an extra breakpoint a > a_l carrying value b.
  StepFunction Append(double a, double b) const;

  std::string DebugString() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

}  // namespace rpr2

#endif  // RPR2_STEP_FUNCTION_H_
