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

#include "rpr2/step_function.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rpr2/errors.h"
#include "rpr2/normal.h"

namespace rpr2 {

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.size() != breakpoints_.size() + 1) {
    throw DomainError("step function needs one more value than breakpoints");
  }
  for (size_t i = 0; i < breakpoints_.size(); ++i) {
    const double a = breakpoints_[i];
    if (!std::isfinite(a) || a <= 0.0) {
      throw DomainError("breakpoints must be finite and positive");
    }
    if (i > 0 && a <= breakpoints_[i - 1]) {
      throw DomainError("breakpoints must be strictly increasing");
    }
  }
  for (double b : values_) {
    if (!(std::abs(b) <= 1.0)) throw DomainError("values must lie in [-1,1]");
  }
}

StepFunction StepFunction::SLinear(double s, int steps) {
  if (!(s > 0.0) || steps < 1) throw DomainError("bad s-linear parameters");
  std::vector<double> a(steps);
  std::vector<double> b(steps + 1);
  for (int i = 0; i < steps; ++i) {
    a[i] = (i + 1.0) / (steps * s);
    b[i] = (i + 0.5) / steps;
  }
  b[steps] = 1.0;
  return StepFunction(std::move(a), std::move(b));
}

double StepFunction::operator()(double x) const {
  const double ax = std::abs(x);
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), ax);
  const double v = values_[it - breakpoints_.begin()];
  return x < 0.0 ? -v : v;
}

std::vector<double> StepFunction::LineEdges() const {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> e;
  e.reserve(2 * breakpoints_.size() + 3);
  e.push_back(-inf);
  for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it) {
    e.push_back(-*it);
  }
  e.push_back(0.0);
  e.insert(e.end(), breakpoints_.begin(), breakpoints_.end());
  e.push_back(inf);
  return e;
}

std::vector<double> StepFunction::LineValues() const {
  std::vector<double> v;
  v.reserve(2 * values_.size());
  for (auto it = values_.rbegin(); it != values_.rend(); ++it) v.push_back(-*it);
  v.insert(v.end(), values_.begin(), values_.end());
  return v;
}

double StepFunction::GaussianMoment(int p) const {
  // Cell [a_i, a_{i+1}) has mass Phi(-a_i) - Phi(-a_{i+1}); the mirrored cell
  // contributes (-b_i)^p with the same mass.
  double sum = 0.0;
  for (size_t i = 0; i < values_.size(); ++i) {
    const double lo = i == 0 ? 0.0 : breakpoints_[i - 1];
    const double upper_tail_lo = NormalCdf(-lo);
    const double upper_tail_hi =
        i < breakpoints_.size() ? NormalCdf(-breakpoints_[i]) : 0.0;
    const double mass = upper_tail_lo - upper_tail_hi;
    const double bp = std::pow(values_[i], p);
    sum += mass * (bp + (p % 2 == 0 ? bp : -bp));
  }
  return sum;
}

StepFunction StepFunction::Append(double a, double b) const {
  std::vector<double> na = breakpoints_;
  std::vector<double> nb = values_;
  na.push_back(a);
  nb.push_back(b);
  return StepFunction(std::move(na), std::move(nb));
}

std::string StepFunction::DebugString() const {
  std::ostringstream os;
  os.precision(12);
  os << "StepFunction(a=[";
  for (size_t i = 0; i < breakpoints_.size(); ++i) {
    os << (i ? "," : "") << breakpoints_[i];
  }
  os << "], b=[";
  for (size_t i = 0; i < values_.size(); ++i) {
    os << (i ? "," : "") << values_[i];
  }
  os << "])";
  return os.str();
}

}  // namespace rpr2
