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

// Step rounding functions for satisfiable MAX NAE-K-SAT, scored at the
// symmetric configurations only: a k-clause is assumed hardest when all its
// pairwise biases equal 1 - 4/k. That assumption is a conjecture, so every
// objective here is a conjectured ratio.

#ifndef RPR2_STEPOPT_H_
#define RPR2_STEPOPT_H_

#include <cstdint>
#include <vector>

#include "rpr2/step_function.h"

namespace rpr2 {

// 1 - 4/k.
double SymmetricBias(int k);

// min over k in K of SatProbSymmetric(f, k, 1 - 4/k). Throws DomainError if K
// is empty or holds some k < 3.
double ObjectiveAlphaK(const StepFunction& f, const std::vector<int>& K);

struct StepSearchConfig {
  std::vector<int> K{3, 5};
  int steps = 2;       // l + 1 values b_0..b_l, l breakpoints
  bool pm1 = true;     // b_i = (-1)^(i+1), only the breakpoints are free
  int restarts = 64;
  uint64_t seed = 1;
  double x_tol = 1e-10;
  int max_evals = 4000;  // per restart

  // Throws DomainError unless min K >= 3 and steps >= 1.
  void Validate() const;
};

struct StepSearchResult {
  StepFunction f = StepFunction::Zero();
  double objective = 0.0;
  std::vector<double> per_k;  // satisfaction probability per k in K
  bool converged = false;     // the polishing run met x_tol
  int evaluations = 0;
};

// Multi-start Nelder-Mead over a_1 = exp(u_1), a_{i+1} - a_i = exp(u_{i+1})
// and b_i = sin(w_i). Deterministic given the seed, whatever the thread
// count.
StepSearchResult OptimizeStep(const StepSearchConfig& config);

struct SweepRow {
  double a = 0.0;
  std::vector<double> probs;  // per k in K
};

// For each a in [lo, hi] with the given step, appends breakpoint a carrying
// minus the last value of f and scores every k in K. Throws DomainError
// unless lo exceeds the last breakpoint and step > 0.
std::vector<SweepRow> BreakpointSweep(const StepFunction& f, double lo,
                                      double hi, double step,
                                      const std::vector<int>& K);

}  // namespace rpr2

#endif  // RPR2_STEPOPT_H_
