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

#ifndef RPR2_NELDER_MEAD_H_
#define RPR2_NELDER_MEAD_H_

#include <functional>
#include <vector>

namespace rpr2 {

struct NelderMeadOptions {
  double initial_step = 0.25;
  double x_tol = 1e-10;  // simplex diameter
  int max_evals = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evals = 0;
  bool converged = false;
};

// Minimizes f from x0 with the standard reflection / expansion /
// contraction / shrink coefficients (1, 2, 1/2, 1/2).
NelderMeadResult NelderMead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const NelderMeadOptions& options = {});

}  // namespace rpr2

#endif  // RPR2_NELDER_MEAD_H_
