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

#ifndef RPR2_ODD_PART_H_
#define RPR2_ODD_PART_H_

#include <vector>

namespace rpr2 {

// Given samples f(x_i) on a grid with x_i = -x_{n-1-i} (sorted ascending),
// returns (f(x_i) - f(-x_i)) / 2. Rounding a variable with the odd part is
// never worse in the worst case, so only odd functions need to be studied.
// Throws StructuralError on an asymmetric grid or mismatched sizes.
std::vector<double> OddPart(const std::vector<double>& grid,
                            const std::vector<double>& values,
                            double tol = 1e-12);

}  // namespace rpr2

#endif  // RPR2_ODD_PART_H_
