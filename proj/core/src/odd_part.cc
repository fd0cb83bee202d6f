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

#include "rpr2/odd_part.h"

#include <cmath>

#include "rpr2/errors.h"

namespace rpr2 {

std::vector<double> OddPart(const std::vector<double>& grid,
                            const std::vector<double>& values, double tol) {
  const size_t n = grid.size();
  if (values.size() != n) {
    throw StructuralError("grid and values differ in length");
  }
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(grid[i] + grid[n - 1 - i]) > tol) {
      throw StructuralError("grid is not symmetric about 0");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw StructuralError("grid is not strictly increasing");
    }
  }
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) {
    out[i] = 0.5 * (values[i] - values[n - 1 - i]);
  }
  return out;
}

}  // namespace rpr2
