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

#include "rpr2/quadrature.h"

#include <algorithm>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rpr2 {

double Integrate(const std::function<double(double)>& f, double lo, double hi,
                 const std::vector<double>& breaks, double tol) {
  std::vector<double> pts{lo};
  for (double b : breaks) {
    if (b > lo && b < hi) pts.push_back(b);
  }
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double sum = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    sum += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, pts[i], pts[i + 1], 15, tol);
  }
  return sum;
}

}  // namespace rpr2
