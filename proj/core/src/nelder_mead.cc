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

#include "rpr2/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rpr2/errors.h"

namespace rpr2 {

NelderMeadResult NelderMead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const NelderMeadOptions& o) {
  const size_t d = x0.size();
  if (d == 0) throw DomainError("empty starting point");
  NelderMeadResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evals;
    const double v = f(x);
    return std::isnan(v) ? INFINITY : v;
  };
  std::vector<std::vector<double>> s(d + 1, x0);
  for (size_t i = 0; i < d; ++i) s[i + 1][i] += o.initial_step;
  std::vector<double> fs(d + 1);
  for (size_t i = 0; i <= d; ++i) fs[i] = eval(s[i]);
  std::vector<size_t> ord(d + 1);

  auto along = [&](const std::vector<double>& c, const std::vector<double>& w,
                   double t) {
    std::vector<double> x(d);
    for (size_t j = 0; j < d; ++j) x[j] = c[j] + t * (w[j] - c[j]);
    return x;
  };

  while (res.evals < o.max_evals) {
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) { return fs[a] < fs[b]; });
    double diam = 0.0;
    for (size_t i = 1; i <= d; ++i) {
      double dist = 0.0;
      for (size_t j = 0; j < d; ++j) dist = std::max(dist, std::abs(s[ord[i]][j] - s[ord[0]][j]));
      diam = std::max(diam, dist);
    }
    if (diam < o.x_tol) {
      res.converged = true;
      break;
    }
    const size_t best = ord[0];
    const size_t worst = ord[d];
    const size_t second = ord[d - 1];
    std::vector<double> c(d, 0.0);
    for (size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (size_t j = 0; j < d; ++j) c[j] += s[i][j] / d;
    }
    const std::vector<double> xr = along(c, s[worst], -1.0);
    const double fr = eval(xr);
    if (fr < fs[best]) {
      const std::vector<double> xe = along(c, s[worst], -2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        s[worst] = xe;
        fs[worst] = fe;
      } else {
        s[worst] = xr;
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[second]) {
      s[worst] = xr;
      fs[worst] = fr;
      continue;
    }
    const bool outside = fr < fs[worst];
    const std::vector<double> xc = along(c, outside ? xr : s[worst], 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fs[worst])) {
      s[worst] = xc;
      fs[worst] = fc;
      continue;
    }
    for (size_t i = 0; i <= d; ++i) {
      if (i == best) continue;
      s[i] = along(s[best], s[i], 0.5);
      fs[i] = eval(s[i]);
    }
  }
  const size_t b = std::min_element(fs.begin(), fs.end()) - fs.begin();
  res.x = s[b];
  res.value = fs[b];
  return res;
}

}  // namespace rpr2
