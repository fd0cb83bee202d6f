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


#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rpr2::testing {
namespace {

constexpr double kLimit = 12.0;

double Gk(const std::function<double(double)>& f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, lo, hi, 15, 1e-13, &err);
}

// Mass of [lo, hi) under N(m, s^2).
double Mass(double lo, double hi, double m, double s) {
  return OracleCdf((hi - m) / s) - OracleCdf((lo - m) / s);
}

// E[f(m + s Z)] over the line cells of f.
double CellExpectation(const StepFunction& f, double m, double s) {
  const auto e = f.LineEdges();
  const auto v = f.LineValues();
  double sum = 0.0;
  for (size_t i = 0; i < v.size(); ++i) sum += v[i] * Mass(e[i], e[i + 1], m, s);
  return sum;
}

}  // namespace

double OracleCdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double OraclePdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double OracleProbit(double p) {
  double lo = -40.0;
  double hi = 40.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (OracleCdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double OracleIntegrate(const std::function<double(double)>& f, double lo,
                       double hi, std::vector<double> breaks) {
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  double sum = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = std::max(lo, breaks[i]);
    const double b = std::min(hi, breaks[i + 1]);
    sum += Gk(f, a, b);
  }
  return sum;
}

double OracleBvn(double h, double k, double rho) {
  const double s = std::sqrt(1.0 - rho * rho);
  const double top = std::min(h, kLimit);
  if (top <= -kLimit) return 0.0;
  return OracleIntegrate(
      [&](double x) { return OraclePdf(x) * OracleCdf((k - rho * x) / s); },
      -kLimit, top, {0.0});
}

double OracleNoise(const StepFunction& f, double eta, double x) {
  if (eta == 1.0) return f(x);
  const double s = std::sqrt(1.0 - eta * eta);
  std::vector<double> breaks;
  for (double a : f.breakpoints()) {
    breaks.push_back((a - eta * x) / s);
    breaks.push_back((-a - eta * x) / s);
  }
  breaks.push_back(-eta * x / s);
  return OracleIntegrate(
      [&](double z) { return f(eta * x + s * z) * OraclePdf(z); }, -kLimit,
      kLimit, breaks);
}

double OracleF2(const StepFunction& f, double rho) {
  if (std::abs(rho) == 1.0) return rho * OracleMoment(f, 2);
  const double s = std::sqrt(1.0 - rho * rho);
  std::vector<double> breaks{0.0};
  for (double a : f.breakpoints()) {
    breaks.push_back(a);
    breaks.push_back(-a);
  }
  return OracleIntegrate(
      [&](double x) {
        return f(x) * CellExpectation(f, rho * x, s) * OraclePdf(x);
      },
      -kLimit, kLimit, breaks);
}

double OracleMoment(const StepFunction& f, int p) {
  const auto e = f.LineEdges();
  const auto v = f.LineValues();
  double sum = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    sum += std::pow(v[i], p) * Mass(e[i], e[i + 1], 0.0, 1.0);
  }
  return sum;
}

StepFunction RandomOddStep(std::mt19937_64& eng, int max_breaks, bool monotone,
                           bool pm1) {
  std::uniform_int_distribution<int> count(0, max_breaks);
  std::uniform_real_distribution<double> pos(0.05, 3.5);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  const int l = count(eng);
  std::vector<double> a;
  while (static_cast<int>(a.size()) < l) {
    const double x = pos(eng);
    bool clash = false;
    for (double y : a) clash = clash || std::abs(x - y) < 1e-3;
    if (!clash) a.push_back(x);
  }
  std::sort(a.begin(), a.end());
  std::vector<double> b(l + 1);
  if (pm1) {
    b[0] = monotone || val(eng) >= 0 ? 1.0 : -1.0;
    for (int i = 1; i <= l; ++i) {
      b[i] = monotone ? 1.0 : (val(eng) < 0 ? -1.0 : 1.0);
    }
  } else {
    for (double& x : b) x = val(eng);
    if (monotone) {
      for (double& x : b) x = std::abs(x);
      std::sort(b.begin(), b.end());
    }
  }
  return StepFunction(a, b);
}

McResult OracleMcPair(const StepFunction& f, double rho, int64_t samples,
                      uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> normal;
  const double s = std::sqrt(1.0 - rho * rho);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int64_t i = 0; i < samples; ++i) {
    const double x = normal(eng);
    const double y = rho * x + s * normal(eng);
    const double v = f(x) * f(y);
    sum += v;
    sum_sq += v * v;
  }
  McResult r;
  r.mean = sum / samples;
  r.se = std::sqrt(std::max(0.0, sum_sq / samples - r.mean * r.mean) /
                   (samples - 1));
  return r;
}

}  // namespace rpr2::testing
