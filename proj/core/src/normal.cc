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

#include "rpr2/normal.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "rpr2/errors.h"

namespace rpr2 {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684759;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

const Rule& LegendreRule(int n) {
  static const Rule r6 = [] {
    Rule r;
    GaussLegendre(6, &r.x, &r.w);
    return r;
  }();
  static const Rule r12 = [] {
    Rule r;
    GaussLegendre(12, &r.x, &r.w);
    return r;
  }();
  static const Rule r20 = [] {
    Rule r;
    GaussLegendre(20, &r.x, &r.w);
    return r;
  }();
  return n == 6 ? r6 : (n == 12 ? r12 : r20);
}

// P[X > dh, Y > dk], finite arguments, |r| < 1. After Genz's BVNU.
double UpperOrthant(double dh, double dk, double r) {
  const double ar = std::abs(r);
  const Rule& rule = LegendreRule(ar < 0.3 ? 6 : (ar < 0.75 ? 12 : 20));
  double h = dh;
  double k = dk;
  double hk = h * k;
  double bvn = 0.0;
  if (ar < 0.925) {
    const double hs = (h * h + k * k) / 2.0;
    const double asr = std::asin(r);
    for (size_t i = 0; i < rule.x.size(); ++i) {
      const double sn = std::sin(asr * (rule.x[i] + 1.0) / 2.0);
      bvn += rule.w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
    }
    return bvn * asr / (4.0 * std::numbers::pi) + NormalCdf(-h) * NormalCdf(-k);
  }
  if (r < 0.0) {
    k = -k;
    hk = -hk;
  }
  const double as = (1.0 - r) * (1.0 + r);
  double a = std::sqrt(as);
  const double bs = (h - k) * (h - k);
  const double c = (4.0 - hk) / 8.0;
  const double d = (12.0 - hk) / 16.0;
  double asr = -(bs / as + hk) / 2.0;
  if (asr > -100.0) {
    bvn = a * std::exp(asr) *
          (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 +
           c * d * as * as / 5.0);
  }
  if (hk > -100.0) {
    const double b = std::sqrt(bs);
    bvn -= std::exp(-hk / 2.0) * std::sqrt(kTwoPi) * NormalCdf(-b / a) * b *
           (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
  }
  a /= 2.0;
  for (size_t i = 0; i < rule.x.size(); ++i) {
    const double xs = std::pow(a * (rule.x[i] + 1.0), 2);
    const double rs = std::sqrt(1.0 - xs);
    asr = -(bs / xs + hk) / 2.0;
    if (asr > -100.0) {
      bvn += a * rule.w[i] * std::exp(asr) *
             (std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs -
              (1.0 + c * xs * (1.0 + d * xs)));
    }
  }
  bvn = -bvn / kTwoPi;
  if (r > 0.0) return bvn + NormalCdf(-std::max(h, k));
  if (h >= k) return -bvn;
  const double l = h < 0.0 ? NormalCdf(k) - NormalCdf(h)
                           : NormalCdf(-h) - NormalCdf(-k);
  return l - bvn;
}

}  // namespace

double NormalPdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double NormalCdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double Probit(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("probit needs 0 < p < 1");
  if (p > 0.5) return -Probit(1.0 - p);
  double x = -kSqrt2 * boost::math::erfc_inv(2.0 * p);
  // One Newton step against the erfc-based CDF.
  const double dens = NormalPdf(x);
  if (dens > 0.0) x -= (NormalCdf(x) - p) / dens;
  return x;
}

std::vector<double> EqualProbGrid(int n) {
  if (n < 2) throw DomainError("equal probability grid needs n >= 2");
  std::vector<double> a(n - 1);
  for (int i = 1; 2 * i < n; ++i) {
    a[i - 1] = Probit(static_cast<double>(i) / n);
    a[n - i - 1] = -a[i - 1];
  }
  if (n % 2 == 0) a[n / 2 - 1] = 0.0;
  return a;
}

double BivariateNormalCdf(double h, double k, double rho) {
  if (std::isnan(h) || std::isnan(k) || std::isnan(rho)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (h == -INFINITY || k == -INFINITY) return 0.0;
  if (h == INFINITY) return NormalCdf(k);
  if (k == INFINITY) return NormalCdf(h);
  if (rho >= 1.0) return NormalCdf(std::min(h, k));
  if (rho <= -1.0) return std::max(0.0, NormalCdf(h) - NormalCdf(-k));
  const double p = UpperOrthant(-h, -k, rho);
  return std::clamp(p, 0.0, 1.0);
}

double BinormalRect(double rho, double x_lo, double x_hi, double y_lo,
                    double y_hi) {
  if (x_lo > x_hi || y_lo > y_hi) {
    throw DomainError("rectangle limits out of order");
  }
  const double p = BivariateNormalCdf(x_hi, y_hi, rho) -
                   BivariateNormalCdf(x_lo, y_hi, rho) -
                   BivariateNormalCdf(x_hi, y_lo, rho) +
                   BivariateNormalCdf(x_lo, y_lo, rho);
  return std::max(0.0, p);
}

void GaussLegendre(int n, std::vector<double>* nodes,
                   std::vector<double>* weights) {
  nodes->assign(n, 0.0);
  weights->assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    (*nodes)[i] = -x;
    (*nodes)[n - 1 - i] = x;
    (*weights)[i] = w;
    (*weights)[n - 1 - i] = w;
  }
}

}  // namespace rpr2
