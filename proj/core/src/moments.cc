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

#include "rpr2/moments.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "rpr2/errors.h"
#include "rpr2/normal.h"
#include "rpr2/parallel.h"
#include "rpr2/quadrature.h"
#include "rpr2/random.h"

namespace rpr2 {
namespace {

constexpr double kQuadLimit = 10.0;
constexpr int kShards = 64;

// P[lo <= Z < hi], computed on the side of the mean that avoids cancellation.
double NormalMass(double lo, double hi) {
  if (lo >= 0.0) return NormalCdf(-lo) - NormalCdf(-hi);
  return NormalCdf(hi) - NormalCdf(lo);
}

// Integral over the positive half-line of g(U f (x)) phi(x), doubled, where g
// is even. Breaks at the images a_i / eta of the breakpoints keep the panels
// smooth.
double EvenIntegral(const StepFunction& f, double eta,
                    const std::function<double(double)>& g) {
  std::vector<double> breaks;
  for (double a : f.breakpoints()) breaks.push_back(a / eta);
  auto integrand = [&](double x) {
    return g(NoiseOperator(f, eta, x)) * NormalPdf(x);
  };
  return 2.0 * Integrate(integrand, 0.0, kQuadLimit, breaks, 1e-12);
}

// Sum over the positive cells of mass_i * (g(b_i) + g(-b_i)).
double CellSum(const StepFunction& f, const std::function<double(double)>& g) {
  const auto& a = f.breakpoints();
  const auto& b = f.values();
  double sum = 0.0;
  for (size_t i = 0; i < b.size(); ++i) {
    const double lo = i == 0 ? 0.0 : a[i - 1];
    const double hi = i < a.size() ? a[i] : INFINITY;
    sum += NormalMass(lo, hi) * (g(b[i]) + g(-b[i]));
  }
  return sum;
}

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  int64_t n = 0;
  int64_t hits = 0;
};

MomentEstimate Merge(const std::vector<Accumulator>& shards) {
  double sum = 0.0;
  double sum_sq = 0.0;
  int64_t n = 0;
  for (const auto& s : shards) {
    sum += s.sum;
    sum_sq += s.sum_sq;
    n += s.n;
  }
  MomentEstimate e;
  e.samples = n;
  if (n == 0) return e;
  e.value = sum / n;
  if (n > 1) {
    const double var = std::max(0.0, (sum_sq - n * e.value * e.value) / (n - 1));
    e.std_error = std::sqrt(var / n);
  }
  return e;
}

int64_t ShardCount(int64_t samples, int shard) {
  return samples / kShards + (shard < samples % kShards ? 1 : 0);
}

}  // namespace

double NoiseOperator(const StepFunction& f, double eta, double x) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw DomainError("noise parameter must lie in [0,1]");
  }
  if (eta == 1.0) return f(x);
  const double s = std::sqrt(1.0 - eta * eta);
  const double m = eta * x;
  const auto& a = f.breakpoints();
  const auto& b = f.values();
  double sum = 0.0;
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0.0) continue;
    const double lo = i == 0 ? 0.0 : a[i - 1];
    const double hi = i < a.size() ? a[i] : INFINITY;
    // Mass of [lo, hi) minus mass of (-hi, -lo] under N(m, s^2).
    const double pos = NormalMass((lo - m) / s, (hi - m) / s);
    const double neg = NormalMass((-hi - m) / s, (-lo - m) / s);
    sum += b[i] * (pos - neg);
  }
  return sum;
}

double F2(const StepFunction& f, double rho) {
  if (!(rho >= -1.0 && rho <= 1.0)) throw DomainError("rho must lie in [-1,1]");
  if (rho == 1.0) return f.GaussianMoment(2);
  if (rho == -1.0) return -f.GaussianMoment(2);
  // Summation by parts: with jumps u_p = v_{p-1} - v_p at edge p,
  // E[f(X) f(Y)] = sum_{p,q} u_p u_q Phi2(e_p, e_q; rho).
  const std::vector<double> e = f.LineEdges();
  const std::vector<double> v = f.LineValues();
  const size_t m = v.size();
  std::vector<double> edge;
  std::vector<double> jump;
  for (size_t p = 1; p <= m; ++p) {
    const double left = v[p - 1];
    const double right = p < m ? v[p] : 0.0;
    if (left != right) {
      edge.push_back(e[p]);
      jump.push_back(left - right);
    }
  }
  double sum = 0.0;
  for (size_t p = 0; p < edge.size(); ++p) {
    sum += jump[p] * jump[p] * BivariateNormalCdf(edge[p], edge[p], rho);
    for (size_t q = 0; q < p; ++q) {
      sum += 2.0 * jump[p] * jump[q] *
             BivariateNormalCdf(edge[p], edge[q], rho);
    }
  }
  return sum;
}

double F2lSymmetric(const StepFunction& f, double rho, int l) {
  if (l < 1) throw DomainError("moment order l must be positive");
  if (rho < 0.0) {
    throw DomainError(
        "symmetric moments need rho >= 0; use MomentMc for negative biases");
  }
  if (rho > 1.0) throw DomainError("rho must not exceed 1");
  if (rho == 0.0) return 0.0;
  if (rho == 1.0) return f.GaussianMoment(2 * l);
  return EvenIntegral(f, std::sqrt(rho),
                      [l](double u) { return std::pow(u, 2 * l); });
}

double SatProbSymmetric(const StepFunction& f, int k, double rho) {
  if (k < 2) throw DomainError("clause size must be at least 2");
  if (!(rho >= -1.0 && rho <= 1.0)) throw DomainError("rho must lie in [-1,1]");
  if (k == 2) return (1.0 - F2(f, rho)) / 2.0;
  if (k == 3) return (3.0 - 3.0 * F2(f, rho)) / 4.0;
  if (rho < 0.0) {
    throw DomainError(
        "clauses of size >= 4 with negative bias need MomentMc");
  }
  const double base = 1.0 - std::ldexp(1.0, 1 - k);
  if (rho == 0.0) return base;
  // (1+u)^k + (1-u)^k - 2, written to avoid cancellation for small u.
  auto excess = [k](double u) {
    double s = 0.0;
    double binom = 1.0;
    const double u2 = u * u;
    double pw = 1.0;
    for (int i = 1; i <= k; ++i) {
      binom = binom * (k - i + 1) / i;
      if (i % 2 == 0) {
        pw *= u2;
        s += 2.0 * binom * pw;
      }
    }
    return s;
  };
  const double extra =
      rho == 1.0 ? CellSum(f, excess) : EvenIntegral(f, std::sqrt(rho), excess);
  return base - std::ldexp(extra, -k);
}

MomentEstimate MomentMc(const StepFunction& f, const GramConfig& b,
                        int64_t samples, uint64_t seed) {
  const Eigen::MatrixXd l = b.Factor();
  const int k = b.order();
  std::vector<Accumulator> acc(kShards);
  ParallelFor(kShards, [&](size_t s) {
    std::mt19937_64 eng = ShardEngine(seed, s);
    std::normal_distribution<double> normal;
    Eigen::VectorXd z(k);
    Accumulator& a = acc[s];
    const int64_t n = ShardCount(samples, static_cast<int>(s));
    for (int64_t i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) z[j] = normal(eng);
      const Eigen::VectorXd t = l * z;
      double prod = 1.0;
      for (int j = 0; j < k && prod != 0.0; ++j) prod *= f(t[j]);
      a.sum += prod;
      a.sum_sq += prod * prod;
    }
    a.n = n;
  });
  return Merge(acc);
}

F4Witness F4WitnessVectors(double delta) {
  const double upper = 2.0 - std::sqrt(3.0);
  if (!(delta > 0.0 && delta < upper)) {
    throw DomainError("delta must lie in (0, 2 - sqrt(3))");
  }
  F4Witness w;
  w.bias_first = (2.0 - delta) / 3.0;
  w.bias_rest = (1.0 - 4.0 * delta + delta * delta) / 6.0;
  // v_1 = e_1; v_2..v_4 share the component (2 - delta)/3 along e_1 and are
  // spread 120 degrees apart in the e_2, e_3 plane.
  const double radial = std::sqrt(5.0 + 4.0 * delta - delta * delta) / 3.0;
  w.vectors = Eigen::MatrixXd::Zero(4, 3);
  w.vectors(0, 0) = 1.0;
  for (int j = 0; j < 3; ++j) {
    const double ang = 2.0 * std::numbers::pi * j / 3.0;
    w.vectors(j + 1, 0) = w.bias_first;
    w.vectors(j + 1, 1) = radial * std::cos(ang);
    w.vectors(j + 1, 2) = radial * std::sin(ang);
  }
  w.gram = w.vectors * w.vectors.transpose();
  return w;
}

F4Witness F4NegativeWitness(double delta, double eps, int64_t samples,
                            uint64_t seed) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  F4Witness w = F4WitnessVectors(delta);
  const double lo = eps;
  const double hi = 1.5 * eps;
  auto in_band = [lo, hi](double t) {
    const double a = std::abs(t);
    return a >= lo && a < hi;
  };
  const Eigen::MatrixXd v = w.vectors;
  std::vector<Accumulator> acc(kShards);
  ParallelFor(kShards, [&](size_t s) {
    std::mt19937_64 eng = ShardEngine(seed, s);
    std::normal_distribution<double> normal;
    Accumulator& a = acc[s];
    const int64_t n = ShardCount(samples, static_cast<int>(s));
    for (int64_t i = 0; i < n; ++i) {
      // t_1 = u_1, so the other coordinates are only drawn when needed.
      const double u1 = normal(eng);
      if (!in_band(u1)) continue;
      const double u2 = normal(eng);
      const double u3 = normal(eng);
      double prod = u1 > 0 ? 1.0 : -1.0;
      for (int j = 1; j < 4; ++j) {
        const double t = v(j, 0) * u1 + v(j, 1) * u2 + v(j, 2) * u3;
        if (!in_band(t)) {
          prod = 0.0;
          break;
        }
        prod *= t > 0 ? 1.0 : -1.0;
      }
      if (prod != 0.0) {
        a.sum += prod;
        a.sum_sq += 1.0;
        ++a.hits;
      }
    }
    a.n = n;
  });
  w.estimate = Merge(acc);
  for (const auto& a : acc) w.hits += a.hits;
  return w;
}

}  // namespace rpr2
