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

#include "rpr2/fredholm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>

#include "rpr2/errors.h"
#include "rpr2/moments.h"
#include "rpr2/normal.h"
#include "rpr2/parallel.h"

namespace rpr2 {
namespace {

constexpr double kOneVariantAlphaCap = 1.0 - 1e-6;
constexpr double kMinCompleteness = 1e-12;

double SoundnessFrom(const HardDistribution& d, double sq, double f2_rho,
                     double f2_rho0) {
  const double a = d.alpha;
  if (d.problem == Problem::kMaxCut) {
    return a * (1.0 - f2_rho) / 2.0 + (1.0 - a) * (1.0 - sq) / 2.0;
  }
  if (d.variant == Rho0Variant::kOne) {
    return a * (3.0 - 3.0 * sq) / 4.0 + (1.0 - a) * (3.0 - sq - 2.0 * f2_rho) / 4.0;
  }
  return (1.0 - a) * (3.0 - sq - 2.0 * f2_rho) / 4.0 +
         a * (3.0 - 3.0 * f2_rho0) / 4.0;
}

double QuadForm(const Eigen::MatrixXd& m, const Eigen::VectorXd& f) {
  return f.dot(m * f);
}

bool NeedsRho0Matrix(const HardDistribution& d) {
  return d.problem == Problem::kNae3 && d.variant == Rho0Variant::kClamped &&
         d.rho0() != d.rho;
}

std::vector<double> Linspace(double lo, double hi, int n) {
  if (n <= 1) return {lo};
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  v[n - 1] = hi;
  return v;
}

// Golden-section minimization of f over [a, b]; the endpoints are always
// evaluated so boundary minima are found.
template <typename F>
std::pair<double, double> GoldenMin(F&& f, double a, double b, double tol) {
  double best_x = a;
  double best = f(a);
  auto consider = [&](double x, double v) {
    if (v < best) {
      best = v;
      best_x = x;
    }
  };
  if (b - a <= tol) return {best_x, best};
  consider(b, f(b));
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  consider(c, fc);
  consider(d, fd);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return {best_x, best};
}

// Cholesky when a is positive definite, pivoted LU otherwise.
Eigen::VectorXd SolveSymmetric(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                               double* rcond, bool* positive_definite) {
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() == Eigen::Success) {
    *positive_definite = true;
    *rcond = llt.rcond();
    return llt.solve(b);
  }
  *positive_definite = false;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  *rcond = lu.rcond();
  return lu.solve(b);
}

}  // namespace

std::string ProblemName(Problem p) {
  return p == Problem::kMaxCut ? "maxcut" : "nae3";
}

std::string VariantName(Rho0Variant v) {
  return v == Rho0Variant::kClamped ? "clamped" : "one";
}

double HardDistribution::rho0() const {
  if (variant == Rho0Variant::kOne) return 1.0;
  return std::max(rho, -1.0 / 3.0);
}

void HardDistribution::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
  if (!(rho >= -1.0 && rho <= 0.0)) throw DomainError("rho must lie in [-1,0]");
}

KernelSpec KernelFor(const HardDistribution& d) {
  d.Validate();
  const double a = d.alpha;
  KernelSpec k;
  if (d.problem == Problem::kMaxCut) {
    // 2 s = 1 - (1 - alpha) int f^2 - alpha F2(rho)
    k.lambda1 = 1.0 - a;
    k.terms = {{a, d.rho}};
  } else if (d.variant == Rho0Variant::kClamped) {
    // 4 s = 3 - (1 - alpha) int f^2 - 2 (1 - alpha) F2(rho) - 3 alpha F2(rho0)
    k.lambda1 = 1.0 - a;
    k.terms = {{2.0 * (1.0 - a), d.rho}, {3.0 * a, d.rho0()}};
  } else {
    // 4 s = 3 - (1 + 2 alpha) int f^2 - 2 (1 - alpha) F2(rho)
    k.lambda1 = 1.0 + 2.0 * a;
    k.terms = {{2.0 * (1.0 - a), d.rho}};
  }
  return k;
}

Eigen::MatrixXd KernelMatrix(double rho, int n) {
  if (n < 2) throw DomainError("kernel matrix needs n >= 2");
  if (!(rho >= -1.0 && rho <= 1.0)) throw DomainError("rho must lie in [-1,1]");
  const double inv = 1.0 / n;
  if (rho == 0.0) return Eigen::MatrixXd::Constant(n, n, inv * inv);
  if (rho == 1.0) return Eigen::MatrixXd::Identity(n, n) * inv;
  if (rho == -1.0) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = inv;
    return m;
  }
  const std::vector<double> a = EqualProbGrid(n);
  std::vector<double> e(n + 1);
  e[0] = -INFINITY;
  e[n] = INFINITY;
  for (int p = 1; p < n; ++p) e[p] = a[p - 1];
  // G(p, q) = Phi2(e_p, e_q). Symmetric, and Phi(e_p) = p / n gives
  // G(n - p, n - q) = 1 - p/n - q/n + G(p, q), so a quarter suffices.
  Eigen::MatrixXd g(n + 1, n + 1);
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= p && p + q <= n; ++q) {
      const double v = BivariateNormalCdf(e[p], e[q], rho);
      g(p, q) = v;
      g(q, p) = v;
      const double mirrored = 1.0 - (p + q) * inv + v;
      g(n - p, n - q) = mirrored;
      g(n - q, n - p) = mirrored;
    }
  }
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = g(i + 1, j + 1) - g(i, j + 1) - g(i + 1, j) + g(i, j);
    }
  }
  return m;
}

Eigen::MatrixXd BuildKernelMatrix(const KernelSpec& spec, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& t : spec.terms) {
    if (t.weight != 0.0) m += t.weight * KernelMatrix(t.rho, n);
  }
  return m;
}

ReducedSystem BuildReducedSystem(const Eigen::MatrixXd& m, double lambda,
                                 int clamp) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw StructuralError("kernel matrix is not square");
  if (clamp < 0 || 2 * clamp > n) throw DomainError("clamp out of range");
  ReducedSystem r;
  for (int i = clamp; i < n - clamp; ++i) r.interior.push_back(i);
  const int k = static_cast<int>(r.interior.size());
  r.m.resize(k, k);
  r.g.resize(k);
  for (int a = 0; a < k; ++a) {
    const int i = r.interior[a];
    for (int b = 0; b < k; ++b) r.m(a, b) = m(i, r.interior[b]);
    double s = 0.0;
    for (int j = 0; j < clamp; ++j) s += m(i, j) - m(i, n - 1 - j);
    r.g[a] = lambda * s;
  }
  return r;
}

GridFunction DiscreteSolution::ToGridFunction() const {
  if (!Feasible()) throw DomainError("discrete solution leaves [-1,1]");
  return GridFunction(values);
}

DiscreteSolution SolveDiscreteFredholm(const Eigen::MatrixXd& m, double lambda,
                                       int clamp, bool use_symmetry) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw StructuralError("kernel matrix is not square");
  if (clamp < 0 || 2 * clamp > n) throw DomainError("clamp out of range");
  DiscreteSolution s;
  s.clamp = clamp;
  s.values.assign(n, 0.0);
  for (int i = 0; i < clamp; ++i) {
    s.values[i] = -1.0;
    s.values[n - 1 - i] = 1.0;
  }
  s.solved = true;
  s.positive_definite = true;
  if (n - 2 * clamp > 0) {
    double rcond = 1.0;
    if (use_symmetry && n % 2 == 0) {
      const int h = n / 2;
      const int k = h - clamp;
      Eigen::MatrixXd a(k, k);
      Eigen::VectorXd g(k);
      for (int r = 0; r < k; ++r) {
        const int i = clamp + r;
        for (int c = 0; c < k; ++c) {
          const int j = clamp + c;
          a(r, c) = lambda * (m(i, j) - m(i, n - 1 - j));
        }
        a(r, r) += 1.0;
        double acc = 0.0;
        for (int j = 0; j < clamp; ++j) acc += m(i, j) - m(i, n - 1 - j);
        g[r] = lambda * acc;
      }
      const Eigen::VectorXd x = SolveSymmetric(a, g, &rcond, &s.positive_definite);
      for (int r = 0; r < k; ++r) {
        s.values[clamp + r] = x[r];
        s.values[n - 1 - clamp - r] = -x[r];
      }
    } else {
      const ReducedSystem red = BuildReducedSystem(m, lambda, clamp);
      const int k = static_cast<int>(red.interior.size());
      const Eigen::MatrixXd a =
          Eigen::MatrixXd::Identity(k, k) + lambda * red.m;
      const Eigen::VectorXd x = SolveSymmetric(a, red.g, &rcond, &s.positive_definite);
      for (int r = 0; r < k; ++r) s.values[red.interior[r]] = x[r];
    }
    s.solved = std::isfinite(rcond) && rcond > 1e-14;
  }
  const Eigen::Map<const Eigen::VectorXd> f(s.values.data(), n);
  const Eigen::VectorXd mf = m * f;
  for (int i = clamp; i < n - clamp; ++i) {
    s.residual = std::max(s.residual, std::abs(f[i] + lambda * mf[i]));
    s.max_interior = std::max(s.max_interior, std::abs(f[i]));
    if (!std::isfinite(f[i])) s.solved = false;
  }
  s.monotone = true;
  for (int i = 1; i < n; ++i) {
    if (s.values[i] < s.values[i - 1] - 1e-12) s.monotone = false;
  }
  return s;
}

FredholmSolution OptimalStepFunction(const HardDistribution& d, int n) {
  d.Validate();
  const Eigen::MatrixXd m_rho = KernelMatrix(d.rho, n);
  if (NeedsRho0Matrix(d)) {
    const Eigen::MatrixXd m_rho0 = KernelMatrix(d.rho0(), n);
    return OptimalStepFunction(d, n, m_rho, &m_rho0);
  }
  return OptimalStepFunction(d, n, m_rho, nullptr);
}

FredholmSolution OptimalStepFunction(const HardDistribution& d, int n,
                                     const Eigen::MatrixXd& m_rho,
                                     const Eigen::MatrixXd* m_rho0,
                                     int clamp_hint) {
  d.Validate();
  if (n < 2 || n % 2 != 0) throw DomainError("grid size must be even");
  if (m_rho.rows() != n || m_rho.cols() != n) {
    throw StructuralError("kernel matrix does not match the grid size");
  }
  if (NeedsRho0Matrix(d) && m_rho0 == nullptr) {
    throw StructuralError("missing rho0 kernel matrix");
  }
  const Eigen::MatrixXd& mr0 = m_rho0 != nullptr ? *m_rho0 : m_rho;
  const KernelSpec spec = KernelFor(d);

  FredholmSolution out;
  out.dist = d;
  out.n = n;
  out.completeness = Completeness(d);

  auto score = [&](const std::vector<double>& v) {
    const Eigen::Map<const Eigen::VectorXd> f(v.data(), n);
    const double sq = f.squaredNorm() / n;
    const double f2r = QuadForm(m_rho, f);
    const double f2r0 = NeedsRho0Matrix(d) ? QuadForm(mr0, f) : f2r;
    return SoundnessFrom(d, sq, f2r, f2r0);
  };

  const int half = n / 2;
  if (spec.lambda1 <= 0.0) {
    // No penalty on int f^2: every cell saturates and f = sign.
    out.clamp = half;
    out.lambda = std::numeric_limits<double>::infinity();
    out.values.assign(n, 1.0);
    for (int i = 0; i < half; ++i) out.values[i] = -1.0;
    out.soundness = score(out.values);
    out.consistent = true;
    return out;
  }

  Eigen::MatrixXd m;
  if (d.problem == Problem::kMaxCut) {
    m = spec.terms[0].weight * m_rho;
  } else if (d.variant == Rho0Variant::kOne) {
    m = spec.terms[0].weight * m_rho;
  } else {
    m = spec.terms[0].weight * m_rho + spec.terms[1].weight * mr0;
  }
  const double lambda = n / spec.lambda1;
  out.lambda = lambda;

  std::map<int, DiscreteSolution> cache;
  auto solve = [&](int c) -> const DiscreteSolution& {
    auto it = cache.find(c);
    if (it != cache.end()) return it->second;
    DiscreteSolution s = SolveDiscreteFredholm(m, lambda, c);
    if (!s.solved) {
      // Singular for this lambda; a tiny perturbation moves off the
      // finitely many bad values.
      s = SolveDiscreteFredholm(m, lambda * (1.0 + 1e-9), c);
    }
    return cache.emplace(c, std::move(s)).first->second;
  };
  auto feasible = [&](int c) { return solve(c).Feasible(); };

  // Smallest feasible clamp count; c = half (f = sign) is always feasible.
  int lo = -1;
  int hi = half;
  if (clamp_hint >= 0 && clamp_hint <= half) {
    if (feasible(clamp_hint)) {
      hi = clamp_hint;
      for (int step = 1; hi > lo + 1; step *= 2) {
        const int cand = std::max(lo + 1, hi - step);
        if (!feasible(cand)) {
          lo = cand;
          break;
        }
        hi = cand;
      }
    } else {
      lo = clamp_hint;
      for (int step = 1; hi > lo + 1; step *= 2) {
        const int cand = std::min(hi - 1, lo + step);
        if (feasible(cand)) {
          hi = cand;
          break;
        }
        lo = cand;
      }
    }
  }
  while (hi > lo + 1) {
    const int mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  int best = -1;
  double best_s = -std::numeric_limits<double>::infinity();
  auto consider = [&](int c) {
    const DiscreteSolution& s = solve(c);
    if (!s.Consistent()) return;
    const double v = score(s.values);
    if (v > best_s) {
      best_s = v;
      best = c;
    }
  };
  for (int c = hi; c <= std::min(half, hi + 2); ++c) consider(c);
  consider(half);
  if (!solve(hi).Consistent() || !solve(hi).positive_definite) {
    for (int c = 0; c <= half; ++c) consider(c);
  }
  out.consistent = best >= 0;
  if (best < 0) {
    // Nothing consistent: report the best clamped vector anyway.
    for (int c = 0; c <= half; ++c) {
      const DiscreteSolution& s = solve(c);
      if (!s.Feasible()) continue;
      const double v = score(s.values);
      if (v > best_s) {
        best_s = v;
        best = c;
      }
    }
  }
  const DiscreteSolution& s = solve(best);
  out.clamp = best;
  out.values = s.values;
  for (double& v : out.values) v = std::clamp(v, -1.0, 1.0);
  out.residual = s.residual;
  out.soundness = best_s;
  return out;
}

double Completeness(const HardDistribution& d) {
  d.Validate();
  const double a = d.alpha;
  if (d.problem == Problem::kMaxCut) return a * (1.0 - d.rho) / 2.0;
  if (d.variant == Rho0Variant::kOne) return (1.0 - a) * (2.0 - 2.0 * d.rho) / 4.0;
  return a * (3.0 - 3.0 * d.rho0()) / 4.0 + (1.0 - a) * (2.0 - 2.0 * d.rho) / 4.0;
}

double Soundness(const StepFunction& f, const HardDistribution& d) {
  d.Validate();
  const double sq = f.GaussianMoment(2);
  const double f2r = F2(f, d.rho);
  const double f2r0 = NeedsRho0Matrix(d) ? F2(f, d.rho0()) : f2r;
  return SoundnessFrom(d, sq, f2r, f2r0);
}

double Soundness(const GridFunction& f, const HardDistribution& d) {
  return Soundness(f.ToStepFunction(), d);
}

std::vector<CurvePoint> CurveSamples(Problem p, const std::vector<double>& alphas,
                                     const std::vector<double>& rhos, int n) {
  if (alphas.empty() || rhos.empty()) throw DomainError("empty grid");
  const Eigen::MatrixXd m_third = KernelMatrix(-1.0 / 3.0, n);
  std::vector<std::vector<CurvePoint>> per_rho(rhos.size());
  ParallelFor(rhos.size(), [&](size_t r) {
    const double rho = rhos[r];
    const Eigen::MatrixXd m_rho = KernelMatrix(rho, n);
    std::vector<Rho0Variant> variants{Rho0Variant::kClamped};
    if (p == Problem::kNae3) variants.push_back(Rho0Variant::kOne);
    for (Rho0Variant v : variants) {
      int hint = -1;
      for (double alpha : alphas) {
        HardDistribution d{p, alpha, rho, v};
        if (v == Rho0Variant::kOne) d.alpha = std::min(alpha, kOneVariantAlphaCap);
        if (Completeness(d) <= kMinCompleteness) continue;
        const Eigen::MatrixXd* m0 = rho < -1.0 / 3.0 ? &m_third : &m_rho;
        const FredholmSolution s = OptimalStepFunction(d, n, m_rho, m0, hint);
        hint = s.clamp;
        per_rho[r].push_back({s.completeness, s.soundness, d.alpha, rho, v});
      }
    }
  });
  std::vector<CurvePoint> all;
  for (auto& v : per_rho) all.insert(all.end(), v.begin(), v.end());
  return all;
}

std::vector<CurvePoint> LowerEnvelope(const std::vector<CurvePoint>& samples,
                                      int buckets) {
  if (samples.empty() || buckets < 1) return {};
  double cmin = samples[0].completeness;
  double cmax = cmin;
  for (const auto& s : samples) {
    cmin = std::min(cmin, s.completeness);
    cmax = std::max(cmax, s.completeness);
  }
  const double width = std::max(cmax - cmin, 1e-15) / buckets;
  std::vector<int> pick(buckets, -1);
  for (size_t i = 0; i < samples.size(); ++i) {
    int b = static_cast<int>((samples[i].completeness - cmin) / width);
    b = std::clamp(b, 0, buckets - 1);
    if (pick[b] < 0 || samples[i].soundness < samples[pick[b]].soundness) {
      pick[b] = static_cast<int>(i);
    }
  }
  // Soundness can only rise with completeness: carry minima downwards.
  std::vector<CurvePoint> env;
  int carry = -1;
  for (int b = buckets - 1; b >= 0; --b) {
    if (pick[b] >= 0 &&
        (carry < 0 || samples[pick[b]].soundness < samples[carry].soundness)) {
      carry = pick[b];
    }
    if (pick[b] >= 0) {
      CurvePoint p = samples[carry];
      if (carry != pick[b]) p.completeness = samples[pick[b]].completeness;
      env.push_back(p);
    }
  }
  std::reverse(env.begin(), env.end());
  return env;
}

std::vector<CurvePoint> Curve(Problem p, const std::vector<double>& alphas,
                              const std::vector<double>& rhos, int n,
                              int buckets) {
  return LowerEnvelope(CurveSamples(p, alphas, rhos, n), buckets);
}

RatioResult ApproxRatio(Problem p, const RatioOptions& o) {
  const std::vector<double> alphas = Linspace(o.alpha_min, o.alpha_max, o.coarse_alpha);
  const std::vector<double> rhos = Linspace(o.rho_min, o.rho_max, o.coarse_rho);
  std::vector<Rho0Variant> variants{Rho0Variant::kClamped};
  if (p == Problem::kNae3 && o.include_rho0_one) variants.push_back(Rho0Variant::kOne);

  // Coarse phase, one task per rho column.
  struct Best {
    double ratio = std::numeric_limits<double>::infinity();
    HardDistribution d;
    int evals = 0;
  };
  const Eigen::MatrixXd m_third = KernelMatrix(-1.0 / 3.0, o.coarse_n);
  std::vector<Best> column(rhos.size());
  ParallelFor(rhos.size(), [&](size_t r) {
    const double rho = rhos[r];
    const Eigen::MatrixXd m_rho = KernelMatrix(rho, o.coarse_n);
    const Eigen::MatrixXd* m0 = rho < -1.0 / 3.0 ? &m_third : &m_rho;
    for (Rho0Variant v : variants) {
      int hint = -1;
      for (double alpha : alphas) {
        HardDistribution d{p, alpha, rho, v};
        if (v == Rho0Variant::kOne) d.alpha = std::min(alpha, kOneVariantAlphaCap);
        if (Completeness(d) <= kMinCompleteness) continue;
        const FredholmSolution s = OptimalStepFunction(d, o.coarse_n, m_rho, m0, hint);
        hint = s.clamp;
        ++column[r].evals;
        if (s.ratio() < column[r].ratio) {
          column[r].ratio = s.ratio();
          column[r].d = d;
        }
      }
    }
  });
  Best coarse;
  for (const auto& c : column) {
    coarse.evals += c.evals;
    if (c.ratio < coarse.ratio) {
      coarse.ratio = c.ratio;
      coarse.d = c.d;
    }
  }
  if (!std::isfinite(coarse.ratio)) throw NumericError("empty ratio search grid");

  RatioResult res;
  res.coarse_ratio = coarse.ratio;
  res.evaluations = coarse.evals;
  HardDistribution cur = coarse.d;
  const int n = o.fine_n;

  // Fine phase. The rho kernels are cached by value.
  const Eigen::MatrixXd m_third_fine = KernelMatrix(-1.0 / 3.0, n);
  double cached_rho = std::numeric_limits<double>::quiet_NaN();
  Eigen::MatrixXd cached_m;
  int hint = -1;
  auto solve_at = [&](const HardDistribution& d) {
    if (!(d.rho == cached_rho)) {
      cached_m = KernelMatrix(d.rho, n);
      cached_rho = d.rho;
    }
    const Eigen::MatrixXd* m0 = d.rho < -1.0 / 3.0 ? &m_third_fine : &cached_m;
    ++res.evaluations;
    FredholmSolution s = OptimalStepFunction(d, n, cached_m, m0, hint);
    hint = s.clamp;
    return s;
  };
  auto ratio_at = [&](const HardDistribution& d) {
    if (Completeness(d) <= kMinCompleteness) {
      return std::numeric_limits<double>::infinity();
    }
    return solve_at(d).ratio();
  };

  const double amax = cur.variant == Rho0Variant::kOne
                          ? std::min(o.alpha_max, kOneVariantAlphaCap)
                          : o.alpha_max;
  double ha = alphas.size() > 1 ? 2.0 * (alphas[1] - alphas[0]) : 0.0;
  double hr = rhos.size() > 1 ? 2.0 * (rhos[1] - rhos[0]) : 0.0;
  for (int round = 0; round < o.refine_rounds; ++round) {
    if (ha > 0.0) {
      const double a = std::max(o.alpha_min, cur.alpha - ha);
      const double b = std::min(amax, cur.alpha + ha);
      cur.alpha = GoldenMin(
          [&](double x) {
            HardDistribution d = cur;
            d.alpha = x;
            return ratio_at(d);
          },
          a, b, 1e-6).first;
    }
    if (hr > 0.0) {
      const double a = std::max(o.rho_min, cur.rho - hr);
      const double b = std::min(o.rho_max, cur.rho + hr);
      cur.rho = GoldenMin(
          [&](double x) {
            HardDistribution d = cur;
            d.rho = x;
            return ratio_at(d);
          },
          a, b, 1e-6).first;
    }
    ha /= 2.0;
    hr /= 2.0;
  }
  const FredholmSolution fin = solve_at(cur);
  res.ratio = fin.ratio();
  res.dist = cur;
  res.soundness = fin.soundness;
  res.completeness = fin.completeness;
  res.clamp = fin.clamp;
  return res;
}

SLinearFit FitSLinear(const GridFunction& f) {
  SLinearFit fit;
  const std::vector<double> x = f.Midpoints();
  double sxx = 0.0;
  double sxf = 0.0;
  for (int i = 0; i < f.cells(); ++i) {
    if (std::abs(f[i]) >= 1.0 - 1e-9) continue;
    sxx += x[i] * x[i];
    sxf += x[i] * f[i];
    ++fit.interior_cells;
  }
  if (fit.interior_cells == 0 || sxx == 0.0) return fit;
  fit.degenerate = false;
  fit.slope = sxf / sxx;
  for (int i = 0; i < f.cells(); ++i) {
    if (std::abs(f[i]) >= 1.0 - 1e-9) continue;
    const double model = std::clamp(fit.slope * x[i], -1.0, 1.0);
    fit.max_deviation = std::max(fit.max_deviation, std::abs(f[i] - model));
  }
  return fit;
}

SuccessiveResult SuccessiveApproximation(const Eigen::MatrixXd& m,
                                         const Eigen::VectorXd& g,
                                         double lambda, int iterations) {
  if (iterations < 1) throw DomainError("need at least one iteration");
  if (m.rows() != m.cols() || m.rows() != g.size()) {
    throw StructuralError("system dimensions disagree");
  }
  SuccessiveResult r;
  Eigen::VectorXd f = Eigen::VectorXd::Zero(g.size());
  int growth = 0;
  for (int it = 0; it < iterations; ++it) {
    f = g - lambda * (m * f);
    const double res = (f + lambda * (m * f) - g).cwiseAbs().maxCoeff();
    if (!r.residuals.empty() && res > r.residuals.back()) {
      ++growth;
    } else {
      growth = 0;
    }
    r.residuals.push_back(res);
    if (growth >= 3 || !std::isfinite(res)) {
      r.diverged = true;
      break;
    }
  }
  r.values.assign(f.data(), f.data() + f.size());
  return r;
}

}  // namespace rpr2
