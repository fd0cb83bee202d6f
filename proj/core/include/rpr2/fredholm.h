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

// Optimal odd rounding functions against the hard bias distributions of MAX
// CUT and MAX NAE-3-SAT.
//
// For a distribution D the best f maximizes the soundness, which after
// dropping constants means minimizing
//   L(f) = lambda1 * int f^2 phi + sum_j w_j F2[f](rho_j)
// over odd f with |f| <= 1. On the N-cell equal-mass grid F2[f](rho) becomes
// f^T M(rho) f with M_ij = P[X in cell i, Y in cell j], and stationarity on
// the unclamped cells reads
//   f_i + lambda (M f)_i = 0,   lambda = N / lambda1,   M = sum_j w_j M(rho_j).
// Cells where the unconstrained solution would leave [-1, 1] are clamped to
// -1 (the first i_a cells) and +1 (the last i_a cells).

#ifndef RPR2_FREDHOLM_H_
#define RPR2_FREDHOLM_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rpr2/grid_function.h"
#include "rpr2/step_function.h"

namespace rpr2 {

enum class Problem { kMaxCut, kNae3 };
enum class Rho0Variant { kClamped, kOne };

std::string ProblemName(Problem p);
std::string VariantName(Rho0Variant v);

// MAX CUT: weight alpha on edges of bias rho, 1 - alpha on edges of bias 1.
// NAE-3: weight alpha on triples (rho0, rho0, rho0), 1 - alpha on triples
// (rho, rho, 1), with rho0 = max(rho, -1/3) (clamped) or rho0 = 1 (one).
struct HardDistribution {
  Problem problem = Problem::kNae3;
  double alpha = 1.0;
  double rho = -1.0;
  Rho0Variant variant = Rho0Variant::kClamped;

  double rho0() const;
  // Throws DomainError unless alpha in [0,1] and rho in [-1,0].
  void Validate() const;
};

struct KernelTerm {
  double weight = 0.0;
  double rho = 0.0;
};

// L(f) = lambda1 * int f^2 phi + sum_j weight_j F2[f](rho_j). The scale is
// free; the constants below are those of the soundness expressions
// multiplied through so that nothing blows up at alpha = 0 or 1.
struct KernelSpec {
  double lambda1 = 0.0;
  std::vector<KernelTerm> terms;
};

KernelSpec KernelFor(const HardDistribution& d);

// M_ij = P[X in cell i, Y in cell j] for rho-correlated standard normals on
// the N-cell equal-mass grid. rho = 0 and +-1 are exact.
Eigen::MatrixXd KernelMatrix(double rho, int n);
Eigen::MatrixXd BuildKernelMatrix(const KernelSpec& spec, int n);

// Interior system (I + lambda M') f' = g after clamping the first and last
// `clamp` cells to -1 and +1.
struct ReducedSystem {
  Eigen::MatrixXd m;          // M restricted to interior rows and columns
  Eigen::VectorXd g;          // lambda * sum_{j clamped} M_ij f_j, negated
  std::vector<int> interior;  // 0-based cell indices
};
ReducedSystem BuildReducedSystem(const Eigen::MatrixXd& m, double lambda,
                                 int clamp);

struct DiscreteSolution {
  std::vector<double> values;  // all N cells, clamps attached
  int clamp = 0;
  bool solved = false;         // false when the interior matrix is singular
  double residual = 0.0;       // max interior |f_i + lambda (M f)_i|
  double max_interior = 0.0;   // max interior |f_i|
  bool monotone = false;
  // I + lambda M' was positive definite, so the interior solution minimizes
  // the quadratic rather than being a saddle.
  bool positive_definite = false;

  bool Feasible() const { return solved && max_interior <= 1.0 + 1e-12; }
  bool Consistent() const { return Feasible() && monotone; }
  // Throws DomainError unless Feasible().
  GridFunction ToGridFunction() const;
};

// Solves with the first and last `clamp` cells fixed. Needs 0 <= clamp <=
// N/2; clamp = N/2 (N even) clamps everything and returns sign. For even N
// the odd symmetry of the solution halves the system; `use_symmetry` = false
// forces the plain interior solve.
DiscreteSolution SolveDiscreteFredholm(const Eigen::MatrixXd& m, double lambda,
                                       int clamp, bool use_symmetry = true);

struct FredholmSolution {
  HardDistribution dist;
  int n = 0;
  int clamp = 0;
  double lambda = 0.0;
  std::vector<double> values;
  double residual = 0.0;
  double soundness = 0.0;
  double completeness = 0.0;
  bool consistent = false;

  double ratio() const { return soundness / completeness; }
  GridFunction f() const { return GridFunction(values); }
};

// Finds the clamp count by binary search on feasibility and returns the
// consistent solution of highest soundness among the next few counts and
// sign. When that solution is inconsistent or its system is indefinite every
// clamp count is scored instead.
// Requires even n >= 2.
FredholmSolution OptimalStepFunction(const HardDistribution& d, int n);

// Same, with kernel matrices supplied by the caller. m_rho0 may be null when
// the variant does not need it (MAX CUT, rho0 = 1, or rho0 == rho).
// clamp_hint >= 0 starts the search there.
FredholmSolution OptimalStepFunction(const HardDistribution& d, int n,
                                     const Eigen::MatrixXd& m_rho,
                                     const Eigen::MatrixXd* m_rho0,
                                     int clamp_hint = -1);

double Completeness(const HardDistribution& d);
double Soundness(const StepFunction& f, const HardDistribution& d);
double Soundness(const GridFunction& f, const HardDistribution& d);

struct CurvePoint {
  double completeness = 0.0;
  double soundness = 0.0;
  double alpha = 0.0;
  double rho = 0.0;
  Rho0Variant variant = Rho0Variant::kClamped;
};

// Every (alpha, rho, variant) grid point with positive completeness.
std::vector<CurvePoint> CurveSamples(Problem p, const std::vector<double>& alphas,
                                     const std::vector<double>& rhos, int n);
// Minimum soundness per completeness bucket, then made non-decreasing in
// completeness by carrying the best point of every higher bucket down.
std::vector<CurvePoint> LowerEnvelope(const std::vector<CurvePoint>& samples,
                                      int buckets);
std::vector<CurvePoint> Curve(Problem p, const std::vector<double>& alphas,
                              const std::vector<double>& rhos, int n,
                              int buckets = 200);

struct RatioOptions {
  int coarse_alpha = 500;
  int coarse_rho = 500;
  int coarse_n = 100;
  int fine_n = 600;
  int refine_rounds = 3;
  double alpha_min = 0.0;
  double alpha_max = 1.0;
  double rho_min = -1.0;
  double rho_max = 0.0;
  bool include_rho0_one = true;  // NAE-3 only
};

struct RatioResult {
  double ratio = 0.0;
  double coarse_ratio = 0.0;
  HardDistribution dist;
  double soundness = 0.0;
  double completeness = 0.0;
  int clamp = 0;
  int evaluations = 0;
};

// min over hard distributions of soundness(f*) / completeness: coarse grid
// at coarse_n, then refine_rounds rounds of golden-section search along
// alpha and rho at fine_n.
RatioResult ApproxRatio(Problem p, const RatioOptions& options);

struct SLinearFit {
  double slope = 0.0;
  double max_deviation = 0.0;
  int interior_cells = 0;
  bool degenerate = true;
};

// Least-squares slope through the origin of f against the cell medians over
// the unclamped cells, and max |f_i - clamp(s x_i)| over those cells.
SLinearFit FitSLinear(const GridFunction& f);

struct SuccessiveResult {
  std::vector<double> values;
  std::vector<double> residuals;  // max |f + lambda M f - g| per iteration
  bool diverged = false;
};

// f_0 = 0, f_k = g - lambda M f_{k-1}. Stops early and sets `diverged` when
// the residual grows three iterations in a row.
SuccessiveResult SuccessiveApproximation(const Eigen::MatrixXd& m,
                                         const Eigen::VectorXd& g,
                                         double lambda, int iterations);

}  // namespace rpr2

#endif  // RPR2_FREDHOLM_H_
