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

#ifndef RPR2_GRAM_H_
#define RPR2_GRAM_H_

#include <vector>

#include <Eigen/Dense>

namespace rpr2 {

struct GramDiagnostics {
  double symmetry_violation = 0.0;  // max |B_ij - B_ji|
  double diagonal_deviation = 0.0;  // max |B_ii - 1|
  double min_eigenvalue = 0.0;
  bool accepted = false;
};

// Pairwise biases of k unit vectors: a symmetric, unit-diagonal PSD matrix.
class GramConfig {
 public:
  // Throws DomainError if ValidateGram rejects the matrix.
  explicit GramConfig(Eigen::MatrixXd b, double tol = 1e-9);

  // Every off-diagonal entry equal to rho.
  static GramConfig Symmetric(int k, double rho);
  // Gram matrix of the given rows (each normalized to unit length first).
  static GramConfig FromVectors(const Eigen::MatrixXd& rows);

  int order() const { return static_cast<int>(b_.rows()); }
  const Eigen::MatrixXd& matrix() const { return b_; }
  double operator()(int i, int j) const { return b_(i, j); }

  // L with L L^T = B. Cholesky when B is positive definite, otherwise the
  // eigendecomposition with negative eigenvalues clipped to 0.
  Eigen::MatrixXd Factor() const;

 private:
  Eigen::MatrixXd b_;
};

// Throws StructuralError if b is not square.
GramDiagnostics ValidateGram(const Eigen::MatrixXd& b, double tol = 1e-9);

}  // namespace rpr2

#endif  // RPR2_GRAM_H_
