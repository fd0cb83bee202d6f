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

#include "rpr2/gram.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rpr2/errors.h"

namespace rpr2 {

GramDiagnostics ValidateGram(const Eigen::MatrixXd& b, double tol) {
  if (b.rows() != b.cols()) throw StructuralError("Gram matrix is not square");
  GramDiagnostics d;
  const int k = static_cast<int>(b.rows());
  for (int i = 0; i < k; ++i) {
    d.diagonal_deviation = std::max(d.diagonal_deviation, std::abs(b(i, i) - 1));
    for (int j = 0; j < i; ++j) {
      d.symmetry_violation =
          std::max(d.symmetry_violation, std::abs(b(i, j) - b(j, i)));
    }
  }
  if (k > 0) {
    const Eigen::MatrixXd sym = 0.5 * (b + b.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym,
                                                      Eigen::EigenvaluesOnly);
    d.min_eigenvalue = es.eigenvalues().minCoeff();
  }
  d.accepted = d.symmetry_violation <= tol && d.diagonal_deviation <= tol &&
               d.min_eigenvalue >= -tol;
  return d;
}

GramConfig::GramConfig(Eigen::MatrixXd b, double tol) : b_(std::move(b)) {
  const GramDiagnostics d = ValidateGram(b_, tol);
  if (!d.accepted) {
    std::ostringstream os;
    os << "invalid Gram matrix: symmetry " << d.symmetry_violation
       << ", diagonal " << d.diagonal_deviation << ", min eigenvalue "
       << d.min_eigenvalue;
    throw DomainError(os.str());
  }
}

GramConfig GramConfig::Symmetric(int k, double rho) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Constant(k, k, rho);
  b.diagonal().setOnes();
  return GramConfig(std::move(b));
}

GramConfig GramConfig::FromVectors(const Eigen::MatrixXd& rows) {
  Eigen::MatrixXd u = rows;
  for (int i = 0; i < u.rows(); ++i) u.row(i).normalize();
  Eigen::MatrixXd b = u * u.transpose();
  b.diagonal().setOnes();
  return GramConfig(std::move(b));
}

Eigen::MatrixXd GramConfig::Factor() const {
  Eigen::LLT<Eigen::MatrixXd> llt(b_);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b_);
  const Eigen::VectorXd root =
      es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal();
}

}  // namespace rpr2
