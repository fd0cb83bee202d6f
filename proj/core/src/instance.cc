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

#include "rpr2/instance.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "rpr2/errors.h"

namespace rpr2 {

NaeInstance::NaeInstance(int num_vars, std::vector<NaeClause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 0) throw DomainError("negative variable count");
  std::vector<int> seen(num_vars_ + 1, -1);
  for (size_t c = 0; c < clauses_.size(); ++c) {
    const NaeClause& cl = clauses_[c];
    const std::string where = "clause " + std::to_string(c + 1) + ": ";
    if (!(cl.weight > 0.0) || !std::isfinite(cl.weight)) {
      throw DomainError(where + "weight must be positive");
    }
    if (cl.literals.size() < 2) {
      throw DomainError(where + "needs at least two literals");
    }
    for (int lit : cl.literals) {
      const int v = std::abs(lit);
      if (v < 1 || v > num_vars_) {
        throw DomainError(where + "literal " + std::to_string(lit) +
                          " out of range");
      }
      if (seen[v] == static_cast<int>(c)) {
        throw DomainError(where + "variable " + std::to_string(v) +
                          " repeated");
      }
      seen[v] = static_cast<int>(c);
    }
  }
}

double NaeInstance::TotalWeight() const {
  double w = 0.0;
  for (const auto& c : clauses_) w += c.weight;
  return w;
}

VectorAssignment::VectorAssignment(int dim,
                                   std::vector<std::vector<Entry>> vectors,
                                   double tol)
    : dim_(dim), vectors_(std::move(vectors)) {
  for (size_t v = 0; v < vectors_.size(); ++v) {
    double norm2 = 0.0;
    for (const auto& [coord, value] : vectors_[v]) {
      if (coord < 0 || coord >= dim_) {
        throw StructuralError("variable " + std::to_string(v + 1) +
                              ": coordinate outside the dimension");
      }
      norm2 += value * value;
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > tol) {
      throw DomainError("variable " + std::to_string(v + 1) +
                        ": vector is not unit length");
    }
  }
}

VectorAssignment VectorAssignment::FromDense(const Eigen::MatrixXd& dense,
                                             double tol) {
  std::vector<std::vector<Entry>> vecs(dense.rows());
  for (int i = 0; i < dense.rows(); ++i) {
    for (int j = 0; j < dense.cols(); ++j) {
      if (dense(i, j) != 0.0) vecs[i].emplace_back(j, dense(i, j));
    }
  }
  return VectorAssignment(static_cast<int>(dense.cols()), std::move(vecs), tol);
}

double VectorAssignment::Dot(int var, const std::vector<double>& r) const {
  double s = 0.0;
  for (const auto& [coord, value] : vectors_[var - 1]) s += value * r[coord];
  return s;
}

double VectorAssignment::Inner(int var_a, int var_b) const {
  std::unordered_map<int, double> a;
  for (const auto& [coord, value] : vectors_[var_a - 1]) a[coord] = value;
  double s = 0.0;
  for (const auto& [coord, value] : vectors_[var_b - 1]) {
    auto it = a.find(coord);
    if (it != a.end()) s += it->second * value;
  }
  return s;
}

}  // namespace rpr2
