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

#ifndef RPR2_INSTANCE_H_
#define RPR2_INSTANCE_H_

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace rpr2 {

// Literal +v or -v for a 1-based variable v.
struct NaeClause {
  double weight = 1.0;
  std::vector<int> literals;
};

// Weighted not-all-equal clauses over variables 1..num_vars.
class NaeInstance {
 public:
  // Throws DomainError on non-positive weights, clauses shorter than 2,
  // repeated variables inside a clause, or literals out of range.
  NaeInstance(int num_vars, std::vector<NaeClause> clauses);

  int num_vars() const { return num_vars_; }
  const std::vector<NaeClause>& clauses() const { return clauses_; }
  double TotalWeight() const;

 private:
  int num_vars_;
  std::vector<NaeClause> clauses_;
};

// x_v in {-1, +1} for v = 1..n, stored 0-based.
using Assignment = std::vector<int8_t>;

// A unit vector in R^dim per variable, stored sparsely as (coordinate,
// value) pairs with 0-based coordinates.
class VectorAssignment {
 public:
  using Entry = std::pair<int, double>;

  // Throws DomainError if some vector is not unit length to `tol`, and
  // StructuralError if a coordinate falls outside [0, dim).
  VectorAssignment(int dim, std::vector<std::vector<Entry>> vectors,
                   double tol = 1e-12);
  // Rows of `dense` are the vectors of variables 1..rows.
  static VectorAssignment FromDense(const Eigen::MatrixXd& dense,
                                    double tol = 1e-12);

  int dim() const { return dim_; }
  int num_vars() const { return static_cast<int>(vectors_.size()); }
  const std::vector<Entry>& vector(int var) const { return vectors_[var - 1]; }

  double Dot(int var, const std::vector<double>& r) const;
  double Inner(int var_a, int var_b) const;

 private:
  int dim_;
  std::vector<std::vector<Entry>> vectors_;
};

}  // namespace rpr2

#endif  // RPR2_INSTANCE_H_
