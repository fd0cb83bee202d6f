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

// End-to-end RPR2 rounding on weighted NAE instances: text formats, rounding,
// evaluation, baselines and the per-variable noising step used for long
// clauses.
//
// Instance format (line oriented, comments start with 'c'):
//   p nae <num_vars> <num_clauses>
//   <weight> <k> <lit_1> ... <lit_k>          lit = +-(1-based variable)
// Vector format:
//   v <num_vars> <dim>
//   <id> <x_1> ... <x_dim>                    dense
//   <id> s <idx>:<value> ...                  sparse, 1-based idx
//   <id> s3 <idx>:<sign> ...                  sparse, entries sign / sqrt(3)

#ifndef RPR2_PIPELINE_H_
#define RPR2_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rpr2/instance.h"
#include "rpr2/step_function.h"

namespace rpr2 {

// Throws ParseError (with the 1-based line) on malformed input and
// DomainError for invalid clauses.
NaeInstance ParseInstance(const std::string& text);
std::string FormatInstance(const NaeInstance& instance);

// Throws ParseError on malformed lines, missing or repeated ids.
VectorAssignment ParseVectors(const std::string& text);
std::string FormatVectors(const VectorAssignment& vectors);

// One RPR2 sample: r ~ N(0, I), then x_i = 1 with probability
// (1 + f(v_i . r)) / 2. The randomness is keyed by (seed, round, index), so
// a given round is reproducible on its own.
Assignment Rpr2Round(const VectorAssignment& vectors, const StepFunction& f,
                     uint64_t seed, uint64_t round = 0);

// Satisfied weight over total weight. Throws StructuralError if the
// assignment does not cover the instance or holds values other than +-1.
double Evaluate(const NaeInstance& instance, const Assignment& x);

// Expected value of a uniform random assignment:
// sum_C w_C (1 - 2^{1 - k_C}) / sum_C w_C.
double RandomBaseline(const NaeInstance& instance);

struct RoundsResult {
  Assignment best;
  double fraction = 0.0;           // best over the rounds
  std::vector<double> fractions;   // per round, in round order
  double mean = 0.0;
  double std_error = 0.0;
};

// Rounds 0..rounds-1 of Rpr2Round, evaluated in parallel. Throws DomainError
// for rounds < 1 and StructuralError on a variable count mismatch.
RoundsResult BestOfRounds(const NaeInstance& instance,
                          const VectorAssignment& vectors,
                          const StepFunction& f, int rounds, uint64_t seed);

// y_i = 1 with probability delta, -1 with probability delta, x_i otherwise.
// Throws DomainError unless delta is in [0, 1/2].
Assignment NoiseAssignment(const Assignment& x, double delta, uint64_t seed);

struct PqValues {
  double p = 0.0;  // 1 - 2 (1 - delta)^k + (1 - 2 delta)^k
  double q = 0.0;  // (1 - 2 delta)^k
};
PqValues PqValuesAt(int k, double delta);

// delta with Q_k(delta) = 1 - eps / 2.
double DeltaForEps(int k, double eps);

}  // namespace rpr2

#endif  // RPR2_PIPELINE_H_
