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

// Explicit MAX NAE-{3,5} gap instances. Variables are indexed by the vectors
// (b_1 e_i + b_2 e_j + b_3 e_k) / sqrt(3), i < j < k, with x_{-v} = -x_v:
// each antipodal pair is one variable, so there are 4 C(n, 3) of them.

#ifndef RPR2_GAPGEN_H_
#define RPR2_GAPGEN_H_

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rpr2/instance.h"
#include "rpr2/moments.h"

namespace rpr2 {

// Three signed coordinates, stored with idx sorted ascending. The value on
// coordinate idx[t] is sign[t] / sqrt(3).
struct SparseVec {
  std::array<int, 3> idx{};
  std::array<int, 3> sign{};

  // Sorts by index; throws DomainError on repeated indices or zero signs.
  static SparseVec Make(std::array<int, 3> idx, std::array<int, 3> sign);

  SparseVec Negated() const;
  // 3 * (u . v), an exact integer.
  int Dot3(const SparseVec& o) const;
  int PositiveCount() const;
  // +-(1-based variable id) for a dimension-n space.
  int64_t Literal(int n) const;
};

int64_t GapNumVars(int n);
// The representative of variable id (first sign positive).
SparseVec GapVector(int n, int64_t id);

struct GapClause {
  double weight = 0.0;
  std::vector<SparseVec> vecs;
};

struct GapInstance {
  int n = 0;
  std::vector<GapClause> c3;
  std::vector<GapClause> c5;

  int64_t num_vars() const { return GapNumVars(n); }
  double FiveWeight() const;  // 3 / sqrt(21)
  NaeInstance ToNaeInstance() const;
  VectorAssignment ToVectors() const;
  // Text in the vector file format with exact sign entries.
  std::string VectorText() const;
};

// m3 3-clauses and m5 5-clauses sampled uniformly from their classes, with
// class weights 1 - 3/sqrt(21) and 3/sqrt(21) split evenly. Throws
// DomainError unless n >= 12 and m3, m5 >= 1.
GapInstance GenGapInstance(int n, int64_t m3, int64_t m5, uint64_t seed);

struct WitnessRow {
  std::vector<int> x;
  double prob = 0.0;
};

// Distribution over NAE-satisfying assignments reproducing the clause's
// pairwise biases. kind must be 3 or 5.
std::vector<WitnessRow> CompletenessWitness(int kind);

// k vectors sharing one signed coordinate, with disjoint random petals.
// Throws DomainError if 2k + 1 > n.
std::vector<SparseVec> SunflowerSample(int n, int k, std::mt19937_64& eng);
std::vector<SparseVec> SunflowerSample(int n, int k, uint64_t seed);

// Canonical vectors with 3 positive coordinates round to 1 with probability
// p1, with 2 positive coordinates with probability p2; the rest take minus
// their antipode's value.
struct RoundingRule {
  double p1 = 0.5;
  double p2 = 0.5;

  // Throws DomainError unless both lie in [0, 1].
  void Validate() const;
  // Probability that x_v = 1 for a vector v (not just representatives).
  double ProbOne(const SparseVec& v) const;
};

// The tuned rule: F2 = ((p1 + p2 - 1) / 2)^2 = 2 sqrt(21) - 9 with p2 = 0.
RoundingRule TunedRule();

// A frozen assignment drawn from the rule, indexed by variable id.
Assignment SampleRuleAssignment(const RoundingRule& rule, int n, uint64_t seed);

struct GapMoments {
  MomentEstimate f2;
  MomentEstimate f4;
};

// F2 over sunflower pairs and F4 over sunflower quadruples. The rule form
// draws fresh rule randomness per sample; the assignment form uses x as is.
GapMoments AssignmentMoments(const RoundingRule& rule, int n, int64_t samples,
                             uint64_t seed);
GapMoments AssignmentMoments(const Assignment& x, int n, int64_t samples,
                             uint64_t seed);

struct GapEvaluation {
  double fraction = 0.0;   // mean satisfied weight over the trials
  double std_error = 0.0;
  double predicted = 0.0;  // mixture value at the measured moments
  GapMoments moments;      // pooled over the trials' assignments
  int trials = 0;
};

// Each trial draws an assignment from the rule and evaluates it on the
// instance; the moments of the same assignments feed the prediction.
GapEvaluation EvaluateGap(const GapInstance& g, const RoundingRule& rule,
                          int trials, uint64_t seed,
                          int64_t moment_samples = 200000);

// MixtureValue(p, F2, max(F4, F2^2 - slack)).
double SoundnessUpperEstimate(double f2, double f4, double p,
                              double slack = 0.0);

}  // namespace rpr2

#endif  // RPR2_GAPGEN_H_
