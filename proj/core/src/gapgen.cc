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

#include "rpr2/gapgen.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rpr2/errors.h"
#include "rpr2/hardness.h"
#include "rpr2/parallel.h"
#include "rpr2/pipeline.h"
#include "rpr2/random.h"

namespace rpr2 {
namespace {

constexpr int kShards = 64;

int64_t Choose(int64_t n, int k) {
  if (n < k) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// k distinct indices in [0, n), in sampling order.
std::vector<int> Distinct(int n, int k, std::mt19937_64& eng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> out;
  out.reserve(k);
  while (static_cast<int>(out.size()) < k) {
    const int i = pick(eng);
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  }
  return out;
}

std::vector<int> Signs(int k, std::mt19937_64& eng) {
  std::vector<int> s(k);
  for (int& v : s) v = (eng() >> 63) ? 1 : -1;
  return s;
}

int64_t ShardCount(int64_t total, int shard) {
  return total / kShards + (shard < total % kShards ? 1 : 0);
}

struct Acc {
  double sum = 0.0;
  double sum_sq = 0.0;
  int64_t n = 0;
  void Add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
};

MomentEstimate Pool(const std::vector<Acc>& acc) {
  Acc t;
  for (const auto& a : acc) {
    t.sum += a.sum;
    t.sum_sq += a.sum_sq;
    t.n += a.n;
  }
  MomentEstimate e;
  e.samples = t.n;
  if (t.n == 0) return e;
  e.value = t.sum / t.n;
  if (t.n > 1) {
    const double var = std::max(0.0, (t.sum_sq - t.n * e.value * e.value) / (t.n - 1));
    e.std_error = std::sqrt(var / t.n);
  }
  return e;
}

// Sunflower moments with x_v supplied by value(v, eng).
template <typename Value>
GapMoments SunflowerMoments(int n, int64_t samples, uint64_t seed, Value value) {
  if (2 * 4 + 1 > n) throw DomainError("sunflower moments need n >= 9");
  std::vector<Acc> a2(kShards);
  std::vector<Acc> a4(kShards);
  ParallelFor(kShards, [&](size_t s) {
    std::mt19937_64 eng = ShardEngine(seed, s);
    const int64_t m = ShardCount(samples, static_cast<int>(s));
    for (int64_t i = 0; i < m; ++i) {
      const auto p = SunflowerSample(n, 2, eng);
      a2[s].Add(value(p[0], eng) * value(p[1], eng));
      const auto q = SunflowerSample(n, 4, eng);
      a4[s].Add(value(q[0], eng) * value(q[1], eng) * value(q[2], eng) *
                value(q[3], eng));
    }
  });
  return {Pool(a2), Pool(a4)};
}

}  // namespace

SparseVec SparseVec::Make(std::array<int, 3> idx, std::array<int, 3> sign) {
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return idx[a] < idx[b]; });
  SparseVec v;
  for (int t = 0; t < 3; ++t) {
    v.idx[t] = idx[order[t]];
    v.sign[t] = sign[order[t]];
    if (v.sign[t] != 1 && v.sign[t] != -1) throw DomainError("signs must be +-1");
    if (v.idx[t] < 0) throw DomainError("negative coordinate");
  }
  if (v.idx[0] == v.idx[1] || v.idx[1] == v.idx[2]) {
    throw DomainError("coordinates must be distinct");
  }
  return v;
}

SparseVec SparseVec::Negated() const {
  SparseVec v = *this;
  for (int& s : v.sign) s = -s;
  return v;
}

int SparseVec::Dot3(const SparseVec& o) const {
  int d = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (idx[a] == o.idx[b]) d += sign[a] * o.sign[b];
    }
  }
  return d;
}

int SparseVec::PositiveCount() const {
  return (sign[0] > 0) + (sign[1] > 0) + (sign[2] > 0);
}

int64_t SparseVec::Literal(int n) const {
  if (idx[2] >= n) throw DomainError("coordinate outside the dimension");
  const int64_t rank = Choose(idx[0], 1) + Choose(idx[1], 2) + Choose(idx[2], 3);
  const int bits = (sign[1] * sign[0] < 0 ? 1 : 0) + (sign[2] * sign[0] < 0 ? 2 : 0);
  return sign[0] * (rank * 4 + bits + 1);
}

int64_t GapNumVars(int n) { return 4 * Choose(n, 3); }

SparseVec GapVector(int n, int64_t id) {
  if (id < 1 || id > GapNumVars(n)) throw DomainError("variable id out of range");
  int64_t rank = (id - 1) / 4;
  const int bits = static_cast<int>((id - 1) % 4);
  std::array<int, 3> idx{};
  int top = n - 1;
  for (int t = 2; t >= 0; --t) {
    while (Choose(top, t + 1) > rank) --top;
    idx[t] = top;
    rank -= Choose(top, t + 1);
    --top;
  }
  return SparseVec::Make(idx, {1, (bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1});
}

double GapInstance::FiveWeight() const { return 3.0 / std::sqrt(21.0); }

NaeInstance GapInstance::ToNaeInstance() const {
  std::vector<NaeClause> clauses;
  clauses.reserve(c3.size() + c5.size());
  for (const auto* cls : {&c3, &c5}) {
    for (const auto& c : *cls) {
      NaeClause nc;
      nc.weight = c.weight;
      for (const auto& v : c.vecs) nc.literals.push_back(static_cast<int>(v.Literal(n)));
      clauses.push_back(std::move(nc));
    }
  }
  return NaeInstance(static_cast<int>(num_vars()), std::move(clauses));
}

VectorAssignment GapInstance::ToVectors() const {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<std::vector<VectorAssignment::Entry>> vecs(num_vars());
  for (int64_t id = 1; id <= num_vars(); ++id) {
    const SparseVec v = GapVector(n, id);
    for (int t = 0; t < 3; ++t) vecs[id - 1].emplace_back(v.idx[t], v.sign[t] * s);
  }
  return VectorAssignment(n, std::move(vecs));
}

std::string GapInstance::VectorText() const {
  std::ostringstream out;
  out << "v " << num_vars() << ' ' << n << '\n';
  for (int64_t id = 1; id <= num_vars(); ++id) {
    const SparseVec v = GapVector(n, id);
    out << id << " s3";
    for (int t = 0; t < 3; ++t) {
      out << ' ' << v.idx[t] + 1 << ':' << (v.sign[t] > 0 ? "1" : "-1");
    }
    out << '\n';
  }
  return out.str();
}

GapInstance GenGapInstance(int n, int64_t m3, int64_t m5, uint64_t seed) {
  if (n < 12) throw DomainError("gap instances need n >= 12");
  if (m3 < 1 || m5 < 1) throw DomainError("clause counts must be positive");
  if (GapNumVars(n) > INT32_MAX) throw DomainError("n too large for int literals");
  GapInstance g;
  g.n = n;
  const double w5 = g.FiveWeight() / m5;
  const double w3 = (1.0 - g.FiveWeight()) / m3;
  std::vector<std::vector<GapClause>> s3(kShards);
  std::vector<std::vector<GapClause>> s5(kShards);
  ParallelFor(kShards, [&](size_t shard) {
    std::mt19937_64 eng = ShardEngine(seed, shard);
    const int64_t k3 = ShardCount(m3, static_cast<int>(shard));
    for (int64_t c = 0; c < k3; ++c) {
      const auto i = Distinct(n, 6, eng);
      const auto s = Signs(6, eng);
      GapClause cl{w3, {}};
      cl.vecs.push_back(SparseVec::Make({i[0], i[1], i[3]}, {s[0], -s[1], s[3]}));
      cl.vecs.push_back(SparseVec::Make({i[1], i[2], i[4]}, {s[1], -s[2], s[4]}));
      cl.vecs.push_back(SparseVec::Make({i[2], i[0], i[5]}, {s[2], -s[0], s[5]}));
      s3[shard].push_back(std::move(cl));
    }
    const int64_t k5 = ShardCount(m5, static_cast<int>(shard));
    for (int64_t c = 0; c < k5; ++c) {
      const auto i = Distinct(n, 12, eng);
      const auto s = Signs(12, eng);
      GapClause cl{w5, {}};
      for (int j = 1; j <= 4; ++j) {
        cl.vecs.push_back(SparseVec::Make({i[0], i[2 * j - 1], i[2 * j]},
                                          {s[0], s[2 * j - 1], s[2 * j]}));
      }
      cl.vecs.push_back(SparseVec::Make({i[9], i[10], i[11]}, {s[9], s[10], s[11]}));
      s5[shard].push_back(std::move(cl));
    }
  });
  for (int s = 0; s < kShards; ++s) {
    g.c3.insert(g.c3.end(), s3[s].begin(), s3[s].end());
    g.c5.insert(g.c5.end(), s5[s].begin(), s5[s].end());
  }
  return g;
}

std::vector<WitnessRow> CompletenessWitness(int kind) {
  if (kind == 3) {
    return {{{1, 1, -1}, 1.0 / 3.0}, {{1, -1, 1}, 1.0 / 3.0}, {{-1, 1, 1}, 1.0 / 3.0}};
  }
  if (kind == 5) {
    return {{{-1, 1, 1, 1, 1}, 1.0 / 6.0},
            {{1, -1, 1, 1, 1}, 1.0 / 6.0},
            {{1, 1, -1, 1, 1}, 1.0 / 6.0},
            {{1, 1, 1, -1, 1}, 1.0 / 6.0},
            {{1, 1, 1, 1, -1}, 1.0 / 3.0}};
  }
  throw DomainError("witness clause kind must be 3 or 5");
}

std::vector<SparseVec> SunflowerSample(int n, int k, std::mt19937_64& eng) {
  if (k < 1 || 2 * k + 1 > n) throw DomainError("sunflower needs 1 <= k and 2k + 1 <= n");
  const auto i = Distinct(n, 2 * k + 1, eng);
  const auto b = Signs(2 * k + 1, eng);
  std::vector<SparseVec> out;
  out.reserve(k);
  for (int j = 1; j <= k; ++j) {
    out.push_back(SparseVec::Make({i[0], i[2 * j - 1], i[2 * j]},
                                  {b[0], b[2 * j - 1], b[2 * j]}));
  }
  return out;
}

std::vector<SparseVec> SunflowerSample(int n, int k, uint64_t seed) {
  std::mt19937_64 eng = ShardEngine(seed, 0);
  return SunflowerSample(n, k, eng);
}

void RoundingRule::Validate() const {
  if (!(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0)) {
    throw DomainError("rule probabilities must lie in [0,1]");
  }
}

double RoundingRule::ProbOne(const SparseVec& v) const {
  switch (v.PositiveCount()) {
    case 3:
      return p1;
    case 2:
      return p2;
    case 1:
      return 1.0 - p2;
    default:
      return 1.0 - p1;
  }
}

RoundingRule TunedRule() {
  // (p1 - 1)^2 / 4 = 2 sqrt(21) - 9.
  return {1.0 - 2.0 * std::sqrt(2.0 * std::sqrt(21.0) - 9.0), 0.0};
}

Assignment SampleRuleAssignment(const RoundingRule& rule, int n, uint64_t seed) {
  rule.Validate();
  const CounterRng rng(seed);
  Assignment x(GapNumVars(n));
  for (int64_t id = 1; id <= GapNumVars(n); ++id) {
    x[id - 1] = rng.Uniform(0, id) < rule.ProbOne(GapVector(n, id)) ? 1 : -1;
  }
  return x;
}

GapMoments AssignmentMoments(const RoundingRule& rule, int n, int64_t samples,
                             uint64_t seed) {
  rule.Validate();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  return SunflowerMoments(n, samples, seed,
                          [&](const SparseVec& v, std::mt19937_64& eng) {
                            return unif(eng) < rule.ProbOne(v) ? 1.0 : -1.0;
                          });
}

GapMoments AssignmentMoments(const Assignment& x, int n, int64_t samples,
                             uint64_t seed) {
  if (static_cast<int64_t>(x.size()) != GapNumVars(n)) {
    throw StructuralError("assignment size does not match 4 C(n, 3)");
  }
  return SunflowerMoments(n, samples, seed,
                          [&](const SparseVec& v, std::mt19937_64&) {
                            const int64_t lit = v.Literal(n);
                            const double xv = x[std::abs(lit) - 1];
                            return lit > 0 ? xv : -xv;
                          });
}

GapEvaluation EvaluateGap(const GapInstance& g, const RoundingRule& rule,
                          int trials, uint64_t seed, int64_t moment_samples) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  rule.Validate();
  const NaeInstance inst = g.ToNaeInstance();
  GapEvaluation ev;
  ev.trials = trials;
  double sum = 0.0;
  double sum_sq = 0.0;
  double f2 = 0.0;
  double f4 = 0.0;
  double v2 = 0.0;
  double v4 = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Assignment x = SampleRuleAssignment(rule, g.n, HashKey(seed, t, 0));
    const double frac = Evaluate(inst, x);
    sum += frac;
    sum_sq += frac * frac;
    const GapMoments m = AssignmentMoments(x, g.n, moment_samples, HashKey(seed, t, 1));
    f2 += m.f2.value;
    f4 += m.f4.value;
    v2 += m.f2.std_error * m.f2.std_error;
    v4 += m.f4.std_error * m.f4.std_error;
    ev.moments.f2.samples += m.f2.samples;
    ev.moments.f4.samples += m.f4.samples;
  }
  ev.fraction = sum / trials;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - trials * ev.fraction * ev.fraction) / (trials - 1));
    ev.std_error = std::sqrt(var / trials);
  }
  ev.moments.f2.value = f2 / trials;
  ev.moments.f4.value = f4 / trials;
  ev.moments.f2.std_error = std::sqrt(v2) / trials;
  ev.moments.f4.std_error = std::sqrt(v4) / trials;
  ev.predicted = MixtureValue(g.FiveWeight(), ev.moments.f2.value, ev.moments.f4.value);
  return ev;
}

double SoundnessUpperEstimate(double f2, double f4, double p, double slack) {
  return MixtureValue(p, f2, std::max(f4, f2 * f2 - slack));
}

}  // namespace rpr2
