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

#include "rpr2/stepopt.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rpr2/errors.h"
#include "rpr2/moments.h"
#include "rpr2/nelder_mead.h"
#include "rpr2/parallel.h"
#include "rpr2/random.h"

namespace rpr2 {
namespace {

void CheckK(const std::vector<int>& K) {
  if (K.empty()) throw DomainError("clause size set is empty");
  for (int k : K) {
    if (k < 3) throw DomainError("clause sizes must be at least 3");
  }
}

// Maps optimizer coordinates to a step function; null on overflow.
struct Decoder {
  int l;
  bool pm1;

  int dim() const { return pm1 ? l : 2 * l + 1; }

  bool Decode(const std::vector<double>& p, std::vector<double>* a,
              std::vector<double>* b) const {
    a->assign(l, 0.0);
    b->assign(l + 1, 0.0);
    double x = 0.0;
    for (int i = 0; i < l; ++i) {
      if (p[i] > 5.0) return false;
      const double gap = std::exp(p[i]);
      x += gap;
      if (i > 0 && !(x > (*a)[i - 1])) return false;
      (*a)[i] = x;
    }
    for (int i = 0; i <= l; ++i) {
      (*b)[i] = pm1 ? (i % 2 == 0 ? -1.0 : 1.0) : std::sin(p[l + i]);
    }
    return true;
  }
};

}  // namespace

double SymmetricBias(int k) { return 1.0 - 4.0 / k; }

double ObjectiveAlphaK(const StepFunction& f, const std::vector<int>& K) {
  CheckK(K);
  double best = std::numeric_limits<double>::infinity();
  for (int k : K) best = std::min(best, SatProbSymmetric(f, k, SymmetricBias(k)));
  return best;
}

void StepSearchConfig::Validate() const {
  CheckK(K);
  if (steps < 1) throw DomainError("need at least one step");
  if (restarts < 1) throw DomainError("need at least one restart");
}

StepSearchResult OptimizeStep(const StepSearchConfig& c) {
  c.Validate();
  const Decoder dec{c.steps - 1, c.pm1};
  StepSearchResult out;
  auto finish = [&](const StepFunction& f) {
    out.f = f;
    out.per_k.clear();
    for (int k : c.K) out.per_k.push_back(SatProbSymmetric(f, k, SymmetricBias(k)));
    out.objective = *std::min_element(out.per_k.begin(), out.per_k.end());
  };
  if (dec.dim() == 0) {
    finish(StepFunction({}, {-1.0}));
    out.converged = true;
    return out;
  }
  auto loss = [&](const std::vector<double>& p) {
    std::vector<double> a;
    std::vector<double> b;
    if (!dec.Decode(p, &a, &b)) return std::numeric_limits<double>::infinity();
    return -ObjectiveAlphaK(StepFunction(a, b), c.K);
  };
  NelderMeadOptions nm;
  nm.x_tol = c.x_tol;
  nm.max_evals = c.max_evals;
  std::vector<NelderMeadResult> runs(c.restarts);
  ParallelFor(c.restarts, [&](size_t r) {
    std::mt19937_64 eng = ShardEngine(c.seed, r);
    std::uniform_real_distribution<double> first(0.5, 3.5);
    std::uniform_real_distribution<double> gap(0.05, 3.0);
    std::uniform_real_distribution<double> angle(-1.5, 1.5);
    std::vector<double> p0(dec.dim());
    for (int i = 0; i < dec.l; ++i) p0[i] = std::log(i == 0 ? first(eng) : gap(eng));
    for (int i = dec.l; i < dec.dim(); ++i) p0[i] = angle(eng);
    runs[r] = NelderMead(loss, p0, nm);
  });
  // Ties broken lexicographically on the parameters, so the pick does not
  // depend on the order the restarts finished in.
  size_t best = 0;
  for (size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].value < runs[best].value ||
        (runs[r].value == runs[best].value && runs[r].x < runs[best].x)) {
      best = r;
    }
  }
  for (const auto& r : runs) out.evaluations += r.evals;
  nm.initial_step = 0.01;
  nm.max_evals = 4 * c.max_evals;
  NelderMeadResult polish = NelderMead(loss, runs[best].x, nm);
  out.evaluations += polish.evals;
  if (runs[best].value < polish.value) polish = runs[best];
  out.converged = polish.converged;
  std::vector<double> a;
  std::vector<double> b;
  dec.Decode(polish.x, &a, &b);
  finish(StepFunction(a, b));
  return out;
}

std::vector<SweepRow> BreakpointSweep(const StepFunction& f, double lo,
                                      double hi, double step,
                                      const std::vector<int>& K) {
  CheckK(K);
  if (!(step > 0.0)) throw DomainError("sweep step must be positive");
  if (!(hi >= lo)) throw DomainError("empty sweep range");
  const double last = f.breakpoints().empty() ? 0.0 : f.breakpoints().back();
  if (!(lo > last)) {
    throw DomainError("sweep range must start beyond the last breakpoint");
  }
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<SweepRow> rows(count);
  const double flipped = -f.values().back();
  ParallelFor(count, [&](size_t i) {
    const double a = lo + step * i;
    const StepFunction g = f.Append(a, flipped);
    rows[i].a = a;
    for (int k : K) rows[i].probs.push_back(SatProbSymmetric(g, k, SymmetricBias(k)));
  });
  return rows;
}

}  // namespace rpr2
