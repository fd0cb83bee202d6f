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


#include <benchmark/benchmark.h>

#include "rpr2/gram.h"
#include "rpr2/hermite.h"
#include "rpr2/moments.h"
#include "rpr2/normal.h"
#include "rpr2/step_function.h"
#include "rpr2/stepopt.h"

namespace rpr2 {
namespace {

const StepFunction kFour({1.914115410, 2.216234256, 5.228184560}, {-1, 1, -1, 1});

void BM_BivariateNormalCdf(benchmark::State& state) {
  double h = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BivariateNormalCdf(h, 0.3, -0.74));
    h += 1e-6;
  }
}
BENCHMARK(BM_BivariateNormalCdf);

void BM_F2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(F2(kFour, -0.742));
}
BENCHMARK(BM_F2);

void BM_SatProbSymmetric(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SatProbSymmetric(kFour, k, SymmetricBias(k)));
  }
}
BENCHMARK(BM_SatProbSymmetric)->Arg(5)->Arg(8);

void BM_ObjectiveAlphaK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ObjectiveAlphaK(kFour, {3, 7, 8}));
}
BENCHMARK(BM_ObjectiveAlphaK);

void BM_MomentMc(benchmark::State& state) {
  const GramConfig b = GramConfig::Symmetric(4, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MomentMc(kFour, b, state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MomentMc)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_HermiteCoeffs(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(HermiteCoeffs(kFour, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_HermiteCoeffs)->Arg(41)->Arg(161);

}  // namespace
}  // namespace rpr2
