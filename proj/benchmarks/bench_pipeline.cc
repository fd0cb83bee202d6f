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

#include "rpr2/gapgen.h"
#include "rpr2/instance.h"
#include "rpr2/pipeline.h"
#include "rpr2/step_function.h"

namespace rpr2 {
namespace {

void BM_GenGapInstance(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(GenGapInstance(48, state.range(0), state.range(0), 1));
  }
}
BENCHMARK(BM_GenGapInstance)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Rpr2Round(benchmark::State& state) {
  const GapInstance g = GenGapInstance(48, 10000, 10000, 1);
  const VectorAssignment v = g.ToVectors();
  const StepFunction f({2.275193649}, {-1.0, 1.0});
  uint64_t round = 0;
  for (auto _ : state) benchmark::DoNotOptimize(Rpr2Round(v, f, 1, round++));
  state.SetItemsProcessed(state.iterations() * v.num_vars());
}
BENCHMARK(BM_Rpr2Round)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  const GapInstance g = GenGapInstance(48, 10000, 10000, 1);
  const NaeInstance inst = g.ToNaeInstance();
  const Assignment x = SampleRuleAssignment(TunedRule(), 48, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(inst, x));
  state.SetItemsProcessed(state.iterations() * inst.clauses().size());
}
BENCHMARK(BM_Evaluate)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace rpr2
