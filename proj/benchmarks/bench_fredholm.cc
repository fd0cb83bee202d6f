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

#include "rpr2/fredholm.h"

namespace rpr2 {
namespace {

HardDistribution HardPoint() {
  HardDistribution d;
  d.problem = Problem::kNae3;
  d.alpha = 0.7381;
  d.rho = -0.742;
  return d;
}

void BM_KernelMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(KernelMatrix(-0.742, n));
}
BENCHMARK(BM_KernelMatrix)->Arg(100)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_OptimalStepFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HardDistribution d = HardPoint();
  for (auto _ : state) benchmark::DoNotOptimize(OptimalStepFunction(d, n));
}
BENCHMARK(BM_OptimalStepFunction)->Arg(100)->Arg(600)->Unit(benchmark::kMillisecond);

// Solve only, kernels prebuilt: the cost paid per grid point.
void BM_SolveWithKernels(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HardDistribution d = HardPoint();
  const Eigen::MatrixXd m_rho = KernelMatrix(d.rho, n);
  const Eigen::MatrixXd m_rho0 = KernelMatrix(d.rho0(), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OptimalStepFunction(d, n, m_rho, &m_rho0));
  }
}
BENCHMARK(BM_SolveWithKernels)->Arg(100)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rpr2
