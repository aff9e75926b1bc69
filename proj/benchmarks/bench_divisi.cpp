// Copyright 2026 The divisi Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "divisi/divisibility.hpp"
#include "divisi/random.hpp"
#include "divisi/scenarios.hpp"

namespace divisi {
namespace {

void BM_HermitianEigvals(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const ComplexMatrix h = random_density_matrix(dim, dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigvals(h));
}
BENCHMARK(BM_HermitianEigvals)->RangeMultiplier(2)->Range(2, 32);

void BM_ProbeStepW(benchmark::State& state) {
  const Scenario s = build_scenario(ScenarioName::W, Mode::Exact);
  const UnitaryDilation d = s.dilation();
  for (auto _ : state) benchmark::DoNotOptimize(probe_step(d, s.s1, s.s2));
}
BENCHMARK(BM_ProbeStepW);

void BM_DilationToKraus(benchmark::State& state) {
  const std::size_t ns = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const UnitaryDilation d =
      UnitaryDilation::make(random_unitary(qubit_dim(ns + 1), rng), Bipartition::contiguous(ns, 1),
                            DensityMatrix::validated(random_density_matrix(2, 2, rng)));
  for (auto _ : state) benchmark::DoNotOptimize(dilation_to_kraus(d));
}
BENCHMARK(BM_DilationToKraus)->DenseRange(1, 4);

void BM_WitnessSearch(benchmark::State& state) {
  const UnitaryDilation d = build_scenario(ScenarioName::W, Mode::Exact).dilation();
  WitnessConfig cfg;
  cfg.restarts = 4;
  cfg.iters = 200;
  cfg.correlated = true;
  cfg.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(d, cfg));
}
BENCHMARK(BM_WitnessSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace divisi

BENCHMARK_MAIN();
