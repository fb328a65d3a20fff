// Copyright 2026 The oseenlab Authors.
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

#include "oseenlab/harness.hpp"
#include "oseenlab/norms.hpp"
#include "oseenlab/oseen.hpp"
#include "oseenlab/spectral.hpp"

using namespace oseenlab;

namespace {

GridSpec grid(int dim, int n) {
  GridSpec g;
  g.dim = dim;
  g.points = n;
  g.half_period = 1.0;
  return g;
}

void BM_ForwardTransform(benchmark::State& state) {
  const GridSpec g = grid(3, static_cast<int>(state.range(0)));
  const VectorField f = from_spectral(random_solenoidal(g, 1, 4, 1, 0));
  for (auto _ : state) benchmark::DoNotOptimize(to_spectral(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()) * 3);
}
BENCHMARK(BM_ForwardTransform)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SteadySolve(benchmark::State& state) {
  const GridSpec g = grid(3, static_cast<int>(state.range(0)));
  const SpectralField f = random_solenoidal(g, 1, 4, 2, 0);
  OseenParams p;
  p.dim = 3;
  p.lambda = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(solve_steady(f, p));
}
BENCHMARK(BM_SteadySolve)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ConvectiveTerm(benchmark::State& state) {
  const GridSpec g = grid(3, static_cast<int>(state.range(0)));
  const SpectralField u = random_solenoidal(g, 1, 4, 3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(convective_term(u, u));
}
BENCHMARK(BM_ConvectiveTerm)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SobolevSeminorm(benchmark::State& state) {
  const GridSpec g = grid(3, 32);
  const SpectralField u = random_solenoidal(g, 1, 4, 4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sobolev_seminorm(u, 2, 4.0));
}
BENCHMARK(BM_SobolevSeminorm)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
