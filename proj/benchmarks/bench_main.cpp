// SPDX-License-Identifier: Apache-2.0
//
// ddcap: capacity of doubly-dispersive Gaussian channels
// Copyright (C) 2026 The ddcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <vector>

#include <benchmark/benchmark.h>

#include "ddcap/harness.hpp"
#include "ddcap/quantize.hpp"
#include "ddcap/spectral.hpp"
#include "ddcap/waterfill.hpp"

namespace {

void BM_Quantize(benchmark::State& state) {
  const auto spec = ddcap::make_symbol("cosine_gauss");
  const auto grid = ddcap::Grid::make(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ddcap::quantize(spec, grid));
  state.SetLabel("n_x=" + std::to_string(grid.n_x));
}
BENCHMARK(BM_Quantize)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Eigh(benchmark::State& state) {
  const auto spec = ddcap::make_symbol("band_constant");
  const auto grid = ddcap::Grid::make(static_cast<double>(state.range(0)));
  const auto h = ddcap::hermitize(ddcap::quantize(spec, grid));
  const bool vectors = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(ddcap::eigh(h, vectors));
  state.SetLabel("n_x=" + std::to_string(grid.n_x));
}
BENCHMARK(BM_Eigh)->Args({8, 0})->Args({8, 1})->Args({32, 0})->Unit(benchmark::kMillisecond);

void BM_WaterfillDiscrete(benchmark::State& state) {
  std::vector<double> eigs(static_cast<std::size_t>(state.range(0)));
  for (std::size_t k = 0; k < eigs.size(); ++k) eigs[k] = 1.0 / (1.0 + static_cast<double>(k));
  for (auto _ : state) benchmark::DoNotOptimize(ddcap::waterfill_discrete(eigs, 1.0, 16.0));
}
BENCHMARK(BM_WaterfillDiscrete)->Arg(256)->Arg(4096);

void BM_WaterfillSymbol(benchmark::State& state) {
  const auto spec = ddcap::make_symbol("cosine_gauss");
  for (auto _ : state) benchmark::DoNotOptimize(ddcap::waterfill_symbol(spec, 1.0));
}
BENCHMARK(BM_WaterfillSymbol)->Unit(benchmark::kMillisecond);

void BM_QAlpha(benchmark::State& state) {
  const auto spec = ddcap::make_symbol("cosine_gauss");
  const std::vector<double> alphas{static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ddcap::run_symbol_calculus_check(spec, {0.5}, alphas));
}
BENCHMARK(BM_QAlpha)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
