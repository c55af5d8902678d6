/******************************************************************************
 * Copyright 2026 The ktur Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#include <benchmark/benchmark.h>

#include <omp.h>

#include "ktur/signals.hpp"
#include "ktur/transform.hpp"

namespace {

ktur::SampledSignal input(std::size_t n) {
  ktur::GaussianSpec s;
  s.mu = 0.5;
  s.chirp = 0.5;
  return ktur::sample({s}, ktur::make_grid(n, 10.0));
}

void BM_FrftSerial(benchmark::State& state) {
  const auto f = input(static_cast<std::size_t>(state.range(0)));
  const auto k = ktur::make_frft(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(ktur::reference::apply_transform(k, f, f.grid()));
  state.SetComplexityN(state.range(0));
}

void BM_FrftParallel(benchmark::State& state) {
  const auto f = input(static_cast<std::size_t>(state.range(0)));
  const auto k = ktur::make_frft(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(ktur::apply_transform(k, f, f.grid()));
  state.counters["threads"] = omp_get_max_threads();
  state.SetComplexityN(state.range(0));
}

void BM_GtfParallel(benchmark::State& state) {
  const auto f = input(static_cast<std::size_t>(state.range(0)));
  const auto k = ktur::make_gtf_standard(0.9);
  const auto out = ktur::default_output_grid(k, f);
  for (auto _ : state) benchmark::DoNotOptimize(ktur::apply_transform(k, f, out));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_FrftSerial)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_FrftParallel)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_GtfParallel)->Arg(2048)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
