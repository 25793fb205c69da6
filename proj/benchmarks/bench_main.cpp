// Copyright 2026 The toffoli-forge Authors
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

#include "tforge/io.hpp"
#include "tforge/route.hpp"
#include "tforge/sched.hpp"
#include "tforge/sim.hpp"
#include "tforge/synth.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_Synth(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tforge::synth_toffoli(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Synth)->RangeMultiplier(2)->Range(8, 512)->Complexity(benchmark::oNSquared);

void BM_Schedule(benchmark::State& state) {
  const tforge::Circuit c = tforge::synth_toffoli(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tforge::asap_schedule(c));
  }
  state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_Schedule)->RangeMultiplier(2)->Range(8, 256);

void BM_Route(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tforge::route_lnn(n));
  }
}
BENCHMARK(BM_Route)->RangeMultiplier(2)->Range(8, 256);

void BM_ApplyState(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tforge::Circuit c = tforge::synth_toffoli(n);
  std::mt19937_64 rng(1);
  const tforge::StateVector s = tforge::StateVector::random(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tforge::apply(c, s));
  }
}
BENCHMARK(BM_ApplyState)->DenseRange(8, 16, 4);

void BM_UnitaryOf(benchmark::State& state) {
  const tforge::Circuit c = tforge::synth_toffoli(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tforge::unitary_of(c));
  }
}
BENCHMARK(BM_UnitaryOf)->DenseRange(4, 10, 2);

void BM_JsonRoundTrip(benchmark::State& state) {
  const tforge::Circuit c = tforge::synth_toffoli(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tforge::circuit_from_json(tforge::circuit_to_json(c)));
  }
}
BENCHMARK(BM_JsonRoundTrip)->Arg(32)->Arg(128);

} // namespace

BENCHMARK_MAIN();
