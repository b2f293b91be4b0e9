// Copyright 2026 The ontolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "ontolab/engine.hpp"
#include "ontolab/marble.hpp"
#include "ontolab/measurement.hpp"

namespace {

using namespace ontolab;

void BM_HaarState(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream rng = make_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(haar_state(dim, rng));
}
BENCHMARK(BM_HaarState)->Arg(2)->Arg(3)->Arg(8);

void BM_HaarUnitary(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream rng = make_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(dim, rng));
}
BENCHMARK(BM_HaarUnitary)->Arg(3)->Arg(8);

void BM_Sample(benchmark::State& state, ModelSpec model, Sampler sampler) {
  const EpistemicState s = prepare(model, superposition_01(model.system_dim, 0.6));
  RandomStream rng = make_stream(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample(s, rng, sampler));
}
BENCHMARK_CAPTURE(BM_Sample, ks_rejection, ModelSpec::ks_qubit(), Sampler::rejection);
BENCHMARK_CAPTURE(BM_Sample, ks_conditional, ModelSpec::ks_qubit(), Sampler::conditional);
BENCHMARK_CAPTURE(BM_Sample, qutrit_rejection, ModelSpec::linear_trace(), Sampler::rejection);
BENCHMARK_CAPTURE(BM_Sample, qutrit_conditional, ModelSpec::linear_trace(), Sampler::conditional);

void BM_MarbleSample(benchmark::State& state) {
  const MarbleState s(RealSphereState::from_angles(0.3, 0.0));
  RandomStream rng = make_stream(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample(s, rng, Sampler::conditional));
}
BENCHMARK(BM_MarbleSample);

void BM_OutcomeOf(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream rng = make_stream(4, 0);
  const Context c = haar_context(dim, dim, rng);
  const PureState lambda = haar_state(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(outcome_of(lambda, c));
}
BENCHMARK(BM_OutcomeOf)->Arg(3)->Arg(8);

void BM_OutcomeEstimate(benchmark::State& state) {
  const ModelSpec m = ModelSpec::linear_trace();
  const PureState psi = superposition_01(3, 0.6);
  const Context c = Context::computational(3, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate_outcome_probs(m, psi, c, state.range(0), 5));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OutcomeEstimate)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
