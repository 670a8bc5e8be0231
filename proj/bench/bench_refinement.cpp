// Copyright 2026 The dlgames Authors
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

// Serial against parallel kernels: layer refinement of the bisimulation
// solver and the sampled comonad law checker.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <memory>
#include <random>

#include "dlgames/bisim.hpp"
#include "dlgames/comonad.hpp"
#include "dlgames/random_models.hpp"

namespace {

using namespace dlgames;

// Sparse random models with a fixed number of elements, so the refinement
// runs for several layers before it stabilises.
std::shared_ptr<const Model> random_model(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomModelSpec spec;
  spec.min_elements = n;
  spec.max_elements = n;
  spec.edge_probability = 2.0 / static_cast<double>(n);
  spec.concept_probability = 0.5;
  return std::make_shared<const Model>(
      random_pointed(standard_vocabulary(2, 2, 0), spec, rng));
}

void refine(benchmark::State& state, Kernel kernel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto left = random_model(n, 1);
  auto right = random_model(n, 2);
  const LogicSelector logic = LogicSelector::parse("I,b");
  for (auto _ : state) {
    auto z = stratified_bisim(left, right, logic, StratifiedBisim::kOmega,
                              kernel);
    benchmark::DoNotOptimize(z.duplicator_wins());
  }
  state.counters["pairs"] = static_cast<double>(n * n);
}

void BM_RefineSerial(benchmark::State& state) { refine(state, Kernel::kSerial); }
void BM_RefineParallel(benchmark::State& state) {
  refine(state, Kernel::kParallel);
}

BENCHMARK(BM_RefineSerial)->RangeMultiplier(2)->Range(16, 256)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefineParallel)->RangeMultiplier(2)->Range(16, 256)
    ->Unit(benchmark::kMillisecond)->UseRealTime();

void laws(benchmark::State& state, int threads) {
  std::mt19937_64 rng(3);
  RandomModelSpec spec;
  spec.min_elements = 4;
  spec.max_elements = 4;
  auto p = random_pointed(standard_vocabulary(1, 2, 0), spec, rng);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(threads > 0 ? threads : saved);
  for (auto _ : state) {
    auto report = check_comonad_laws(p, 3, state.range(0), 7);
    benchmark::DoNotOptimize(report.all_passed());
  }
  omp_set_num_threads(saved);
}

void BM_LawsSerial(benchmark::State& state) { laws(state, 1); }
void BM_LawsParallel(benchmark::State& state) { laws(state, 0); }

BENCHMARK(BM_LawsSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawsParallel)->Arg(64)->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
