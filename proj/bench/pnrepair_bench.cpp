// Copyright 2026 The pnrepair Authors
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


// Serial reference against the OpenMP kernels. The first benchmark argument
// is the worker count; 1 selects the serial code path.

#include <benchmark/benchmark.h>

#include "pnrepair/reductions.hpp"
#include "pnrepair/repair.hpp"
#include "pnrepair/separation.hpp"

namespace pnrepair {
namespace {

const Lts& example_instance() {
  static const Lts lts = [] {
    HittingSetInstance h = load_hitting_set(std::string(PNREPAIR_BENCH_DATA_DIR) + "/pairs6.hs");
    return generate_instance(h, ReductionFamily::kEdgeLangReal).lts;
  }();
  return lts;
}

const Lts& small_instance() {
  static const Lts lts = [] {
    HittingSetInstance h = parse_hitting_set("universe X0 X1 X2\nset X0 X1\nset X0 X2\nset X1 X2\nlambda 2\n");
    return generate_instance(h, ReductionFamily::kEdgeEmb).lts;
  }();
  return lts;
}

void BM_CheckBoth(benchmark::State& state) {
  const Lts& lts = example_instance();
  SeparationSolver solver(lts);
  CheckOptions options{.jobs = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    CheckResult result = check_property(solver, Property::kBoth, options);
    benchmark::DoNotOptimize(result.ok);
  }
  state.SetLabel(std::to_string(lts.num_states()) + " states");
}
BENCHMARK(BM_CheckBoth)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MinRemovalEdge(benchmark::State& state) {
  const Lts& lts = small_instance();
  RepairOptions options{.jobs = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    RepairOutcome out = min_removal(lts, RemovalMode::kEdge, Implementation::kEmbedding, 2, options);
    benchmark::DoNotOptimize(out.result.has_value());
  }
}
BENCHMARK(BM_MinRemovalEdge)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GreedyState(benchmark::State& state) {
  const Lts& lts = small_instance();
  RepairOptions options{.jobs = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    GreedyOutcome out = greedy_upper_bound(lts, RemovalMode::kState, Implementation::kEmbedding, options);
    benchmark::DoNotOptimize(out.result.has_value());
  }
}
BENCHMARK(BM_GreedyState)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace pnrepair

BENCHMARK_MAIN();
