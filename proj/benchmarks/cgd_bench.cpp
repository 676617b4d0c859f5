// Copyright 2026 The CGD Authors
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

#include <random>

#include "cgd/blocks.hpp"
#include "cgd/dynamics.hpp"
#include "cgd/family.hpp"
#include "cgd/marked.hpp"
#include "cgd/modulo.hpp"

namespace cgd {
namespace {

// Tape of n cells with the head in the middle.
CanonicalGraph LongTape(int n) { return SingleHeadTape(n, n / 2, true); }

void BM_Canonicalize(benchmark::State& state) {
  const CanonicalGraph x = LongTape(static_cast<int>(state.range(0)));
  std::mt19937 rng(1);
  std::uniform_int_distribution<VertexIndex> pick(
      0, static_cast<VertexIndex>(x.vertex_count()) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ShiftTo(x, pick(rng)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_MovingHeadStep(benchmark::State& state) {
  const CanonicalGraph x = LongTape(static_cast<int>(state.range(0)));
  const Dynamics f = MovingHead();
  for (auto _ : state) benchmark::DoNotOptimize(f.Apply(x));
}
BENCHMARK(BM_MovingHeadStep)->RangeMultiplier(4)->Range(4, 1024);

void BM_InflatingGridStep(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const CanonicalGraph x =
      Grid(side, side, std::vector<LabelId>(side * side, 0));
  const Dynamics f = InflatingGrid();
  for (auto _ : state) benchmark::DoNotOptimize(f.Apply(x));
}
BENCHMARK(BM_InflatingGridStep)->DenseRange(2, 8, 2);

void BM_EnumerateTurtle(benchmark::State& state) {
  EnumerationOptions o;
  o.max_vertices = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateFamily(TurtleAlphabet(), o));
  }
}
BENCHMARK(BM_EnumerateTurtle)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_BlockDecompose(benchmark::State& state) {
  const BlockSystem s = MakeBlockSystemFromInverse(
      MovingHead(), MovingHeadInverse(), 0, MovingHeadAlphabet());
  const CanonicalGraph x = LongTape(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BlockDecomposeStep(s, x));
}
BENCHMARK(BM_BlockDecompose)->RangeMultiplier(2)->Range(2, 32)
    ->Unit(benchmark::kMillisecond);

void BM_MarkedClosure(benchmark::State& state) {
  const GraphFamily tapes =
      SingleHeadTapesPointed(static_cast<int>(state.range(0)));
  const Dynamics ext =
      ReversibleExtension(MovingHead(), 0, MovingHeadAlphabet());
  std::vector<CanonicalGraph> seeds;
  for (const CanonicalGraph& x : tapes) seeds.push_back(Lift(x));
  for (auto _ : state) {
    benchmark::DoNotOptimize(MarkedClosure(ext, seeds, 0));
  }
}
BENCHMARK(BM_MarkedClosure)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cgd

BENCHMARK_MAIN();
