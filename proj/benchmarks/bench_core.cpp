// Copyright 2026 The veblen Authors
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

#include "veblen/canon.hpp"
#include "veblen/digraph.hpp"
#include "veblen/enumerate.hpp"
#include "veblen/rooting.hpp"
#include "veblen/simplex.hpp"
#include "veblen/spectra.hpp"

using namespace veblen;

namespace {

MultiHypergraph fano() {
  return MultiHypergraph::from_list(3, 7, {{{1, 2, 3}, 1}, {{1, 4, 5}, 1}, {{1, 6, 7}, 1}, {{2, 4, 7}, 1},
                                           {{2, 5, 6}, 1}, {{3, 4, 6}, 1}, {{3, 5, 7}, 1}});
}

void BM_CanonicalFormFano(benchmark::State& state) {
  auto h = fano();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_labeling(h));
}
BENCHMARK(BM_CanonicalFormFano);

void BM_AssocCoeffFano(benchmark::State& state) {
  auto h = fano();
  for (auto _ : state) benchmark::DoNotOptimize(assoc_coeff_connected(h));
}
BENCHMARK(BM_AssocCoeffFano);

void BM_EnumerateConnected(benchmark::State& state) {
  auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_veblen(3, d));
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_FanoCoefficients(benchmark::State& state) {
  SimpleHypergraph host(fano());
  auto top = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(codegree_coefficients(host, top));
}
BENCHMARK(BM_FanoCoefficients)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SimplexCk(benchmark::State& state) {
  auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simplex_Ck(k));
}
BENCHMARK(BM_SimplexCk)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BareissDeterminant(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  IntegerMatrix m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>((i * 7 + j * 13) % 11) - 5;
  }
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_BareissDeterminant)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
