// Copyright 2026 The netbin Authors
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

#include "netbin/charpoly.hpp"
#include "netbin/fibmat.hpp"
#include "netbin/modular.hpp"
#include "netbin/sequences.hpp"

namespace {

using namespace netbin;

void BM_MatPowInteger(benchmark::State& state) {
  const auto t = build_T(FibSpec<Integer>(state.range(0), Integer(3)));
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(t, 64));
}
BENCHMARK(BM_MatPowInteger)->Arg(4)->Arg(16)->Arg(32);

void BM_MatPowSymbolic(benchmark::State& state) {
  const auto t = build_T(FibSpec<ZPoly>(state.range(0), ZPoly::variable()));
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(t, 8));
}
BENCHMARK(BM_MatPowSymbolic)->Arg(4)->Arg(8);

void BM_MatPowMod(benchmark::State& state) {
  const auto t = build_T(FibSpec<Integer>(state.range(0), Integer(2)));
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow_mod(t, 1000003, 1000003));
}
BENCHMARK(BM_MatPowMod)->Arg(8)->Arg(32);

void BM_CharpolyInteger(benchmark::State& state) {
  const auto t = build_T(FibSpec<Integer>(state.range(0), Integer(3)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_exact(t));
}
BENCHMARK(BM_CharpolyInteger)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_CharpolySymbolic(benchmark::State& state) {
  const auto t = build_T(FibSpec<ZPoly>(state.range(0), ZPoly::variable()));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_exact(t));
}
BENCHMARK(BM_CharpolySymbolic)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SeqU(benchmark::State& state) {
  const ZPoly m = ZPoly::variable();
  for (auto _ : state) benchmark::DoNotOptimize(seq_u(m, state.range(0)));
}
BENCHMARK(BM_SeqU)->Arg(50)->Arg(200);

void BM_EntryPoint(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(entry_point(Integer(1), p));
}
BENCHMARK(BM_EntryPoint)->Arg(1009)->Arg(100003);

}  // namespace

BENCHMARK_MAIN();
