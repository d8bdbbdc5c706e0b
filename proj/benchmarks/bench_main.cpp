// Copyright 2026 The Zagier Authors. All rights reserved.
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

#include "zagier/arith.hpp"
#include "zagier/eisenstein.hpp"
#include "zagier/lseries.hpp"
#include "zagier/transforms.hpp"

namespace zagier {
namespace {

void BM_GaussClosed(benchmark::State& state) {
  const i64 q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_quadratic_closed(1, 7, q));
}
BENCHMARK(BM_GaussClosed)->Arg(97)->Arg(1024)->Arg(30030);

void BM_GaussBrute(benchmark::State& state) {
  const i64 q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_quadratic_brute(1, 7, q));
}
BENCHMARK(BM_GaussBrute)->Arg(97)->Arg(1024);

void BM_KClosed(benchmark::State& state) {
  const i64 q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(K_closed(4, 3, q));
}
BENCHMARK(BM_KClosed)->Arg(60)->Arg(1024)->Arg(9240);

void BM_KBrute(benchmark::State& state) {
  const i64 q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(K_brute(4, 3, q));
}
BENCHMARK(BM_KBrute)->Arg(60)->Arg(128);

void BM_ZagierL(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zagier_L(-12, 2.5, state.range(0)));
}
BENCHMARK(BM_ZagierL)->Arg(1000)->Arg(20000);

void BM_PhiClosed(benchmark::State& state) {
  const Cusp c = find_cusp(64, 8);
  for (auto _ : state) benchmark::DoNotOptimize(phi_closed(EisCusp::kInfinity, c, 15, cplx(1.5, 0.4)));
}
BENCHMARK(BM_PhiClosed);

void BM_PhiBrute(benchmark::State& state) {
  const Cusp c = find_cusp(64, 8);
  for (auto _ : state) benchmark::DoNotOptimize(phi_bruteforce_inf(c, 15, cplx(1.5, 0.4), state.range(0)));
}
BENCHMARK(BM_PhiBrute)->Arg(2000);

TransformContext context() { return {4, 0.8, TestFunction(1.0, 3.0), QuadratureSpec{1e-10, 1e-10}}; }

void BM_PsiDClosed(benchmark::State& state) {
  const TransformContext c = context();
  for (auto _ : state) benchmark::DoNotOptimize(psi_D_closed(1.3, c));
}
BENCHMARK(BM_PsiDClosed);

void BM_PsiDMellinSetup(benchmark::State& state) {
  const TransformContext c = context();
  for (auto _ : state) benchmark::DoNotOptimize(PsiDMellin(c).nodes());
}
BENCHMARK(BM_PsiDMellinSetup)->Unit(benchmark::kMillisecond);

void BM_PsiDMellinEval(benchmark::State& state) {
  const PsiDMellin psi(context());
  for (auto _ : state) benchmark::DoNotOptimize(psi(12.0));
}
BENCHMARK(BM_PsiDMellinEval)->Unit(benchmark::kMicrosecond);

void BM_PsiKernel(benchmark::State& state) {
  const TransformContext c = context();
  for (auto _ : state) benchmark::DoNotOptimize(psi_kernel(5.0, c));
}
BENCHMARK(BM_PsiKernel)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zagier

BENCHMARK_MAIN();
