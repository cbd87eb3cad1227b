// Copyright 2026 The lmg Authors
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

#include "lmg/lindblad.hpp"
#include "lmg/slowflow.hpp"
#include "lmg/special_functions.hpp"
#include "lmg/thermal.hpp"

namespace {

using namespace lmg;

ModelParams extensive(double lambda, int twice_s) {
  ModelParams p;
  p.lambda = lambda;
  p.s = SpinQuantumNumber::from_twice(twice_s);
  p.omega_c = 10.0 * std::max(1.0, lambda);
  return p;
}

void BM_EllipticKE(benchmark::State& state) {
  double m = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(complete_elliptic_ke(m));
    m = m < 0.99 ? m + 0.01 : 0.0;
  }
}
BENCHMARK(BM_EllipticKE);

void BM_JacobiCn(benchmark::State& state) {
  double u = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_cn(u, 0.7));
    u += 0.1;
  }
}
BENCHMARK(BM_JacobiCn);

void BM_Digamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(digamma(x));
    x = x < 50.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_Digamma);

void BM_DissipationA(benchmark::State& state) {
  double h = -1.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dissipation_A(h, 2.0));
    h = h < 0.99 ? h + 0.013 : -1.2;
  }
}
BENCHMARK(BM_DissipationA);

void BM_LindbladianApply(benchmark::State& state) {
  const ModelParams p = extensive(2.0, static_cast<int>(state.range(0)) * 2);
  const SpinOperators ops = build_spin_operators(p.s);
  const Superoperator l = build_lindbladian(ops, p);
  const Matrix rho = coherent_state(ops, 1.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(l.apply(rho));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LindbladianApply)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

void BM_SpectralGap(benchmark::State& state) {
  const ModelParams p = extensive(0.5, static_cast<int>(state.range(0)) * 2);
  const Superoperator l = build_lindbladian(build_spin_operators(p.s), p);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(l));
}
BENCHMARK(BM_SpectralGap)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
