// Copyright 2026 The polconv Authors
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

#include "polconv/homodyne.hpp"
#include "polconv/metrics.hpp"
#include "polconv/optics.hpp"
#include "polconv/states.hpp"

namespace polconv {
namespace {

const PipelineInput kInput{{0.5, -1.0}, {1.0, 0.5}};
const PipelineInput kWeak{{0.2, -0.3}, {0.3, 0.1}};

void BM_Pipeline(benchmark::State& state) {
  const FockCutoff fc(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(kInput, fc).fidelity);
}
BENCHMARK(BM_Pipeline)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_BeamSplitter(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const TruncatedState psi = run_pipeline(kInput, FockCutoff(d)).psi1;
  for (auto _ : state) benchmark::DoNotOptimize(beam_splitter_5050(psi).norm());
}
BENCHMARK(BM_BeamSplitter)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_NegativityFullSpectrum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto rho = TwoModeDensityMatrix::from_pure(run_pipeline(kWeak, FockCutoff(d)).psi3);
  for (auto _ : state) benchmark::DoNotOptimize(negativity_numeric(rho));
}
BENCHMARK(BM_NegativityFullSpectrum)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_NegativitySchmidt(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const TruncatedState psi3 = run_pipeline(kInput, FockCutoff(d)).psi3;
  for (auto _ : state) benchmark::DoNotOptimize(negativity_pure(psi3));
}
BENCHMARK(BM_NegativitySchmidt)->Arg(24)->Arg(32)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_WignerGrid(benchmark::State& state) {
  const Complex alpha(0.0, 1.0);
  const DensityMatrix rho = DensityMatrix::from_pure(
      quad_superposition(alpha, FockCutoff::for_displacement(1.0)).state);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_numeric(rho, GridSpec::centered(alpha, 3.0, n)).integral());
  }
}
BENCHMARK(BM_WignerGrid)->Arg(41)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_HomodyneSample(benchmark::State& state) {
  const DensityMatrix rho =
      DensityMatrix::from_pure(coherent({1.0, 0.0}, FockCutoff::for_displacement(1.0)));
  const QuadratureMarginal m = quadrature_marginal(rho, 0.0, QuadratureGrid::covering(rho));
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(m, 20240601, count).samples.data());
}
BENCHMARK(BM_HomodyneSample)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace polconv

BENCHMARK_MAIN();
