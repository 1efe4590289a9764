// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "ggc/catalog.hpp"
#include "ggc/dist.hpp"
#include "ggc/mc.hpp"
#include "ggc/mean_density.hpp"
#include "ggc/operators.hpp"
#include "ggc/subordinators.hpp"

namespace {

using namespace ggc;

void BM_Phi(benchmark::State& st) {
  const DistSpec d = exp_ratio_w_dist();
  for (auto _ : st) benchmark::DoNotOptimize(phi(d, 0.7));
}
BENCHMARK(BM_Phi);

void BM_LevyExponent(benchmark::State& st) {
  const DistSpec d = rho_half_dist();
  for (auto _ : st) benchmark::DoNotOptimize(levy_exponent(d, 1.5));
}
BENCHMARK(BM_LevyExponent);

// Argument: theta in tenths, covering the four density branches.
void BM_MeanDensityUniform(benchmark::State& st) {
  const MeanLaw law{st.range(0) / 10.0, uniform_dist()};
  for (auto _ : st) benchmark::DoNotOptimize(mean_density(law, 0.37));
}
BENCHMARK(BM_MeanDensityUniform)->Arg(5)->Arg(10)->Arg(15)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_MeanCdfUniform(benchmark::State& st) {
  const MeanLaw law{2.0, uniform_dist()};
  for (auto _ : st) benchmark::DoNotOptimize(mean_cdf(law, 0.37));
}
BENCHMARK(BM_MeanCdfUniform)->Unit(benchmark::kMicrosecond);

void BM_GgcDensity(benchmark::State& st) {
  const DistSpec d = uniform_dist();
  for (auto _ : st) benchmark::DoNotOptimize(ggc_density(0.5, d, 1.2));
}
BENCHMARK(BM_GgcDensity)->Unit(benchmark::kMicrosecond);

void BM_TiltForward(benchmark::State& st) {
  const DistSpec d = uniform_dist();
  for (auto _ : st) benchmark::DoNotOptimize(tilt_density_forward(2.0, 2.0, d, 0.4));
}
BENCHMARK(BM_TiltForward)->Unit(benchmark::kMicrosecond);

void BM_BfryMarginal(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bfry_marginal_density(0.5, 0.5, 1.3));
}
BENCHMARK(BM_BfryMarginal)->Unit(benchmark::kMicrosecond);

void BM_PhiloxUniform(benchmark::State& st) {
  Philox rng(42, 0);
  for (auto _ : st) benchmark::DoNotOptimize(rng.uniform());
}
BENCHMARK(BM_PhiloxUniform);

void BM_StickBreaking(benchmark::State& st) {
  const MeanLaw law{1.0, uniform_dist()};
  for (auto _ : st) benchmark::DoNotOptimize(sample_mean(law, 1000, 7));
  st.SetItemsProcessed(st.iterations() * 1000);
}
BENCHMARK(BM_StickBreaking)->Unit(benchmark::kMillisecond);

void BM_SampleGgc(benchmark::State& st) {
  const GgcLaw law{2.0, exp_ratio_w_dist()};
  for (auto _ : st) benchmark::DoNotOptimize(sample_ggc(law, 1000, 7));
  st.SetItemsProcessed(st.iterations() * 1000);
}
BENCHMARK(BM_SampleGgc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
