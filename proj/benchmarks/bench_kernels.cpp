// Copyright 2026 The oseen-ns Authors
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

#include <cmath>
#include <vector>

#include "oseen/kernels.hpp"
#include "oseen/spectral.hpp"

namespace {

std::vector<oseen::cplx> profile(std::size_t n) {
  std::vector<oseen::cplx> f(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = (static_cast<double>(j) + 0.5) / static_cast<double>(n) * 40.0 - 20.0;
    f[j] = std::exp(-t * t) * oseen::cplx{std::cos(t), std::sin(t)};
  }
  return f;
}

void BM_CausalScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = profile(n);
  std::vector<oseen::cplx> out(n);
  for (auto _ : state) {
    oseen::causal_scan(f, 0.7, 40.0 / static_cast<double>(n), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CausalScan)->RangeMultiplier(2)->Range(1 << 12, 1 << 20)->Complexity(benchmark::oN);

void BM_LaplaceEven(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = profile(n);
  for (auto _ : state) {
    auto out = oseen::laplace_even(f, 1.3, 40.0 / static_cast<double>(n));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LaplaceEven)->Arg(1 << 12)->Arg(1 << 16);

void BM_SpectralProducts(benchmark::State& state) {
  const auto n2 = static_cast<std::size_t>(state.range(0));
  const auto g = oseen::make_grid(40.0, 256, 40.0, n2);
  oseen::PhysicalField a{g};
  oseen::PhysicalField b{g};
  for (std::size_t i = 0; i < g->nt(); ++i) {
    for (std::size_t m = 0; m < n2; ++m) {
      const double x = g->x2_nodes()[m];
      a(i, m) = std::exp(-x * x / 8.0);
      b(i, m) = x * std::exp(-x * x / 8.0);
    }
  }
  const auto A = oseen::dealiased(oseen::to_spectral(a));
  const auto B = oseen::dealiased(oseen::to_spectral(b));
  for (auto _ : state) {
    auto tri = oseen::spectral_products(A, B);
    benchmark::DoNotOptimize(tri.ab.data().data());
  }
  state.SetItemsProcessed(state.iterations() * 256 * state.range(0));
}
BENCHMARK(BM_SpectralProducts)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
