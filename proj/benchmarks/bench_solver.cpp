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

#include "oseen/field_equations.hpp"
#include "oseen/solver.hpp"

namespace {

oseen::ForceSpec force(std::size_t nt, std::size_t n2) {
  const auto g = oseen::make_grid(40.0, nt, 40.0, n2);
  return oseen::force_family(oseen::ForceFamily::kGaussDipole, oseen::ForceParams{}, g);
}

void BM_PicardStep(benchmark::State& state) {
  const auto nt = static_cast<std::size_t>(state.range(0));
  const auto F = force(nt, 64);
  const auto os = oseen::oseen_solve(F, oseen::SolverConfig{});
  const oseen::Velocity v{os.v1_hat, os.v2_hat};
  for (auto _ : state) {
    auto next = oseen::picard_step(v, F, 4.0);
    benchmark::DoNotOptimize(next.v1.data().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 64);
}
BENCHMARK(BM_PicardStep)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_PicardSolveSmall(benchmark::State& state) {
  auto F = force(512, 64);
  const oseen::SolverConfig cfg;
  F = oseen::scaled(F, 0.1 / oseen::admissibility(F, cfg.beta, cfg.u_inf).ratio);
  for (auto _ : state) {
    auto r = oseen::picard_solve(F, cfg);
    benchmark::DoNotOptimize(r.iterations);
  }
}
BENCHMARK(BM_PicardSolveSmall)->Unit(benchmark::kMillisecond);

}  // namespace
