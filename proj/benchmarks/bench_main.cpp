// Copyright 2026 The exactmip Authors
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

#include "exactmip/bnb.hpp"
#include "exactmip/certificate.hpp"
#include "exactmip/iis.hpp"
#include "exactmip/io.hpp"
#include "exactmip/lp.hpp"
#include "exactmip/verifier.hpp"
#include "generators.hpp"

namespace {

using namespace exactmip;

std::vector<Instance> milps(int count, const gen::MilpOptions& opts = {}) {
  gen::Rng rng(20260101);
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) out.push_back(gen::randomMilp(rng, opts));
  return out;
}

void BM_RationalDot(benchmark::State& state) {
  gen::Rng rng(1);
  std::vector<Rational> a, b;
  for (int k = 0; k < state.range(0); ++k) {
    a.push_back(gen::randomCoefficient(rng, 1000, 999));
    b.push_back(gen::randomCoefficient(rng, 1000, 999));
  }
  for (auto _ : state) {
    Rational s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RationalDot)->Arg(16)->Arg(256);

void BM_ParseDecimal(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Rational::parse("-12345.678901e-3"));
  }
}
BENCHMARK(BM_ParseDecimal);

void BM_SolveLP(benchmark::State& state) {
  gen::MilpOptions opts;
  opts.maxVars = static_cast<int>(state.range(0));
  opts.maxRows = static_cast<int>(state.range(0));
  opts.maxContinuous = opts.maxVars;
  opts.continuousChance = 1.0;
  auto lps = milps(50, opts);
  for (auto _ : state) {
    for (const auto& inst : lps) {
      benchmark::DoNotOptimize(solveLP(inst, globalBounds(inst)));
    }
  }
}
BENCHMARK(BM_SolveLP)->Arg(6)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SolveMilp(benchmark::State& state) {
  gen::MilpOptions opts;
  opts.maxVars = static_cast<int>(state.range(0));
  opts.maxRows = static_cast<int>(state.range(0));
  opts.boundRange = 10;
  auto insts = milps(20, opts);
  SolveParams p;
  p.cuts = state.range(1) != 0;
  for (auto _ : state) {
    for (const auto& inst : insts) benchmark::DoNotOptimize(solve(inst, p));
  }
}
BENCHMARK(BM_SolveMilp)
    ->Args({6, 1})
    ->Args({6, 0})
    ->Args({12, 1})
    ->Unit(benchmark::kMillisecond);

void BM_VerifyCertificate(benchmark::State& state) {
  gen::MilpOptions opts;
  opts.maxVars = 10;
  opts.maxRows = 10;
  opts.boundRange = 10;
  auto insts = milps(20, opts);
  std::vector<std::string> certs;
  std::int64_t bytes = 0;
  for (const auto& inst : insts) {
    SolveResult r = solve(inst);
    if (!r.trace) continue;
    certs.push_back(emitCertificate(*r.trace, inst));
    bytes += static_cast<std::int64_t>(certs.back().size());
  }
  for (auto _ : state) {
    for (const auto& c : certs) benchmark::DoNotOptimize(verifyCertificate(c));
  }
  state.SetBytesProcessed(state.iterations() * bytes);
}
BENCHMARK(BM_VerifyCertificate)->Unit(benchmark::kMillisecond);

void BM_WriteReadLp(benchmark::State& state) {
  auto insts = milps(50);
  for (auto _ : state) {
    for (const auto& inst : insts) {
      benchmark::DoNotOptimize(
          readInstance(writeInstance(inst, FormatTag::Lp), FormatTag::Lp));
    }
  }
}
BENCHMARK(BM_WriteReadLp)->Unit(benchmark::kMillisecond);

void BM_Iis(benchmark::State& state) {
  gen::MilpOptions opts;
  opts.plantedRhs = 0.3;
  gen::Rng rng(7);
  std::vector<Instance> infeasible;
  while (infeasible.size() < 10) {
    Instance inst = gen::randomMilp(rng, opts);
    if (solve(inst).status == SolveStatus::Infeasible) {
      infeasible.push_back(std::move(inst));
    }
  }
  IISOptions o;
  o.includeBounds = state.range(1) != 0;
  for (auto _ : state) {
    for (const auto& inst : infeasible) {
      benchmark::DoNotOptimize(state.range(0) == 0 ? deletionFilter(inst, o)
                                                   : additiveMethod(inst, o));
    }
  }
}
BENCHMARK(BM_Iis)
    ->ArgNames({"additive", "bounds"})
    ->Args({0, 0})
    ->Args({1, 0})
    ->Args({0, 1})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
