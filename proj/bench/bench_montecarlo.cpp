// SPDX-License-Identifier: Apache-2.0
//
// lnfade: outage analysis of diversity receivers over correlated lognormal fading
// Copyright (C) 2026 The lnfade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
// Serial reference vs OpenMP outage counter on the same trial budget.

#include "lnfade/channel.hpp"
#include "lnfade/montecarlo.hpp"

#include <benchmark/benchmark.h>

namespace {

lnfade::DerivedParams bench_params(int branches)
{
    lnfade::ChannelSpec spec;
    spec.branches = branches;
    spec.rho = 0.5;
    spec.sigma_g = 0.8;
    spec.anchor = lnfade::AveragePower{lnfade::db_to_watts(10.0)};
    return lnfade::derive_params(spec);
}

template <bool Parallel>
void BM_CountOutages(benchmark::State &state)
{
    const auto params = bench_params(static_cast<int>(state.range(0)));
    lnfade::SimConfig cfg;
    cfg.samples = 1u << 20;
    for (auto _ : state)
    {
        const auto hits = Parallel ? lnfade::count_outages(params, 0.1, cfg)
                                   : lnfade::count_outages_serial(params, 0.1, cfg);
        benchmark::DoNotOptimize(hits);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * cfg.samples));
}

} // namespace

BENCHMARK(BM_CountOutages<false>)->Name("count_outages_serial")->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountOutages<true>)->Name("count_outages_omp")->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
