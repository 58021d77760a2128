// SPDX-License-Identifier: Apache-2.0
//
// beamsim: reconfigurable-antenna beamspace MIMO simulation library
// Copyright (C) 2026 The beamsim authors
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

// Serial reference loops versus their OpenMP counterparts.

#include "beamsim/channel.hpp"
#include "beamsim/experiments.hpp"
#include "beamsim/selection.hpp"
#include "beamsim/trial_runner.hpp"

#include <benchmark/benchmark.h>

using namespace beamsim;

namespace
{
    SystemConfig reduced()
    {
        SystemConfig cfg;
        cfg.n_r = cfg.n_t = 9;
        cfg.l_r = cfg.l_t = 3;
        cfg.n_states = 1;
        return cfg;
    }

    ComplexMatrix state_matrix(std::size_t n)
    {
        auto cfg = reduced();
        cfg.n_r = cfg.n_t = n;
        return generate_channel_set(5, cfg).beamspace[0];
    }

    void exhaustive_serial(benchmark::State &st)
    {
        const auto hv = state_matrix(13);
        for (auto _ : st)
            benchmark::DoNotOptimize(exhaustive_beam_select(hv, 4, 4, 10.0));
    }

    void exhaustive_parallel(benchmark::State &st)
    {
        const auto hv = state_matrix(13);
        const int threads = static_cast<int>(st.range(0));
        for (auto _ : st)
            benchmark::DoNotOptimize(exhaustive_beam_select_parallel(hv, 4, 4, 10.0, 10'000'000, threads));
    }

    // Gain experiment trials, serial loop versus the OpenMP trial runner.
    void gain_trials(benchmark::State &st)
    {
        ExperimentConfig cfg;
        cfg.n_trials = 200;
        cfg.psi_sweep = {1, 2, 4, 8};
        const Execution exec{static_cast<int>(st.range(0))};
        for (auto _ : st)
            benchmark::DoNotOptimize(run_gain_experiment(cfg, exec));
    }
}

BENCHMARK(exhaustive_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(exhaustive_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(gain_trials)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
