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

#ifndef BEAMSIM_TRIAL_RUNNER_HPP
#define BEAMSIM_TRIAL_RUNNER_HPP

#include <cstddef>
#include <functional>

namespace beamsim
{
    // How Monte Carlo trials are executed. threads == 1 runs the serial
    // reference loop; anything larger runs the OpenMP loop. Results never
    // depend on the choice: each trial writes only its own slot.
    struct Execution
    {
        int threads = 1;
    };

    // Runs body(i) for i in [0, n) in index order on the calling thread.
    void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)> &body);

    // Runs body(i) for i in [0, n) across an OpenMP team. If bodies throw,
    // one of the exceptions is rethrown after the loop completes.
    void for_each_index_parallel(std::size_t n, int threads, const std::function<void(std::size_t)> &body);

    void for_each_index(std::size_t n, const Execution &exec, const std::function<void(std::size_t)> &body);

    // OpenMP default team size.
    int default_thread_count();
}

#endif
