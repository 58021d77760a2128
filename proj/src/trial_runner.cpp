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

#include "beamsim/trial_runner.hpp"

#include <omp.h>

#include <cstdint>
#include <exception>

namespace beamsim
{
    void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)> &body)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
    }

    void for_each_index_parallel(std::size_t n, int threads, const std::function<void(std::size_t)> &body)
    {
        std::exception_ptr failure;
        const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
        for (std::int64_t i = 0; i < count; ++i)
        {
            try
            {
                body(static_cast<std::size_t>(i));
            }
            catch (...)
            {
#pragma omp critical(beamsim_trial_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    void for_each_index(std::size_t n, const Execution &exec, const std::function<void(std::size_t)> &body)
    {
        if (exec.threads <= 1)
            for_each_index_serial(n, body);
        else
            for_each_index_parallel(n, exec.threads, body);
    }

    int default_thread_count() { return omp_get_max_threads(); }
}
