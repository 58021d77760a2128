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

#include "beamsim/selection.hpp"
#include "selection_kernels.hpp"

#include <omp.h>

#include <cstdint>
#include <limits>

namespace beamsim
{
    namespace
    {
        struct Candidate
        {
            double value = -std::numeric_limits<double>::infinity();
            std::uint64_t rx_rank = std::numeric_limits<std::uint64_t>::max();
            std::size_t tx_rank = 0;

            // Larger value wins; equal values go to the smaller rx rank, which
            // is the lexicographically smaller mask.
            bool beats(const Candidate &o) const noexcept
            {
                return value > o.value || (value == o.value && rx_rank < o.rx_rank);
            }
        };
    }

    BeamSelection exhaustive_beam_select_parallel(const ComplexMatrix &hv, std::size_t l_r, std::size_t l_t,
                                                  double rho, std::uint64_t cap, int threads)
    {
        detail::check_exhaustive_args(hv, l_r, l_t, rho, cap);
        const double c = rho / static_cast<double>(l_t);
        const auto tx_combos = detail::all_combinations(hv.cols(), l_t);
        const auto n_rx = binomial(hv.rows(), l_r).convert_to<std::int64_t>();
        const int n_threads = threads > 0 ? threads : omp_get_max_threads();

        Candidate best;
#pragma omp parallel num_threads(n_threads)
        {
            Candidate local;
#pragma omp for schedule(dynamic, 16) nowait
            for (std::int64_t r = 0; r < n_rx; ++r)
            {
                const auto rx = detail::unrank_combination(static_cast<std::uint64_t>(r), hv.rows(), l_r);
                const auto b = detail::best_for_rows(hv, rx, tx_combos, c);
                const Candidate cand{b.value, static_cast<std::uint64_t>(r), b.tx_rank};
                if (cand.beats(local))
                    local = cand;
            }
#pragma omp critical(beamsim_exhaustive_reduce)
            if (local.beats(best))
                best = local;
        }

        auto rx = detail::unrank_combination(best.rx_rank, hv.rows(), l_r);
        return detail::finish(hv, std::move(rx), tx_combos[best.tx_rank], rho, l_t);
    }
}
