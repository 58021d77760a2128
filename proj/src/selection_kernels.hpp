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

// Enumeration kernels shared by the serial and OpenMP exhaustive searches.

#ifndef BEAMSIM_SELECTION_KERNELS_HPP
#define BEAMSIM_SELECTION_KERNELS_HPP

#include "beamsim/selection.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace beamsim::detail
{
    struct RowsBest
    {
        double value = -std::numeric_limits<double>::infinity();
        std::size_t tx_rank = 0;  // index into the lexicographic tx combination list
    };

    bool next_combination(std::vector<std::size_t> &c, std::size_t n);
    std::vector<std::size_t> first_combination(std::size_t k);
    std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k);
    std::vector<std::vector<std::size_t>> all_combinations(std::size_t n, std::size_t k);

    void check_exhaustive_args(const ComplexMatrix &hv, std::size_t l_r, std::size_t l_t, double rho,
                               std::uint64_t cap);

    // Best transmit mask for a fixed receive mask; first maximum in tx order.
    RowsBest best_for_rows(const ComplexMatrix &hv, std::span<const std::size_t> rx,
                           const std::vector<std::vector<std::size_t>> &tx_combos, double c);

    BeamSelection finish(const ComplexMatrix &hv, std::vector<std::size_t> rx, std::vector<std::size_t> tx,
                         double rho, std::size_t l_t);
}

#endif
