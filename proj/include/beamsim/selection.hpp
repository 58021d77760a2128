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

#ifndef BEAMSIM_SELECTION_HPP
#define BEAMSIM_SELECTION_HPP

#include "beamsim/channel.hpp"
#include "beamsim/complex_matrix.hpp"
#include "beamsim/config.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace beamsim
{
    // Selected receive and transmit beam indices (0-based, ascending).
    struct BeamMask
    {
        std::vector<std::size_t> rx_beams;
        std::vector<std::size_t> tx_beams;

        friend bool operator==(const BeamMask &, const BeamMask &) = default;
        friend auto operator<=>(const BeamMask &, const BeamMask &) = default;
    };

    struct BeamSelection
    {
        BeamMask mask;
        double throughput_bits = 0.0;
    };

    struct SelectionResult
    {
        std::size_t state = 0;  // 0-based reconfiguration state
        BeamMask mask;
        ComplexMatrix submatrix;  // L_r x L_t restriction of the state's virtual channel
        double throughput_bits = 0.0;
    };

    // log2 |I + (rho / L_t) H H^H| for an L_r x L_t beamspace submatrix.
    double throughput_of(const ComplexMatrix &sub, double rho, std::size_t l_t);

    // Number of (rx, tx) masks of one state: C(N_r, L_r) C(N_t, L_t), saturated
    // at UINT64_MAX.
    std::uint64_t masks_per_state(std::size_t n_r, std::size_t l_r, std::size_t n_t, std::size_t l_t);

    // Best L_r x L_t submatrix by full enumeration. Ties go to the
    // lexicographically smallest (rx_beams, tx_beams). Throws SearchTooLarge
    // when the mask count exceeds cap.
    BeamSelection exhaustive_beam_select(const ComplexMatrix &hv, std::size_t l_r, std::size_t l_t, double rho,
                                         std::uint64_t cap = 10'000'000);

    // OpenMP version of exhaustive_beam_select. Identical result for any
    // thread count; threads <= 0 uses the OpenMP default.
    BeamSelection exhaustive_beam_select_parallel(const ComplexMatrix &hv, std::size_t l_r, std::size_t l_t, double rho,
                                                  std::uint64_t cap = 10'000'000, int threads = 0);

    // Best (state, mask) over every state; ties go to the smallest state.
    SelectionResult exhaustive_full_select(const ChannelSet &channels, const SelectionOptions &opt = {});

    // argmax over states of |I + (rho / L_t) H H^H| on the full physical
    // channels; ties go to the smallest state.
    std::size_t fast_state_select(const ChannelSet &channels);
    std::size_t fast_state_select(std::span<const ComplexMatrix> channels, double rho, std::size_t l_t);

    // Greedy receive-beam selection over rows of hv. Returns rows in the order
    // they were picked. scale multiplies H~^H H~ inside the inverse.
    std::vector<std::size_t> issa_receive_select(const ComplexMatrix &hv, std::size_t l_r, double scale);

    // Convenience overload: scale = rho / N_t or rho / L_t per the option.
    std::vector<std::size_t> issa_receive_select(const ComplexMatrix &hv, std::size_t l_r, double rho, std::size_t l_t,
                                                 ReceiveScaling scaling);

    // Greedy transmit-beam selection over columns of the row-reduced
    // L_r x N_t matrix with the deflated criterion at scale rho / L_t.
    // Returns columns in pick order.
    std::vector<std::size_t> issa_transmit_select(const ComplexMatrix &sub_rows, std::size_t l_t, double rho);

    // Greedy receive then transmit selection on one state.
    BeamSelection fast_beam_select(const ComplexMatrix &hv, std::size_t l_r, std::size_t l_t, double rho,
                                   ReceiveScaling scaling = ReceiveScaling::num_tx);

    // Fast state choice followed by greedy beam selection on that state.
    SelectionResult fast_select(const ChannelSet &channels, const SelectionOptions &opt = {});

    struct SearchSpace
    {
        boost::multiprecision::cpp_int n_total;  // Psi C(N_t, L_t) C(N_r, L_r)
        double feedback_bits = 0.0;              // log2 Psi + log2(C(N_t, L_t) C(N_r, L_r))
    };

    boost::multiprecision::cpp_int binomial(std::size_t n, std::size_t k);
    SearchSpace count_search_space(const SystemConfig &cfg);
}

#endif
