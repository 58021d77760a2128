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

#ifndef BEAMSIM_CONFIG_HPP
#define BEAMSIM_CONFIG_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace beamsim
{
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

    // Scalar parameters of the simulated link. Defaults are the reference
    // 17x17 array with 5 RF chains per side, 3 clusters of 10 rays, 4 degree
    // angular spread and half-wavelength spacing.
    struct SystemConfig
    {
        std::size_t n_r = 17;        // receive antennas (odd)
        std::size_t n_t = 17;        // transmit antennas (odd)
        std::size_t l_r = 5;         // receive RF chains
        std::size_t l_t = 5;         // transmit RF chains = data streams
        std::size_t n_states = 8;    // reconfiguration states
        std::size_t n_clusters = 3;  // scattering clusters per state
        std::size_t n_rays = 10;     // rays per cluster
        double sigma_theta_r = deg_to_rad(4.0);  // receive angular spread [rad]
        double sigma_theta_t = deg_to_rad(4.0);  // transmit angular spread [rad]
        double d_over_lambda = 0.5;
        double rho = 10.0;           // P / sigma_n^2, linear

        friend bool operator==(const SystemConfig &, const SystemConfig &) = default;
    };

    // Throws ConfigError naming the first offending field.
    void validate(const SystemConfig &cfg);

    // Scaling used inside the receive-stage inverse of the greedy beam search.
    // num_tx applies rho / N_t (all transmit beams are still active at that
    // stage); num_streams applies rho / L_t like the throughput objective.
    enum class ReceiveScaling
    {
        num_tx,
        num_streams,
    };

    struct SelectionOptions
    {
        ReceiveScaling receive_scaling = ReceiveScaling::num_tx;
        std::uint64_t exhaustive_cap = 10'000'000;  // max masks per state
    };

    struct ExperimentConfig
    {
        SystemConfig system;
        double rho_db = 10.0;                       // resolved into system.rho
        std::size_t n_trials = 5000;
        std::uint64_t seed = 1;
        std::vector<std::size_t> psi_sweep = {1, 2, 4, 8, 16};
        std::vector<double> rho_db_sweep = {0.0, 5.0, 10.0, 15.0, 20.0};
        SelectionOptions selection;
        bool fast_only = false;                     // loss experiment: skip the exhaustive arm
        std::string output_path = ".";
    };

    // Copies rho_db into system.rho and validates every field.
    void resolve(ExperimentConfig &cfg);

    const char *to_string(ReceiveScaling s) noexcept;
}

#endif
