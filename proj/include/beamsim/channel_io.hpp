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

#ifndef BEAMSIM_CHANNEL_IO_HPP
#define BEAMSIM_CHANNEL_IO_HPP

#include "beamsim/channel.hpp"

#include <filesystem>
#include <string>

#include <json.hpp>

namespace beamsim
{
    // Channel dump document:
    //   { "config": {n_r, n_t, l_r, l_t, n_states, n_clusters, n_rays,
    //                sigma_theta_r, sigma_theta_t, d_over_lambda, rho},
    //     "seed": <uint64>,
    //     "channels": [ { "physical": [[[re, im], ...], ...],
    //                     "virtual":  [[[re, im], ...], ...] }, ... ] }
    // Doubles are written with round-trip precision, so a load reproduces
    // every matrix bit for bit.
    nlohmann::json system_config_to_json(const SystemConfig &cfg);
    SystemConfig system_config_from_json(const nlohmann::json &j);

    nlohmann::json channel_set_to_json(const ChannelSet &set);
    ChannelSet channel_set_from_json(const nlohmann::json &j);

    void save_channel_set(const std::filesystem::path &path, const ChannelSet &set);
    ChannelSet load_channel_set(const std::filesystem::path &path);
}

#endif
