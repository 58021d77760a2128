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

#ifndef BEAMSIM_CONFIG_IO_HPP
#define BEAMSIM_CONFIG_IO_HPP

#include "beamsim/config.hpp"

#include <filesystem>
#include <string_view>

#include <json.hpp>

namespace beamsim
{
    // Flat JSON form of an experiment configuration. Keys:
    //   n_r n_t l_r l_t n_states n_clusters n_rays sigma_theta_r sigma_theta_t
    //   d_over_lambda rho_db n_trials seed psi_sweep rho_db_sweep
    //   receive_stage_scaling exhaustive_cap fast_only output_path
    // Angles are radians, rho_db is in dB.
    nlohmann::json experiment_config_to_json(const ExperimentConfig &cfg);

    // Applies the keys present in j on top of cfg. Unknown keys and
    // ill-typed values throw ConfigError naming the key.
    void apply_config_json(ExperimentConfig &cfg, const nlohmann::json &j);

    // "key=value". The value is read as JSON when it parses, as a
    // comma-separated list for the sweep keys, and as a string otherwise.
    void apply_override(ExperimentConfig &cfg, std::string_view assignment);

    ExperimentConfig load_experiment_config(const std::filesystem::path &path);
}

#endif
