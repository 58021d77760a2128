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

#include "beamsim/config.hpp"
#include "beamsim/error.hpp"

namespace beamsim
{
    void validate(const SystemConfig &cfg)
    {
        if (cfg.n_r == 0 || cfg.n_r % 2 == 0)
            throw ConfigError("n_r", "receive antenna count must be odd and positive (the beamspace DFT grid "
                                     "assumes an odd number of antennas), got " + std::to_string(cfg.n_r));
        if (cfg.n_t == 0 || cfg.n_t % 2 == 0)
            throw ConfigError("n_t", "transmit antenna count must be odd and positive (the beamspace DFT grid "
                                     "assumes an odd number of antennas), got " + std::to_string(cfg.n_t));
        if (cfg.l_t == 0)
            throw ConfigError("l_t", "must be at least 1");
        if (cfg.l_r < cfg.l_t)
            throw ConfigError("l_t", "must not exceed l_r (" + std::to_string(cfg.l_r) + "), got " + std::to_string(cfg.l_t));
        if (cfg.l_r > cfg.n_r)
            throw ConfigError("l_r", "must not exceed n_r");
        if (cfg.l_t > cfg.n_t)
            throw ConfigError("l_t", "must not exceed n_t");
        if (cfg.n_states == 0)
            throw ConfigError("n_states", "must be at least 1");
        if (cfg.n_clusters == 0)
            throw ConfigError("n_clusters", "must be at least 1");
        if (cfg.n_rays == 0)
            throw ConfigError("n_rays", "must be at least 1");
        if (!(cfg.sigma_theta_r >= 0.0) || !std::isfinite(cfg.sigma_theta_r))
            throw ConfigError("sigma_theta_r", "must be a finite nonnegative angle in radians");
        if (!(cfg.sigma_theta_t >= 0.0) || !std::isfinite(cfg.sigma_theta_t))
            throw ConfigError("sigma_theta_t", "must be a finite nonnegative angle in radians");
        if (!(cfg.d_over_lambda > 0.0) || !std::isfinite(cfg.d_over_lambda))
            throw ConfigError("d_over_lambda", "must be positive");
        if (!(cfg.rho > 0.0) || !std::isfinite(cfg.rho))
            throw ConfigError("rho", "must be positive and finite");
    }

    void resolve(ExperimentConfig &cfg)
    {
        if (!std::isfinite(cfg.rho_db))
            throw ConfigError("rho_db", "must be finite");
        cfg.system.rho = db_to_linear(cfg.rho_db);
        validate(cfg.system);
        if (cfg.n_trials < 2)
            throw ConfigError("n_trials", "must be at least 2");
        for (auto psi : cfg.psi_sweep)
            if (psi == 0)
                throw ConfigError("psi_sweep", "values must be positive");
        for (auto r : cfg.rho_db_sweep)
            if (!std::isfinite(r))
                throw ConfigError("rho_db_sweep", "values must be finite");
        if (cfg.selection.exhaustive_cap == 0)
            throw ConfigError("exhaustive_cap", "must be positive");
    }

    const char *to_string(ReceiveScaling s) noexcept
    {
        switch (s)
        {
        case ReceiveScaling::num_tx:
            return "n_t";
        case ReceiveScaling::num_streams:
            return "l_t";
        }
        return "n_t";
    }
}
