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

#include "beamsim/config_io.hpp"
#include "beamsim/error.hpp"

#include <fstream>
#include <string>

using nlohmann::json;

namespace beamsim
{
    namespace
    {
        std::size_t as_count(const json &v, const std::string &key)
        {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw ConfigError(key, "expected a nonnegative integer, got " + v.dump());
            return v.get<std::size_t>();
        }

        double as_real(const json &v, const std::string &key)
        {
            if (!v.is_number())
                throw ConfigError(key, "expected a number, got " + v.dump());
            return v.get<double>();
        }

        bool as_bool(const json &v, const std::string &key)
        {
            if (!v.is_boolean())
                throw ConfigError(key, "expected true or false, got " + v.dump());
            return v.get<bool>();
        }

        void set_field(ExperimentConfig &cfg, const std::string &key, const json &v)
        {
            auto &s = cfg.system;
            if (key == "n_r")
                s.n_r = as_count(v, key);
            else if (key == "n_t")
                s.n_t = as_count(v, key);
            else if (key == "l_r")
                s.l_r = as_count(v, key);
            else if (key == "l_t")
                s.l_t = as_count(v, key);
            else if (key == "n_states")
                s.n_states = as_count(v, key);
            else if (key == "n_clusters")
                s.n_clusters = as_count(v, key);
            else if (key == "n_rays")
                s.n_rays = as_count(v, key);
            else if (key == "sigma_theta_r")
                s.sigma_theta_r = as_real(v, key);
            else if (key == "sigma_theta_t")
                s.sigma_theta_t = as_real(v, key);
            else if (key == "d_over_lambda")
                s.d_over_lambda = as_real(v, key);
            else if (key == "rho_db")
                cfg.rho_db = as_real(v, key);
            else if (key == "n_trials")
                cfg.n_trials = as_count(v, key);
            else if (key == "seed")
            {
                if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
                    throw ConfigError(key, "expected an unsigned 64-bit integer, got " + v.dump());
                cfg.seed = v.get<std::uint64_t>();
            }
            else if (key == "psi_sweep")
            {
                if (!v.is_array())
                    throw ConfigError(key, "expected an array of positive integers");
                cfg.psi_sweep.clear();
                for (const auto &e : v)
                    cfg.psi_sweep.push_back(as_count(e, key));
            }
            else if (key == "rho_db_sweep")
            {
                if (!v.is_array())
                    throw ConfigError(key, "expected an array of numbers");
                cfg.rho_db_sweep.clear();
                for (const auto &e : v)
                    cfg.rho_db_sweep.push_back(as_real(e, key));
            }
            else if (key == "receive_stage_scaling")
            {
                if (v == "n_t")
                    cfg.selection.receive_scaling = ReceiveScaling::num_tx;
                else if (v == "l_t")
                    cfg.selection.receive_scaling = ReceiveScaling::num_streams;
                else
                    throw ConfigError(key, "expected \"n_t\" or \"l_t\", got " + v.dump());
            }
            else if (key == "exhaustive_cap")
                cfg.selection.exhaustive_cap = as_count(v, key);
            else if (key == "fast_only")
                cfg.fast_only = as_bool(v, key);
            else if (key == "output_path")
            {
                if (!v.is_string())
                    throw ConfigError(key, "expected a string");
                cfg.output_path = v.get<std::string>();
            }
            else
                throw ConfigError(key, "unknown configuration field");
        }

        json parse_list(std::string_view text)
        {
            json arr = json::array();
            std::size_t start = 0;
            while (start <= text.size())
            {
                const auto comma = text.find(',', start);
                const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
                arr.push_back(json::parse(item));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
            return arr;
        }
    }

    json experiment_config_to_json(const ExperimentConfig &cfg)
    {
        const auto &s = cfg.system;
        return json{{"n_r", s.n_r},
                    {"n_t", s.n_t},
                    {"l_r", s.l_r},
                    {"l_t", s.l_t},
                    {"n_states", s.n_states},
                    {"n_clusters", s.n_clusters},
                    {"n_rays", s.n_rays},
                    {"sigma_theta_r", s.sigma_theta_r},
                    {"sigma_theta_t", s.sigma_theta_t},
                    {"d_over_lambda", s.d_over_lambda},
                    {"rho_db", cfg.rho_db},
                    {"n_trials", cfg.n_trials},
                    {"seed", cfg.seed},
                    {"psi_sweep", cfg.psi_sweep},
                    {"rho_db_sweep", cfg.rho_db_sweep},
                    {"receive_stage_scaling", to_string(cfg.selection.receive_scaling)},
                    {"exhaustive_cap", cfg.selection.exhaustive_cap},
                    {"fast_only", cfg.fast_only},
                    {"output_path", cfg.output_path}};
    }

    void apply_config_json(ExperimentConfig &cfg, const json &j)
    {
        if (!j.is_object())
            throw ConfigError("", "configuration must be a JSON object");
        for (const auto &[key, value] : j.items())
            set_field(cfg, key, value);
    }

    void apply_override(ExperimentConfig &cfg, std::string_view assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw ConfigError("", "override '" + std::string(assignment) + "' is not of the form key=value");
        const std::string key(assignment.substr(0, eq));
        const std::string_view text = assignment.substr(eq + 1);

        json value;
        try
        {
            value = json::parse(text);
        }
        catch (const json::parse_error &)
        {
            if (key == "psi_sweep" || key == "rho_db_sweep")
            {
                try
                {
                    value = parse_list(text);
                }
                catch (const json::parse_error &)
                {
                    throw ConfigError(key, "cannot parse list '" + std::string(text) + "'");
                }
            }
            else
                value = std::string(text);
        }
        if ((key == "psi_sweep" || key == "rho_db_sweep") && value.is_number())
            value = json::array({value});
        set_field(cfg, key, value);
    }

    ExperimentConfig load_experiment_config(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError("config", "cannot open '" + path.string() + "'");
        json j;
        try
        {
            in >> j;
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError("config", "'" + path.string() + "' is not valid JSON: " + e.what());
        }
        ExperimentConfig cfg;
        apply_config_json(cfg, j);
        return cfg;
    }
}
