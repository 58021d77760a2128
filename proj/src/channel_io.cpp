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

#include "beamsim/channel_io.hpp"
#include "beamsim/error.hpp"

#include <fstream>
#include <set>

using nlohmann::json;

namespace beamsim
{
    namespace
    {
        json matrix_to_json(const ComplexMatrix &m)
        {
            json rows = json::array();
            for (std::size_t i = 0; i < m.rows(); ++i)
            {
                json row = json::array();
                for (std::size_t j = 0; j < m.cols(); ++j)
                    row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
                rows.push_back(std::move(row));
            }
            return rows;
        }

        ComplexMatrix matrix_from_json(const json &j, std::size_t rows, std::size_t cols, const char *what)
        {
            if (!j.is_array() || j.size() != rows)
                throw InvalidInput(std::string("channel dump: '") + what + "' must have " + std::to_string(rows) + " rows");
            ComplexMatrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
            {
                const auto &row = j[i];
                if (!row.is_array() || row.size() != cols)
                    throw InvalidInput(std::string("channel dump: '") + what + "' row " + std::to_string(i) +
                                       " must have " + std::to_string(cols) + " entries");
                for (std::size_t k = 0; k < cols; ++k)
                {
                    const auto &z = row[k];
                    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
                        throw InvalidInput(std::string("channel dump: '") + what + "' entry must be [re, im]");
                    m(i, k) = cdouble(z[0].get<double>(), z[1].get<double>());
                }
            }
            return m;
        }

        std::size_t get_count(const json &j, const char *key)
        {
            if (!j.contains(key))
                throw ConfigError(key, "missing");
            const auto &v = j.at(key);
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw ConfigError(key, "must be a nonnegative integer");
            return v.get<std::size_t>();
        }

        double get_real(const json &j, const char *key)
        {
            if (!j.contains(key))
                throw ConfigError(key, "missing");
            const auto &v = j.at(key);
            if (!v.is_number())
                throw ConfigError(key, "must be a number");
            return v.get<double>();
        }
    }

    json system_config_to_json(const SystemConfig &cfg)
    {
        return json{{"n_r", cfg.n_r},
                    {"n_t", cfg.n_t},
                    {"l_r", cfg.l_r},
                    {"l_t", cfg.l_t},
                    {"n_states", cfg.n_states},
                    {"n_clusters", cfg.n_clusters},
                    {"n_rays", cfg.n_rays},
                    {"sigma_theta_r", cfg.sigma_theta_r},
                    {"sigma_theta_t", cfg.sigma_theta_t},
                    {"d_over_lambda", cfg.d_over_lambda},
                    {"rho", cfg.rho}};
    }

    SystemConfig system_config_from_json(const json &j)
    {
        static const std::set<std::string> known = {"n_r", "n_t", "l_r", "l_t", "n_states", "n_clusters",
                                                     "n_rays", "sigma_theta_r", "sigma_theta_t", "d_over_lambda",
                                                     "rho"};
        if (!j.is_object())
            throw ConfigError("config", "must be an object");
        for (const auto &[k, v] : j.items())
            if (!known.contains(k))
                throw ConfigError(k, "unknown field");
        SystemConfig cfg;
        cfg.n_r = get_count(j, "n_r");
        cfg.n_t = get_count(j, "n_t");
        cfg.l_r = get_count(j, "l_r");
        cfg.l_t = get_count(j, "l_t");
        cfg.n_states = get_count(j, "n_states");
        cfg.n_clusters = get_count(j, "n_clusters");
        cfg.n_rays = get_count(j, "n_rays");
        cfg.sigma_theta_r = get_real(j, "sigma_theta_r");
        cfg.sigma_theta_t = get_real(j, "sigma_theta_t");
        cfg.d_over_lambda = get_real(j, "d_over_lambda");
        cfg.rho = get_real(j, "rho");
        validate(cfg);
        return cfg;
    }

    json channel_set_to_json(const ChannelSet &set)
    {
        json channels = json::array();
        for (std::size_t s = 0; s < set.n_states(); ++s)
            channels.push_back(json{{"physical", matrix_to_json(set.physical[s])},
                                    {"virtual", matrix_to_json(set.beamspace[s])}});
        return json{{"config", system_config_to_json(set.config)}, {"seed", set.seed}, {"channels", channels}};
    }

    ChannelSet channel_set_from_json(const json &j)
    {
        if (!j.is_object() || !j.contains("config") || !j.contains("seed") || !j.contains("channels"))
            throw InvalidInput("channel dump: expected fields 'config', 'seed' and 'channels'");
        ChannelSet set;
        set.config = system_config_from_json(j.at("config"));
        if (!j.at("seed").is_number_unsigned())
            throw InvalidInput("channel dump: 'seed' must be an unsigned integer");
        set.seed = j.at("seed").get<std::uint64_t>();

        const auto &channels = j.at("channels");
        if (!channels.is_array() || channels.size() != set.config.n_states)
            throw InvalidInput("channel dump: 'channels' must hold n_states = " + std::to_string(set.config.n_states) +
                               " entries");
        for (const auto &c : channels)
        {
            if (!c.is_object() || !c.contains("physical") || !c.contains("virtual"))
                throw InvalidInput("channel dump: each channel needs 'physical' and 'virtual'");
            set.physical.push_back(matrix_from_json(c.at("physical"), set.config.n_r, set.config.n_t, "physical"));
            set.beamspace.push_back(matrix_from_json(c.at("virtual"), set.config.n_r, set.config.n_t, "virtual"));
            if (!set.physical.back().all_finite() || !set.beamspace.back().all_finite())
                throw InvalidInput("channel dump: non-finite matrix entry");
        }
        return set;
    }

    void save_channel_set(const std::filesystem::path &path, const ChannelSet &set)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("cannot open '" + path.string() + "' for writing");
        out << channel_set_to_json(set).dump(1) << '\n';
        if (!out)
            throw IoError("write to '" + path.string() + "' failed");
    }

    ChannelSet load_channel_set(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open '" + path.string() + "'");
        json j;
        try
        {
            in >> j;
        }
        catch (const json::parse_error &e)
        {
            throw InvalidInput("channel dump '" + path.string() + "': " + e.what());
        }
        return channel_set_from_json(j);
    }
}
