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

#include "beamsim/channel.hpp"
#include "beamsim/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace beamsim
{
    std::vector<cdouble> steering_vector_spatial(double spatial_angle, std::size_t n)
    {
        std::vector<cdouble> a(n);
        const double w = -2.0 * std::numbers::pi * spatial_angle;
        for (std::size_t k = 0; k < n; ++k)
            a[k] = std::polar(1.0, w * static_cast<double>(k));
        return a;
    }

    std::vector<cdouble> steering_vector(double theta, std::size_t n, double d_over_lambda)
    {
        return steering_vector_spatial(d_over_lambda * std::sin(theta), n);
    }

    ComplexMatrix dft_matrix(std::size_t n, double d_over_lambda)
    {
        if (n == 0 || n % 2 == 0)
            throw InvalidInput("dft_matrix: size must be odd, got " + std::to_string(n));
        const double half = 0.5 * static_cast<double>(n - 1);
        const double max_spatial = half / static_cast<double>(n);
        if (!(d_over_lambda >= max_spatial))
            throw InvalidInput("dft_matrix: d/lambda " + std::to_string(d_over_lambda) +
                               " cannot reach virtual spatial angle " + std::to_string(max_spatial));

        // Built directly from the spatial angle grid; going through
        // asin(spatial / (d / lambda)) and back only adds rounding.
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        ComplexMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double spatial = (static_cast<double>(i) - half) / static_cast<double>(n);
            const auto col = steering_vector_spatial(spatial, n);
            for (std::size_t k = 0; k < n; ++k)
                a(k, i) = scale * col[k];
        }
        return a;
    }

    double ray_power(const SystemConfig &cfg) noexcept
    {
        return 1.0 / static_cast<double>(cfg.n_clusters * cfg.n_rays);
    }

    ClusterGeometry sample_geometry(RandomStream &rng, const SystemConfig &cfg)
    {
        std::uniform_real_distribution<double> angle(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
        ClusterGeometry geom;
        geom.clusters.resize(cfg.n_clusters);
        const double power = ray_power(cfg);
        for (auto &c : geom.clusters)
        {
            c.mean_aoa = angle(rng);
            c.mean_aod = angle(rng);
            c.power = power;
        }
        return geom;
    }

    std::vector<Ray> sample_rays(RandomStream &rng, const SystemConfig &cfg, const ClusterGeometry &geom)
    {
        // Uniform on [-sqrt(3) sigma, sqrt(3) sigma] has standard deviation sigma.
        const double half_r = std::numbers::sqrt3 * cfg.sigma_theta_r;
        const double half_t = std::numbers::sqrt3 * cfg.sigma_theta_t;
        std::uniform_real_distribution<double> unit(-1.0, 1.0);

        std::vector<Ray> rays;
        rays.reserve(geom.clusters.size() * cfg.n_rays);
        for (const auto &c : geom.clusters)
            for (std::size_t l = 0; l < cfg.n_rays; ++l)
            {
                Ray r;
                r.aoa = c.mean_aoa + half_r * unit(rng);
                r.aod = c.mean_aod + half_t * unit(rng);
                r.gain = complex_gaussian(rng, c.power);
                rays.push_back(r);
            }
        return rays;
    }

    ComplexMatrix assemble_physical(const SystemConfig &cfg, std::span<const Ray> rays)
    {
        ComplexMatrix h(cfg.n_r, cfg.n_t);
        std::vector<cdouble> at_conj(cfg.n_t);
        for (const auto &ray : rays)
        {
            const auto ar = steering_vector(ray.aoa, cfg.n_r, cfg.d_over_lambda);
            const auto at = steering_vector(ray.aod, cfg.n_t, cfg.d_over_lambda);
            for (std::size_t j = 0; j < cfg.n_t; ++j)
                at_conj[j] = std::conj(at[j]);
            for (std::size_t i = 0; i < cfg.n_r; ++i)
            {
                const cdouble g = ray.gain * ar[i];
                for (std::size_t j = 0; j < cfg.n_t; ++j)
                    h(i, j) += g * at_conj[j];
            }
        }
        return h;
    }

    ComplexMatrix generate_physical(RandomStream &rng, const SystemConfig &cfg, const ClusterGeometry &geom)
    {
        const auto rays = sample_rays(rng, cfg, geom);
        return assemble_physical(cfg, rays);
    }

    ComplexMatrix to_virtual(const ComplexMatrix &h, const ComplexMatrix &a_r, const ComplexMatrix &a_t)
    {
        if (a_r.rows() != a_r.cols() || a_t.rows() != a_t.cols() || a_r.rows() != h.rows() || a_t.rows() != h.cols())
            throw InvalidInput("to_virtual: channel is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
                               " but bases are " + std::to_string(a_r.rows()) + "x" + std::to_string(a_r.cols()) +
                               " and " + std::to_string(a_t.rows()) + "x" + std::to_string(a_t.cols()));

        // (A_R^H H)(i, j) = sum_k conj(A_R(k, i)) H(k, j)
        const std::size_t nr = h.rows(), nt = h.cols();
        ComplexMatrix tmp(nr, nt);
        for (std::size_t k = 0; k < nr; ++k)
            for (std::size_t i = 0; i < nr; ++i)
            {
                const cdouble w = std::conj(a_r(k, i));
                for (std::size_t j = 0; j < nt; ++j)
                    tmp(i, j) += w * h(k, j);
            }
        return tmp * a_t;
    }

    ChannelSet generate_channel_set(std::uint64_t seed, const SystemConfig &cfg)
    {
        validate(cfg);
        ChannelSet set;
        set.config = cfg;
        set.seed = seed;
        set.physical.reserve(cfg.n_states);
        set.beamspace.reserve(cfg.n_states);

        const ComplexMatrix a_r = dft_matrix(cfg.n_r, cfg.d_over_lambda);
        const ComplexMatrix a_t = cfg.n_t == cfg.n_r ? a_r : dft_matrix(cfg.n_t, cfg.d_over_lambda);
        for (std::size_t psi = 0; psi < cfg.n_states; ++psi)
        {
            auto geom_rng = make_stream(derive_seed(seed, {psi, static_cast<std::uint64_t>(StreamPurpose::geometry)}));
            auto ray_rng = make_stream(derive_seed(seed, {psi, static_cast<std::uint64_t>(StreamPurpose::rays)}));
            const auto geom = sample_geometry(geom_rng, cfg);
            set.physical.push_back(generate_physical(ray_rng, cfg, geom));
            set.beamspace.push_back(to_virtual(set.physical.back(), a_r, a_t));
        }
        return set;
    }

    ChannelSet take_states(const ChannelSet &set, std::size_t n)
    {
        if (n == 0 || n > set.n_states())
            throw InvalidInput("take_states: requested " + std::to_string(n) + " of " +
                               std::to_string(set.n_states()) + " states");
        ChannelSet out;
        out.config = set.config;
        out.config.n_states = n;
        out.seed = set.seed;
        out.physical.assign(set.physical.begin(), set.physical.begin() + static_cast<std::ptrdiff_t>(n));
        out.beamspace.assign(set.beamspace.begin(), set.beamspace.begin() + static_cast<std::ptrdiff_t>(n));
        return out;
    }
}
