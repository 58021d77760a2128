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

#ifndef BEAMSIM_CHANNEL_HPP
#define BEAMSIM_CHANNEL_HPP

#include "beamsim/complex_matrix.hpp"
#include "beamsim/config.hpp"
#include "beamsim/random.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace beamsim
{
    // ULA response at spatial angle s = (d / lambda) sin(theta):
    // entry k is exp(-j 2 pi s k).
    std::vector<cdouble> steering_vector_spatial(double spatial_angle, std::size_t n);

    // ULA response at physical angle theta [rad].
    std::vector<cdouble> steering_vector(double theta, std::size_t n, double d_over_lambda);

    // Unitary n x n beamspace basis. Column i is the normalized steering
    // vector at spatial angle (i - (n - 1) / 2) / n, i = 0..n-1.
    // Throws InvalidInput for even n, or when d_over_lambda is too small for
    // the outermost virtual angle to correspond to a physical direction.
    ComplexMatrix dft_matrix(std::size_t n, double d_over_lambda);

    struct Cluster
    {
        double mean_aoa = 0.0;  // [rad]
        double mean_aod = 0.0;  // [rad]
        double power = 0.0;     // per-ray gain variance
    };

    // Cluster geometry of one reconfiguration state in one realization.
    struct ClusterGeometry
    {
        std::vector<Cluster> clusters;
    };

    struct Ray
    {
        cdouble gain;
        double aoa = 0.0;
        double aod = 0.0;
    };

    // Per-ray gain variance that makes E||H||_F^2 = N_r N_t with equal
    // power clusters: 1 / (N_cl N_ray).
    double ray_power(const SystemConfig &cfg) noexcept;

    // Cluster means uniform on [-pi/2, pi/2], equal power per cluster.
    ClusterGeometry sample_geometry(RandomStream &rng, const SystemConfig &cfg);

    // Ray angles uniform on mean +/- sqrt(3) sigma (standard deviation sigma),
    // not clipped to [-pi/2, pi/2]. Gains CN(0, cluster power).
    std::vector<Ray> sample_rays(RandomStream &rng, const SystemConfig &cfg, const ClusterGeometry &geom);

    // Sum of gain * a_R(aoa) a_T(aod)^H over the rays.
    ComplexMatrix assemble_physical(const SystemConfig &cfg, std::span<const Ray> rays);

    ComplexMatrix generate_physical(RandomStream &rng, const SystemConfig &cfg, const ClusterGeometry &geom);

    // A_R^H H A_T. Throws InvalidInput on dimension mismatch.
    ComplexMatrix to_virtual(const ComplexMatrix &h, const ComplexMatrix &a_r, const ComplexMatrix &a_t);

    // All reconfiguration states of one channel realization. Immutable once built.
    struct ChannelSet
    {
        SystemConfig config;
        std::uint64_t seed = 0;
        std::vector<ComplexMatrix> physical;   // H_psi, N_r x N_t
        std::vector<ComplexMatrix> beamspace;  // virtual channel A_R^H H_psi A_T

        std::size_t n_states() const noexcept { return physical.size(); }
    };

    // Per-state streams are derive_seed(seed, {state, purpose}); the result is
    // a pure function of (seed, cfg).
    ChannelSet generate_channel_set(std::uint64_t seed, const SystemConfig &cfg);

    // Seed of trial t under an experiment seed.
    inline std::uint64_t trial_seed(std::uint64_t experiment_seed, std::uint64_t trial) noexcept
    {
        return derive_seed(experiment_seed, {trial});
    }

    // The first n states of a set.
    ChannelSet take_states(const ChannelSet &set, std::size_t n);
}

#endif
