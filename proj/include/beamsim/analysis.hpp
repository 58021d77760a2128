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

#ifndef BEAMSIM_ANALYSIS_HPP
#define BEAMSIM_ANALYSIS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace beamsim
{
    // Moments of the per-state throughput distribution [bits/s/Hz].
    struct GaussianFit
    {
        double mu = 0.0;
        double var = 0.0;  // unbiased (n - 1) estimate
        std::size_t n_samples = 0;
    };

    // Throws InsufficientData for fewer than two samples.
    GaussianFit fit_gaussian(std::span<const double> samples);

    // Upper integration limit for the order-statistics integrals: the
    // integrand 1 - Phi^Psi is below 1e-30 beyond mu + 12 sigma.
    double gain_integral_upper(const GaussianFit &fit) noexcept;

    // E[max of psi iid N(mu, var)] as int_0^U 1 - Phi((x - mu) / sigma)^psi dx.
    // var == 0 returns mu.
    double expected_max_gaussian(const GaussianFit &fit, std::size_t psi);

    // Average throughput gain of picking the best of psi states:
    //   int_0^U 1/mu - (1 + erf((x - mu) / sqrt(2 var)))^psi / (2^psi mu) dx.
    // Same integral as expected_max_gaussian / mu, written in erf form.
    double gain_prop1(const GaussianFit &fit, std::size_t psi);

    // Large-psi closed form from the Gumbel limit of the Gaussian maximum:
    //   1 + sqrt(2 var) / mu * ((1 - g) erfinv(1 - 2/psi) + g erfinv(1 - 2/(e psi)))
    // with g the Euler-Mascheroni constant. Throws DomainError for psi < 2.
    double gain_prop2(const GaussianFit &fit, std::size_t psi);

    // Gaussian density truncated (not renormalized) at zero.
    double gaussian_pdf(const GaussianFit &fit, double x) noexcept;
    std::vector<std::pair<double, double>> gaussian_pdf_curve(const GaussianFit &fit, std::span<const double> grid);

    struct SampleMoments
    {
        double mean = 0.0;
        double variance = 0.0;         // unbiased
        double skewness = 0.0;         // g1, biased moment ratio
        double excess_kurtosis = 0.0;  // g2
    };

    SampleMoments sample_moments(std::span<const double> samples);
}

#endif
