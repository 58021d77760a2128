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

#include "beamsim/analysis.hpp"
#include "beamsim/error.hpp"
#include "beamsim/quadrature.hpp"
#include "beamsim/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace beamsim
{
    GaussianFit fit_gaussian(std::span<const double> samples)
    {
        if (samples.size() < 2)
            throw InsufficientData("fit_gaussian: need at least 2 samples, got " + std::to_string(samples.size()));
        double sum = 0.0;
        for (double x : samples)
            sum += x;
        const double n = static_cast<double>(samples.size());
        const double mean = sum / n;
        double ss = 0.0;
        for (double x : samples)
            ss += (x - mean) * (x - mean);
        return {mean, ss / (n - 1.0), samples.size()};
    }

    double gain_integral_upper(const GaussianFit &fit) noexcept { return fit.mu + 12.0 * std::sqrt(fit.var); }

    namespace
    {
        QuadratureOptions gain_quadrature() { return QuadratureOptions{1e-10, 50, 6}; }
    }

    double expected_max_gaussian(const GaussianFit &fit, std::size_t psi)
    {
        if (psi == 0)
            throw DomainError("expected_max_gaussian: psi must be positive");
        if (fit.var < 0.0)
            throw DomainError("expected_max_gaussian: negative variance");
        if (fit.var == 0.0)
            return fit.mu;
        const double sigma = std::sqrt(fit.var);
        const double p = static_cast<double>(psi);
        auto tail = [&](double x) { return 1.0 - std::pow(normal_cdf((x - fit.mu) / sigma), p); };
        const double hi = gain_integral_upper(fit);
        if (!(hi > 0.0))
            return 0.0;
        return integrate(tail, 0.0, hi, gain_quadrature());
    }

    double gain_prop1(const GaussianFit &fit, std::size_t psi)
    {
        if (psi == 0)
            throw DomainError("gain_prop1: psi must be positive");
        if (!(fit.mu > 0.0))
            throw DomainError("gain_prop1: mean throughput must be positive");
        if (!(fit.var > 0.0))
            throw DomainError("gain_prop1: variance must be positive");
        const double scale = std::sqrt(2.0 * fit.var);
        const double p = static_cast<double>(psi);
        // (1 + erf)^psi / 2^psi evaluated as ((1 + erf) / 2)^psi to stay finite
        // for large psi.
        auto integrand = [&](double x)
        {
            const double e = erf((x - fit.mu) / scale);
            return 1.0 / fit.mu - std::pow(0.5 * (1.0 + e), p) / fit.mu;
        };
        return integrate(integrand, 0.0, gain_integral_upper(fit), gain_quadrature());
    }

    double gain_prop2(const GaussianFit &fit, std::size_t psi)
    {
        if (psi < 2)
            throw DomainError("gain_prop2: requires psi >= 2, got " + std::to_string(psi));
        if (!(fit.mu > 0.0))
            throw DomainError("gain_prop2: mean throughput must be positive");
        if (fit.var < 0.0)
            throw DomainError("gain_prop2: negative variance");
        if (fit.var == 0.0)
            return 1.0;
        const double p = static_cast<double>(psi);
        const double a = erf_inv(1.0 - 2.0 / p);
        const double b = erf_inv(1.0 - 2.0 / (std::numbers::e * p));
        return 1.0 + std::sqrt(2.0 * fit.var) / fit.mu * ((1.0 - euler_gamma) * a + euler_gamma * b);
    }

    double gaussian_pdf(const GaussianFit &fit, double x) noexcept
    {
        if (x < 0.0 || !(fit.var > 0.0))
            return 0.0;
        const double d = x - fit.mu;
        return std::exp(-d * d / (2.0 * fit.var)) / std::sqrt(2.0 * std::numbers::pi * fit.var);
    }

    std::vector<std::pair<double, double>> gaussian_pdf_curve(const GaussianFit &fit, std::span<const double> grid)
    {
        std::vector<std::pair<double, double>> out;
        out.reserve(grid.size());
        for (double x : grid)
            out.emplace_back(x, gaussian_pdf(fit, x));
        return out;
    }

    SampleMoments sample_moments(std::span<const double> samples)
    {
        if (samples.size() < 2)
            throw InsufficientData("sample_moments: need at least 2 samples");
        const double n = static_cast<double>(samples.size());
        double mean = 0.0;
        for (double x : samples)
            mean += x;
        mean /= n;
        double m2 = 0.0, m3 = 0.0, m4 = 0.0;
        for (double x : samples)
        {
            const double d = x - mean;
            const double d2 = d * d;
            m2 += d2;
            m3 += d2 * d;
            m4 += d2 * d2;
        }
        SampleMoments m;
        m.mean = mean;
        m.variance = m2 / (n - 1.0);
        m2 /= n;
        m3 /= n;
        m4 /= n;
        if (m2 > 0.0)
        {
            m.skewness = m3 / std::pow(m2, 1.5);
            m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
        }
        return m;
    }
}
