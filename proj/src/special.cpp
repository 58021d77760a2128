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

#include "beamsim/special.hpp"
#include "beamsim/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace beamsim
{
    double erf(double x) noexcept { return std::erf(x); }

    double normal_cdf(double z) noexcept { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

    namespace
    {
        // M. Giles, "Approximating the erfinv function", GPU Computing Gems
        // (2010), single-precision branch. Relative error ~1e-7, which Newton
        // steps on erf then polish to double precision.
        double erf_inv_initial(double y) noexcept
        {
            double w = -std::log((1.0 - y) * (1.0 + y));
            double p;
            if (w < 5.0)
            {
                w -= 2.5;
                p = 2.81022636e-08;
                p = 3.43273939e-07 + p * w;
                p = -3.5233877e-06 + p * w;
                p = -4.39150654e-06 + p * w;
                p = 0.00021858087 + p * w;
                p = -0.00125372503 + p * w;
                p = -0.00417768164 + p * w;
                p = 0.246640727 + p * w;
                p = 1.50140941 + p * w;
            }
            else
            {
                w = std::sqrt(w) - 3.0;
                p = -0.000200214257;
                p = 0.000100950558 + p * w;
                p = 0.00134934322 + p * w;
                p = -0.00367342844 + p * w;
                p = 0.00573950773 + p * w;
                p = -0.0076224613 + p * w;
                p = 0.00943887047 + p * w;
                p = 1.00167406 + p * w;
                p = 2.83297682 + p * w;
            }
            return p * y;
        }
    }

    double erf_inv(double y)
    {
        if (!(std::abs(y) < 1.0))
            throw DomainError("erf_inv: argument " + std::to_string(y) + " outside (-1, 1)");
        if (y == 0.0)
            return 0.0;

        double x = erf_inv_initial(y);
        constexpr double two_over_sqrt_pi = 2.0 * std::numbers::inv_sqrtpi;
        for (int iter = 0; iter < 6; ++iter)
        {
            const double r = std::erf(x) - y;
            const double dx = r / (two_over_sqrt_pi * std::exp(-x * x));
            // Halley correction: erf'' / erf' = -2x.
            const double step = dx / (1.0 + x * dx);
            x -= step;
            if (std::abs(step) <= 1e-15 * std::abs(x))
                break;
        }
        return x;
    }
}
