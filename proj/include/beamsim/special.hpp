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

#ifndef BEAMSIM_SPECIAL_HPP
#define BEAMSIM_SPECIAL_HPP

namespace beamsim
{
    inline constexpr double euler_gamma = 0.57721566490153286061;

    // Error function. Delegates to the C library, which is accurate to a few ulp.
    double erf(double x) noexcept;

    // Inverse error function on (-1, 1). Throws DomainError for |y| >= 1.
    double erf_inv(double y);

    // Standard normal cdf, computed through erfc to keep the lower tail accurate.
    double normal_cdf(double z) noexcept;
}

#endif
