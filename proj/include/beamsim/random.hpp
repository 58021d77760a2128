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

#ifndef BEAMSIM_RANDOM_HPP
#define BEAMSIM_RANDOM_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace beamsim
{
    using RandomStream = std::mt19937_64;

    // Tags separating the sub-streams drawn for one (trial, state) pair.
    enum class StreamPurpose : std::uint64_t
    {
        geometry = 0x67656f6d,  // cluster mean angles
        rays = 0x72617973,      // ray angles and gains
        synthetic = 0x73796e74, // test and synthetic-sample draws
    };

    // SplitMix64 finalizer.
    constexpr std::uint64_t mix64(std::uint64_t z) noexcept
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Order-sensitive hash of a key path, e.g. (seed, trial, state, purpose).
    constexpr std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) noexcept
    {
        std::uint64_t h = mix64(root);
        for (auto k : path)
            h = mix64(h ^ mix64(k + 0x632be59bd9b4e019ULL));
        return h;
    }

    inline RandomStream make_stream(std::uint64_t seed) { return RandomStream(seed); }

    // CN(0, variance): each component N(0, variance / 2).
    inline std::complex<double> complex_gaussian(RandomStream &rng, double variance)
    {
        std::normal_distribution<double> n(0.0, 1.0);
        const double s = std::sqrt(0.5 * variance);
        const double re = n(rng);
        const double im = n(rng);
        return {s * re, s * im};
    }
}

#endif
