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

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's linear algebra or selection code.

#ifndef BEAMSIM_TESTS_ORACLES_HPP
#define BEAMSIM_TESTS_ORACLES_HPP

#include "beamsim/complex_matrix.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle
{
    using cd = std::complex<double>;
    using EMat = Eigen::MatrixXcd;

    inline EMat to_eigen(const beamsim::ComplexMatrix &m)
    {
        EMat e(m.rows(), m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                e(r, c) = m(r, c);
        return e;
    }

    inline beamsim::ComplexMatrix from_eigen(const EMat &e)
    {
        beamsim::ComplexMatrix m(e.rows(), e.cols());
        for (Eigen::Index r = 0; r < e.rows(); ++r)
            for (Eigen::Index c = 0; c < e.cols(); ++c)
                m(r, c) = e(r, c);
        return m;
    }

    // i.i.d. CN(0, 1) entries.
    inline beamsim::ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed)
    {
        std::mt19937_64 g(seed);
        std::normal_distribution<double> n(0.0, std::sqrt(0.5));
        beamsim::ComplexMatrix m(rows, cols);
        for (auto &x : m.entries())
        {
            const double re = n(g);
            x = cd(re, n(g));
        }
        return m;
    }

    // log2 |I + c M M^H| through Eigen's LU determinant.
    inline double capacity(const EMat &m, double c)
    {
        const EMat g = EMat::Identity(m.rows(), m.rows()) + c * m * m.adjoint();
        return std::log2(std::abs(g.determinant()));
    }

    inline double capacity(const beamsim::ComplexMatrix &m, double c) { return capacity(to_eigen(m), c); }

    // Numerical rank from singular values.
    inline int rank(const beamsim::ComplexMatrix &m, double tol = 1e-9)
    {
        Eigen::JacobiSVD<EMat> svd(to_eigen(m));
        int r = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            r += svd.singularValues()(i) > tol ? 1 : 0;
        return r;
    }

    inline std::vector<std::size_t> bits_of(std::uint32_t mask)
    {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; mask; ++i, mask >>= 1)
            if (mask & 1u)
                v.push_back(i);
        return v;
    }

    // Brute force over every pair of bitmasks with the right popcounts.
    struct BruteResult
    {
        std::vector<std::size_t> rx, tx;
        double value = -1.0;
    };

    inline BruteResult brute_force_select(const beamsim::ComplexMatrix &hv, std::size_t l_r, std::size_t l_t, double rho)
    {
        const EMat h = to_eigen(hv);
        BruteResult best;
        const std::uint32_t nr = static_cast<std::uint32_t>(hv.rows()), nt = static_cast<std::uint32_t>(hv.cols());
        for (std::uint32_t mr = 0; mr < (1u << nr); ++mr)
        {
            if (static_cast<std::size_t>(std::popcount(mr)) != l_r)
                continue;
            for (std::uint32_t mt = 0; mt < (1u << nt); ++mt)
            {
                if (static_cast<std::size_t>(std::popcount(mt)) != l_t)
                    continue;
                const auto rx = bits_of(mr), tx = bits_of(mt);
                EMat sub(l_r, l_t);
                for (std::size_t i = 0; i < l_r; ++i)
                    for (std::size_t j = 0; j < l_t; ++j)
                        sub(i, j) = h(rx[i], tx[j]);
                const double v = capacity(sub, rho / static_cast<double>(l_t));
                if (v > best.value)
                    best = {rx, tx, v};
            }
        }
        return best;
    }

    // Maclaurin series of erf in long double.
    inline double erf_series(double x, int terms = 80)
    {
        long double sum = 0.0L, term = x;  // x^(2n+1) (-1)^n / n!
        for (int n = 0; n < terms; ++n)
        {
            sum += term / (2 * n + 1);
            term *= -static_cast<long double>(x) * x / (n + 1);
        }
        return static_cast<double>(sum * 2.0L / std::sqrt(3.14159265358979323846264338327950288L));
    }

    inline std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    }

    // Fresh directory under the system temp dir.
    inline std::filesystem::path scratch_dir(const std::string &name)
    {
        auto p = std::filesystem::temp_directory_path() / ("beamsim_test_" + name);
        std::filesystem::remove_all(p);
        std::filesystem::create_directories(p);
        return p;
    }
}

#endif
