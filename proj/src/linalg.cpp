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

#include "beamsim/linalg.hpp"
#include "beamsim/error.hpp"

#include <cmath>
#include <string>

namespace beamsim
{
    ComplexMatrix cholesky(const ComplexMatrix &a)
    {
        if (a.rows() != a.cols())
            throw InvalidInput("cholesky: matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                               ", expected square");
        const std::size_t n = a.rows();
        ComplexMatrix l(n, n);
        for (std::size_t j = 0; j < n; ++j)
        {
            double d = a(j, j).real();
            for (std::size_t k = 0; k < j; ++k)
                d -= std::norm(l(j, k));
            if (!(d > 0.0))
                throw SingularMatrix("cholesky: non-positive pivot at column " + std::to_string(j));
            const double ljj = std::sqrt(d);
            l(j, j) = ljj;
            for (std::size_t i = j + 1; i < n; ++i)
            {
                cdouble s = a(i, j);
                for (std::size_t k = 0; k < j; ++k)
                    s -= l(i, k) * std::conj(l(j, k));
                l(i, j) = s / ljj;
            }
        }
        return l;
    }

    double log2_det_hpd(const ComplexMatrix &a)
    {
        const ComplexMatrix l = cholesky(a);
        double s = 0.0;
        for (std::size_t i = 0; i < l.rows(); ++i)
            s += std::log2(l(i, i).real());
        return 2.0 * s;
    }

    double logdet_capacity(const ComplexMatrix &m, double c)
    {
        if (!(c > 0.0) || !std::isfinite(c))
            throw InvalidInput("logdet_capacity: scaling must be positive and finite");
        if (!m.all_finite())
            throw InvalidInput("logdet_capacity: matrix has non-finite entries");

        ComplexMatrix g = m.rows() <= m.cols() ? gram_rows(m) : gram_cols(m);
        g *= c;
        for (std::size_t i = 0; i < g.rows(); ++i)
            g(i, i) += 1.0;
        // I + cG has all eigenvalues >= 1, so the result cannot be negative
        // beyond rounding.
        const double r = log2_det_hpd(g);
        return r < 0.0 ? 0.0 : r;
    }

    ComplexMatrix hpd_inverse(const ComplexMatrix &a)
    {
        const ComplexMatrix l = cholesky(a);
        const std::size_t n = l.rows();

        // Invert L in place of a lower-triangular matrix, then form L^{-H} L^{-1}.
        ComplexMatrix linv(n, n);
        for (std::size_t j = 0; j < n; ++j)
        {
            linv(j, j) = 1.0 / l(j, j).real();
            for (std::size_t i = j + 1; i < n; ++i)
            {
                cdouble s{0.0, 0.0};
                for (std::size_t k = j; k < i; ++k)
                    s -= l(i, k) * linv(k, j);
                linv(i, j) = s / l(i, i).real();
            }
        }

        ComplexMatrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j)
            {
                cdouble s{0.0, 0.0};
                for (std::size_t k = i; k < n; ++k)
                    s += std::conj(linv(k, i)) * linv(k, j);
                inv(i, j) = s;
                inv(j, i) = std::conj(s);
            }
        for (std::size_t i = 0; i < n; ++i)
            inv(i, i) = inv(i, i).real();
        return inv;
    }
}
