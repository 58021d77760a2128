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

#ifndef BEAMSIM_QUADRATURE_HPP
#define BEAMSIM_QUADRATURE_HPP

#include "beamsim/error.hpp"

#include <cmath>
#include <concepts>
#include <string>

namespace beamsim
{
    struct QuadratureOptions
    {
        double tol = 1e-9;   // absolute error target
        int max_depth = 50;  // bisection depth cap per branch
        int min_depth = 4;   // forced splits before the error test is trusted
    };

    namespace detail
    {
        struct SimpsonState
        {
            double estimate = 0.0;
            double error = 0.0;
            bool converged = true;
        };

        template <class F>
        void simpson_recurse(F &f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                             int depth, const QuadratureOptions &opt, SimpsonState &st)
        {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double h = b - a;
            const double left = h / 12.0 * (fa + 4.0 * flm + fm);
            const double right = h / 12.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;

            if (depth >= opt.min_depth && std::abs(delta) <= 15.0 * tol)
            {
                st.estimate += left + right + delta / 15.0;
                st.error += std::abs(delta) / 15.0;
                return;
            }
            if (depth >= opt.max_depth)
            {
                st.estimate += left + right + delta / 15.0;
                st.error += std::abs(delta) / 15.0;
                st.converged = false;
                return;
            }
            simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, opt, st);
            simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, opt, st);
        }
    }

    // Adaptive Simpson quadrature of f over [lo, hi] with Richardson
    // correction. Throws AccuracyError (carrying the best estimate) if some
    // branch reaches max_depth before meeting its share of the tolerance.
    template <class F>
        requires std::invocable<F &, double>
    double integrate(F &&f, double lo, double hi, const QuadratureOptions &opt = {})
    {
        if (!(lo < hi))
            throw InvalidInput("integrate: empty interval");
        if (!(opt.tol > 0.0))
            throw InvalidInput("integrate: tolerance must be positive");

        const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
        const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        detail::SimpsonState st;
        detail::simpson_recurse(f, lo, hi, fa, fm, fb, whole, opt.tol, 0, opt, st);
        if (!st.converged || !std::isfinite(st.estimate))
            throw AccuracyError("integrate: subdivision cap reached (error estimate " + std::to_string(st.error) + ")",
                                st.estimate, st.error);
        return st.estimate;
    }

    template <class F>
        requires std::invocable<F &, double>
    double integrate(F &&f, double lo, double hi, double tol)
    {
        QuadratureOptions opt;
        opt.tol = tol;
        return integrate(std::forward<F>(f), lo, hi, opt);
    }
}

#endif
