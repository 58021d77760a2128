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

#ifndef BEAMSIM_COMPLEX_MATRIX_HPP
#define BEAMSIM_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace beamsim
{
    using cdouble = std::complex<double>;

    // Dense row-major complex matrix. Sized for the small (<= ~33x33) channel
    // matrices this library works with; no expression templates, no BLAS.
    class ComplexMatrix
    {
    public:
        ComplexMatrix() = default;
        ComplexMatrix(std::size_t rows, std::size_t cols);
        ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries);

        static ComplexMatrix identity(std::size_t n);
        static ComplexMatrix diagonal(std::span<const cdouble> diag);

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }
        bool empty() const noexcept { return entries_.empty(); }

        cdouble &operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
        const cdouble &operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }

        std::span<const cdouble> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }
        std::span<const cdouble> entries() const noexcept { return entries_; }
        std::span<cdouble> entries() noexcept { return entries_; }

        ComplexMatrix adjoint() const;

        // Rows and columns picked by index, in the given order.
        ComplexMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
        ComplexMatrix select_rows(std::span<const std::size_t> row_idx) const;
        ComplexMatrix select_cols(std::span<const std::size_t> col_idx) const;

        bool all_finite() const noexcept;
        double frobenius_norm_sq() const noexcept;
        double frobenius_norm() const noexcept;

        ComplexMatrix &operator+=(const ComplexMatrix &rhs);
        ComplexMatrix &operator-=(const ComplexMatrix &rhs);
        ComplexMatrix &operator*=(cdouble s) noexcept;

        friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<cdouble> entries_;
    };

    ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
    ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
    ComplexMatrix operator*(cdouble s, ComplexMatrix a);

    // a * a^H and a^H * a without materializing the adjoint.
    ComplexMatrix gram_rows(const ComplexMatrix &a);
    ComplexMatrix gram_cols(const ComplexMatrix &a);
}

#endif
