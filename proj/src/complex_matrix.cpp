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

#include "beamsim/complex_matrix.hpp"
#include "beamsim/error.hpp"

#include <cmath>
#include <string>

namespace beamsim
{
    ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cdouble{0.0, 0.0}) {}

    ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows * cols)
            throw InvalidInput("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                               " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }

    ComplexMatrix ComplexMatrix::identity(std::size_t n)
    {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    ComplexMatrix ComplexMatrix::diagonal(std::span<const cdouble> diag)
    {
        ComplexMatrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i)
            m(i, i) = diag[i];
        return m;
    }

    ComplexMatrix ComplexMatrix::adjoint() const
    {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    ComplexMatrix ComplexMatrix::select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const
    {
        ComplexMatrix out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                out(i, j) = (*this)(row_idx[i], col_idx[j]);
        return out;
    }

    ComplexMatrix ComplexMatrix::select_rows(std::span<const std::size_t> row_idx) const
    {
        ComplexMatrix out(row_idx.size(), cols_);
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = (*this)(row_idx[i], j);
        return out;
    }

    ComplexMatrix ComplexMatrix::select_cols(std::span<const std::size_t> col_idx) const
    {
        ComplexMatrix out(rows_, col_idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                out(i, j) = (*this)(i, col_idx[j]);
        return out;
    }

    bool ComplexMatrix::all_finite() const noexcept
    {
        for (const auto &z : entries_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                return false;
        return true;
    }

    double ComplexMatrix::frobenius_norm_sq() const noexcept
    {
        double s = 0.0;
        for (const auto &z : entries_)
            s += std::norm(z);
        return s;
    }

    double ComplexMatrix::frobenius_norm() const noexcept { return std::sqrt(frobenius_norm_sq()); }

    ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs)
    {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw InvalidInput("ComplexMatrix: dimension mismatch in addition");
        for (std::size_t i = 0; i < entries_.size(); ++i)
            entries_[i] += rhs.entries_[i];
        return *this;
    }

    ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs)
    {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw InvalidInput("ComplexMatrix: dimension mismatch in subtraction");
        for (std::size_t i = 0; i < entries_.size(); ++i)
            entries_[i] -= rhs.entries_[i];
        return *this;
    }

    ComplexMatrix &ComplexMatrix::operator*=(cdouble s) noexcept
    {
        for (auto &z : entries_)
            z *= s;
        return *this;
    }

    ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.cols() != b.rows())
            throw InvalidInput("ComplexMatrix: inner dimensions " + std::to_string(a.cols()) + " and " +
                               std::to_string(b.rows()) + " do not agree");
        ComplexMatrix out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k)
            {
                const cdouble aik = a(i, k);
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }

    ComplexMatrix gram_rows(const ComplexMatrix &a)
    {
        const std::size_t n = a.rows();
        ComplexMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j)
            {
                cdouble s{0.0, 0.0};
                for (std::size_t k = 0; k < a.cols(); ++k)
                    s += a(i, k) * std::conj(a(j, k));
                g(i, j) = s;
                g(j, i) = std::conj(s);
            }
        return g;
    }

    ComplexMatrix gram_cols(const ComplexMatrix &a)
    {
        const std::size_t n = a.cols();
        ComplexMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j)
            {
                cdouble s{0.0, 0.0};
                for (std::size_t k = 0; k < a.rows(); ++k)
                    s += std::conj(a(k, i)) * a(k, j);
                g(i, j) = s;
                g(j, i) = std::conj(s);
            }
        return g;
    }
}
