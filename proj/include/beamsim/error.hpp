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

#ifndef BEAMSIM_ERROR_HPP
#define BEAMSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace beamsim
{
    // Base of every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class InvalidInput : public Error
    {
    public:
        using Error::Error;
    };

    // Cholesky factorization failed: the matrix is not Hermitian positive definite.
    class SingularMatrix : public Error
    {
    public:
        using Error::Error;
    };

    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    // Adaptive quadrature hit its subdivision cap. The best estimate is kept.
    class AccuracyError : public Error
    {
    public:
        AccuracyError(const std::string &what, double estimate, double error_estimate)
            : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

        double estimate() const noexcept { return estimate_; }
        double error_estimate() const noexcept { return error_estimate_; }

    private:
        double estimate_;
        double error_estimate_;
    };

    // Exhaustive enumeration refused because the combination count exceeds the cap.
    class SearchTooLarge : public Error
    {
    public:
        using Error::Error;
    };

    // Invalid configuration value. field() names the offending key.
    class ConfigError : public Error
    {
    public:
        ConfigError(std::string field, const std::string &message)
            : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    class InsufficientData : public Error
    {
    public:
        using Error::Error;
    };

    class IoError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
