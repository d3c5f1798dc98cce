// SPDX-License-Identifier: Apache-2.0
//
// lnfade: outage analysis of diversity receivers over correlated lognormal fading
// Copyright (C) 2026 The lnfade Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace lnfade {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// The asymptotic SC/EGC/MRC forms only hold for ln sqrt(Er/gamma_th) > sigma_G^2.
// Carries the smallest average received power (watts) at which the form is valid.
class BelowAsymptoticRegime : public DomainError
{
public:
    BelowAsymptoticRegime(const std::string &what, double min_er_watts)
        : DomainError(what), min_er_watts_(min_er_watts) {}

    double min_er_watts() const noexcept { return min_er_watts_; }

private:
    double min_er_watts_;
};

// Hypersphere approximation of the EGC/MRC outage region needs a > 1 (rho < 1)
// and a finite a (correlated mode).
class DegenerateGeometry : public DomainError
{
public:
    using DomainError::DomainError;
};

// Iterative kernel gave up: series term cap, quadrature tolerance, root or search failure.
// `estimate` and `error_bound` hold the best value reached, when there is one.
class ConvergenceError : public std::runtime_error
{
public:
    explicit ConvergenceError(const std::string &what, double estimate = 0.0, double error_bound = 0.0)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

// Malformed configuration text or command-line values.
class ConfigError : public std::invalid_argument
{
public:
    ConfigError(const std::string &what, int line = 0, std::string field = {})
        : std::invalid_argument(what), line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string &field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

} // namespace lnfade
