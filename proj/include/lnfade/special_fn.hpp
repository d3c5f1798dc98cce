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

// Scalar special functions behind every closed-form outage expression.
//
// All functions are pure and reentrant. Domain violations throw lnfade::DomainError;
// a series that fails to converge within its term cap throws lnfade::ConvergenceError.

namespace lnfade::special {

/// Gaussian tail probability Pr{N(0,1) > x}, via the complementary error function.
double gaussian_q(double x);

/// ln Q(x). Stays finite far beyond the double underflow point of Q (x > 38).
double log_gaussian_q(double x);

/// Leading-order tail form exp(-x^2/2) / (sqrt(2 pi) x). Requires x > 0.
double gaussian_q_asym(double x);

/// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
/// Series for x < s + 1, continued fraction for the complement otherwise.
double reg_gamma_lower(double s, double x);

/// Regularized upper incomplete gamma Q(s, x) = 1 - P(s, x), computed without cancellation.
double reg_gamma_upper(double s, double x);

/// ln P(s, x) and ln Q(s, x); usable when P or Q underflow a double.
double log_reg_gamma_lower(double s, double x);
double log_reg_gamma_upper(double s, double x);

/// CDF of the noncentral chi-squared law with `dof` degrees of freedom and
/// noncentrality `lambda`, evaluated at x:
///
///     F(x) = sum_j Pois(j; lambda/2) * P(dof/2 + j, x/2).
///
/// The Poisson-gamma series is summed in log space from an upper index chosen past the
/// Poisson mode, so large `lambda` (where e^{-lambda/2} underflows) is handled.
/// Whichever of F and 1 - F is smaller is summed directly; the other is its complement.
double noncentral_chi2_cdf(double dof, double lambda, double x);

/// Survival function 1 - F(x) of the same law, summed directly when it is the small side.
double noncentral_chi2_sf(double dof, double lambda, double x);

struct MarcumArgs
{
    double order; // M > 0, may be half-integer
    double a;     // noncentrality arm, >= 0
    double b;     // threshold arm, >= 0
};

/// Generalized Marcum Q_M(a, b) = 1 - F_{chi2'(2M, a^2)}(b^2).
double marcum_q(const MarcumArgs &args);

/// 1 - Q_M(a, b), summed directly so that tiny values keep full relative precision.
double marcum_q_complement(const MarcumArgs &args);

} // namespace lnfade::special
