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
#include "lnfade/special_fn.hpp"

#include "lnfade/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace lnfade::special {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kEps = 1e-17;
constexpr long kMaxTerms = 1'000'000;

// Mills-ratio form pays off once erfc starts to lose to underflow.
constexpr double kLogQSwitch = 30.0;

void require(bool ok, const char *what)
{
    if (!ok)
        throw DomainError(what);
}

double log_add(double a, double b)
{
    if (a == kNegInf)
        return b;
    if (b == kNegInf)
        return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(-std::abs(a - b)));
}

// Power series for ln P(s, x); caller guarantees 0 < x < s + 1.
double log_gamma_series(double s, double x)
{
    double term = 1.0;
    double sum = 1.0;
    for (long n = 1; n < kMaxTerms; ++n)
    {
        term *= x / (s + static_cast<double>(n));
        sum += term;
        if (term < sum * kEps)
            return std::log(sum) + s * std::log(x) - x - std::lgamma(s + 1.0);
    }
    throw ConvergenceError("incomplete gamma series hit its term cap");
}

// Lentz continued fraction for ln Q(s, x); caller guarantees x >= s + 1.
double log_gamma_cfrac(double s, double x)
{
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (long i = 1; i < kMaxTerms; ++i)
    {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return std::log(h) + s * std::log(x) - x - std::lgamma(s);
    }
    throw ConvergenceError("incomplete gamma continued fraction hit its iteration cap");
}

void check_gamma_args(double s, double x)
{
    require(std::isfinite(s) && s > 0.0, "incomplete gamma: shape must be finite and > 0");
    require(!std::isnan(x) && x >= 0.0, "incomplete gamma: argument must be >= 0");
}

double log_poisson(long j, double mean)
{
    const double jd = static_cast<double>(j);
    return -mean + jd * std::log(mean) - std::lgamma(jd + 1.0);
}

// ln of the term x^{s} e^{-x} / Gamma(s + 1) linking P(s, x) and P(s + 1, x).
double log_gamma_step(double s, double log_x, double x)
{
    return s * log_x - x - std::lgamma(s + 1.0);
}

// ln sum_j Pois(j; h) P(s + j, y). Downward recursion in j keeps every update an addition.
double log_lower_mixture(double s, double h, double y)
{
    const double log_y = std::log(y);
    long top = static_cast<long>(std::floor(h)) + static_cast<long>(std::ceil(10.0 * std::sqrt(h))) + 32;
    for (;;)
    {
        if (top > kMaxTerms)
            throw ConvergenceError("noncentral chi-squared series hit its term cap");

        double log_p = log_reg_gamma_lower(s + static_cast<double>(top), y);
        const double log_top_term = log_poisson(top, h) + log_p;
        double acc = log_top_term;
        for (long j = top - 1; j >= 0; --j)
        {
            log_p = log_add(log_p, log_gamma_step(s + static_cast<double>(j), log_y, y));
            acc = log_add(acc, log_poisson(j, h) + log_p);
        }

        // Past the mode each term shrinks by at least h / (j + 1): geometric tail bound.
        const double ratio = h / static_cast<double>(top + 2);
        const double log_tail =
            log_top_term + std::log(h / static_cast<double>(top + 1)) - std::log1p(-ratio);
        if (acc == kNegInf || log_tail < acc + std::log(kEps))
            return acc;
        top *= 2;
    }
}

// ln sum_j Pois(j; h) Q(s + j, y). Upward recursion in j; Q(s + j, y) grows with j.
double log_upper_mixture(double s, double h, double y)
{
    const double log_y = std::log(y);
    double log_q = log_reg_gamma_upper(s, y);
    double acc = log_poisson(0, h) + log_q;
    for (long j = 0; j < kMaxTerms; ++j)
    {
        const double jd = static_cast<double>(j);
        if (jd > h)
        {
            // Q <= 1, so the remaining mass is bounded by the Poisson tail.
            const double ratio = h / (jd + 2.0);
            const double log_tail = log_poisson(j, h) + std::log(h / (jd + 1.0)) - std::log1p(-ratio);
            if (log_tail < acc + std::log(kEps))
                return acc;
        }
        log_q = log_add(log_q, log_gamma_step(s + jd, log_y, y));
        acc = log_add(acc, log_poisson(j + 1, h) + log_q);
    }
    throw ConvergenceError("noncentral chi-squared complement series hit its term cap");
}

void check_ncx2_args(double dof, double lambda, double x)
{
    require(std::isfinite(dof) && dof > 0.0, "noncentral chi-squared: dof must be finite and > 0");
    require(std::isfinite(lambda) && lambda >= 0.0, "noncentral chi-squared: noncentrality must be finite and >= 0");
    require(!std::isnan(x) && x >= 0.0, "noncentral chi-squared: argument must be >= 0");
}

} // namespace

double gaussian_q(double x)
{
    require(std::isfinite(x), "gaussian_q: argument must be finite");
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double log_gaussian_q(double x)
{
    require(std::isfinite(x), "log_gaussian_q: argument must be finite");
    if (x < 0.0)
        return std::log1p(-0.5 * std::erfc(-x / std::numbers::sqrt2));
    if (x < kLogQSwitch)
        return std::log(0.5 * std::erfc(x / std::numbers::sqrt2));

    // Q(x) = phi(x) R(x), R(x) = 1/(x + 1/(x + 2/(x + 3/(x + ...)))), evaluated bottom-up.
    double tail = x;
    for (int k = 80; k >= 1; --k)
        tail = x + static_cast<double>(k) / tail;
    return -0.5 * x * x - 0.5 * std::log(2.0 * std::numbers::pi) - std::log(tail);
}

double gaussian_q_asym(double x)
{
    require(std::isfinite(x) && x > 0.0, "gaussian_q_asym: argument must be finite and > 0");
    return std::exp(-0.5 * x * x) / (std::sqrt(2.0 * std::numbers::pi) * x);
}

double log_reg_gamma_lower(double s, double x)
{
    check_gamma_args(s, x);
    if (x == 0.0)
        return kNegInf;
    if (std::isinf(x))
        return 0.0;
    if (x < s + 1.0)
        return log_gamma_series(s, x);
    return std::log1p(-std::exp(log_gamma_cfrac(s, x)));
}

double log_reg_gamma_upper(double s, double x)
{
    check_gamma_args(s, x);
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return kNegInf;
    if (x < s + 1.0)
        return std::log1p(-std::exp(log_gamma_series(s, x)));
    return log_gamma_cfrac(s, x);
}

double reg_gamma_lower(double s, double x)
{
    check_gamma_args(s, x);
    if (x < s + 1.0)
        return std::exp(log_reg_gamma_lower(s, x));
    return 1.0 - std::exp(log_reg_gamma_upper(s, x));
}

double reg_gamma_upper(double s, double x)
{
    check_gamma_args(s, x);
    if (x < s + 1.0)
        return 1.0 - std::exp(log_reg_gamma_lower(s, x));
    return std::exp(log_reg_gamma_upper(s, x));
}

double noncentral_chi2_cdf(double dof, double lambda, double x)
{
    check_ncx2_args(dof, lambda, x);
    if (x == 0.0)
        return 0.0;
    if (lambda == 0.0)
        return reg_gamma_lower(0.5 * dof, 0.5 * x);
    if (std::isinf(x))
        return 1.0;

    const double s = 0.5 * dof, h = 0.5 * lambda, y = 0.5 * x;
    const double log_lower = log_lower_mixture(s, h, y);
    if (log_lower <= -std::numbers::ln2)
        return std::exp(log_lower);
    return 1.0 - std::exp(log_upper_mixture(s, h, y));
}

double noncentral_chi2_sf(double dof, double lambda, double x)
{
    check_ncx2_args(dof, lambda, x);
    if (x == 0.0)
        return 1.0;
    if (lambda == 0.0)
        return reg_gamma_upper(0.5 * dof, 0.5 * x);
    if (std::isinf(x))
        return 0.0;

    const double s = 0.5 * dof, h = 0.5 * lambda, y = 0.5 * x;
    const double log_upper = log_upper_mixture(s, h, y);
    if (log_upper <= -std::numbers::ln2)
        return std::exp(log_upper);
    return 1.0 - std::exp(log_lower_mixture(s, h, y));
}

namespace {

void check_marcum(const MarcumArgs &args)
{
    require(std::isfinite(args.order) && args.order > 0.0, "marcum_q: order must be finite and > 0");
    require(std::isfinite(args.a) && args.a >= 0.0, "marcum_q: a must be finite and >= 0");
    require(std::isfinite(args.b) && args.b >= 0.0, "marcum_q: b must be finite and >= 0");
}

} // namespace

double marcum_q(const MarcumArgs &args)
{
    check_marcum(args);
    return noncentral_chi2_sf(2.0 * args.order, args.a * args.a, args.b * args.b);
}

double marcum_q_complement(const MarcumArgs &args)
{
    check_marcum(args);
    return noncentral_chi2_cdf(2.0 * args.order, args.a * args.a, args.b * args.b);
}

} // namespace lnfade::special
