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
#include "lnfade/baselines.hpp"

#include "lnfade/errors.hpp"
#include "lnfade/special_fn.hpp"

#include <cmath>

namespace lnfade {

namespace {

void check(int branches, double rho, double mu_g, double sigma_g)
{
    if (branches < 1)
        throw DomainError("fenton_wilkinson: L must be >= 1");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw DomainError("fenton_wilkinson: rho must lie in [0, 1]");
    if (!std::isfinite(mu_g) || !(std::isfinite(sigma_g) && sigma_g > 0.0))
        throw DomainError("fenton_wilkinson: need finite mu_G and sigma_G > 0");
}

} // namespace

SumMoments lognormal_sum_moments(int branches, double rho, double mu_g, double sigma_g)
{
    check(branches, rho, mu_g, sigma_g);
    const double L = branches;
    const double s2 = sigma_g * sigma_g;
    const double mean = L * std::exp(mu_g + 0.5 * s2);
    // E[e^{G_m + G_n}] - E[e^G]^2 = e^{2 mu + s2} (e^{rho s2} - 1) for m != n.
    const double base = std::exp(2.0 * mu_g + s2);
    const double variance = L * base * std::expm1(s2) + L * (L - 1.0) * base * std::expm1(rho * s2);
    return {mean, variance};
}

MatchedLognormal fenton_wilkinson_match(int branches, double rho, double mu_g, double sigma_g)
{
    const SumMoments m = lognormal_sum_moments(branches, rho, mu_g, sigma_g);
    const double s2 = std::log1p(m.variance / (m.mean * m.mean));
    return {std::log(m.mean) - 0.5 * s2, std::sqrt(s2)};
}

double fenton_wilkinson_cdf(int branches, double rho, double mu_g, double sigma_g, double y)
{
    const MatchedLognormal m = fenton_wilkinson_match(branches, rho, mu_g, sigma_g);
    if (std::isnan(y))
        throw DomainError("fenton_wilkinson_cdf: y is NaN");
    if (y <= 0.0)
        return 0.0;
    return special::gaussian_q((m.mu_m - std::log(y)) / m.sigma_m);
}

} // namespace lnfade
