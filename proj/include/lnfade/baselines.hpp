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

// Fenton-Wilkinson baseline: the sum S = sum_l exp(G_l) replaced by one lognormal
// exp(N(mu_m, sigma_m^2)) with the same mean and variance.

namespace lnfade {

struct MatchedLognormal
{
    double mu_m;
    double sigma_m;
};

struct SumMoments
{
    double mean;
    double variance;
};

/// Exact first two moments of S for equicorrelated G (rho in [0, 1]).
SumMoments lognormal_sum_moments(int branches, double rho, double mu_g, double sigma_g);

MatchedLognormal fenton_wilkinson_match(int branches, double rho, double mu_g, double sigma_g);

/// Pr{S <= y} under the matched lognormal; 0 for y <= 0.
double fenton_wilkinson_cdf(int branches, double rho, double mu_g, double sigma_g, double y);

} // namespace lnfade
