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

// Closed-form high-SNR outage probabilities of SC, EGC and MRC over equicorrelated
// lognormal branches, and the matching left-tail CDF of a sum of lognormals.
//
// Every function takes the operating point (gamma_th, Er) from OutageQuery; only the
// correlation structure (L, a, sigma_G) is read from DerivedParams. Independent-mode
// params dispatch to the a -> infinity specializations.
//
// The SC form needs D = ln sqrt(Er / gamma_th) - sigma_G^2 > 0 and throws
// BelowAsymptoticRegime otherwise. EGC/MRC throw the same error when the first Marcum
// argument would be negative, and DegenerateGeometry for a <= 1.

#include "lnfade/channel.hpp"

namespace lnfade {

struct OutageQuery
{
    double gamma_th; // outage threshold, watts
    double er_watts; // average received power, watts
};

double sc_outage_asym(const DerivedParams &params, const OutageQuery &q);
double sc_outage_asym_indep(int branches, double sigma_g, const OutageQuery &q);

/// The same SC asymptote written on the latent scale (mu_X, sigma_X) instead of (Er, sigma_G).
double sc_outage_asym_latent(double a, int branches, double mu_x, double sigma_x, double gamma_th);

double egc_outage_asym(const DerivedParams &params, const OutageQuery &q);
double egc_outage_asym_indep(int branches, double sigma_g, const OutageQuery &q);

/// EGC asymptote on the latent scale: 1 - Q_{L/2}(sqrt(L)(mu_X - c)/sigma_X, r/sigma_X) with
/// c the hypersphere centre coordinate and r its radius.
double egc_outage_asym_latent(double a, int branches, double mu_x, double sigma_x, double gamma_th);

double mrc_outage_asym(const DerivedParams &params, const OutageQuery &q);
double mrc_outage_asym_indep(int branches, double sigma_g, const OutageQuery &q);

double outage_asym(Scheme scheme, const DerivedParams &params, const OutageQuery &q);

/// Left-tail approximation of Pr{sum_l exp(G_l) <= y}; rho == 0 selects the independent form.
double sum_lognormal_cdf_asym(int branches, double rho, double mu_g, double sigma_g, double y);

/// lg P_SC = lg Oc_ln + term2 + term3, with
///   term2 = -L lg(D),  term3 = -Od_ln D^2,  D = ln sqrt(Er/gamma_th) - sigma_G^2.
struct AsymptoteDecomposition
{
    double oc_ln = 0.0;    // shift coefficient
    double lg_oc_ln = 0.0; // lg(oc_ln), kept separately since oc_ln grows like a^L
    double od_ln = 0.0;    // quadratic-slope coefficient, includes the lg(e) factor
    double term2 = 0.0;
    double term3 = 0.0;

    double lg_probability() const { return lg_oc_ln + term2 + term3; }
};

AsymptoteDecomposition sc_asymptote_decomposition(const DerivedParams &params, const OutageQuery &q);

} // namespace lnfade
