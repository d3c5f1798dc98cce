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
#include "lnfade/asymptotics.hpp"

#include "lnfade/errors.hpp"
#include "lnfade/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lnfade {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836; // ln(2 pi)

void check_query(const OutageQuery &q)
{
    if (!(std::isfinite(q.gamma_th) && q.gamma_th > 0.0))
        throw DomainError("outage query: gamma_th must be finite and > 0");
    if (!(std::isfinite(q.er_watts) && q.er_watts > 0.0))
        throw DomainError("outage query: Er must be finite and > 0");
}

void check_branches_sigma(int branches, double sigma_g)
{
    if (branches < 1)
        throw DomainError("asymptotics: L must be >= 1");
    if (!(std::isfinite(sigma_g) && sigma_g > 0.0))
        throw DomainError("asymptotics: sigma_G must be finite and > 0");
}

// D = ln sqrt(Er / gamma_th) - sigma_G^2, the SC large parameter.
double sc_margin(double sigma_g, const OutageQuery &q)
{
    const double d = 0.5 * std::log(q.er_watts / q.gamma_th) - sigma_g * sigma_g;
    if (!(d > 0.0))
    {
        const double min_er = q.gamma_th * std::exp(2.0 * sigma_g * sigma_g);
        throw BelowAsymptoticRegime("SC asymptote needs ln sqrt(Er/gamma_th) > sigma_G^2 (Er > " +
                                        std::to_string(min_er) + " W)",
                                    min_er);
    }
    return d;
}

void check_correlated(const DerivedParams &p)
{
    if (!(p.a > 1.0) || std::isinf(p.a))
        throw DegenerateGeometry("correlated EGC/MRC asymptote needs 1 < a < infinity");
}

// 1 - Q_{L/2}(alpha, beta), guarding the alpha >= 0 precondition.
double marcum_outage(int branches, double alpha, double beta, double min_er)
{
    if (!(alpha >= 0.0))
        throw BelowAsymptoticRegime("EGC/MRC asymptote needs a nonnegative first Marcum argument (Er > " +
                                        std::to_string(min_er) + " W)",
                                    min_er);
    return special::marcum_q_complement({0.5 * branches, alpha, beta});
}

double ln_sc_asym(double a, int branches, double sigma_g, double d)
{
    const double L = branches;
    const double spread = a * a + L - 1.0;
    const double sum = a + L - 1.0;
    const double log_det = (L - 1.0) * std::log(a - 1.0) + std::log(sum);
    return -log_det - 0.5 * L * kLog2Pi + 0.5 * L * std::log(sigma_g * sigma_g / spread) +
           L * std::log(sum * sum / d) - L * spread / (2.0 * sigma_g * sigma_g) * (d / sum) * (d / sum);
}

} // namespace

double sc_outage_asym(const DerivedParams &params, const OutageQuery &q)
{
    check_query(q);
    if (params.independent)
        return sc_outage_asym_indep(params.branches, params.sigma_g, q);
    if (!(params.a > 1.0))
        throw DegenerateGeometry("SC asymptote needs a > 1");
    const double d = sc_margin(params.sigma_g, q);
    return std::exp(ln_sc_asym(params.a, params.branches, params.sigma_g, d));
}

double sc_outage_asym_indep(int branches, double sigma_g, const OutageQuery &q)
{
    check_query(q);
    check_branches_sigma(branches, sigma_g);
    const double d = sc_margin(sigma_g, q);
    const double L = branches;
    const double ln_p = L * std::log(sigma_g / d) - 0.5 * L * kLog2Pi - L / (2.0 * sigma_g * sigma_g) * d * d;
    return std::exp(ln_p);
}

double sc_outage_asym_latent(double a, int branches, double mu_x, double sigma_x, double gamma_th)
{
    if (!(a > 1.0) || branches < 1 || !(sigma_x > 0.0) || !(gamma_th > 0.0))
        throw DomainError("sc_outage_asym_latent: invalid arguments");
    const double L = branches;
    const double sum = a + L - 1.0;
    const double nearest = std::log(gamma_th) / (2.0 * sum);
    const double gap = mu_x - nearest;
    if (!(gap > 0.0))
        throw BelowAsymptoticRegime("SC latent asymptote needs mu_X above the nearest point", 0.0);
    const double log_det = (L - 1.0) * std::log(a - 1.0) + std::log(sum);
    const double s2 = sigma_x * sigma_x;
    const double ln_p = -log_det - 0.5 * L * kLog2Pi - L * std::log(sigma_x) + L * std::log(s2 * sum / gap) -
                        L / (2.0 * s2) * gap * gap;
    return std::exp(ln_p);
}

double egc_outage_asym(const DerivedParams &params, const OutageQuery &q)
{
    check_query(q);
    if (params.independent)
        return egc_outage_asym_indep(params.branches, params.sigma_g, q);
    check_correlated(params);

    const double L = params.branches;
    const double a = params.a;
    const double sum = a + L - 1.0;
    const double shift = sum / ((1.0 - a) * (1.0 - a));
    const double sigma_x = params.sigma_g / std::sqrt(a * a + L - 1.0);
    const double level = 0.5 * std::log(L * q.er_watts / q.gamma_th) - params.sigma_g * params.sigma_g;

    const double alpha = std::sqrt(L) * (level / sum + shift) / sigma_x;
    const double beta = shift * std::sqrt(L) / sigma_x;
    const double min_er = q.gamma_th / L * std::exp(2.0 * (params.sigma_g * params.sigma_g - shift * sum));
    return marcum_outage(params.branches, alpha, beta, min_er);
}

double egc_outage_asym_indep(int branches, double sigma_g, const OutageQuery &q)
{
    check_query(q);
    check_branches_sigma(branches, sigma_g);
    const double L = branches;
    const double level = 0.5 * std::log(L * q.er_watts / q.gamma_th) - sigma_g * sigma_g + 1.0;
    const double alpha = std::sqrt(L) / sigma_g * level;
    const double beta = std::sqrt(L) / sigma_g;
    const double min_er = q.gamma_th / L * std::exp(2.0 * (sigma_g * sigma_g - 1.0));
    return marcum_outage(branches, alpha, beta, min_er);
}

double egc_outage_asym_latent(double a, int branches, double mu_x, double sigma_x, double gamma_th)
{
    if (!(a > 1.0) || std::isinf(a))
        throw DegenerateGeometry("egc_outage_asym_latent: needs 1 < a < infinity");
    if (branches < 1 || !(sigma_x > 0.0) || !(gamma_th > 0.0))
        throw DomainError("egc_outage_asym_latent: invalid arguments");
    const double L = branches;
    const double sum = a + L - 1.0;
    const double shift = sum / ((1.0 - a) * (1.0 - a));
    const double centre = std::log(std::sqrt(gamma_th / L)) / sum - shift;
    const double alpha = std::sqrt(L) * (mu_x - centre) / sigma_x;
    const double beta = shift * std::sqrt(L) / sigma_x;
    return marcum_outage(branches, alpha, beta, 0.0);
}

double mrc_outage_asym(const DerivedParams &params, const OutageQuery &q)
{
    check_query(q);
    if (params.independent)
        return mrc_outage_asym_indep(params.branches, params.sigma_g, q);
    check_correlated(params);

    const double L = params.branches;
    const double a = params.a;
    const double sum = a + L - 1.0;
    const double shift = sum / ((1.0 - a) * (1.0 - a));
    const double sigma_x = params.sigma_g / std::sqrt(a * a + L - 1.0);
    const double level = std::log(L * q.er_watts / q.gamma_th) - 2.0 * params.sigma_g * params.sigma_g;

    const double alpha = std::sqrt(L) * (level / sum + shift) / (2.0 * sigma_x);
    const double beta = shift * std::sqrt(L) / (2.0 * sigma_x);
    const double min_er = q.gamma_th / L * std::exp(2.0 * params.sigma_g * params.sigma_g - shift * sum);
    return marcum_outage(params.branches, alpha, beta, min_er);
}

double mrc_outage_asym_indep(int branches, double sigma_g, const OutageQuery &q)
{
    check_query(q);
    check_branches_sigma(branches, sigma_g);
    const double L = branches;
    const double level = std::log(L * q.er_watts / q.gamma_th) - 2.0 * sigma_g * sigma_g + 1.0;
    const double alpha = std::sqrt(L) / (2.0 * sigma_g) * level;
    const double beta = std::sqrt(L) / (2.0 * sigma_g);
    const double min_er = q.gamma_th / L * std::exp(2.0 * sigma_g * sigma_g - 1.0);
    return marcum_outage(branches, alpha, beta, min_er);
}

double outage_asym(Scheme scheme, const DerivedParams &params, const OutageQuery &q)
{
    switch (scheme)
    {
    case Scheme::SC:
        return sc_outage_asym(params, q);
    case Scheme::EGC:
        return egc_outage_asym(params, q);
    case Scheme::MRC:
        return mrc_outage_asym(params, q);
    }
    throw DomainError("outage_asym: unknown scheme");
}

double sum_lognormal_cdf_asym(int branches, double rho, double mu_g, double sigma_g, double y)
{
    check_branches_sigma(branches, sigma_g);
    if (!(std::isfinite(y) && y > 0.0))
        throw DomainError("sum_lognormal_cdf_asym: y must be finite and > 0");
    if (!std::isfinite(mu_g))
        throw DomainError("sum_lognormal_cdf_asym: mu_G must be finite");
    if (!(rho >= 0.0 && rho < 1.0))
        throw DomainError("sum_lognormal_cdf_asym: rho must lie in [0, 1)");

    const double L = branches;
    const double level = std::log(L) + mu_g - std::log(y);
    if (rho == 0.0 || branches == 1)
    {
        const double alpha = std::sqrt(L) / sigma_g * (level + 1.0);
        const double min_y = L * std::exp(mu_g + 1.0);
        if (!(alpha >= 0.0))
            throw BelowAsymptoticRegime("sum-of-lognormals tail form needs y below " + std::to_string(min_y), 0.0);
        return special::marcum_q_complement({0.5 * L, alpha, std::sqrt(L) / sigma_g});
    }

    const double a = a_from_rho(rho, branches);
    const double sum = a + L - 1.0;
    const double shift = sum / ((1.0 - a) * (1.0 - a));
    const double sigma_x = sigma_g / std::sqrt(a * a + L - 1.0);
    const double alpha = std::sqrt(L) * (level / sum + shift) / sigma_x;
    if (!(alpha >= 0.0))
        throw BelowAsymptoticRegime("sum-of-lognormals tail form: y outside the left-tail regime", 0.0);
    return special::marcum_q_complement({0.5 * L, alpha, shift * std::sqrt(L) / sigma_x});
}

AsymptoteDecomposition sc_asymptote_decomposition(const DerivedParams &params, const OutageQuery &q)
{
    check_query(q);
    check_branches_sigma(params.branches, params.sigma_g);
    const double d = sc_margin(params.sigma_g, q);
    const double L = params.branches;
    const double s2 = params.sigma_g * params.sigma_g;
    const double lg_e = std::numbers::log10e;

    AsymptoteDecomposition out;
    double ln_oc = 0.0;
    if (params.independent)
    {
        ln_oc = L * std::log(params.sigma_g) - 0.5 * L * kLog2Pi;
        out.od_ln = lg_e * L / (2.0 * s2);
    }
    else
    {
        if (!(params.a > 1.0))
            throw DegenerateGeometry("SC decomposition needs a > 1");
        const double a = params.a;
        const double sum = a + L - 1.0;
        const double spread = a * a + L - 1.0;
        const double log_det = (L - 1.0) * std::log(a - 1.0) + std::log(sum);
        ln_oc = 2.0 * L * std::log(sum) - log_det - 0.5 * L * kLog2Pi + 0.5 * L * std::log(s2 / spread);
        out.od_ln = lg_e * L * spread / (2.0 * s2 * sum * sum);
    }
    out.lg_oc_ln = ln_oc * lg_e;
    out.oc_ln = std::exp(ln_oc);
    out.term2 = -L * std::log10(d);
    out.term3 = -out.od_ln * d * d;
    return out;
}

} // namespace lnfade
