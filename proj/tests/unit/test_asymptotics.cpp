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
#include "doctest.h"

#include "lnfade/asymptotics.hpp"
#include "lnfade/errors.hpp"
#include "lnfade/oracles.hpp"
#include "lnfade/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace lnfade;
using doctest::Approx;

namespace {

DerivedParams params(int L, double rho, double sigma)
{
    return derive_params({L, rho, sigma, MeanExponent{0.0}});
}

std::vector<double> db_grid(double lo, double hi, double step)
{
    std::vector<double> out;
    for (double d = lo; d <= hi + 1e-9; d += step)
        out.push_back(db_to_watts(d));
    return out;
}

double rel_err(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("regression values at published parameter sets")
{
    // 40-digit evaluations of the same closed forms.
    CHECK(rel_err(sc_outage_asym(params(2, 0.5, 0.8), {0.1, db_to_watts(40.0)}), 1.4519723638870914e-14) < 1e-10);

    const DerivedParams p5 = params(3, 0.2, 0.9);
    CHECK(rel_err(egc_outage_asym(p5, {0.1, db_to_watts(10.0)}), 0.00018783667706157244) < 1e-10);
    CHECK(rel_err(egc_outage_asym(p5, {0.1, db_to_watts(20.0)}), 3.4176905087369368e-8) < 1e-10);
    CHECK(rel_err(egc_outage_asym(p5, {0.1, db_to_watts(30.0)}), 2.1752217850948587e-13) < 1e-10);

    CHECK(rel_err(egc_outage_asym_indep(2, 1.2, {0.1, db_to_watts(10.0)}), 0.04234698891462286) < 1e-10);
    CHECK(rel_err(egc_outage_asym_indep(2, 1.2, {0.1, db_to_watts(20.0)}), 0.0013082526605555397) < 1e-10);
    CHECK(rel_err(egc_outage_asym_indep(2, 1.2, {0.1, db_to_watts(30.0)}), 7.5732870944283335e-6) < 1e-10);

    const DerivedParams p6 = params(4, 0.1, 1.2);
    CHECK(rel_err(mrc_outage_asym(p6, {0.1, db_to_watts(10.0)}), 0.0010278777991920518) < 1e-10);
    CHECK(rel_err(mrc_outage_asym(p6, {0.1, db_to_watts(30.0)}), 3.8908527055778076e-10) < 1e-10);
}

TEST_CASE("independent mode dispatches to the specialized forms")
{
    const DerivedParams p = params(3, 0.0, 0.7);
    for (double er : db_grid(6, 30, 4))
    {
        const OutageQuery q{0.1, er};
        CHECK(sc_outage_asym(p, q) == Approx(sc_outage_asym_indep(3, 0.7, q)).epsilon(1e-12));
        CHECK(egc_outage_asym(p, q) == Approx(egc_outage_asym_indep(3, 0.7, q)).epsilon(1e-12));
        CHECK(mrc_outage_asym(p, q) == Approx(mrc_outage_asym_indep(3, 0.7, q)).epsilon(1e-12));
    }
}

TEST_CASE("large-a forms approach the independent forms as 1/a")
{
    const OutageQuery q{0.1, db_to_watts(20.0)};
    double prev_sc = 1.0, prev_egc = 1.0, prev_mrc = 1.0;
    for (double a : {1e3, 1e4, 1e5, 1e6})
    {
        DerivedParams p = params(2, rho_from_a(a, 2), 0.8);
        const double d_sc = rel_err(sc_outage_asym(p, q), sc_outage_asym_indep(2, 0.8, q));
        const double d_egc = rel_err(egc_outage_asym(p, q), egc_outage_asym_indep(2, 0.8, q));
        const double d_mrc = rel_err(mrc_outage_asym(p, q), mrc_outage_asym_indep(2, 0.8, q));
        CHECK(d_sc < prev_sc / 5.0);
        CHECK(d_egc < prev_egc / 5.0);
        CHECK(d_mrc < prev_mrc / 5.0);
        prev_sc = d_sc;
        prev_egc = d_egc;
        prev_mrc = d_mrc;
    }
    CHECK(prev_sc < 1e-3);
}

TEST_CASE("SC independent form is the squared Gaussian tail asymptote")
{
    const double sigma = 0.8, gamma = 0.1;
    const double er = gamma * std::exp(2.0 * (6.0 * sigma + sigma * sigma)); // z = 6
    const double want = special::gaussian_q_asym(6.0);
    CHECK(sc_outage_asym_indep(2, sigma, {gamma, er}) == Approx(want * want).epsilon(1e-12));
    CHECK(sc_outage_asym_indep(1, sigma, {gamma, er}) == Approx(want).epsilon(1e-12));
}

TEST_CASE("SC independent form against the exact outage")
{
    const double sigma = 0.8, gamma = 0.1;
    double prev = 1.0;
    for (double z : {3.0, 4.0, 6.0, 8.0, 12.0})
    {
        const double er = gamma * std::exp(2.0 * (z * sigma + sigma * sigma));
        const double mu = mu_g_from_power(er, sigma);
        const double ratio = sc_outage_asym_indep(2, sigma, {gamma, er}) / oracles::sc_outage_exact_indep(2, mu, sigma, gamma);
        CHECK(std::abs(ratio - 1.0) < prev);
        prev = std::abs(ratio - 1.0);
        if (z == 8.0)
            CHECK(std::abs(ratio - 1.0) < 0.05);
    }
}

TEST_CASE("single-branch EGC form against the exact lognormal CDF at 1e-6")
{
    const double sigma = 0.8, gamma = 0.1;
    const double z = 4.753424308822899; // Q(z) = 1e-6
    const double mu = 0.5 * std::log(gamma) + z * sigma;
    const double er = std::exp(2.0 * mu + 2.0 * sigma * sigma);
    const double exact = oracles::single_branch_outage(mu, sigma, gamma);
    CHECK(exact == Approx(1e-6).epsilon(1e-9));
    CHECK(rel_err(egc_outage_asym_indep(1, sigma, {gamma, er}), exact) < 0.05);
}

TEST_CASE("latent-scale SC form equals the power-scale form")
{
    for (int L : {2, 3, 5})
        for (double rho : {0.1, 0.5, 0.9})
        {
            const DerivedParams base = params(L, rho, 0.9);
            for (double er : db_grid(10, 40, 10))
            {
                const DerivedParams p = base.at_power(er);
                const double latent = sc_outage_asym_latent(p.a, L, p.mu_x, p.sigma_x, 0.1);
                CHECK(latent == Approx(sc_outage_asym(p, {0.1, er})).epsilon(1e-12));
            }
        }
}

TEST_CASE("MRC form is the EGC form after the scale substitution")
{
    for (int L : {2, 3, 4})
        for (double rho : {0.1, 0.5, 0.9})
        {
            const DerivedParams base = params(L, rho, 1.0);
            for (double er : db_grid(6, 30, 6))
            {
                const DerivedParams p = base.at_power(er);
                const double gamma = 0.1;
                const double sub = egc_outage_asym_latent(p.a, L, 2.0 * p.mu_x, 2.0 * p.sigma_x, gamma * gamma / L);
                CHECK(mrc_outage_asym(p, {gamma, er}) == Approx(sub).epsilon(1e-12));
                const double egc = egc_outage_asym_latent(p.a, L, p.mu_x, p.sigma_x, gamma);
                CHECK(egc_outage_asym(p, {gamma, er}) == Approx(egc).epsilon(1e-12));
            }
        }
}

TEST_CASE("MRC never exceeds EGC and the gap is small at high correlation")
{
    for (double rho : {0.1, 0.5, 0.9})
    {
        const DerivedParams p = params(2, rho, 0.8);
        for (double er : db_grid(0, 30, 2))
        {
            const OutageQuery q{0.1, er};
            const double egc = egc_outage_asym(p, q);
            const double mrc = mrc_outage_asym(p, q);
            CHECK(mrc <= egc);
            if (rho == 0.9)
                CHECK(std::abs(std::log10(mrc) - std::log10(egc)) < 0.1);
        }
    }
}

TEST_CASE("outage lies in [0, 1], falls with Er and rises with gamma_th")
{
    for (int L : {2, 3})
        for (double rho : {0.0, 0.2, 0.7})
        {
            const DerivedParams p = params(L, rho, 0.9);
            for (Scheme s : {Scheme::SC, Scheme::EGC, Scheme::MRC})
            {
                double prev = 2.0;
                for (double er : db_grid(10, 40, 1))
                {
                    const double v = outage_asym(s, p, {0.1, er});
                    CHECK(v >= 0.0);
                    CHECK(v <= 1.0);
                    CHECK(v <= prev);
                    prev = v;
                }
                prev = 0.0;
                for (double g : {0.01, 0.03, 0.1, 0.3, 1.0})
                {
                    const double v = outage_asym(s, p, {g, db_to_watts(25.0)});
                    CHECK(v >= prev);
                    prev = v;
                }
            }
        }
}

TEST_CASE("sum-of-lognormals tail form matches EGC at y = sqrt(L gamma)")
{
    for (int L : {2, 3, 4})
        for (double rho : {0.0, 0.3, 0.8})
        {
            const DerivedParams base = params(L, rho, 0.9);
            for (double er : db_grid(5, 30, 5))
            {
                const DerivedParams p = base.at_power(er);
                const double gamma = 0.1;
                const double y = std::sqrt(L * gamma);
                CHECK(sum_lognormal_cdf_asym(L, rho, p.mu_g, 0.9, y) ==
                      Approx(egc_outage_asym(p, {gamma, er})).epsilon(1e-12));
            }
        }
}

TEST_CASE("sum-of-lognormals tail form is nondecreasing in y")
{
    double prev = 0.0;
    for (double ly = -4.0; ly <= 0.9; ly += 0.1)
    {
        const double v = sum_lognormal_cdf_asym(2, 0.0, 0.0, std::sqrt(0.3), std::exp(ly));
        CHECK(v >= prev);
        prev = v;
    }
    CHECK_THROWS_AS(sum_lognormal_cdf_asym(2, 0.0, 0.0, 0.5, 0.0), DomainError);
}

TEST_CASE("decomposition reassembles the SC form")
{
    for (int L : {1, 2, 4, 8})
        for (double rho : {0.0, 0.1, 0.5, 0.9})
        {
            const DerivedParams p = params(L, rho, 0.8);
            for (double er : db_grid(5, 40, 5))
            {
                const OutageQuery q{0.1, er};
                const AsymptoteDecomposition d = sc_asymptote_decomposition(p, q);
                CHECK(std::abs(d.lg_probability() - std::log10(sc_outage_asym(p, q))) < 1e-10);
            }
        }
    const AsymptoteDecomposition single = sc_asymptote_decomposition(params(1, 0.0, 0.8), {0.1, 100.0});
    CHECK(single.od_ln == Approx(std::numbers::log10e / (2.0 * 0.64)).epsilon(1e-14));
}

TEST_CASE("quadratic coefficient decreases with correlation")
{
    for (int L : {2, 3, 6})
    {
        double prev = sc_asymptote_decomposition(params(L, 0.0, 0.8), {0.1, 100.0}).od_ln;
        for (double rho = 0.05; rho < 0.99; rho += 0.05)
        {
            const double od = sc_asymptote_decomposition(params(L, rho, 0.8), {0.1, 100.0}).od_ln;
            CHECK(od < prev);
            prev = od;
        }
    }
}

TEST_CASE("validity guards")
{
    const DerivedParams p = params(2, 0.5, 0.8);
    try
    {
        sc_outage_asym(p, {0.1, 0.1});
        FAIL("accepted Er below the asymptotic regime");
    }
    catch (const BelowAsymptoticRegime &e)
    {
        CHECK(e.min_er_watts() == Approx(0.1 * std::exp(2.0 * 0.64)));
        CHECK_THROWS_AS(sc_outage_asym(p, {0.1, e.min_er_watts()}), BelowAsymptoticRegime);
        CHECK(sc_outage_asym(p, {0.1, e.min_er_watts() * 1.01}) > 0.0);
    }
    DerivedParams degenerate = p;
    degenerate.a = 1.0;
    CHECK_THROWS_AS(egc_outage_asym(degenerate, {0.1, 100.0}), DegenerateGeometry);
    CHECK_THROWS_AS(mrc_outage_asym(degenerate, {0.1, 100.0}), DegenerateGeometry);
    CHECK_THROWS_AS(sc_outage_asym(p, {0.0, 100.0}), DomainError);
    CHECK_THROWS_AS(egc_outage_asym(p, {0.1, -1.0}), DomainError);
}

TEST_CASE("many branches at nearly independent correlation stay finite")
{
    const DerivedParams p = params(8, rho_from_a(1e3, 8), 0.8);
    for (double er : db_grid(10, 40, 10))
    {
        const OutageQuery q{0.1, er};
        CHECK(std::isfinite(sc_outage_asym(p, q)));
        CHECK(std::isfinite(egc_outage_asym(p, q)));
        CHECK(std::isfinite(sc_asymptote_decomposition(p, q).lg_oc_ln));
    }
}

TEST_CASE("outage grows with correlation at high power")
{
    const OutageQuery q{0.1, db_to_watts(30.0)};
    for (Scheme s : {Scheme::SC, Scheme::EGC, Scheme::MRC})
    {
        const double p1 = outage_asym(s, params(2, 0.1, 0.8), q);
        const double p5 = outage_asym(s, params(2, 0.5, 0.8), q);
        const double p9 = outage_asym(s, params(2, 0.9, 0.8), q);
        CHECK(p1 < p5);
        CHECK(p5 < p9);
    }
}
