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

#include "lnfade/errors.hpp"
#include "lnfade/montecarlo.hpp"
#include "lnfade/oracles.hpp"

#include <boost/math/distributions/beta.hpp>
#include <omp.h>

#include <cmath>

using namespace lnfade;
using doctest::Approx;

namespace {

DerivedParams at(int L, double rho, double sigma, double er)
{
    return derive_params({L, rho, sigma, AveragePower{er}});
}

} // namespace

TEST_CASE("parallel kernel matches the serial reference for any thread count")
{
    const DerivedParams p = at(3, 0.4, 0.9, 10.0);
    const SimConfig cfg{200000, 99, 4096};
    const HitCounts ref = count_outages_serial(p, 0.5, cfg);
    for (int threads : {1, 2, 3, 7})
    {
        omp_set_num_threads(threads);
        CHECK(count_outages(p, 0.5, cfg) == ref);
    }
    omp_set_num_threads(omp_get_num_procs());
    CHECK(ref[0] > 0);
}

TEST_CASE("single branch gives identical counts for every combiner")
{
    const DerivedParams p = at(1, 0.0, 0.8, 2.0);
    const HitCounts h = count_outages(p, 1.0, {100000, 5, 1000});
    CHECK(h[0] == h[1]);
    CHECK(h[1] == h[2]);
}

TEST_CASE("common random numbers give pathwise ordering")
{
    for (double rho : {0.0, 0.3, 0.9})
        for (std::uint64_t seed : {1ull, 2ull, 3ull})
        {
            const HitCounts h = count_outages(at(3, rho, 1.0, 3.0), 0.4, {50000, seed, 5000});
            CHECK(h[2] <= h[1]); // MRC <= EGC
            CHECK(h[2] <= h[0]); // MRC <= SC
        }
}

TEST_CASE("independent SC at the median point has outage 1/4")
{
    const double sigma = 0.8, gamma = 0.1;
    const double er = gamma * std::exp(2.0 * sigma * sigma); // ln sqrt(Er/gamma) = sigma^2
    const SimEstimate e = simulate_outage(derive_params({2, 0.0, sigma, AveragePower{er}}), Scheme::SC, {gamma, er},
                                          {1000000, 11, 1 << 15});
    CHECK(std::abs(e.p_hat - 0.25) < 3.0 * e.std_error);
}

TEST_CASE("independent SC against the exact outage near 1e-2")
{
    const double sigma = 0.8, gamma = 0.1;
    const double er = db_to_watts(3.0);
    const DerivedParams p = derive_params({2, 0.0, sigma, AveragePower{er}});
    const SimEstimate e = simulate_outage(p, Scheme::SC, {gamma, er}, {1000000, 12, 1 << 15});
    const double exact = oracles::sc_outage_exact_indep(2, p.mu_g, sigma, gamma);
    CHECK(exact > 1e-3);
    CHECK(std::abs(e.p_hat - exact) < 3.0 * e.std_error);
}

TEST_CASE("estimate construction")
{
    const SimEstimate none = make_estimate(0, 1000000);
    CHECK(none.resolution_exhausted);
    CHECK(none.upper_bound == Approx(3e-6));
    CHECK(none.low_count);

    const SimEstimate few = make_estimate(5, 1000);
    CHECK(few.low_count);
    CHECK_FALSE(few.resolution_exhausted);
    const boost::math::beta_distribution<> lo(5.0, 996.0), hi(6.0, 995.0);
    CHECK(few.ci_low == Approx(boost::math::quantile(lo, 0.025)).epsilon(1e-10));
    CHECK(few.ci_high == Approx(boost::math::quantile(hi, 0.975)).epsilon(1e-10));
    CHECK(few.ci_low < few.p_hat);
    CHECK(few.p_hat < few.ci_high);

    const SimEstimate many = make_estimate(2500, 10000);
    CHECK_FALSE(many.low_count);
    CHECK(many.p_hat == 0.25);
    CHECK(many.std_error == Approx(std::sqrt(0.25 * 0.75 / 10000.0)));
    CHECK_THROWS_AS(make_estimate(5, 4), DomainError);
}

TEST_CASE("simulation config validation")
{
    const DerivedParams p = at(2, 0.1, 0.8, 10.0);
    CHECK_THROWS_AS(count_outages(p, 0.1, {999, 1, 10}), DomainError);
    CHECK_THROWS_AS(count_outages(p, 0.1, {1000, 1, 0}), DomainError);
    CHECK_THROWS_AS(count_outages(p, 0.1, {1000, 1, 1001}), DomainError);
    CHECK_THROWS_AS(count_outages(p, -0.1, {1000, 1, 10}), DomainError);
}

TEST_CASE("sweeps are deterministic and follow the expected trends")
{
    const DerivedParams base = derive_params({2, 0.5, 0.8, MeanExponent{0.0}});
    std::vector<double> grid;
    for (double d = 0.0; d <= 10.0; d += 2.0)
        grid.push_back(db_to_watts(d));
    const SimConfig cfg{200000, 2024, 8192};
    const auto first = sweep(base, Scheme::EGC, 0.1, grid, cfg);
    const auto again = sweep(base, Scheme::EGC, 0.1, grid, cfg);
    REQUIRE(first.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        CHECK(first[i].hits == again[i].hits);
        if (i > 0)
            CHECK(first[i].p_hat <= first[i - 1].p_hat + 3.0 * (first[i].std_error + first[i - 1].std_error));
    }
    CHECK(sweep_point_seed(2024, 0) != sweep_point_seed(2024, 1));

    // Stronger correlation, more outage at moderate power.
    const auto r1 = sweep_all(derive_params({2, 0.1, 0.8, MeanExponent{0.0}}), 0.1, grid, cfg);
    const auto r9 = sweep_all(derive_params({2, 0.9, 0.8, MeanExponent{0.0}}), 0.1, grid, cfg);
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (int s = 0; s < 3; ++s)
            CHECK(r1[i][s].p_hat < r9[i][s].p_hat);
}
