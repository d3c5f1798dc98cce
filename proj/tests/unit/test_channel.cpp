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

#include "lnfade/channel.hpp"
#include "lnfade/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

using namespace lnfade;
using doctest::Approx;

TEST_CASE("a and rho are inverse maps")
{
    for (int L = 2; L <= 8; ++L)
        for (int i = 1; i <= 99; ++i)
        {
            const double rho = i / 100.0;
            CHECK(std::abs(rho_from_a(a_from_rho(rho, L), L) - rho) < 1e-12);
        }
    CHECK(a_from_rho(0.5, 2) == Approx(2.0 + std::sqrt(3.0)).epsilon(1e-14));
    CHECK(rho_from_a(1.0, 4) == Approx(1.0));
    CHECK_THROWS_AS(a_from_rho(0.0, 2), DomainError);
    CHECK_THROWS_AS(a_from_rho(0.5, 1), DomainError);
}

TEST_CASE("determinant of the mixing matrix")
{
    for (int L : {2, 3, 5, 8})
        for (double rho : {0.1, 0.5, 0.9})
        {
            ChannelSpec spec{L, rho, 0.8, MeanExponent{0.0}};
            const DerivedParams p = derive_params(spec);
            const Eigen::MatrixXd A =
                (p.a - 1.0) * Eigen::MatrixXd::Identity(L, L) + Eigen::MatrixXd::Constant(L, L, 1.0);
            CHECK(p.det_a() == Approx(A.determinant()).epsilon(1e-10));
        }
}

TEST_CASE("latent moments reproduce the branch moments")
{
    ChannelSpec spec{3, 0.2, 0.9, AveragePower{100.0}};
    const DerivedParams p = derive_params(spec);
    const double L = 3.0;
    CHECK(p.mu_x * (p.a + L - 1.0) == Approx(p.mu_g).epsilon(1e-14));
    CHECK(p.sigma_x * p.sigma_x * (p.a * p.a + L - 1.0) == Approx(0.81).epsilon(1e-14));
    CHECK(p.average_power() == Approx(100.0).epsilon(1e-13));
    CHECK(p.at_power(10.0).average_power() == Approx(10.0).epsilon(1e-13));
    CHECK(p.at_power(10.0).mu_x * (p.a + L - 1.0) == Approx(p.at_power(10.0).mu_g).epsilon(1e-14));
}

TEST_CASE("independent mode")
{
    const DerivedParams p = derive_params({2, 0.0, 0.8, MeanExponent{1.0}});
    CHECK(p.independent);
    CHECK(std::isinf(p.a));
    const DerivedParams single = derive_params({1, 0.7, 0.8, MeanExponent{1.0}});
    CHECK(single.independent);
    CHECK(single.rho == 0.0);
}

TEST_CASE("channel validation")
{
    CHECK_THROWS_AS(derive_params({0, 0.1, 0.8, MeanExponent{0.0}}), DomainError);
    CHECK_THROWS_AS(derive_params({2, 1.0, 0.8, MeanExponent{0.0}}), DomainError);
    CHECK_THROWS_AS(derive_params({2, -0.1, 0.8, MeanExponent{0.0}}), DomainError);
    CHECK_THROWS_AS(derive_params({2, 0.1, 0.0, MeanExponent{0.0}}), DomainError);
    CHECK_THROWS_AS(derive_params({2, 0.1, 0.8, AveragePower{0.0}}), DomainError);
    CHECK_THROWS_AS(derive_params({2, 0.1, 0.8, MeanExponent{NAN}}), DomainError);
}

TEST_CASE("power conversions")
{
    CHECK(db_to_watts(20.0) == Approx(100.0));
    CHECK(watts_to_db(0.1) == Approx(-10.0));
    CHECK(mu_g_from_power(std::exp(2.0), 0.5) == Approx(0.75));
}

TEST_CASE("scheme names")
{
    CHECK(parse_scheme("EGC") == Scheme::EGC);
    CHECK(to_string(Scheme::MRC) == "mrc");
    CHECK_THROWS_AS(parse_scheme("abc"), ConfigError);
}

TEST_CASE("sampled exponents have the equicorrelated covariance")
{
    const double sigma = 0.8;
    for (double rho : {0.0, 0.3, 0.9})
    {
        const DerivedParams p = derive_params({3, rho, sigma, MeanExponent{0.5}});
        const auto draws = sample_gains(p, 200000, 7);
        Eigen::Vector3d mean = Eigen::Vector3d::Zero();
        Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
        for (const auto &d : draws)
        {
            const Eigen::Vector3d g(d.latent[0], d.latent[1], d.latent[2]);
            mean += g;
            second += g * g.transpose();
        }
        mean /= static_cast<double>(draws.size());
        const Eigen::Matrix3d cov = second / static_cast<double>(draws.size()) - mean * mean.transpose();
        for (int i = 0; i < 3; ++i)
        {
            CHECK(mean(i) == Approx(0.5).epsilon(0.02));
            for (int j = 0; j < 3; ++j)
                CHECK(std::abs(cov(i, j) - sigma * sigma * (i == j ? 1.0 : rho)) < 0.02);
        }
        CHECK(draws[0].gains[1] == Approx(std::exp(draws[0].latent[1])));
    }
}

TEST_CASE("sampler streams are reproducible")
{
    const DerivedParams p = derive_params({2, 0.5, 1.0, MeanExponent{0.0}});
    GainSampler s1(p, 42, 3), s2(p, 42, 3), s3(p, 42, 4);
    const auto a = s1.next(), b = s2.next(), c = s3.next();
    CHECK(a.latent == b.latent);
    CHECK(a.latent != c.latent);
}
