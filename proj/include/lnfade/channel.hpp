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

// Equicorrelated lognormal channel model.
//
// Branch exponents are built from L iid latent Gaussians X_l ~ N(mu_X, sigma_X^2):
//
//     G_l = a X_l + sum_{k != l} X_k,      c_l = exp(G_l),
//
// which gives every pair (G_m, G_n) the correlation rho = (2a + L - 2) / (a^2 + L - 1).
// rho == 0 is carried as an explicit independent mode (a = infinity is not representable).

#include "lnfade/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lnfade {

enum class Scheme
{
    SC,
    EGC,
    MRC
};

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view text);

struct MeanExponent
{
    double nats;
};

struct AveragePower
{
    double watts;
};

using PowerAnchor = std::variant<MeanExponent, AveragePower>;

struct ChannelSpec
{
    int branches = 2;
    double rho = 0.0;
    double sigma_g = 1.0;
    PowerAnchor anchor = MeanExponent{0.0};

    /// Throws DomainError unless L >= 1, 0 <= rho < 1, sigma_G > 0 and the anchor is valid.
    void validate() const;
};

struct DerivedParams
{
    int branches = 1;
    double rho = 0.0;
    double sigma_g = 1.0;
    bool independent = true; // rho == 0 or L == 1
    double a = 0.0;          // +inf in independent mode
    double mu_g = 0.0;
    double mu_x = 0.0;
    double sigma_x = 1.0;
    double log_det_a = 0.0; // ln |A|, +inf in independent mode

    double det_a() const;

    /// Er = E[exp(2 G_l)] = exp(2 mu_G + 2 sigma_G^2).
    double average_power() const;

    /// Same correlation structure, re-anchored so that average_power() == er_watts.
    DerivedParams at_power(double er_watts) const;
};

/// rho = (2a + L - 2) / (a^2 + L - 1); a >= 1, L >= 2.
double rho_from_a(double a, int branches);

/// Larger root of the rho(a) relation: a = (1 + sqrt(1 - rho (rho (L - 1) - L + 2))) / rho.
double a_from_rho(double rho, int branches);

/// mu_G = ln sqrt(Er) - sigma_G^2.
double mu_g_from_power(double er_watts, double sigma_g);

double db_to_watts(double db);
double watts_to_db(double watts);

DerivedParams derive_params(const ChannelSpec &spec);

struct GainSample
{
    std::vector<double> gains;  // c_l = exp(G_l)
    std::vector<double> latent; // G_l
};

/// Reproducible stream of correlated exponents G. One sampler per substream.
class GainSampler
{
public:
    GainSampler(const DerivedParams &params, std::uint64_t seed, std::uint64_t stream = 0);

    /// Writes one draw of (G_1..G_L) into `out` (size L).
    void draw_latent(std::span<double> out)
    {
        if (independent_)
        {
            for (double &g : out)
                g = mu_g_ + sigma_g_ * normal_(engine_);
            return;
        }
        double total = 0.0;
        for (double &x : out)
        {
            x = mu_x_ + sigma_x_ * normal_(engine_);
            total += x;
        }
        for (double &x : out)
            x = a_minus_one_ * x + total;
    }

    GainSample next();

    int branches() const noexcept { return branches_; }

private:
    rng::Engine engine_;
    rng::StandardNormal normal_;
    int branches_;
    bool independent_;
    double mu_g_, sigma_g_, mu_x_, sigma_x_, a_minus_one_;
};

/// n draws from substream 0 of `seed`.
std::vector<GainSample> sample_gains(const DerivedParams &params, std::size_t n, std::uint64_t seed);

} // namespace lnfade
