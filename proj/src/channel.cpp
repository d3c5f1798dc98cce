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
#include "lnfade/channel.hpp"

#include "lnfade/errors.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace lnfade {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

std::string_view to_string(Scheme scheme)
{
    switch (scheme)
    {
    case Scheme::SC:
        return "sc";
    case Scheme::EGC:
        return "egc";
    case Scheme::MRC:
        return "mrc";
    }
    return "?";
}

Scheme parse_scheme(std::string_view text)
{
    std::string lower(text);
    for (char &c : lower)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "sc")
        return Scheme::SC;
    if (lower == "egc")
        return Scheme::EGC;
    if (lower == "mrc")
        return Scheme::MRC;
    throw ConfigError("unknown combining scheme '" + std::string(text) + "' (expected sc, egc or mrc)", 0, "scheme");
}

void ChannelSpec::validate() const
{
    if (branches < 1)
        throw DomainError("channel: branch count L must be >= 1");
    if (!(rho >= 0.0 && rho < 1.0))
        throw DomainError("channel: correlation rho must lie in [0, 1)");
    if (!(std::isfinite(sigma_g) && sigma_g > 0.0))
        throw DomainError("channel: sigma_G must be finite and > 0");
    if (const auto *p = std::get_if<AveragePower>(&anchor))
    {
        if (!(std::isfinite(p->watts) && p->watts > 0.0))
            throw DomainError("channel: Er must be finite and > 0 watts");
    }
    else if (!std::isfinite(std::get<MeanExponent>(anchor).nats))
        throw DomainError("channel: mu_G must be finite");
}

double DerivedParams::det_a() const
{
    return std::exp(log_det_a);
}

double DerivedParams::average_power() const
{
    return std::exp(2.0 * mu_g + 2.0 * sigma_g * sigma_g);
}

DerivedParams DerivedParams::at_power(double er_watts) const
{
    if (!(std::isfinite(er_watts) && er_watts > 0.0))
        throw DomainError("channel: Er must be finite and > 0 watts");
    DerivedParams out = *this;
    out.mu_g = mu_g_from_power(er_watts, sigma_g);
    out.mu_x = independent ? out.mu_g : out.mu_g / (a + branches - 1);
    return out;
}

double rho_from_a(double a, int branches)
{
    if (!(a >= 1.0))
        throw DomainError("rho_from_a: a must be >= 1");
    if (branches < 2)
        throw DomainError("rho_from_a: needs L >= 2");
    if (std::isinf(a))
        return 0.0;
    const double L = branches;
    return (2.0 * a + L - 2.0) / (a * a + L - 1.0);
}

double a_from_rho(double rho, int branches)
{
    if (!(rho > 0.0 && rho < 1.0))
        throw DomainError("a_from_rho: rho must lie in (0, 1); rho = 0 is the independent mode");
    if (branches < 2)
        throw DomainError("a_from_rho: needs L >= 2");
    const double L = branches;
    return (1.0 + std::sqrt(1.0 - rho * (rho * (L - 1.0) - L + 2.0))) / rho;
}

double mu_g_from_power(double er_watts, double sigma_g)
{
    return 0.5 * std::log(er_watts) - sigma_g * sigma_g;
}

double db_to_watts(double db)
{
    return std::pow(10.0, db / 10.0);
}

double watts_to_db(double watts)
{
    return 10.0 * std::log10(watts);
}

DerivedParams derive_params(const ChannelSpec &spec)
{
    spec.validate();

    DerivedParams p;
    p.branches = spec.branches;
    p.rho = spec.branches == 1 ? 0.0 : spec.rho;
    p.sigma_g = spec.sigma_g;
    p.mu_g = std::holds_alternative<MeanExponent>(spec.anchor)
                 ? std::get<MeanExponent>(spec.anchor).nats
                 : mu_g_from_power(std::get<AveragePower>(spec.anchor).watts, spec.sigma_g);

    p.independent = spec.branches == 1 || spec.rho == 0.0;
    if (p.independent)
    {
        p.a = kInf;
        p.mu_x = p.mu_g;
        p.sigma_x = p.sigma_g;
        p.log_det_a = kInf;
        return p;
    }

    const double L = spec.branches;
    p.a = a_from_rho(spec.rho, spec.branches);
    p.mu_x = p.mu_g / (p.a + L - 1.0);
    p.sigma_x = p.sigma_g / std::sqrt(p.a * p.a + L - 1.0);
    // A = (a - 1) I + J: eigenvalues a - 1 (L - 1 times) and a + L - 1.
    p.log_det_a = (L - 1.0) * std::log(p.a - 1.0) + std::log(p.a + L - 1.0);
    return p;
}

GainSampler::GainSampler(const DerivedParams &params, std::uint64_t seed, std::uint64_t stream)
    : engine_(rng::make_engine(seed, stream)),
      branches_(params.branches),
      independent_(params.independent),
      mu_g_(params.mu_g),
      sigma_g_(params.sigma_g),
      mu_x_(params.mu_x),
      sigma_x_(params.sigma_x),
      a_minus_one_(params.independent ? 0.0 : params.a - 1.0)
{
}

GainSample GainSampler::next()
{
    GainSample s;
    s.latent.resize(static_cast<std::size_t>(branches_));
    draw_latent(s.latent);
    s.gains.resize(s.latent.size());
    for (std::size_t l = 0; l < s.latent.size(); ++l)
        s.gains[l] = std::exp(s.latent[l]);
    return s;
}

std::vector<GainSample> sample_gains(const DerivedParams &params, std::size_t n, std::uint64_t seed)
{
    GainSampler sampler(params, seed);
    std::vector<GainSample> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(sampler.next());
    return out;
}

} // namespace lnfade
