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
#include "lnfade/montecarlo.hpp"

#include "lnfade/errors.hpp"
#include "lnfade/rng.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace lnfade {

namespace {

struct Thresholds
{
    double sc_log;  // max_l G_l < ln sqrt(gamma_th)
    double egc_sum; // sum_l e^{G_l} < sqrt(L gamma_th)
    double mrc_sum; // sum_l e^{2 G_l} < gamma_th
};

Thresholds make_thresholds(int branches, double gamma_th)
{
    if (!(std::isfinite(gamma_th) && gamma_th > 0.0))
        throw DomainError("simulation: gamma_th must be finite and > 0");
    return {0.5 * std::log(gamma_th), std::sqrt(branches * gamma_th), gamma_th};
}

HitCounts run_batch(const DerivedParams &params, const Thresholds &t, std::uint64_t seed, std::uint64_t batch,
                    std::uint64_t count)
{
    GainSampler sampler(params, seed, batch);
    std::vector<double> g(static_cast<std::size_t>(params.branches));
    HitCounts hits{0, 0, 0};
    for (std::uint64_t i = 0; i < count; ++i)
    {
        sampler.draw_latent(g);
        double g_max = g[0];
        double amp = 0.0;
        double pow = 0.0;
        for (double gl : g)
        {
            g_max = std::max(g_max, gl);
            const double c = std::exp(gl);
            amp += c;
            pow += c * c;
        }
        hits[0] += g_max < t.sc_log;
        hits[1] += amp < t.egc_sum;
        hits[2] += pow < t.mrc_sum;
    }
    return hits;
}

std::uint64_t batch_count(const SimConfig &cfg)
{
    return (cfg.samples + cfg.batch_size - 1) / cfg.batch_size;
}

std::uint64_t batch_length(const SimConfig &cfg, std::uint64_t b)
{
    return std::min(cfg.batch_size, cfg.samples - b * cfg.batch_size);
}

} // namespace

void SimConfig::validate() const
{
    if (samples < 1000)
        throw DomainError("simulation: samples must be >= 1000");
    if (batch_size < 1 || batch_size > samples)
        throw DomainError("simulation: batch_size must lie in [1, samples]");
}

SimEstimate make_estimate(std::uint64_t hits, std::uint64_t n)
{
    if (n == 0 || hits > n)
        throw DomainError("make_estimate: need 0 <= hits <= n and n > 0");
    SimEstimate e;
    e.n = n;
    e.hits = hits;
    const double nd = static_cast<double>(n);
    const double hd = static_cast<double>(hits);
    e.p_hat = hd / nd;
    e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / nd);

    if (hits == 0)
    {
        e.resolution_exhausted = true;
        e.upper_bound = 3.0 / nd;
    }
    if (hits < 30)
    {
        e.low_count = true;
        const double alpha = 0.05;
        e.ci_low = hits == 0 ? 0.0 : boost::math::ibeta_inv(hd, nd - hd + 1.0, alpha / 2.0);
        e.ci_high = hits == n ? 1.0 : boost::math::ibeta_inv(hd + 1.0, nd - hd, 1.0 - alpha / 2.0);
    }
    else
    {
        e.ci_low = std::max(0.0, e.p_hat - 1.96 * e.std_error);
        e.ci_high = std::min(1.0, e.p_hat + 1.96 * e.std_error);
    }
    return e;
}

HitCounts count_outages(const DerivedParams &params, double gamma_th, const SimConfig &cfg)
{
    cfg.validate();
    const Thresholds t = make_thresholds(params.branches, gamma_th);
    const auto batches = static_cast<long long>(batch_count(cfg));

    std::uint64_t sc = 0, egc = 0, mrc = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : sc, egc, mrc)
    for (long long b = 0; b < batches; ++b)
    {
        const auto ub = static_cast<std::uint64_t>(b);
        const HitCounts h = run_batch(params, t, cfg.seed, ub, batch_length(cfg, ub));
        sc += h[0];
        egc += h[1];
        mrc += h[2];
    }
    return {sc, egc, mrc};
}

HitCounts count_outages_serial(const DerivedParams &params, double gamma_th, const SimConfig &cfg)
{
    cfg.validate();
    const Thresholds t = make_thresholds(params.branches, gamma_th);
    HitCounts total{0, 0, 0};
    for (std::uint64_t b = 0; b < batch_count(cfg); ++b)
    {
        const HitCounts h = run_batch(params, t, cfg.seed, b, batch_length(cfg, b));
        for (int s = 0; s < 3; ++s)
            total[s] += h[s];
    }
    return total;
}

std::array<SimEstimate, 3> simulate_all(const DerivedParams &params, const OutageQuery &q, const SimConfig &cfg)
{
    const DerivedParams at = params.at_power(q.er_watts);
    const HitCounts h = count_outages(at, q.gamma_th, cfg);
    return {make_estimate(h[0], cfg.samples), make_estimate(h[1], cfg.samples), make_estimate(h[2], cfg.samples)};
}

SimEstimate simulate_outage(const DerivedParams &params, Scheme scheme, const OutageQuery &q, const SimConfig &cfg)
{
    return simulate_all(params, q, cfg)[static_cast<int>(scheme)];
}

std::uint64_t sweep_point_seed(std::uint64_t seed, std::size_t index)
{
    return rng::substream_seed(seed ^ 0xA5A5A5A5A5A5A5A5ULL, index);
}

std::vector<std::array<SimEstimate, 3>> sweep_all(const DerivedParams &params, double gamma_th,
                                                  std::span<const double> er_watts, const SimConfig &cfg)
{
    std::vector<std::array<SimEstimate, 3>> out;
    out.reserve(er_watts.size());
    for (std::size_t i = 0; i < er_watts.size(); ++i)
    {
        SimConfig point = cfg;
        point.seed = sweep_point_seed(cfg.seed, i);
        out.push_back(simulate_all(params, {gamma_th, er_watts[i]}, point));
    }
    return out;
}

std::vector<SimEstimate> sweep(const DerivedParams &params, Scheme scheme, double gamma_th,
                               std::span<const double> er_watts, const SimConfig &cfg)
{
    std::vector<SimEstimate> out;
    for (const auto &all : sweep_all(params, gamma_th, er_watts, cfg))
        out.push_back(all[static_cast<int>(scheme)]);
    return out;
}

} // namespace lnfade
