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

// Plain Monte Carlo estimation of SC / EGC / MRC outage over the equicorrelated channel.
//
// Trials are cut into batches of `batch_size`; batch b draws from substream b of the run
// seed, and batch hit counts reduce by integer addition. The result therefore depends only
// on (seed, samples, batch_size), never on the number of worker threads.
//
// All three combiners are evaluated on the same gain draws (common random numbers), so
// scheme comparisons at one seed share their sampling noise.

#include "lnfade/asymptotics.hpp"
#include "lnfade/channel.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace lnfade {

inline constexpr std::uint64_t kDefaultSeed = 20260417ULL;

struct SimConfig
{
    std::uint64_t samples = 10'000'000;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t batch_size = 1u << 16;

    /// Throws DomainError unless samples >= 1000 and samples >= batch_size >= 1.
    void validate() const;
};

struct SimEstimate
{
    double p_hat = 0.0;
    double std_error = 0.0; // sqrt(p(1-p)/n), normal approximation
    std::uint64_t n = 0;
    std::uint64_t hits = 0;

    bool resolution_exhausted = false; // hits == 0; see upper_bound
    double upper_bound = 0.0;          // 3/n (95% rule of three) when resolution_exhausted

    bool low_count = false; // hits < 30; the interval below is Clopper-Pearson
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Builds an estimate from raw counts. 95% intervals throughout.
SimEstimate make_estimate(std::uint64_t hits, std::uint64_t n);

/// Per-scheme outage counts, indexed by static_cast<int>(Scheme).
using HitCounts = std::array<std::uint64_t, 3>;

/// Counts outages of all three combiners over `samples` trials. OpenMP over batches.
HitCounts count_outages(const DerivedParams &params, double gamma_th, const SimConfig &cfg);

/// Single-threaded reference for count_outages; must agree exactly.
HitCounts count_outages_serial(const DerivedParams &params, double gamma_th, const SimConfig &cfg);

/// Outage estimates for SC, EGC and MRC from one common stream.
std::array<SimEstimate, 3> simulate_all(const DerivedParams &params, const OutageQuery &q, const SimConfig &cfg);

SimEstimate simulate_outage(const DerivedParams &params, Scheme scheme, const OutageQuery &q, const SimConfig &cfg);

/// Seed used for grid point `index` of a sweep run with `seed`.
std::uint64_t sweep_point_seed(std::uint64_t seed, std::size_t index);

/// simulate_all at each Er (watts), each point on its own derived seed.
std::vector<std::array<SimEstimate, 3>> sweep_all(const DerivedParams &params, double gamma_th,
                                                  std::span<const double> er_watts, const SimConfig &cfg);

std::vector<SimEstimate> sweep(const DerivedParams &params, Scheme scheme, double gamma_th,
                               std::span<const double> er_watts, const SimConfig &cfg);

} // namespace lnfade
