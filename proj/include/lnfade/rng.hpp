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

// Seeding rule shared by every stochastic routine.
//
// Generator family: std::mt19937_64. A run seed and a substream index (batch, grid point,
// ...) are mixed through splitmix64 into the engine seed, so substreams can be generated in
// any order or on any thread and still reproduce bit-exactly.

#include <cstdint>
#include <random>

namespace lnfade::rng {

using Engine = std::mt19937_64;
using StandardNormal = std::normal_distribution<double>;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0xD1B54A32D192ED03ULL));
}

inline Engine make_engine(std::uint64_t seed, std::uint64_t index)
{
    return Engine(substream_seed(seed, index));
}

} // namespace lnfade::rng
