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

// Line-oriented `key = value` configuration text.
//
//     # comment
//     L        = 2
//     rho      = 0.5
//     sigma_G  = 0.8
//     Er_dB    = 20          # or Er_watts = 100, or mu_G = 1.66
//
// Keys are case-sensitive. Values may be comma-separated lists. Errors carry the line
// number and key that caused them.

#include "lnfade/channel.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lnfade {

class KeyValueConfig
{
public:
    static KeyValueConfig parse(std::string_view text);
    static KeyValueConfig load(const std::filesystem::path &path);

    bool has(std::string_view key) const;
    int line_of(std::string_view key) const;

    std::string get_string(std::string_view key) const;
    double get_double(std::string_view key) const;
    int get_int(std::string_view key) const;
    std::vector<double> get_doubles(std::string_view key) const;
    std::vector<int> get_ints(std::string_view key) const;
    std::vector<std::string> get_strings(std::string_view key) const;

    std::vector<std::string> keys() const;

private:
    struct Entry
    {
        std::string value;
        int line = 0;
    };

    const Entry &entry(std::string_view key) const;

    std::map<std::string, Entry, std::less<>> entries_;
};

/// Reads L, rho, sigma_G and exactly one of mu_G / Er_watts / Er_dB.
ChannelSpec channel_spec_from_config(const KeyValueConfig &config);
ChannelSpec parse_channel_spec(std::string_view text);

/// "start:stop:step" (stop inclusive) or a comma-separated list. Throws ConfigError when
/// the result would be empty or not strictly increasing.
std::vector<double> parse_grid(std::string_view text);

} // namespace lnfade
