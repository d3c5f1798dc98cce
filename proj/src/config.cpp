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
#include "lnfade/config.hpp"

#include "lnfade/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lnfade {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;)
    {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

double to_double(std::string_view text, int line, std::string_view key)
{
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ConfigError("line " + std::to_string(line) + ": '" + std::string(key) + "' expects a number, got '" +
                              std::string(text) + "'",
                          line, std::string(key));
    return value;
}

int to_int(std::string_view text, int line, std::string_view key)
{
    const double v = to_double(text, line, key);
    if (v != std::floor(v) || std::abs(v) > 1e9)
        throw ConfigError("line " + std::to_string(line) + ": '" + std::string(key) + "' expects an integer, got '" +
                              std::string(text) + "'",
                          line, std::string(key));
    return static_cast<int>(v);
}

} // namespace

KeyValueConfig KeyValueConfig::parse(std::string_view text)
{
    KeyValueConfig cfg;
    int line_no = 0;
    for (std::string_view raw : split(text, '\n'))
    {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string_view line = trim(raw.substr(0, hash));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key", line_no);
        if (value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": '" + key + "' has no value", line_no, key);
        if (cfg.entries_.contains(key))
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", line_no, key);
        cfg.entries_.emplace(key, Entry{value, line_no});
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool KeyValueConfig::has(std::string_view key) const
{
    return entries_.find(key) != entries_.end();
}

int KeyValueConfig::line_of(std::string_view key) const
{
    return entry(key).line;
}

const KeyValueConfig::Entry &KeyValueConfig::entry(std::string_view key) const
{
    const auto it = entries_.find(key);
    if (it == entries_.end())
        throw ConfigError("missing required key '" + std::string(key) + "'", 0, std::string(key));
    return it->second;
}

std::string KeyValueConfig::get_string(std::string_view key) const
{
    return entry(key).value;
}

double KeyValueConfig::get_double(std::string_view key) const
{
    const Entry &e = entry(key);
    return to_double(e.value, e.line, key);
}

int KeyValueConfig::get_int(std::string_view key) const
{
    const Entry &e = entry(key);
    return to_int(e.value, e.line, key);
}

std::vector<double> KeyValueConfig::get_doubles(std::string_view key) const
{
    const Entry &e = entry(key);
    std::vector<double> out;
    for (std::string_view item : split(e.value, ','))
        out.push_back(to_double(item, e.line, key));
    return out;
}

std::vector<int> KeyValueConfig::get_ints(std::string_view key) const
{
    const Entry &e = entry(key);
    std::vector<int> out;
    for (std::string_view item : split(e.value, ','))
        out.push_back(to_int(item, e.line, key));
    return out;
}

std::vector<std::string> KeyValueConfig::get_strings(std::string_view key) const
{
    const Entry &e = entry(key);
    std::vector<std::string> out;
    for (std::string_view item : split(e.value, ','))
    {
        if (item.empty())
            throw ConfigError("line " + std::to_string(e.line) + ": empty list item in '" + std::string(key) + "'",
                              e.line, std::string(key));
        out.emplace_back(item);
    }
    return out;
}

std::vector<std::string> KeyValueConfig::keys() const
{
    std::vector<std::string> out;
    for (const auto &[k, v] : entries_)
        out.push_back(k);
    return out;
}

ChannelSpec channel_spec_from_config(const KeyValueConfig &config)
{
    ChannelSpec spec;
    spec.branches = config.get_int("L");
    spec.rho = config.get_double("rho");
    spec.sigma_g = config.get_double("sigma_G");

    int anchors = 0;
    if (config.has("mu_G"))
    {
        spec.anchor = MeanExponent{config.get_double("mu_G")};
        ++anchors;
    }
    if (config.has("Er_watts"))
    {
        spec.anchor = AveragePower{config.get_double("Er_watts")};
        ++anchors;
    }
    if (config.has("Er_dB"))
    {
        spec.anchor = AveragePower{db_to_watts(config.get_double("Er_dB"))};
        ++anchors;
    }
    if (anchors != 1)
        throw ConfigError("exactly one of mu_G, Er_watts, Er_dB must be given (found " + std::to_string(anchors) + ")",
                          0, "mu_G");

    try
    {
        spec.validate();
    }
    catch (const DomainError &e)
    {
        throw ConfigError(e.what());
    }
    return spec;
}

ChannelSpec parse_channel_spec(std::string_view text)
{
    return channel_spec_from_config(KeyValueConfig::parse(text));
}

std::vector<double> parse_grid(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw ConfigError("empty grid", 0, "grid");

    std::vector<double> out;
    if (text.find(':') != std::string_view::npos)
    {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw ConfigError("grid '" + std::string(text) + "' must be start:stop:step", 0, "grid");
        const double start = to_double(parts[0], 0, "grid");
        const double stop = to_double(parts[1], 0, "grid");
        const double step = to_double(parts[2], 0, "grid");
        if (!(step > 0.0))
            throw ConfigError("grid step must be > 0", 0, "grid");
        if (stop < start)
            throw ConfigError("grid stop must be >= start", 0, "grid");
        const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (n > 1'000'000)
            throw ConfigError("grid has too many points", 0, "grid");
        for (long i = 0; i < n; ++i)
            out.push_back(start + static_cast<double>(i) * step);
    }
    else
    {
        for (std::string_view item : split(text, ','))
            out.push_back(to_double(item, 0, "grid"));
    }

    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1]))
            throw ConfigError("grid values must be strictly increasing", 0, "grid");
    return out;
}

} // namespace lnfade
