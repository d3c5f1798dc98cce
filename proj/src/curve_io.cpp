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
#include "lnfade/curve_io.hpp"

#include "lnfade/errors.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lnfade {

namespace {

const char *const kColumns[] = {"curve", "scheme", "source", nullptr, nullptr, "stderr",
                                "hits",  "trials", "ci_low", "ci_high", "flag"};
constexpr std::size_t kColumnCount = 11;

std::vector<std::string> split_fields(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;)
    {
        const auto pos = line.find(',', start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

double parse_double(const std::string &s, int line)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError("curve file line " + std::to_string(line) + ": bad number '" + s + "'", line);
    return v;
}

std::uint64_t parse_count(const std::string &s, int line)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError("curve file line " + std::to_string(line) + ": bad count '" + s + "'", line);
    return v;
}

template <class T>
std::string optional_text(const std::optional<T> &v)
{
    if (!v)
        return {};
    if constexpr (std::is_floating_point_v<T>)
        return format_number(*v);
    else
        return std::to_string(*v);
}

nlohmann::json number_or_null(double v)
{
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

} // namespace

const std::string *CurveSet::find_meta(std::string_view key) const
{
    for (const auto &[k, v] : meta)
        if (k == key)
            return &v;
    return nullptr;
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string to_csv(const CurveSet &set)
{
    std::ostringstream os;
    for (const auto &[k, v] : set.meta)
        os << "# " << k << '=' << v << '\n';
    for (std::size_t c = 0; c < kColumnCount; ++c)
    {
        if (c)
            os << ',';
        os << (c == 3 ? set.x_name : c == 4 ? set.value_name : kColumns[c]);
    }
    os << '\n';
    for (const Curve &curve : set.curves)
        for (const CurvePoint &p : curve.points)
            os << curve.name << ',' << curve.scheme << ',' << curve.source << ',' << format_number(p.x) << ','
               << format_number(p.value) << ',' << optional_text(p.std_error) << ',' << optional_text(p.hits) << ','
               << optional_text(p.trials) << ',' << optional_text(p.ci_low) << ',' << optional_text(p.ci_high) << ','
               << p.flag << '\n';
    return os.str();
}

std::string to_json(const CurveSet &set)
{
    nlohmann::ordered_json root;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto &[k, v] : set.meta)
        meta[k] = v;
    root["meta"] = meta;
    root["x"] = set.x_name;
    root["value"] = set.value_name;
    root["curves"] = nlohmann::ordered_json::array();
    for (const Curve &curve : set.curves)
    {
        nlohmann::ordered_json jc;
        jc["name"] = curve.name;
        jc["scheme"] = curve.scheme;
        jc["source"] = curve.source;
        jc["points"] = nlohmann::ordered_json::array();
        for (const CurvePoint &p : curve.points)
        {
            nlohmann::ordered_json jp;
            jp["x"] = p.x;
            jp["value"] = number_or_null(p.value);
            if (p.std_error)
                jp["stderr"] = *p.std_error;
            if (p.hits)
                jp["hits"] = *p.hits;
            if (p.trials)
                jp["trials"] = *p.trials;
            if (p.ci_low)
                jp["ci_low"] = *p.ci_low;
            if (p.ci_high)
                jp["ci_high"] = *p.ci_high;
            if (!p.flag.empty())
                jp["flag"] = p.flag;
            jc["points"].push_back(jp);
        }
        root["curves"].push_back(jc);
    }
    return root.dump(2) + "\n";
}

CurveSet parse_csv(std::string_view text)
{
    CurveSet set;
    int line_no = 0;
    bool have_header = false;
    std::size_t start = 0;
    while (start < text.size())
    {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;

        if (line.starts_with("# "))
        {
            const std::string_view kv = line.substr(2);
            const auto eq = kv.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("curve file line " + std::to_string(line_no) + ": bad metadata", line_no);
            set.meta.emplace_back(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
            continue;
        }

        const auto f = split_fields(line);
        if (f.size() != kColumnCount)
            throw ConfigError("curve file line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(kColumnCount) + " fields",
                              line_no);
        if (!have_header)
        {
            for (std::size_t c = 0; c < kColumnCount; ++c)
                if (kColumns[c] && f[c] != kColumns[c])
                    throw ConfigError("curve file: unexpected header column '" + f[c] + "'", line_no);
            set.x_name = f[3];
            set.value_name = f[4];
            have_header = true;
            continue;
        }

        if (set.curves.empty() || set.curves.back().name != f[0])
            set.curves.push_back({f[0], f[1], f[2], {}});
        CurvePoint p;
        p.x = parse_double(f[3], line_no);
        p.value = parse_double(f[4], line_no);
        if (!f[5].empty())
            p.std_error = parse_double(f[5], line_no);
        if (!f[6].empty())
            p.hits = parse_count(f[6], line_no);
        if (!f[7].empty())
            p.trials = parse_count(f[7], line_no);
        if (!f[8].empty())
            p.ci_low = parse_double(f[8], line_no);
        if (!f[9].empty())
            p.ci_high = parse_double(f[9], line_no);
        p.flag = f[10];
        set.curves.back().points.push_back(std::move(p));
    }
    if (!have_header)
        throw ConfigError("curve file: missing header row");
    return set;
}

void write_atomic(const std::filesystem::path &path, std::string_view content)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ConfigError("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out.flush())
            throw ConfigError("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace lnfade
