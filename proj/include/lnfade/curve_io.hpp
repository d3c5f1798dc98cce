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

// Data series emitted by the command-line tool.
//
// CSV layout: `# key=value` metadata lines, one header row, then one record per point:
//
//     curve,scheme,source,<x>,<value>,stderr,hits,trials,ci_low,ci_high,flag
//
// Numbers are written in scientific notation with 12 significant digits; absent optional
// fields are empty. A point whose value could not be given (outside the validity region of
// a closed form, for instance) carries `nan` and a flag.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lnfade {

struct CurvePoint
{
    double x = 0.0;
    double value = 0.0;
    std::optional<double> std_error;
    std::optional<std::uint64_t> hits;
    std::optional<std::uint64_t> trials;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    std::string flag;
};

struct Curve
{
    std::string name;
    std::string scheme; // sc / egc / mrc, or a method name for CDF curves
    std::string source; // asymptotic / simulation / exact / baseline
    std::vector<CurvePoint> points;
};

struct CurveSet
{
    std::vector<std::pair<std::string, std::string>> meta;
    std::string x_name = "Er_dB";
    std::string value_name = "outage";
    std::vector<Curve> curves;

    const std::string *find_meta(std::string_view key) const;
};

std::string format_number(double v);

std::string to_csv(const CurveSet &set);
std::string to_json(const CurveSet &set);

/// Inverse of to_csv. Throws ConfigError on malformed input.
CurveSet parse_csv(std::string_view text);

/// Writes through a sibling temporary file and a rename, so readers never see a partial file.
void write_atomic(const std::filesystem::path &path, std::string_view content);

} // namespace lnfade
