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

// Named batteries of oracle checks with pass/fail verdicts, as run by `lnfade verify`.
//
//   lemma        tail-ball vs hypercube ratio decays along the mean direction
//   kkt          numeric nearest points match the closed forms
//   subset       slab inclusion near the SC nearest point, far from the region
//   derivatives  implicit derivatives of both EGC boundary surfaces at the nearest point
//   limits       correlated asymptotes tend to the independent ones as a grows

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lnfade {

struct CheckResult
{
    std::string suite;
    std::string name;
    bool passed = false;
    bool informational = false; // reported only, never fails the suite
    double value = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct VerifyOptions
{
    std::uint64_t seed = 20260417ULL;
    std::uint64_t subset_samples = 200000;
};

const std::vector<std::string> &verify_suite_names();

/// Runs one suite. Throws ConfigError for an unknown name.
std::vector<CheckResult> run_verify_suite(std::string_view suite, const VerifyOptions &opts = {});

/// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult> &results);

} // namespace lnfade
