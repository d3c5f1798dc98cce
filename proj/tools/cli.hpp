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

// The `lnfade` command-line tool, callable in-process.
//
//   lnfade asymptotic --sigma-g 0.8 --gamma-th 0.1 --er-db 0:30:2 [--L 2 --rho 0.5]
//   lnfade simulate   ... [--samples N --seed S]
//   lnfade sumcdf     --sigma-g 0.55 --y-lg -1:1:0.1 --method fw,asym,quadrature
//   lnfade verify     [--suite lemma,kkt,subset,derivatives,limits]
//   lnfade figure     fig4|fig5|fig6|fig7 [--no-sim] [--samples N]
//
// Output goes to --out (written atomically) or stdout. LNFADE_SEED replaces the default
// seed; --seed replaces both.

#include <iosfwd>
#include <string>
#include <vector>

namespace lnfade::cli {

enum ExitCode : int
{
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kDomain = 3,
    kVerifyFailed = 4,
};

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lnfade::cli
