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
#include "lnfade/verify.hpp"

#include "lnfade/asymptotics.hpp"
#include "lnfade/channel.hpp"
#include "lnfade/errors.hpp"
#include "lnfade/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lnfade {

namespace {

using namespace oracles;

std::string tag(int branches, double a)
{
    std::ostringstream os;
    os << "L=" << branches;
    if (a > 0.0)
        os << " a=" << a;
    return os.str();
}

CheckResult below(std::string suite, std::string name, double value, double threshold, std::string detail = {})
{
    return {std::move(suite), std::move(name), value < threshold, false, value, threshold, std::move(detail)};
}

std::vector<CheckResult> lemma_suite()
{
    std::vector<CheckResult> out;
    const std::vector<double> ts{5.0, 10.0, 20.0, 40.0};
    for (int L : {2, 3})
    {
        const LemmaProbe probe{L, 1.0, std::vector<double>(static_cast<std::size_t>(L), 0.0), 0.1, ts};
        const auto pts = lemma_ratio(probe);

        bool monotone = true;
        for (std::size_t i = 1; i < pts.size(); ++i)
            monotone = monotone && pts[i].log_ratio < pts[i - 1].log_ratio;
        out.push_back({"lemma", "monotone " + tag(L, 0), monotone, false, pts.back().log_ratio, 0.0,
                       "ln ratio at t=40"});

        // Decay per doubling once the mean sits well outside the hypercube.
        for (std::size_t i = 2; i < pts.size(); ++i)
        {
            const double factor = std::exp(pts[i - 1].log_ratio - pts[i].log_ratio);
            std::ostringstream name;
            name << "decay t=" << pts[i - 1].t << "->" << pts[i].t << " " << tag(L, 0);
            out.push_back({"lemma", name.str(), factor > 10.0, false, factor, 10.0, "ratio drop factor"});
        }

        LemmaProbe wide = probe;
        wide.eps = 0.2;
        const auto w = lemma_ratio(wide);
        bool smaller = true;
        for (std::size_t i = 0; i < w.size(); ++i)
            smaller = smaller && w[i].log_ratio < pts[i].log_ratio;
        out.push_back({"lemma", "wider eps lowers ratio " + tag(L, 0), smaller, false, w[1].log_ratio,
                       pts[1].log_ratio, "ln ratio at t=10, eps 0.2 vs 0.1"});
    }
    return out;
}

std::vector<CheckResult> kkt_suite()
{
    std::vector<CheckResult> out;
    const double gamma = 0.1, mu_x = 5.0;
    for (int L : {2, 3, 4})
        for (double a : {2.0, 3.732, 10.0})
        {
            const auto sc = nearest_point_numeric(Scheme::SC, a, L, gamma, mu_x);
            out.push_back(below("kkt", "sc gap " + tag(L, a), sc.distance_gap, 1e-6));
            const bool all_active = std::all_of(sc.active_constraints.begin(), sc.active_constraints.end(),
                                                [](bool b) { return b; });
            out.push_back({"kkt", "sc all constraints active " + tag(L, a), all_active, false,
                           static_cast<double>(std::count(sc.active_constraints.begin(), sc.active_constraints.end(), true)),
                           static_cast<double>(L), "active count"});

            const auto egc = nearest_point_numeric(Scheme::EGC, a, L, gamma, mu_x);
            const auto mrc = nearest_point_numeric(Scheme::MRC, a, L, gamma, mu_x);
            out.push_back(below("kkt", "egc gap " + tag(L, a), egc.distance_gap, 1e-6));
            out.push_back(below("kkt", "mrc gap " + tag(L, a), mrc.distance_gap, 1e-6));
            double d2 = 0.0;
            for (std::size_t l = 0; l < egc.numeric.size(); ++l)
                d2 += (egc.numeric[l] - mrc.numeric[l]) * (egc.numeric[l] - mrc.numeric[l]);
            out.push_back(below("kkt", "egc vs mrc minimizer " + tag(L, a), std::sqrt(d2), 1e-6));
        }
    return out;
}

std::vector<CheckResult> subset_suite(const VerifyOptions &opts)
{
    std::vector<CheckResult> out;
    const double gamma = 0.1, eps = 0.05, a = 3.732;
    for (int L : {2, 3})
    {
        const auto r = subset_inclusion_check(a, L, gamma, eps, 50.0, opts.subset_samples, opts.seed);
        std::ostringstream detail;
        detail << r.accepted << " of " << r.drawn << " accepted";
        out.push_back({"subset", "no violations mu_X=50 " + tag(L, a), r.violations == 0 && !r.inconclusive,
                       false, static_cast<double>(r.violations), 0.0, detail.str()});
    }

    const int perm[] = {2, 0, 1};
    const auto base = subset_inclusion_check(a, 3, gamma, eps, 50.0, opts.subset_samples, opts.seed);
    const auto swapped = subset_inclusion_check(a, 3, gamma, eps, 50.0, opts.subset_samples, opts.seed, perm);
    out.push_back({"subset", "permutation symmetry " + tag(3, a),
                   base.violations == swapped.violations && base.accepted == swapped.accepted, false,
                   static_cast<double>(swapped.violations), static_cast<double>(base.violations),
                   "violations under relabeling"});

    const auto near = subset_inclusion_check(a, 2, gamma, eps, 0.1, opts.subset_samples / 10, opts.seed);
    std::ostringstream detail;
    detail << "outside regime; " << near.accepted << " accepted";
    out.push_back({"subset", "mu_X=0.1 " + tag(2, a), true, true, static_cast<double>(near.violations), 0.0,
                   detail.str()});
    return out;
}

std::vector<CheckResult> derivatives_suite()
{
    std::vector<CheckResult> out;
    for (int L : {2, 3, 4})
        for (double a : {2.0, 3.732, 10.0})
        {
            const auto r = implicit_derivative_check(a, L, 0.1);
            out.push_back(below("derivatives", "max error " + tag(L, a), r.max_error, 1e-4));
        }
    return out;
}

double rel_diff(double got, double want)
{
    return std::abs(got - want) / want;
}

std::vector<CheckResult> limits_suite()
{
    std::vector<CheckResult> out;
    const double sigma = 0.8, gamma = 0.1;
    const std::vector<double> a_grid{1e3, 1e4, 1e5, 1e6};
    for (int L : {2, 3})
        for (Scheme s : {Scheme::SC, Scheme::EGC, Scheme::MRC})
        {
            std::vector<double> worst;
            for (double a : a_grid)
            {
                const DerivedParams p = derive_params({L, rho_from_a(a, L), sigma, MeanExponent{0.0}});
                double w = 0.0;
                for (double db = 10.0; db <= 30.0 + 1e-9; db += 2.0)
                {
                    const OutageQuery q{gamma, db_to_watts(db)};
                    double indep = 0.0;
                    switch (s)
                    {
                    case Scheme::SC:
                        indep = sc_outage_asym_indep(L, sigma, q);
                        break;
                    case Scheme::EGC:
                        indep = egc_outage_asym_indep(L, sigma, q);
                        break;
                    case Scheme::MRC:
                        indep = mrc_outage_asym_indep(L, sigma, q);
                        break;
                    }
                    w = std::max(w, rel_diff(outage_asym(s, p, q), indep));
                }
                worst.push_back(w);
            }
            const std::string name = std::string(to_string(s)) + " " + tag(L, 0);
            bool shrinking = true;
            for (std::size_t i = 1; i < worst.size(); ++i)
                shrinking = shrinking && worst[i] < worst[i - 1];
            out.push_back({"limits", "shrinks with a " + name, shrinking, false, worst.back(), worst.front(),
                           "worst relative gap at a=1e6 vs a=1e3"});
            out.push_back(below("limits", "gap at a=1e6 " + name, worst.back(), 1e-3, "10..30 dB grid"));
        }
    return out;
}

} // namespace

const std::vector<std::string> &verify_suite_names()
{
    static const std::vector<std::string> names{"lemma", "kkt", "subset", "derivatives", "limits"};
    return names;
}

std::vector<CheckResult> run_verify_suite(std::string_view suite, const VerifyOptions &opts)
{
    if (suite == "lemma")
        return lemma_suite();
    if (suite == "kkt")
        return kkt_suite();
    if (suite == "subset")
        return subset_suite(opts);
    if (suite == "derivatives")
        return derivatives_suite();
    if (suite == "limits")
        return limits_suite();
    throw ConfigError("unknown verify suite '" + std::string(suite) + "'", 0, "suite");
}

bool all_passed(const std::vector<CheckResult> &results)
{
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult &r) { return r.passed || r.informational; });
}

} // namespace lnfade
