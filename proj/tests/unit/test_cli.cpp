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
#include "doctest.h"

#include "cli.hpp"

#include "lnfade/curve_io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace lnfade;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string &name)
{
    const auto dir = std::filesystem::temp_directory_path() / "lnfade_test_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

const std::vector<std::string> kBase{"--sigma-g", "0.8", "--gamma-th", "0.1"};

std::vector<std::string> with_base(std::vector<std::string> head, std::vector<std::string> tail = {})
{
    head.insert(head.end(), kBase.begin(), kBase.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

} // namespace

TEST_CASE("figure presets produce the expected curve families")
{
    const Result r4 = run({"figure", "fig4", "--no-sim"});
    REQUIRE(r4.code == cli::kOk);
    const CurveSet s4 = parse_csv(r4.out);
    CHECK(s4.curves.size() == 10);
    CHECK(s4.curves.back().source == "baseline");
    CHECK(*s4.find_meta("figure") == "fig4");
    for (const Curve &c : s4.curves)
        CHECK(c.points.size() == 16);

    for (const char *fig : {"fig5", "fig6"})
    {
        const Result r = run({"figure", fig, "--no-sim"});
        REQUIRE(r.code == cli::kOk);
        CHECK(parse_csv(r.out).curves.size() == 9);
    }

    const Result r7 = run({"figure", "fig7"});
    REQUIRE(r7.code == cli::kOk);
    const CurveSet s7 = parse_csv(r7.out);
    CHECK(s7.curves.size() == 6);
    CHECK(s7.x_name == "y");
    for (const Curve &c : s7.curves)
        for (std::size_t i = 1; i < c.points.size(); ++i)
            if (!std::isnan(c.points[i].value) && !std::isnan(c.points[i - 1].value))
                CHECK(c.points[i].value >= c.points[i - 1].value);

    const Result sim = run({"figure", "fig4", "--samples", "2000"});
    REQUIRE(sim.code == cli::kOk);
    CHECK(parse_csv(sim.out).curves.size() == 19);

    CHECK(run({"figure", "fig9"}).code == cli::kUsage);
}

TEST_CASE("empty or malformed grids are usage errors")
{
    CHECK(run(with_base({"asymptotic", "--er-db", ""})).code == cli::kUsage);
    CHECK(run(with_base({"asymptotic", "--er-db", "10:0:1"})).code == cli::kUsage);
    CHECK(run(with_base({"asymptotic"})).code == cli::kUsage);
    CHECK(run({"sumcdf", "--sigma-g", "0.5", "--y-lg", ""}).code == cli::kUsage);
    CHECK(run({"sumcdf", "--sigma-g", "0.5", "--y-lg", "-1:0:0.5", "--method", "bogus"}).code == cli::kUsage);
    CHECK(run({"asymptotic", "--no-such-flag"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("domain errors exit with code 3")
{
    CHECK(run({"sumcdf", "--L", "3", "--sigma-g", "0.5", "--y-lg", "-1:0:0.5", "--method", "quadrature"}).code ==
          cli::kDomain);
    CHECK(run(with_base({"asymptotic", "--er-db", "0:10:5", "--rho", "1.5"})).code == cli::kDomain);
    CHECK(run(with_base({"simulate", "--er-db", "0:10:5", "--samples", "10"})).code == cli::kDomain);
}

TEST_CASE("pre-asymptotic points are annotated, not dropped")
{
    const Result r = run(with_base({"asymptotic", "--er-db", "-10:10:5", "--scheme", "sc"}));
    REQUIRE(r.code == cli::kOk);
    const CurveSet s = parse_csv(r.out);
    REQUIRE(s.curves.size() == 1);
    const auto &pts = s.curves[0].points;
    REQUIRE(pts.size() == 5);
    CHECK(std::isnan(pts[0].value));
    CHECK(pts[0].flag == "pre_asymptotic");
    CHECK(pts.back().flag.empty());
    CHECK(pts.back().value > 0.0);
}

TEST_CASE("identical invocations give byte-identical files")
{
    const auto a = scratch("a.csv");
    const auto b = scratch("b.csv");
    const auto args = [](const std::filesystem::path &p) {
        return with_base({"simulate", "--er-db", "0:20:5", "--rho", "0.5", "--samples", "20000", "--seed", "11",
                          "--out", p.string()});
    };
    REQUIRE(run(args(a)).code == cli::kOk);
    REQUIRE(run(args(b)).code == cli::kOk);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());

    const Result other = run(with_base({"simulate", "--er-db", "0:20:5", "--rho", "0.5", "--samples", "20000",
                                        "--seed", "12"}));
    CHECK(other.out != slurp(a));
}

TEST_CASE("the run seed is echoed and LNFADE_SEED sets the default")
{
    const auto args = with_base({"simulate", "--er-db", "0:10:5", "--samples", "5000"});
    auto explicit_args = args;
    explicit_args.insert(explicit_args.end(), {"--seed", "424242"});
    CHECK(*parse_csv(run(explicit_args).out).find_meta("seed") == "424242");

    ::setenv("LNFADE_SEED", "99", 1);
    const Result env = run(args);
    CHECK(*parse_csv(env.out).find_meta("seed") == "99");
    CHECK(*parse_csv(run(explicit_args).out).find_meta("seed") == "424242");
    ::setenv("LNFADE_SEED", "not-a-seed", 1);
    CHECK(run(args).code == cli::kUsage);
    ::unsetenv("LNFADE_SEED");
    CHECK(*parse_csv(run(args).out).find_meta("seed") == "20260417");
}

TEST_CASE("unresolved points carry the rule-of-three upper bound")
{
    const Result r = run(with_base({"simulate", "--er-db", "30", "--samples", "1000", "--scheme", "mrc"}));
    REQUIRE(r.code == cli::kOk);
    const CurveSet s = parse_csv(r.out);
    const Curve &sim = s.curves.back();
    REQUIRE(sim.source == "simulation");
    CHECK(sim.points[0].flag == "resolution_exhausted");
    CHECK(*sim.points[0].hits == 0);
    CHECK(*sim.points[0].ci_high == doctest::Approx(3.0 / 1000.0));
}

TEST_CASE("config files feed the same settings, with line diagnostics")
{
    const auto good = scratch("good.cfg");
    std::ofstream(good) << "# test\nL = 3\nrho = 0.2\nsigma_G = 0.9\ngamma_th = 0.1\nEr_dB = 10:20:5\nschemes = egc\n";
    const Result r = run({"asymptotic", "--config", good.string()});
    REQUIRE(r.code == cli::kOk);
    const CurveSet s = parse_csv(r.out);
    REQUIRE(s.curves.size() == 1);
    CHECK(s.curves[0].name == "egc_asym_L3_rho0.2_sigmaG0.9");

    const Result flagged = run({"asymptotic", "--config", good.string(), "--L", "2"});
    CHECK(parse_csv(flagged.out).curves[0].name == "egc_asym_L2_rho0.2_sigmaG0.9");

    const auto bad = scratch("bad.cfg");
    std::ofstream(bad) << "L = 2\nsigma_G = 0.8\ngamma_th = 0.1\nEr_dB = 5:1:1\n";
    const Result e = run({"asymptotic", "--config", bad.string()});
    CHECK(e.code == cli::kUsage);
    CHECK(e.err.find("line 4") != std::string::npos);
}

TEST_CASE("object format and the verify report")
{
    const Result js = run(with_base({"asymptotic", "--er-db", "10:20:5", "--format", "obj"}));
    REQUIRE(js.code == cli::kOk);
    CHECK(nlohmann::json::accept(js.out));

    const Result v = run({"verify", "--suite", "derivatives", "--format", "obj"});
    CHECK(v.code == cli::kOk);
    const auto report = nlohmann::json::parse(v.out);
    CHECK(report["passed"] == true);
    REQUIRE(report["suites"].size() == 1);
    CHECK(report["suites"][0]["suite"] == "derivatives");

    const Result csv = run({"verify", "--suite", "kkt"});
    CHECK(csv.code == cli::kOk);
    CHECK(csv.out.find("FAIL") == std::string::npos);
    CHECK(csv.out.find("kkt,sc gap") != std::string::npos);

    CHECK(run({"verify", "--suite", "nonsense"}).code == cli::kUsage);
}
