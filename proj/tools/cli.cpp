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
#include "cli.hpp"

#include "lnfade/asymptotics.hpp"
#include "lnfade/baselines.hpp"
#include "lnfade/channel.hpp"
#include "lnfade/config.hpp"
#include "lnfade/curve_io.hpp"
#include "lnfade/errors.hpp"
#include "lnfade/montecarlo.hpp"
#include "lnfade/oracles.hpp"
#include "lnfade/presets.hpp"
#include "lnfade/rng.hpp"
#include "lnfade/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace lnfade::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Settings shared by every data-producing subcommand.
struct Output
{
    std::string path;
    std::string format = "csv";
};

// Raw flag values; a field counts only when the flag was given.
struct ChannelFlags
{
    int branches = 2;
    double rho = 0.0;
    double sigma_g = 0.0;
    double gamma_th = 0.0;
    double mu_g = 0.0;
    std::string er_db;
    std::string y_lg;
    std::string schemes;
    std::string methods;
    std::string config;
    std::uint64_t samples = 0;
};

struct OutageSetup
{
    std::vector<int> branches;
    std::vector<double> rhos;
    std::vector<double> sigmas;
    double gamma_th = 0.0;
    std::vector<double> er_db;
    std::vector<Scheme> schemes;
    bool baseline = false;
    std::uint64_t samples = 10'000'000;
};

struct CdfSetup
{
    int branches = 2;
    double rho = 0.0;
    double mu_g = 0.0;
    std::vector<double> sigmas;
    std::vector<double> y;
    std::vector<std::string> methods;
};

std::uint64_t parse_seed(const std::string &text, const std::string &field)
{
    std::size_t used = 0;
    std::uint64_t v = 0;
    try
    {
        v = std::stoull(text, &used, 0);
    }
    catch (const std::exception &)
    {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-')
        throw ConfigError("invalid seed '" + text + "' in " + field, 0, field);
    return v;
}

std::uint64_t default_seed()
{
    if (const char *env = std::getenv("LNFADE_SEED"); env && *env)
        return parse_seed(env, "LNFADE_SEED");
    return kDefaultSeed;
}

std::string short_num(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

template <typename T>
std::string join(const std::vector<T> &items)
{
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i)
        s += (i ? ";" : "") + short_num(static_cast<double>(items[i]));
    return s;
}

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty())
            throw ConfigError("empty item in list '" + text + "'");
        out.push_back(item);
    }
    if (out.empty())
        throw ConfigError("empty list");
    return out;
}

std::vector<Scheme> parse_schemes(const std::vector<std::string> &names)
{
    std::vector<Scheme> out;
    for (const auto &n : names)
    {
        if (n == "all")
            return {Scheme::SC, Scheme::EGC, Scheme::MRC};
        out.push_back(parse_scheme(n));
    }
    return out;
}

// Grid from a config key, with the key's line in any diagnostic.
std::vector<double> config_grid(const KeyValueConfig &cfg, const std::string &key)
{
    try
    {
        return parse_grid(cfg.get_string(key));
    }
    catch (const ConfigError &e)
    {
        const int line = cfg.line_of(key);
        throw ConfigError("line " + std::to_string(line) + ": " + key + ": " + e.what(), line, key);
    }
}

std::vector<double> flag_grid(const std::string &text, const std::string &flag)
{
    try
    {
        return parse_grid(text);
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(flag + ": " + e.what(), 0, flag);
    }
}

bool given(const CLI::App &cmd, const std::string &flag)
{
    const CLI::Option *opt = cmd.get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
}

[[noreturn]] void missing(const std::string &flag, const std::string &key)
{
    throw ConfigError("missing " + flag + " (or '" + key + "' in --config)", 0, key);
}

OutageSetup outage_from_config(const KeyValueConfig &cfg)
{
    OutageSetup s;
    s.branches = cfg.has("L") ? cfg.get_ints("L") : std::vector<int>{2};
    s.rhos = cfg.has("rho") ? cfg.get_doubles("rho") : std::vector<double>{0.0};
    if (cfg.has("sigma_G"))
        s.sigmas = cfg.get_doubles("sigma_G");
    if (cfg.has("gamma_th"))
        s.gamma_th = cfg.get_double("gamma_th");
    if (cfg.has("Er_dB"))
        s.er_db = config_grid(cfg, "Er_dB");
    s.schemes = parse_schemes(cfg.has("schemes") ? cfg.get_strings("schemes") : std::vector<std::string>{"all"});
    if (cfg.has("baseline"))
    {
        if (cfg.get_string("baseline") != "single_branch")
            throw ConfigError("line " + std::to_string(cfg.line_of("baseline")) + ": unknown baseline '" +
                                  cfg.get_string("baseline") + "'",
                              cfg.line_of("baseline"), "baseline");
        s.baseline = true;
    }
    if (cfg.has("samples"))
        s.samples = static_cast<std::uint64_t>(cfg.get_double("samples"));
    return s;
}

OutageSetup resolve_outage(const ChannelFlags &f, const CLI::App &cmd)
{
    OutageSetup s;
    if (!f.config.empty())
        s = outage_from_config(KeyValueConfig::load(f.config));
    else
    {
        s.branches = {2};
        s.rhos = {0.0};
        s.schemes = parse_schemes({"all"});
    }
    if (given(cmd, "--L"))
        s.branches = {f.branches};
    if (given(cmd, "--rho"))
        s.rhos = {f.rho};
    if (given(cmd, "--sigma-g"))
        s.sigmas = {f.sigma_g};
    if (given(cmd, "--gamma-th"))
        s.gamma_th = f.gamma_th;
    if (given(cmd, "--er-db"))
        s.er_db = flag_grid(f.er_db, "--er-db");
    if (given(cmd, "--scheme"))
        s.schemes = parse_schemes(split_list(f.schemes));
    if (given(cmd, "--samples"))
        s.samples = f.samples;

    if (s.sigmas.empty())
        missing("--sigma-g", "sigma_G");
    if (s.gamma_th == 0.0)
        missing("--gamma-th", "gamma_th");
    if (s.er_db.empty())
        missing("--er-db", "Er_dB");
    return s;
}

std::vector<double> sigmas_from_config(const KeyValueConfig &cfg)
{
    if (cfg.has("sigma_G"))
        return cfg.get_doubles("sigma_G");
    std::vector<double> out;
    if (cfg.has("sigma2_G"))
        for (double v : cfg.get_doubles("sigma2_G"))
        {
            if (!(v > 0.0))
                throw ConfigError("line " + std::to_string(cfg.line_of("sigma2_G")) + ": sigma2_G must be > 0",
                                  cfg.line_of("sigma2_G"), "sigma2_G");
            out.push_back(std::sqrt(v));
        }
    return out;
}

CdfSetup cdf_from_config(const KeyValueConfig &cfg)
{
    CdfSetup s;
    if (cfg.has("L"))
        s.branches = cfg.get_int("L");
    if (cfg.has("rho"))
        s.rho = cfg.get_double("rho");
    if (cfg.has("mu_G"))
        s.mu_g = cfg.get_double("mu_G");
    s.sigmas = sigmas_from_config(cfg);
    if (cfg.has("y_lg"))
        for (double lg : config_grid(cfg, "y_lg"))
            s.y.push_back(std::pow(10.0, lg));
    if (cfg.has("methods"))
        s.methods = cfg.get_strings("methods");
    return s;
}

CdfSetup resolve_cdf(const ChannelFlags &f, const CLI::App &cmd)
{
    CdfSetup s;
    if (!f.config.empty())
        s = cdf_from_config(KeyValueConfig::load(f.config));
    if (given(cmd, "--L"))
        s.branches = f.branches;
    if (given(cmd, "--rho"))
        s.rho = f.rho;
    if (given(cmd, "--mu-g"))
        s.mu_g = f.mu_g;
    if (given(cmd, "--sigma-g"))
        s.sigmas = {f.sigma_g};
    if (given(cmd, "--y-lg"))
    {
        s.y.clear();
        for (double lg : flag_grid(f.y_lg, "--y-lg"))
            s.y.push_back(std::pow(10.0, lg));
    }
    if (given(cmd, "--method"))
        s.methods = split_list(f.methods);
    if (s.methods.empty())
        s.methods = s.branches == 2 ? std::vector<std::string>{"asym", "fw", "quadrature"}
                                    : std::vector<std::string>{"asym", "fw"};
    if (s.sigmas.empty())
        missing("--sigma-g", "sigma_G");
    if (s.y.empty())
        missing("--y-lg", "y_lg");
    return s;
}

std::string combo_label(int branches, double rho, double sigma)
{
    return "_L" + std::to_string(branches) + "_rho" + short_num(rho) + "_sigmaG" + short_num(sigma);
}

// A closed-form value with its validity annotation.
void set_closed_form(CurvePoint &pt, double v)
{
    if (v > 1.0)
    {
        pt.value = kNaN;
        pt.flag = "above_one";
    }
    else
        pt.value = v;
}

Curve asymptotic_curve(Scheme scheme, const DerivedParams &p, double gamma_th, const std::vector<double> &er_db,
                       const std::string &label)
{
    Curve c{std::string(to_string(scheme)) + "_asym" + label, std::string(to_string(scheme)), "asymptotic", {}};
    for (double db : er_db)
    {
        CurvePoint pt;
        pt.x = db;
        try
        {
            set_closed_form(pt, outage_asym(scheme, p, {gamma_th, db_to_watts(db)}));
        }
        catch (const BelowAsymptoticRegime &)
        {
            pt.value = kNaN;
            pt.flag = "pre_asymptotic";
        }
        c.points.push_back(std::move(pt));
    }
    return c;
}

CurvePoint simulated_point(double db, const SimEstimate &e)
{
    CurvePoint pt;
    pt.x = db;
    pt.value = e.p_hat;
    pt.std_error = e.std_error;
    pt.hits = e.hits;
    pt.trials = e.n;
    pt.ci_low = e.ci_low;
    pt.ci_high = e.ci_high;
    if (e.resolution_exhausted)
    {
        pt.ci_high = e.upper_bound;
        pt.flag = "resolution_exhausted";
    }
    else if (e.low_count)
        pt.flag = "low_count";
    return pt;
}

std::vector<Curve> simulated_curves(const OutageSetup &s, const DerivedParams &p, const SimConfig &cfg,
                                    const std::string &label)
{
    std::vector<double> watts;
    for (double db : s.er_db)
        watts.push_back(db_to_watts(db));
    const auto sweep = sweep_all(p, s.gamma_th, watts, cfg);

    std::vector<Curve> out;
    for (Scheme scheme : s.schemes)
    {
        Curve c{std::string(to_string(scheme)) + "_sim" + label, std::string(to_string(scheme)), "simulation", {}};
        for (std::size_t i = 0; i < s.er_db.size(); ++i)
            c.points.push_back(simulated_point(s.er_db[i], sweep[i][static_cast<int>(scheme)]));
        out.push_back(std::move(c));
    }
    return out;
}

Curve single_branch_curve(double sigma, double gamma_th, const std::vector<double> &er_db)
{
    Curve c{"single_branch_sigmaG" + short_num(sigma), "single", "baseline", {}};
    for (double db : er_db)
        c.points.push_back({db, oracles::single_branch_outage(mu_g_from_power(db_to_watts(db), sigma), sigma, gamma_th),
                            {}, {}, {}, {}, {}, {}});
    return c;
}

CurveSet outage_curves(const OutageSetup &s, bool simulate, std::uint64_t seed)
{
    for (std::size_t i = 1; i < s.er_db.size(); ++i)
        if (!(s.er_db[i] > s.er_db[i - 1]))
            throw ConfigError("Er grid must be strictly increasing");

    CurveSet set;
    set.meta = {{"command", simulate ? "simulate" : "asymptotic"},
                {"L", join(s.branches)},
                {"rho", join(s.rhos)},
                {"sigma_G", join(s.sigmas)},
                {"gamma_th", short_num(s.gamma_th)},
                {"x_unit", "10*lg(Er/1W)"}};
    SimConfig cfg;
    if (simulate)
    {
        cfg.samples = s.samples;
        cfg.batch_size = std::min<std::uint64_t>(cfg.batch_size, std::max<std::uint64_t>(s.samples, 1));
        cfg.validate();
        set.meta.emplace_back("seed", std::to_string(seed));
        set.meta.emplace_back("samples", std::to_string(cfg.samples));
        set.meta.emplace_back("batch_size", std::to_string(cfg.batch_size));
    }

    std::uint64_t combo = 0;
    for (int L : s.branches)
        for (double rho : s.rhos)
            for (double sigma : s.sigmas)
            {
                const DerivedParams p = derive_params({L, rho, sigma, MeanExponent{0.0}});
                const std::string label = combo_label(L, rho, sigma);
                for (Scheme scheme : s.schemes)
                    set.curves.push_back(asymptotic_curve(scheme, p, s.gamma_th, s.er_db, label));
                if (simulate)
                {
                    SimConfig point = cfg;
                    point.seed = rng::substream_seed(seed, combo);
                    for (auto &c : simulated_curves(s, p, point, label))
                        set.curves.push_back(std::move(c));
                }
                ++combo;
            }

    if (s.baseline)
    {
        std::vector<double> seen;
        for (double sigma : s.sigmas)
            if (std::find(seen.begin(), seen.end(), sigma) == seen.end())
            {
                seen.push_back(sigma);
                set.curves.push_back(single_branch_curve(sigma, s.gamma_th, s.er_db));
            }
    }
    return set;
}

double cdf_value(const std::string &method, const CdfSetup &s, double sigma, double y, std::string &flag)
{
    if (method == "fw")
        return fenton_wilkinson_cdf(s.branches, s.rho, s.mu_g, sigma, y);
    if (method == "quadrature")
        return oracles::sum2_cdf_quadrature(s.mu_g, sigma, s.rho, y);
    try
    {
        const double v = sum_lognormal_cdf_asym(s.branches, s.rho, s.mu_g, sigma, y);
        if (v > 1.0)
        {
            flag = "above_one";
            return kNaN;
        }
        return v;
    }
    catch (const BelowAsymptoticRegime &)
    {
        flag = "pre_asymptotic";
        return kNaN;
    }
}

CurveSet cdf_curves(const CdfSetup &s)
{
    for (const auto &m : s.methods)
    {
        if (m != "asym" && m != "fw" && m != "quadrature")
            throw ConfigError("unknown method '" + m + "' (expected fw, asym or quadrature)", 0, "method");
        if (m == "quadrature" && s.branches != 2)
            throw DomainError("quadrature reference is available for L = 2 only");
    }
    for (std::size_t i = 1; i < s.y.size(); ++i)
        if (!(s.y[i] > s.y[i - 1]))
            throw ConfigError("y grid must be strictly increasing");

    CurveSet set;
    set.x_name = "y";
    set.value_name = "cdf";
    std::vector<double> variances;
    for (double sigma : s.sigmas)
        variances.push_back(sigma * sigma);
    set.meta = {{"command", "sumcdf"},
                {"L", std::to_string(s.branches)},
                {"rho", short_num(s.rho)},
                {"mu_G", short_num(s.mu_g)},
                {"sigma2_G", join(variances)}};

    for (double sigma : s.sigmas)
        for (const auto &m : s.methods)
        {
            Curve c{m + "_sigma2G" + short_num(sigma * sigma), m, m == "quadrature" ? "exact" : (m == "fw" ? "baseline" : "asymptotic"), {}};
            for (double y : s.y)
            {
                CurvePoint pt;
                pt.x = y;
                pt.value = cdf_value(m, s, sigma, y, pt.flag);
                c.points.push_back(std::move(pt));
            }
            set.curves.push_back(std::move(c));
        }
    return set;
}

void emit(const std::string &content, const Output &o, std::ostream &out)
{
    if (o.path.empty())
        out << content;
    else
        write_atomic(o.path, content);
}

void emit_curves(const CurveSet &set, const Output &o, std::ostream &out)
{
    emit(o.format == "obj" ? to_json(set) : to_csv(set), o, out);
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int run_verify(const std::string &suites_text, std::uint64_t seed, const Output &o, std::ostream &out)
{
    std::vector<std::string> suites = suites_text == "all" ? verify_suite_names() : split_list(suites_text);
    VerifyOptions opts;
    opts.seed = seed;

    bool ok = true;
    nlohmann::ordered_json report;
    report["seed"] = seed;
    report["suites"] = nlohmann::ordered_json::array();
    std::string csv = "# seed=" + std::to_string(seed) + "\nsuite,check,status,value,threshold,detail\n";
    for (const auto &name : suites)
    {
        const auto results = run_verify_suite(name, opts);
        const bool suite_ok = all_passed(results);
        ok = ok && suite_ok;
        nlohmann::ordered_json js{{"suite", name}, {"passed", suite_ok}, {"checks", nlohmann::ordered_json::array()}};
        for (const auto &r : results)
        {
            const std::string status = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
            csv += r.suite + "," + csv_field(r.name) + "," + status + "," + format_number(r.value) + "," +
                   format_number(r.threshold) + "," + csv_field(r.detail) + "\n";
            js["checks"].push_back({{"name", r.name},
                                    {"status", status},
                                    {"value", r.value},
                                    {"threshold", r.threshold},
                                    {"detail", r.detail}});
        }
        report["suites"].push_back(std::move(js));
    }
    report["passed"] = ok;
    emit(o.format == "obj" ? report.dump(2) + "\n" : csv, o, out);
    return ok ? kOk : kVerifyFailed;
}

std::string_view preset_text(const std::string &name)
{
    if (name == "fig4")
        return presets::fig4;
    if (name == "fig5")
        return presets::fig5;
    if (name == "fig6")
        return presets::fig6;
    if (name == "fig7")
        return presets::fig7;
    throw ConfigError("unknown figure '" + name + "' (expected fig4, fig5, fig6 or fig7)", 0, "figure");
}

CurveSet run_figure(const std::string &name, bool simulate, std::optional<std::uint64_t> samples, std::uint64_t seed)
{
    const KeyValueConfig cfg = KeyValueConfig::parse(preset_text(name));
    CurveSet set;
    if (cfg.get_string("command") == "sumcdf")
        set = cdf_curves(cdf_from_config(cfg));
    else
    {
        OutageSetup s = outage_from_config(cfg);
        if (samples)
            s.samples = *samples;
        set = outage_curves(s, simulate, seed);
    }
    set.meta.insert(set.meta.begin(), {"figure", name});
    return set;
}

void add_output_flags(CLI::App *cmd, Output &o)
{
    cmd->add_option("--out", o.path, "Output file (default: stdout)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "obj"}));
}

void add_channel_flags(CLI::App *cmd, ChannelFlags &f)
{
    cmd->add_option("--L", f.branches, "Branch count")->check(CLI::PositiveNumber);
    cmd->add_option("--rho", f.rho, "Correlation coefficient in [0, 1)");
    cmd->add_option("--sigma-g", f.sigma_g, "dB spread sigma_G (nats)");
    cmd->add_option("--config", f.config, "key = value configuration file");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Outage of SC/EGC/MRC receivers over correlated lognormal fading", "lnfade"};
    app.require_subcommand(1);

    Output o;
    ChannelFlags f;
    std::string seed_text;
    std::string suites = "all";
    std::string figure;
    bool no_sim = false;

    auto *asym = app.add_subcommand("asymptotic", "High-SNR closed-form outage");
    auto *sim = app.add_subcommand("simulate", "Monte Carlo outage with asymptotic overlay");
    for (auto *cmd : {asym, sim})
    {
        add_channel_flags(cmd, f);
        cmd->add_option("--gamma-th", f.gamma_th, "Outage threshold (W)");
        cmd->add_option("--er-db", f.er_db, "Er grid in dB, start:stop:step or list");
        cmd->add_option("--scheme", f.schemes, "sc, egc, mrc or all (comma list)");
        add_output_flags(cmd, o);
    }
    sim->add_option("--samples", f.samples, "Trials per grid point");
    sim->add_option("--seed", seed_text, "Run seed");

    auto *cdf = app.add_subcommand("sumcdf", "CDF of a sum of lognormals");
    add_channel_flags(cdf, f);
    cdf->add_option("--mu-g", f.mu_g, "Mean exponent mu_G (nats)");
    cdf->add_option("--y-lg", f.y_lg, "lg(y) grid, start:stop:step or list");
    cdf->add_option("--method", f.methods, "fw, asym, quadrature (comma list)");
    add_output_flags(cdf, o);

    auto *ver = app.add_subcommand("verify", "Oracle check suites");
    ver->add_option("--suite", suites, "all or a comma list of: lemma, kkt, subset, derivatives, limits");
    ver->add_option("--seed", seed_text, "Sampling seed");
    add_output_flags(ver, o);

    auto *fig = app.add_subcommand("figure", "Preset curve families");
    fig->add_option("name", figure, "fig4, fig5, fig6 or fig7")->required();
    fig->add_flag("--no-sim", no_sim, "Skip the simulated curves");
    fig->add_option("--samples", f.samples, "Trials per grid point");
    fig->add_option("--seed", seed_text, "Run seed");
    add_output_flags(fig, o);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try
    {
        const std::uint64_t seed = seed_text.empty() ? default_seed() : parse_seed(seed_text, "--seed");
        if (*asym)
            emit_curves(outage_curves(resolve_outage(f, *asym), false, seed), o, out);
        else if (*sim)
            emit_curves(outage_curves(resolve_outage(f, *sim), true, seed), o, out);
        else if (*cdf)
            emit_curves(cdf_curves(resolve_cdf(f, *cdf)), o, out);
        else if (*ver)
            return run_verify(suites, seed, o, out);
        else if (*fig)
        {
            std::optional<std::uint64_t> samples;
            if (fig->count("--samples"))
                samples = f.samples;
            emit_curves(run_figure(figure, !no_sim, samples, seed), o, out);
        }
        return kOk;
    }
    catch (const ConfigError &e)
    {
        err << "lnfade: usage error: " << e.what() << "\n";
        return kUsage;
    }
    catch (const DomainError &e)
    {
        err << "lnfade: domain error: " << e.what() << "\n";
        return kDomain;
    }
    catch (const ConvergenceError &e)
    {
        err << "lnfade: numerical failure: " << e.what() << "\n";
        return kDomain;
    }
    catch (const std::exception &e)
    {
        err << "lnfade: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace lnfade::cli
