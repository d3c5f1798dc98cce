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
#include "lnfade/oracles.hpp"

#include "lnfade/errors.hpp"
#include "lnfade/rng.hpp"
#include "lnfade/special_fn.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace lnfade::oracles {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_geometry(double a, int branches, double gamma_th)
{
    if (!(a > 1.0) || !std::isfinite(a))
        throw DegenerateGeometry("oracle geometry needs 1 < a < infinity");
    if (branches < 1)
        throw DomainError("oracle geometry needs L >= 1");
    if (!(std::isfinite(gamma_th) && gamma_th > 0.0))
        throw DomainError("oracle geometry needs gamma_th > 0");
}

double log_sum_exp(std::span<const double> v)
{
    const double m = *std::max_element(v.begin(), v.end());
    if (m == kNegInf)
        return kNegInf;
    double s = 0.0;
    for (double x : v)
        s += std::exp(x - m);
    return m + std::log(s);
}

Eigen::MatrixXd mixing_matrix(int branches, double a)
{
    return (a - 1.0) * Eigen::MatrixXd::Identity(branches, branches) +
           Eigen::MatrixXd::Constant(branches, branches, 1.0);
}

// Full Gauss-Legendre rule on [-1, 1] from Boost's half-rule tables.
template <unsigned N>
void gauss_legendre(std::vector<double> &nodes, std::vector<double> &weights)
{
    using Rule = boost::math::quadrature::gauss<double, N>;
    const auto &abs = Rule::abscissa();
    const auto &wts = Rule::weights();
    nodes.clear();
    weights.clear();
    for (std::size_t i = 0; i < abs.size(); ++i)
    {
        if (abs[i] == 0.0)
        {
            nodes.push_back(0.0);
            weights.push_back(wts[i]);
            continue;
        }
        nodes.push_back(abs[i]);
        weights.push_back(wts[i]);
        nodes.push_back(-abs[i]);
        weights.push_back(wts[i]);
    }
}

} // namespace

double single_branch_outage(double mu_g, double sigma_g, double gamma_th)
{
    if (!(sigma_g > 0.0) || !(gamma_th > 0.0) || !std::isfinite(mu_g))
        throw DomainError("single_branch_outage: invalid arguments");
    return special::gaussian_q((mu_g - 0.5 * std::log(gamma_th)) / sigma_g);
}

double sc_outage_exact_indep(int branches, double mu_g, double sigma_g, double gamma_th)
{
    if (branches < 1)
        throw DomainError("sc_outage_exact_indep: L must be >= 1");
    if (!(sigma_g > 0.0) || !(gamma_th > 0.0) || !std::isfinite(mu_g))
        throw DomainError("sc_outage_exact_indep: invalid arguments");
    const double z = (mu_g - 0.5 * std::log(gamma_th)) / sigma_g;
    return std::exp(branches * special::log_gaussian_q(z));
}

double sum2_cdf_quadrature(double mu_g, double sigma_g, double rho, double y)
{
    if (!std::isfinite(mu_g) || !(std::isfinite(sigma_g) && sigma_g > 0.0))
        throw DomainError("sum2_cdf_quadrature: need finite mu_G and sigma_G > 0");
    if (!(rho >= 0.0 && rho < 1.0))
        throw DomainError("sum2_cdf_quadrature: rho must lie in [0, 1)");
    if (std::isnan(y))
        throw DomainError("sum2_cdf_quadrature: y is NaN");
    if (y <= 0.0)
        return 0.0;
    if (std::isinf(y))
        return 1.0;

    const double ly = std::log(y);
    const double s_cond = sigma_g * std::sqrt(1.0 - rho * rho);
    const double log_norm = -0.5 * kLog2Pi - std::log(sigma_g);

    // ln[ phi(g1) * Pr{G2 <= ln(y - e^{g1}) | g1} ]
    auto log_integrand = [&](double g1) {
        if (g1 >= ly)
            return kNegInf;
        const double z1 = (g1 - mu_g) / sigma_g;
        const double log_rem = ly + std::log(-std::expm1(g1 - ly));
        const double m = mu_g + rho * (g1 - mu_g);
        return log_norm - 0.5 * z1 * z1 + special::log_gaussian_q((m - log_rem) / s_cond);
    };

    const double lo = std::min(ly, mu_g) - 40.0 * sigma_g;
    const double hi = ly;

    // Locate the peak so the integrand can be rescaled to O(1).
    constexpr int kScan = 2000;
    double peak_x = lo;
    double peak = kNegInf;
    for (int i = 0; i <= kScan; ++i)
    {
        const double g = lo + (hi - lo) * i / kScan;
        const double v = log_integrand(g);
        if (v > peak)
        {
            peak = v;
            peak_x = g;
        }
    }
    if (peak == kNegInf)
        return 0.0;

    auto scaled = [&](double g1) { return std::exp(log_integrand(g1) - peak); };
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double err_left = 0.0, err_right = 0.0;
    const double left = peak_x > lo ? GK::integrate(scaled, lo, peak_x, 20, 1e-12, &err_left) : 0.0;
    const double right = peak_x < hi ? GK::integrate(scaled, peak_x, hi, 20, 1e-12, &err_right) : 0.0;

    const double scale = std::exp(peak);
    const double value = scale * (left + right);
    const double error = scale * (err_left + err_right);
    if (!(error <= std::max(1e-14, 1e-10 * value)))
        throw ConvergenceError("sum2_cdf_quadrature: tolerance not reached (estimate " + std::to_string(value) +
                                   ", error " + std::to_string(error) + ")",
                               value, error);
    return std::min(1.0, value);
}

double region_indicator(Scheme scheme, std::span<const double> x, double a, double gamma_th)
{
    if (x.empty())
        throw DomainError("region_indicator: empty x");
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    const double L = static_cast<double>(x.size());
    double acc = scheme == Scheme::SC ? kNegInf : 0.0;
    for (double xl : x)
    {
        const double g = (a - 1.0) * xl + total;
        switch (scheme)
        {
        case Scheme::SC:
            acc = std::max(acc, g);
            break;
        case Scheme::EGC:
            acc += std::exp(g);
            break;
        case Scheme::MRC:
            acc += std::exp(2.0 * g);
            break;
        }
    }
    switch (scheme)
    {
    case Scheme::SC:
        return std::exp(acc) - std::sqrt(gamma_th);
    case Scheme::EGC:
        return acc - std::sqrt(L * gamma_th);
    case Scheme::MRC:
        return acc - gamma_th;
    }
    return 0.0;
}

double hypersphere_indicator(std::span<const double> x, double a, double gamma_th)
{
    const double L = static_cast<double>(x.size());
    const double shift = (L - 1.0 + a) / ((1.0 - a) * (1.0 - a));
    const double centre = std::log(std::sqrt(gamma_th / L)) / (a + L - 1.0) - shift;
    const double radius = shift * std::sqrt(L);
    double s = 0.0;
    for (double xl : x)
        s += (xl - centre) * (xl - centre);
    return s - radius * radius;
}

std::vector<double> nearest_point_closed(Scheme scheme, double a, int branches, double gamma_th)
{
    require_geometry(a, branches, gamma_th);
    const double L = branches;
    double level = 0.5 * std::log(gamma_th);
    if (scheme != Scheme::SC)
        level -= 0.5 * std::log(L);
    return std::vector<double>(static_cast<std::size_t>(branches), level / (a + L - 1.0));
}

namespace {

NearestPointReport nearest_sc(double a, int branches, double gamma_th, double mu_x)
{
    const Eigen::MatrixXd A = mixing_matrix(branches, a);
    const double b = 0.5 * std::log(gamma_th);
    const Eigen::VectorXd mu = Eigen::VectorXd::Constant(branches, mu_x);

    NearestPointReport rep;
    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_x;

    for (unsigned mask = 0; mask < (1u << branches); ++mask)
    {
        std::vector<int> rows;
        for (int l = 0; l < branches; ++l)
            if (mask & (1u << l))
                rows.push_back(l);

        Eigen::VectorXd x = mu;
        Eigen::VectorXd lambda;
        if (!rows.empty())
        {
            Eigen::MatrixXd As(rows.size(), branches);
            for (std::size_t i = 0; i < rows.size(); ++i)
                As.row(static_cast<Eigen::Index>(i)) = A.row(rows[i]);
            const Eigen::VectorXd rhs = As * mu - Eigen::VectorXd::Constant(As.rows(), b);
            lambda = (As * As.transpose()).ldlt().solve(rhs);
            x = mu - As.transpose() * lambda;
            if (lambda.minCoeff() < -1e-12)
                continue;
        }
        const double violation = (A * x).maxCoeff() - b;
        if (violation > 1e-9)
            continue;
        ++rep.starts_converged;
        const double d = (x - mu).norm();
        if (d < best)
        {
            best = d;
            best_x = x;
            rep.max_violation = violation;
        }
    }
    if (best_x.size() == 0)
        throw ConvergenceError("nearest_point_numeric: no feasible KKT point for SC");

    rep.numeric.assign(best_x.data(), best_x.data() + best_x.size());
    const Eigen::VectorXd slack = A * best_x - Eigen::VectorXd::Constant(branches, b);
    for (int l = 0; l < branches; ++l)
        rep.active_constraints.push_back(slack(l) >= -1e-9);
    return rep;
}

// Smooth convex constraint h(x) = ln sum_l exp(k g_l) - ln(threshold).
struct LogSumConstraint
{
    Eigen::MatrixXd A;
    double k;
    double log_threshold;

    double value(const Eigen::VectorXd &x, Eigen::VectorXd *grad, Eigen::MatrixXd *hess) const
    {
        const Eigen::VectorXd kg = k * (A * x);
        std::vector<double> v(kg.data(), kg.data() + kg.size());
        const double lse = log_sum_exp(v);
        if (grad || hess)
        {
            const Eigen::VectorXd w = (kg.array() - lse).exp().matrix();
            if (grad)
                *grad = k * A.transpose() * w;
            if (hess)
            {
                const Eigen::MatrixXd cov = Eigen::MatrixXd(w.asDiagonal()) - w * w.transpose();
                *hess = k * k * A.transpose() * cov * A;
            }
        }
        return lse - log_threshold;
    }
};

NearestPointReport nearest_smooth(Scheme scheme, double a, int branches, double gamma_th, double mu_x)
{
    const double L = branches;
    LogSumConstraint h{mixing_matrix(branches, a), scheme == Scheme::EGC ? 1.0 : 2.0,
                       scheme == Scheme::EGC ? 0.5 * std::log(L * gamma_th) : std::log(gamma_th)};
    const Eigen::VectorXd mu = Eigen::VectorXd::Constant(branches, mu_x);
    const int n = branches;

    auto residual = [&](const Eigen::VectorXd &x, double lambda) {
        Eigen::VectorXd grad;
        const double hv = h.value(x, &grad, nullptr);
        Eigen::VectorXd r(n + 1);
        r.head(n) = x - mu + lambda * grad;
        r(n) = hv;
        return r;
    };

    // 4 symmetric starts at increasing depth, 4 perturbed copies.
    std::vector<Eigen::VectorXd> starts;
    rng::Engine engine = rng::make_engine(0x5EED, static_cast<std::uint64_t>(branches));
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    const double scale = 1.0 + std::abs(mu_x);
    for (double depth : {0.5, 1.0, 2.0, 4.0})
        starts.push_back(mu - Eigen::VectorXd::Constant(n, depth * scale));
    for (int s = 0; s < 4; ++s)
    {
        Eigen::VectorXd x = starts[static_cast<std::size_t>(s)];
        for (int l = 0; l < n; ++l)
            x(l) += jitter(engine) * scale;
        starts.push_back(x);
    }

    NearestPointReport rep;
    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_x;
    for (const Eigen::VectorXd &start : starts)
    {
        Eigen::VectorXd x = start;
        Eigen::VectorXd grad;
        h.value(x, &grad, nullptr);
        double lambda = std::max(1.0, -(x - mu).dot(grad) / grad.squaredNorm());
        Eigen::VectorXd r = residual(x, lambda);
        bool converged = false;
        for (int it = 0; it < 200 && !converged; ++it)
        {
            Eigen::MatrixXd hess;
            h.value(x, &grad, &hess);
            Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n + 1, n + 1);
            J.topLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n) + lambda * hess;
            J.topRightCorner(n, 1) = grad;
            J.bottomLeftCorner(1, n) = grad.transpose();
            const Eigen::VectorXd step = J.fullPivLu().solve(-r);

            double t = 1.0;
            const double r0 = r.norm();
            for (int ls = 0; ls < 60; ++ls, t *= 0.5)
            {
                const Eigen::VectorXd xn = x + t * step.head(n);
                const double ln = lambda + t * step(n);
                const Eigen::VectorXd rn = residual(xn, ln);
                if (rn.norm() < (1.0 - 1e-4 * t) * r0 || ls == 59)
                {
                    x = xn;
                    lambda = ln;
                    r = rn;
                    break;
                }
            }
            converged = r.lpNorm<Eigen::Infinity>() < 1e-13 * scale;
        }
        const double hv = h.value(x, nullptr, nullptr);
        if (!converged || !(lambda > 0.0) || hv > 1e-9)
            continue;
        ++rep.starts_converged;
        const double d = (x - mu).norm();
        if (d < best)
        {
            best = d;
            best_x = x;
            rep.max_violation = hv;
        }
    }
    if (best_x.size() == 0)
        throw ConvergenceError("nearest_point_numeric: no start reached a feasible KKT point");

    rep.numeric.assign(best_x.data(), best_x.data() + best_x.size());
    rep.active_constraints.push_back(std::abs(rep.max_violation) <= 1e-9);
    return rep;
}

} // namespace

NearestPointReport nearest_point_numeric(Scheme scheme, double a, int branches, double gamma_th, double mu_x)
{
    require_geometry(a, branches, gamma_th);
    if (branches > 4)
        throw DomainError("nearest_point_numeric: L <= 4 only");
    if (!std::isfinite(mu_x))
        throw DomainError("nearest_point_numeric: mu_X must be finite");

    NearestPointReport rep =
        scheme == Scheme::SC ? nearest_sc(a, branches, gamma_th, mu_x) : nearest_smooth(scheme, a, branches, gamma_th, mu_x);
    rep.closed_form = nearest_point_closed(scheme, a, branches, gamma_th);
    double gap2 = 0.0;
    for (std::size_t l = 0; l < rep.numeric.size(); ++l)
        gap2 += (rep.numeric[l] - rep.closed_form[l]) * (rep.numeric[l] - rep.closed_form[l]);
    rep.distance_gap = std::sqrt(gap2);
    return rep;
}

std::vector<LemmaPoint> lemma_ratio(const LemmaProbe &probe)
{
    const int L = probe.branches;
    if (L < 1 || L > 4)
        throw DomainError("lemma_ratio: L must lie in 1..4");
    if (static_cast<int>(probe.x0.size()) != L)
        throw DomainError("lemma_ratio: x0 must have L components");
    if (!(probe.eps > 0.0) || !(probe.sigma > 0.0))
        throw DomainError("lemma_ratio: eps and sigma must be > 0");
    for (std::size_t i = 1; i < probe.mu_scale.size(); ++i)
        if (!(probe.mu_scale[i] > probe.mu_scale[i - 1]))
            throw DomainError("lemma_ratio: mu_scale must be strictly increasing");

    std::vector<double> nodes, weights;
    gauss_legendre<30>(nodes, weights);
    const std::size_t q = nodes.size();
    std::size_t total = 1;
    for (int l = 0; l < L; ++l)
        total *= q;

    const double s2 = probe.sigma * probe.sigma;
    const double log_norm = -0.5 * L * (kLog2Pi + std::log(s2));
    std::vector<double> terms(total);
    std::vector<LemmaPoint> out;

    for (double t : probe.mu_scale)
    {
        LemmaPoint pt;
        pt.t = t;

        double d0 = 0.0;
        for (double x : probe.x0)
            d0 += (x - t) * (x - t);
        const double r = std::sqrt(d0) + std::sqrt(static_cast<double>(L)) * probe.eps + probe.eps;
        pt.log_numerator = special::log_reg_gamma_upper(0.5 * L, r * r / (2.0 * s2));

        for (std::size_t idx = 0; idx < total; ++idx)
        {
            std::size_t rest = idx;
            double lt = log_norm;
            for (int l = 0; l < L; ++l)
            {
                const std::size_t i = rest % q;
                rest /= q;
                const double x = probe.x0[static_cast<std::size_t>(l)] + probe.eps * nodes[i];
                lt += std::log(weights[i] * probe.eps) - (x - t) * (x - t) / (2.0 * s2);
            }
            terms[idx] = lt;
        }
        pt.log_denominator = log_sum_exp(terms);
        pt.underflow = pt.log_denominator < -700.0;
        pt.log_ratio = pt.log_numerator - pt.log_denominator;
        pt.ratio = std::exp(pt.log_ratio);
        out.push_back(pt);
    }
    return out;
}

SubsetReport subset_inclusion_check(double a, int branches, double gamma_th, double eps, double mu_x,
                                    std::uint64_t n_samples, std::uint64_t seed, std::span<const int> permutation)
{
    require_geometry(a, branches, gamma_th);
    if (!(eps > 0.0))
        throw DomainError("subset_inclusion_check: eps must be > 0");
    const auto L = static_cast<std::size_t>(branches);
    if (!permutation.empty())
    {
        std::vector<int> sorted(permutation.begin(), permutation.end());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted.size() != L || sorted[i] != static_cast<int>(i))
                throw DomainError("subset_inclusion_check: permutation must be a permutation of 0..L-1");
    }

    const double Ld = branches;
    const double level = 0.5 * std::log(gamma_th);
    const double x_nst = level / (a + Ld - 1.0);
    const double slab = Ld * (a + Ld - 1.0) * eps;
    const double radius2 = Ld * (x_nst - eps - mu_x) * (x_nst - eps - mu_x);

    // Bounding box of the accepted set, valid whenever mu_X exceeds the coordinate mean.
    const double lo = x_nst - Ld * eps - Ld * (Ld - 1.0) * eps / (a - 1.0);
    const double hi = x_nst + (a + Ld - 1.0) * eps / (a - 1.0);

    SubsetReport rep;
    rep.outside_regime = !(mu_x > 10.0 * (std::abs(level) + 1.0));
    rng::Engine engine = rng::make_engine(seed, 0);
    std::uniform_real_distribution<double> uni(lo, hi);
    std::vector<double> raw(L), x(L);

    for (std::uint64_t s = 0; s < n_samples; ++s)
    {
        for (double &v : raw)
            v = uni(engine);
        for (std::size_t l = 0; l < L; ++l)
            x[l] = permutation.empty() ? raw[l] : raw[static_cast<std::size_t>(permutation[l])];
        ++rep.drawn;

        double total = 0.0, dist2 = 0.0;
        for (double v : x)
        {
            total += v;
            dist2 += (v - mu_x) * (v - mu_x);
        }
        if (!(dist2 < radius2))
            continue;
        bool inside = true;
        bool in_slab = true;
        for (double v : x)
        {
            const double g = (a - 1.0) * v + total;
            inside = inside && g < level;
            in_slab = in_slab && g > level - slab;
        }
        if (!inside)
            continue;
        ++rep.accepted;
        rep.violations += in_slab ? 0 : 1;
    }
    rep.inconclusive = rep.accepted < 100;
    return rep;
}

namespace {

// Solves f(x1) = 0 for the first coordinate; f increasing on the bracket.
template <class F>
double solve_first(F f, double lo, double hi)
{
    for (int i = 0; i < 60 && f(lo) > 0.0; ++i)
        lo -= (hi - lo);
    for (int i = 0; i < 60 && f(hi) < 0.0; ++i)
        hi += (hi - lo);
    if (!(f(lo) <= 0.0 && f(hi) >= 0.0))
        throw ConvergenceError("implicit_derivative_check: cannot bracket the surface");
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(
        f, lo, hi, boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits), iters);
    if (iters >= 200)
        throw ConvergenceError("implicit_derivative_check: root solve did not converge");
    return 0.5 * (r.first + r.second);
}

template <class Surface>
SurfaceDerivatives differentiate(Surface x1_of, int branches, double base)
{
    const auto n = static_cast<std::size_t>(branches - 1);
    std::vector<double> rest(n, base);
    auto at = [&](std::size_t m, double dm, std::size_t k, double dk) {
        std::vector<double> r = rest;
        r[m] += dm;
        if (k < n)
            r[k] += dk;
        return x1_of(r);
    };
    const double f0 = x1_of(rest);
    constexpr double h = 1e-4;
    auto richardson = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };

    SurfaceDerivatives d;
    for (std::size_t m = 0; m < n; ++m)
    {
        auto first = [&](double s) { return (at(m, s, n, 0) - at(m, -s, n, 0)) / (2.0 * s); };
        auto second = [&](double s) { return (at(m, s, n, 0) - 2.0 * f0 + at(m, -s, n, 0)) / (s * s); };
        d.first.push_back(richardson(first(h), first(h / 2)));
        d.diagonal.push_back(richardson(second(h), second(h / 2)));
        for (std::size_t k = m + 1; k < n; ++k)
        {
            auto mixed = [&](double s) {
                return (at(m, s, k, s) - at(m, s, k, -s) - at(m, -s, k, s) + at(m, -s, k, -s)) / (4.0 * s * s);
            };
            d.off.push_back(richardson(mixed(h), mixed(h / 2)));
        }
    }
    return d;
}

double worst(const SurfaceDerivatives &d, const DerivativeReport &r)
{
    double e = 0.0;
    for (double v : d.first)
        e = std::max(e, std::abs(v - r.expected_first));
    for (double v : d.diagonal)
        e = std::max(e, std::abs(v - r.expected_diagonal));
    for (double v : d.off)
        e = std::max(e, std::abs(v - r.expected_off));
    return e;
}

} // namespace

DerivativeReport implicit_derivative_check(double a, int branches, double gamma_th)
{
    require_geometry(a, branches, gamma_th);
    if (branches < 2)
        throw DomainError("implicit_derivative_check: needs L >= 2");

    const double L = branches;
    const double x_nst = nearest_point_closed(Scheme::EGC, a, branches, gamma_th)[0];
    const double shift = (L - 1.0 + a) / ((1.0 - a) * (1.0 - a));

    auto full = [](double x1, const std::vector<double> &rest) {
        std::vector<double> x{x1};
        x.insert(x.end(), rest.begin(), rest.end());
        return x;
    };
    const double log_target = 0.5 * std::log(L * gamma_th);
    auto exact = [&](const std::vector<double> &rest) {
        auto f = [&](double x1) {
            const std::vector<double> x = full(x1, rest);
            const double total = std::accumulate(x.begin(), x.end(), 0.0);
            std::vector<double> g;
            for (double v : x)
                g.push_back((a - 1.0) * v + total);
            return log_sum_exp(g) - log_target;
        };
        return solve_first(f, x_nst - 1.0, x_nst + 1.0);
    };
    auto sphere = [&](const std::vector<double> &rest) {
        auto f = [&](double x1) { return hypersphere_indicator(full(x1, rest), a, gamma_th); };
        // The branch through x_nst lies above the centre x_nst - shift.
        return solve_first(f, x_nst - 0.5 * shift, x_nst + shift);
    };

    DerivativeReport rep;
    const double k = (a - 1.0) * (a - 1.0) / (L - 1.0 + a);
    rep.expected_diagonal = -2.0 * k;
    rep.expected_off = -k;
    rep.exact_surface = differentiate(exact, branches, x_nst);
    rep.sphere_surface = differentiate(sphere, branches, x_nst);
    rep.max_error = std::max(worst(rep.exact_surface, rep), worst(rep.sphere_surface, rep));
    return rep;
}

} // namespace lnfade::oracles
