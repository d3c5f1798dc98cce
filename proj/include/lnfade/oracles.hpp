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

// Ground-truth computations used to check the closed forms: exact special cases,
// numerical integration, constrained nearest-point search, and numeric probes of the
// geometric facts the asymptotic forms rely on.
//
// Nothing here calls into the asymptotics module; only special functions are shared.

#include "lnfade/channel.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lnfade::oracles {

/// Exact SC outage over independent branches: Q((mu_G - ln sqrt(gamma_th)) / sigma_G)^L.
double sc_outage_exact_indep(int branches, double mu_g, double sigma_g, double gamma_th);

/// Single-branch outage Pr{e^{2G} < gamma_th} for G ~ N(mu_G, sigma_G^2).
double single_branch_outage(double mu_g, double sigma_g, double gamma_th);

/// Pr{e^{G1} + e^{G2} <= y} for a bivariate normal pair with common (mu_G, sigma_G) and
/// correlation rho in [0, 1), by adaptive Gauss-Kronrod over g1 of the conditional CDF of G2.
/// Throws ConvergenceError carrying the estimate and error bound if the tolerance is missed.
double sum2_cdf_quadrature(double mu_g, double sigma_g, double rho, double y);

/// Outage-region functional of the latent vector x: <= 0 inside the region.
///   SC:  max_l e^{g_l} - sqrt(gamma_th)
///   EGC: sum_l e^{g_l} - sqrt(L gamma_th)
///   MRC: sum_l e^{2 g_l} - gamma_th
/// with g_l = a x_l + sum_{k != l} x_k.
double region_indicator(Scheme scheme, std::span<const double> x, double a, double gamma_th);

/// Hypersphere stand-in for the EGC region (MRC: pass gamma_th^2 / L). <= 0 inside.
double hypersphere_indicator(std::span<const double> x, double a, double gamma_th);

std::vector<double> nearest_point_closed(Scheme scheme, double a, int branches, double gamma_th);

struct NearestPointReport
{
    std::vector<double> closed_form;
    std::vector<double> numeric;
    double distance_gap = 0.0;        // |closed_form - numeric|
    double max_violation = 0.0;       // largest constraint value at `numeric` (log scale)
    std::vector<bool> active_constraints;
    int starts_converged = 0;
};

/// Minimizes |x - mu_X 1|^2 over the outage region. SC (L linear constraints) by exhaustive
/// active-set enumeration; EGC/MRC (one smooth convex constraint) by damped Newton on the
/// KKT system from 8 starts. Throws ConvergenceError if no start reaches a feasible point.
NearestPointReport nearest_point_numeric(Scheme scheme, double a, int branches, double gamma_th, double mu_x);

struct LemmaProbe
{
    int branches = 2;
    double sigma = 1.0;
    std::vector<double> x0;       // size L
    double eps = 0.1;
    std::vector<double> mu_scale; // mu = t 1 for each t, strictly increasing
};

struct LemmaPoint
{
    double t = 0.0;
    double log_numerator = 0.0;   // ln Pr{|x - mu| > |x0 - mu| + sqrt(L) eps + eps}
    double log_denominator = 0.0; // ln Pr{x in hypercube of half-width eps around x0}
    double log_ratio = 0.0;
    double ratio = 0.0;
    bool underflow = false;       // denominator below e^-700
};

/// Tail-ball vs hypercube probability ratio along mu = t 1. The hypercube integral uses a
/// tensor Gauss-Legendre rule accumulated in log space.
std::vector<LemmaPoint> lemma_ratio(const LemmaProbe &probe);

struct SubsetReport
{
    std::uint64_t drawn = 0;
    std::uint64_t accepted = 0;
    std::uint64_t violations = 0;
    bool inconclusive = false;   // fewer than 100 accepted samples
    bool outside_regime = false; // mu_X <= 10 (|ln sqrt(gamma_th)| + 1)
};

/// Rejection-samples the set {g_l < ln sqrt(gamma_th) for all l, |x - mu_X 1| < |x0 - mu_X 1|},
/// x0 = x_nst - eps 1, and counts samples outside the slab
/// {ln sqrt(gamma_th) - L (a + L - 1) eps < g_l < ln sqrt(gamma_th)}. A non-empty
/// `permutation` relabels coordinates before both tests.
SubsetReport subset_inclusion_check(double a, int branches, double gamma_th, double eps, double mu_x,
                                    std::uint64_t n_samples, std::uint64_t seed,
                                    std::span<const int> permutation = {});

struct SurfaceDerivatives
{
    std::vector<double> first;    // d x1 / d x_m, m = 2..L
    std::vector<double> diagonal; // d^2 x1 / d x_m^2
    std::vector<double> off;      // d^2 x1 / d x_m d x_n, m < n (empty for L = 2)
};

struct DerivativeReport
{
    SurfaceDerivatives exact_surface;  // Phi_EGC = 0
    SurfaceDerivatives sphere_surface; // hypersphere = 0
    double expected_first = -1.0;
    double expected_diagonal = 0.0;    // -2 (a - 1)^2 / (L - 1 + a)
    double expected_off = 0.0;         // -(a - 1)^2 / (L - 1 + a)
    double max_error = 0.0;
};

/// Implicit derivatives of x1(x2..xL) on both EGC boundary surfaces at x_nst, by central
/// differences (h = 1e-4) with one Richardson step. Requires a > 1, L >= 2.
DerivativeReport implicit_derivative_check(double a, int branches, double gamma_th);

} // namespace lnfade::oracles
