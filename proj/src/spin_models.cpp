// Copyright 2026 The qcorr Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/spin_models.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/closed_forms.hpp"
#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

void check_xy_params(const XYChainParams &p) {
    if (p.L < 2 || p.L % 2 != 0)
        throw OutOfRange("chain length must be even and positive");
    if (!(p.g >= -1.0 && p.g <= 1.0))
        throw OutOfRange("anisotropy must lie in [-1, 1]");
    if (!(p.lam > 0.0))
        throw OutOfRange("coupling ratio must be positive");
}

/// Static correlator G(r) = -(1/L) sum_k [cos(kr) xi_k + sin(kr) Delta_k] / eps_k
/// over the antiperiodic momenta k = (2m+1) pi / L.
struct ModeSums {
    std::vector<double> xi, delta, eps, k;

    explicit ModeSums(const XYChainParams &p) {
        const int L = p.L;
        xi.resize(L);
        delta.resize(L);
        eps.resize(L);
        k.resize(L);
        for (int m = 0; m < L; ++m) {
            k[m] = (2 * m + 1) * kPi / L;
            xi[m] = 2.0 * p.lam * std::cos(k[m]) - 2.0;
            delta[m] = 2.0 * p.lam * p.g * std::sin(k[m]);
            eps[m] = std::hypot(xi[m], delta[m]);
        }
    }

    double g(double r) const {
        double sum = 0.0;
        for (std::size_t m = 0; m < k.size(); ++m)
            sum += (std::cos(k[m] * r) * xi[m] + std::sin(k[m] * r) * delta[m]) /
                   eps[m];
        return -sum / static_cast<double>(k.size());
    }
};

double scan_q(double g, int L, double lam, Measure measure) {
    const XStateParams p =
        x_params_of(xy_two_site_rdm(XYChainParams{L, g, lam}));
    return measure == Measure::QD ? x_state_cqd(p) : x_state_cqwd(p);
}

/// Vertex abscissa of the parabola through three points; x1 on ties.
double parabola_vertex(double x0, double y0, double x1, double y1, double x2,
                       double y2) {
    const double num =
        (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
    const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
    if (den == 0.0)
        return x1;
    return x1 - 0.5 * num / den;
}

} // namespace

XYCorrelators xy_ground_correlators(const XYChainParams &p) {
    check_xy_params(p);
    const ModeSums modes(p);
    const double g0 = modes.g(0.0);
    const double g1 = modes.g(1.0);
    const double gm1 = modes.g(-1.0);
    XYCorrelators c;
    c.m_z = -g0;
    c.c_xx = g1;
    c.c_yy = gm1;
    c.c_zz = c.m_z * c.m_z - g1 * gm1;
    return c;
}

BipartiteDensityMatrix xy_two_site_rdm(const XYChainParams &p) {
    const XYCorrelators c = xy_ground_correlators(p);
    CorrelatorStateParams cp;
    cp.c_xx = c.c_xx;
    cp.c_yy = c.c_yy;
    cp.c_zz = c.c_zz;
    cp.cA_z = c.m_z;
    cp.cB_z = c.m_z;
    return make_correlator_state(cp);
}

QptScan qpt_scan(double g, int L, const std::vector<double> &lambda_grid,
                 Measure measure) {
    const int n = static_cast<int>(lambda_grid.size());
    if (n < 5)
        throw OutOfRange("qpt_scan requires at least 5 grid points");
    if (!std::is_sorted(lambda_grid.begin(), lambda_grid.end()))
        throw OutOfRange("qpt_scan requires a sorted grid");

    QptScan out;
    out.curve.resize(n);
    for (int i = 0; i < n; ++i) {
        out.curve[i].lam = lambda_grid[i];
        out.curve[i].q = scan_q(g, L, lambda_grid[i], measure);
    }
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - 1);
        const int hi = std::min(n - 1, i + 1);
        out.curve[i].dq_dlam = (out.curve[hi].q - out.curve[lo].q) /
                               (out.curve[hi].lam - out.curve[lo].lam);
    }

    int peak = 1;
    for (int i = 2; i <= n - 2; ++i)
        if (out.curve[i].dq_dlam > out.curve[peak].dq_dlam)
            peak = i;
    if (peak <= 1 || peak >= n - 2)
        throw GridTooCoarse("derivative maximum sits at the grid boundary");
    out.peak_index = peak;
    out.lambda_cL = parabola_vertex(
        out.curve[peak - 1].lam, out.curve[peak - 1].dq_dlam,
        out.curve[peak].lam, out.curve[peak].dq_dlam,
        out.curve[peak + 1].lam, out.curve[peak + 1].dq_dlam);
    return out;
}

double qpt_peak(double g, int L, Measure measure) {
    double lo = 0.9, hi = 1.2;
    const int npts = 61;
    double center = 1.0;
    for (int it = 0; it < 9; ++it) {
        std::vector<double> grid(npts);
        for (int i = 0; i < npts; ++i)
            grid[i] = lo + (hi - lo) * i / (npts - 1);
        QptScan scan;
        try {
            scan = qpt_scan(g, L, grid, measure);
        } catch (const GridTooCoarse &) {
            const double w = hi - lo;
            lo -= w;
            hi += w;
            continue;
        }
        center = scan.lambda_cL;
        const double w =
            grid[scan.peak_index + 1] - grid[scan.peak_index - 1];
        if (w < 1e-7 * std::max(1e-4, std::abs(center - 1.0)) || w < 1e-11)
            return center;
        lo = center - w;
        hi = center + w;
    }
    return center;
}

FiniteSizeFit finite_size_fit(
    const std::vector<std::pair<double, double>> &points) {
    const int n = static_cast<int>(points.size());
    if (n < 4)
        throw DegenerateFit("finite-size fit needs at least 4 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        const double dev = std::abs(points[i].second - 1.0);
        if (dev == 0.0)
            throw DegenerateFit("a point sits exactly at the critical coupling");
        xs[i] = std::log(points[i].first);
        ys[i] = std::log(dev);
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    if (det <= 0.0)
        throw DegenerateFit("degenerate abscissas in finite-size fit");
    const double slope = (n * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / n;
    double ssr = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        ssr += r * r;
    }
    const double s2 = n > 2 ? ssr / (n - 2) : 0.0;
    const double var_slope = s2 * n / det;
    const double var_intercept = s2 * sxx / det;
    FiniteSizeFit fit;
    fit.gamma = -slope;
    fit.alpha = std::exp(intercept);
    fit.gamma_err = std::sqrt(var_slope);
    fit.alpha_err = fit.alpha * std::sqrt(var_intercept);
    return fit;
}

XStateParams thermal_two_qubit(const ThermalTwoQubitParams &p) {
    if (!(p.betaJ > 0.0))
        throw OutOfRange("betaJ must be positive");
    const double s_plus = p.h1_over_J + p.h2_over_J;
    const double s_minus = p.h2_over_J - p.h1_over_J;
    const double h_plus = std::sqrt(4.0 * p.g * p.g + s_plus * s_plus);
    const double h_minus = std::sqrt(4.0 + s_minus * s_minus);
    const double u = std::cosh(p.betaJ * h_plus) + std::cosh(p.betaJ * h_minus);
    // sinh(beta J h) / h, continued through h -> 0.
    const double t_plus =
        h_plus > 1e-12 ? std::sinh(p.betaJ * h_plus) / h_plus : p.betaJ;
    const double t_minus = std::sinh(p.betaJ * h_minus) / h_minus;
    XStateParams x;
    x.a1 = (std::cosh(p.betaJ * h_plus) - s_plus * t_plus) / (2.0 * u);
    x.a4 = (std::cosh(p.betaJ * h_plus) + s_plus * t_plus) / (2.0 * u);
    x.a2 = (std::cosh(p.betaJ * h_minus) + s_minus * t_minus) / (2.0 * u);
    x.a3 = (std::cosh(p.betaJ * h_minus) - s_minus * t_minus) / (2.0 * u);
    x.b1 = -p.g * t_plus / u;
    x.b2 = -t_minus / u;
    return x;
}

} // namespace qcorr
