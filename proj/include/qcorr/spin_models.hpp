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

/**
 * @file
 * Spin-model state builders and the finite-size critical-point machinery:
 * periodic transverse-field XY chain ground-state correlators via
 * free-fermion mode sums, the two-site reduced density matrix, scans of
 * dQ/d(lambda) to locate the pseudocritical coupling, power-law fits of
 * its drift with L, and the exact staggered-field two-qubit thermal state.
 */
#pragma once

#include <utility>
#include <vector>

#include "qcorr/states.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// Periodic XY chain in a transverse field with coupling ratio lam = J/h.
struct XYChainParams {
    int L;      ///< number of sites, even and positive
    double g;   ///< anisotropy in [-1, 1]
    double lam; ///< coupling-to-field ratio, > 0
};

/// Two-qubit XY pair with staggered transverse fields at inverse
/// temperature betaJ (in units of the coupling J).
struct ThermalTwoQubitParams {
    double g;
    double h1_over_J;
    double h2_over_J;
    double betaJ;
};

/// Ground-state transverse magnetization and nearest-neighbour correlators.
struct XYCorrelators {
    double m_z;
    double c_xx;
    double c_yy;
    double c_zz;
};

/// One row of a qpt_scan: the coupling, Q, and the centered derivative
/// (one-sided at the grid ends).
struct QptPoint {
    double lam;
    double q;
    double dq_dlam;
};

/// Pseudocritical coupling plus the full scanned curve.
struct QptScan {
    double lambda_cL;
    int peak_index; ///< grid index of the discrete derivative maximum
    std::vector<QptPoint> curve;
};

/// Fitted drift law lambda_cL = 1 + alpha * L^(-gamma), with the standard
/// errors of the log-log least-squares estimates.
struct FiniteSizeFit {
    double alpha;
    double gamma;
    double alpha_err;
    double gamma_err;
};

/**
 * Nearest-neighbour correlators of the finite-L ground state from the
 * even-fermion-parity (antiperiodic momentum) mode sums. Throws OutOfRange
 * on invalid parameters.
 */
XYCorrelators xy_ground_correlators(const XYChainParams &p);

/**
 * Two-site reduced density matrix of neighbouring spins: the X state
 * built from the correlators with both local magnetizations equal to m_z.
 * Throws NotPositive if the correlators do not form a state.
 */
BipartiteDensityMatrix xy_two_site_rdm(const XYChainParams &p);

/**
 * Q(lambda) over a sorted grid (>= 5 points), centered differences, and
 * the derivative-peak location by quadratic interpolation around the
 * discrete maximum. measure selects the triad-constrained discord or work
 * deficit of the two-site state. Throws GridTooCoarse when the discrete
 * maximum sits too close to the grid boundary to interpolate.
 */
QptScan qpt_scan(double g, int L, const std::vector<double> &lambda_grid,
                 Measure measure);

/**
 * Adaptive driver around qpt_scan: re-scans nested 61-point windows,
 * widening when the peak escapes and recentring until the bracketing
 * width is negligible next to the distance from the critical coupling.
 */
double qpt_peak(double g, int L, Measure measure);

/**
 * Least-squares fit of log|lambda_cL - 1| against log L for (L, lambda_cL)
 * pairs. Requires >= 4 points; throws DegenerateFit when a point sits
 * exactly at the critical coupling or too few points are given.
 */
FiniteSizeFit finite_size_fit(const std::vector<std::pair<double, double>> &points);

/// Gibbs-state X parameters of the staggered-field pair, exact in closed
/// form. Throws OutOfRange unless betaJ > 0.
XStateParams thermal_two_qubit(const ThermalTwoQubitParams &p);

} // namespace qcorr
