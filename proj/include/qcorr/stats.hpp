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
 * Ensemble-scale statistics: voluntary-error samples and their PDFs over
 * random-state families, nested circle-subset scaling sweeps, power-law and
 * linear fits, the (f_theta, phi) optimizer landscape with marked-region
 * fractions, and the supporting test statistics (bootstrap orderings,
 * chi-square and Kolmogorov-Smirnov uniformity checks).
 */

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/measurements.hpp"
#include "qcorr/states.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// Random-state family an ensemble draws from.
enum class EnsembleFamily {
    HaarMixed,  ///< induced-measure fixed-rank states on dA x dB
    Correlator, ///< two-qubit nine-parameter diagonal-correlator family
    Magnetized, ///< two-qubit five-parameter single-axis family
};

/// Keep-all or keep-one-class filter applied after classify_ppt.
enum class PptFilter { All, Ppt, Nppt };

/// Everything needed to reproduce an ensemble draw. The Correlator and
/// Magnetized families are two-qubit by construction; dA, dB and rank apply
/// to HaarMixed only and axis to Magnetized only.
struct EnsembleSpec {
    EnsembleFamily family = EnsembleFamily::HaarMixed;
    int dA = 2;
    int dB = 2;
    int rank = 4;
    Axis axis = Axis::X;
    PptFilter filter = PptFilter::All;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    int jobs = 0; ///< worker threads; 0 = QCORR_JOBS env or hardware count
};

/// Draw ensemble member i. Depends only on (spec fields, i), never on other
/// indices, so any subset can be drawn in any order on any worker.
BipartiteDensityMatrix draw_state(const EnsembleSpec &spec, std::uint64_t sample_index);

/// Resolve a worker count: positive values pass through, otherwise the
/// QCORR_JOBS environment variable, otherwise the hardware thread count.
int resolve_jobs(int jobs);

/// Run fn(i) for every i in [0, count) across `jobs` worker threads. Each
/// index must write only its own outputs; results then never depend on the
/// worker count or scheduling order.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &fn);

/// Uniform-bin probability density estimate; densities integrate to one.
struct BinnedDensity {
    std::vector<double> edges;     ///< bin count + 1 ascending edges
    std::vector<double> densities; ///< one density per bin
};

/// One ensemble member's voluntary error.
struct VeSample {
    std::uint64_t sample_id; ///< index within the ensemble draw
    int rank;                ///< drawn rank (0 for the parametric families)
    PptClass ppt;
    double ve;
};

/// Voluntary error of every ensemble member passing the PPT filter, in
/// sample order. Filtered-out members are skipped entirely.
std::vector<VeSample> sample_ve(const EnsembleSpec &spec, const EarmarkedSet &set,
                                Measure measure, const RefineOptions &opts = {});

/// Aggregated voluntary-error statistics for one (ensemble, set, measure)
/// cell: mean with standard error, the maximum, and a 100-bin PDF on [0, 1].
struct ErrorStats {
    std::size_t samples = 0;
    double mean = 0;
    double std_error = 0;
    double max_ve = 0;
    BinnedDensity histogram;
    int rank = 0;
    PptFilter ppt_class = PptFilter::All;
};

/// Reduce per-sample records to ErrorStats. Throws InsufficientSamples when
/// the records are empty or a PPT-filtered cell holds fewer than 100.
ErrorStats summarize_ve(const std::vector<VeSample> &records, int rank, PptFilter ppt_class);

/// Monte-Carlo estimate of the mean voluntary error over the ensemble.
ErrorStats average_ve(const EnsembleSpec &spec, const EarmarkedSet &set, Measure measure,
                      const RefineOptions &opts = {});

/// Which great-circle family a nested scaling sweep walks.
enum class SweepKind {
    AzimuthCircle,  ///< circle_fixed_ftheta at fixed f_theta
    MeridianCircle, ///< circle_fixed_phi at fixed phi
};

/**
 * Nested circle-subset scaling experiment. The dense circle (n_dense
 * points) is evaluated once per state; each requested n then reads its
 * minimum off the stored values, exploiting that its points are a subset of
 * the dense circle's. Azimuth circles nest when n divides n_dense, meridian
 * circles when n - 1 divides n_dense - 1.
 */
struct SweepSpec {
    SweepKind kind = SweepKind::AzimuthCircle;
    double fixed = 0.0;      ///< f_theta (azimuth) or phi (meridian)
    std::vector<int> n_list; ///< subset sizes, each nesting in n_dense
    int n_dense = 4096;      ///< dense circle; its ve estimates the n -> inf limit
};

/// Per-state nested-sweep results, both measures from the same scan.
struct SweepSample {
    std::uint64_t sample_id;
    int rank;
    PptClass ppt;
    std::vector<double> ve_qd; ///< one entry per n_list element
    std::vector<double> ve_qwd;
    double ve_inf_qd; ///< at the dense circle
    double ve_inf_qwd;
};

/// Run the sweep over the ensemble. Throws OutOfRange when an n_list entry
/// does not nest in n_dense.
std::vector<SweepSample> circle_scaling_sweep(const EnsembleSpec &spec, const SweepSpec &sweep,
                                              const RefineOptions &opts = {});

/// Power-law scaling fit mean_ve(n) = eps_inf + kappa * n^{-tau} with
/// eps_inf held fixed at its dense-circle estimate.
struct PowerLawFit {
    double kappa = 0;
    double tau = 0;
    double eps_inf = 0;
    double kappa_err = 0;
    double tau_err = 0;
    double residual_se = 0; ///< standard error of the log-log residuals
    bool flagged = false;   ///< true when tau_err exceeds tau / 10
};

/**
 * Least squares of log(mean_ve - eps_inf) against log n over (n, mean_ve)
 * points. Needs at least four points; throws NegativeResidual when any
 * mean_ve fails to exceed eps_inf (a noisy limit estimate) and DegenerateFit
 * when the abscissas carry no spread.
 */
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>> &points, double eps_inf);

/// Ordinary least squares line y = m * x + c.
struct LinearFit {
    double m = 0;
    double c = 0;
};

/// Fit a straight line. Needs at least three points; throws DegenerateFit
/// on fewer or on zero abscissa spread.
LinearFit fit_linear(const std::vector<std::pair<double, double>> &points);

/// Fold a qubit direction onto the half chart phi in [0, pi) using the
/// antipodal identification (f, phi) ~ (-f, phi + pi).
QubitProjectorParams fold_to_half_chart(const QubitProjectorParams &p);

/// Where the reference minimization lands across an ensemble, on the folded
/// chart f_theta in [-1, 1] x phi in [0, pi).
struct Landscape {
    std::vector<QubitProjectorParams> optimizers; ///< folded location per state
    int bins_f = 0;
    int bins_phi = 0;
    RMatrix density;                  ///< bins_f x bins_phi joint density
    std::vector<double> f_edges;      ///< bins_f + 1 edges over [-1, 1]
    std::vector<double> phi_edges;    ///< bins_phi + 1 edges over [0, pi]
    std::vector<double> marginal_f;   ///< P1(f_theta) per f bin
    std::vector<double> marginal_phi; ///< P2(phi) per phi bin
};

/// Histogram of reference-minimum locations over the ensemble (dA = 2
/// families only; throws UnsupportedDim otherwise).
Landscape optimizer_landscape(const EnsembleSpec &spec, Measure measure, int bins_f = 40,
                              int bins_phi = 40, const RefineOptions &opts = {});

/// Fractions of optimizers inside the five marked loci (omega = 0.3): the
/// two polar caps f_theta in [-1, -0.9] and [0.9, 1], and discs of radius
/// omega around (0, 0), (0, pi) and (0, pi/2) on the folded chart.
struct RegionFractions {
    std::array<double, 5> region{};
    double total = 0; ///< fraction inside the union of the five
};

/// Count landscape optimizers per region. Throws InsufficientSamples when
/// the landscape holds no points.
RegionFractions region_fractions(const Landscape &landscape);

/// Pearson chi-square p-value of bin counts against a uniform multinomial.
double chi_square_uniform_pvalue(const std::vector<std::size_t> &counts);

/// One-sample Kolmogorov-Smirnov p-value of samples against Uniform[0, 1].
double ks_uniform_pvalue(std::vector<double> samples);

/// Fraction of bootstrap resamples (x and y resampled independently) in
/// which mean(x) exceeds mean(y); a one-sided ordering confidence.
double bootstrap_mean_greater(const std::vector<double> &x, const std::vector<double> &y,
                              int resamples = 1000, std::uint64_t seed = 0);

/// Paired variant: x and y are index-aligned, pairs are resampled jointly
/// and the fraction of resamples with positive mean difference is returned.
double bootstrap_paired_mean_greater(const std::vector<double> &x, const std::vector<double> &y,
                                     int resamples = 1000, std::uint64_t seed = 0);

} // namespace qcorr
