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
 * Quantum discord and quantum work deficit: per-basis evaluation, minima
 * over finite earmarked sets (constrained) and over the full projective
 * measurement manifold (reference), and the voluntary error between them.
 * Measurements always act on subsystem A; use swap_subsystems for the
 * other side.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcorr/measurements.hpp"
#include "qcorr/states.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// Both figures of merit for one measurement basis, in bits.
struct BasisValue {
    double qd;
    double qwd;

    double get(Measure m) const { return m == Measure::QD ? qd : qwd; }
};

/// One outcome of a local projective measurement on subsystem A.
struct PostMeasurementOutcome {
    double p;
    BipartiteDensityMatrix state;
    /// True when p < 1e-12; `state` is then a zero placeholder and the
    /// outcome contributes nothing to downstream entropies.
    bool null_state;
};

/// Result of a constrained or reference minimization.
struct CorrelationEval {
    Measure measure = Measure::QD;
    /// Minimum over the earmarked set, when one was searched.
    std::optional<double> value_constrained;
    /// Minimum over the full measurement manifold, when computed.
    std::optional<double> value_actual;
    /// Lowest index attaining the constrained minimum (ties within 1e-12).
    int optimal_basis_index = -1;
    /// Optimizing direction in the qubit chart, when meaningful.
    std::optional<QubitProjectorParams> optimal_params;
    /// Optimizing basis (columns), populated where the chart does not apply.
    std::optional<CMatrix> optimal_basis;
    /// |value_constrained - value_actual| when both are present.
    std::optional<double> ve;
};

/// Settings for the reference (unconstrained) minimization.
struct RefineOptions {
    int grid_f = 60;    ///< qubit coarse grid: f_theta values over [-1, 1]
    int grid_phi = 120; ///< qubit coarse grid: azimuths over [0, 2*pi)
    int refine_starts = 5;    ///< local refinements seeded from best grid points
    int random_starts = 50;   ///< qutrit Haar-random starts (triad starts added)
    double simplex_tol = 1e-10;        ///< qubit stop: simplex diameter
    double simplex_tol_qutrit = 1e-7;  ///< qutrit stop: simplex diameter
    double value_tol = 1e-14;          ///< stop: objective spread across simplex
    int max_iter = 4000;               ///< per-start iteration cap
    std::uint64_t seed = 1;            ///< seed for the qutrit start draw
};

/**
 * Per-state evaluation engine. Precomputes the spectra-derived constants
 * (S(rho), S(rho_A)) and the B-side blocks of rho so that repeated basis
 * evaluations — grid scans, set sweeps, optimizer inner loops — cost only
 * the per-basis work. Construction validates the state. Methods are const
 * and safe to call concurrently.
 */
class StateContext {
  public:
    explicit StateContext(BipartiteDensityMatrix rho);

    int dA() const { return rho_.dA; }
    int dB() const { return rho_.dB; }
    const BipartiteDensityMatrix &state() const { return rho_; }
    double entropy() const { return entropy_; }
    double entropy_A() const { return entropy_a_; }

    /// Discord and work deficit for one basis (dim must equal dA).
    BasisValue eval(const MeasurementBasis &basis) const;

    /// Fast path for dA = 2: evaluate at (f_theta, phi) without building a
    /// basis object. Accepts any reals; f_theta is clamped to [-1, 1].
    BasisValue eval_qubit(double f_theta, double phi) const;

    double eval(const MeasurementBasis &basis, Measure m) const {
        return eval(basis).get(m);
    }
    double eval_qubit(double f_theta, double phi, Measure m) const {
        return eval_qubit(f_theta, phi).get(m);
    }

  private:
    BipartiteDensityMatrix rho_;
    double entropy_;
    double entropy_a_;
    std::vector<CMatrix> blocks_; // row-major (a, a') B-side blocks
    CMatrix rho_b_;
};

/**
 * Outcome probabilities and conditional states for a rank-1 projective
 * measurement on A: p_k = Tr[(Pi_k (x) I) rho], rho_k the renormalized
 * projection. Outcomes with p_k < 1e-12 carry a null-state marker.
 */
std::vector<PostMeasurementOutcome>
post_measurement_ensemble(const BipartiteDensityMatrix &rho,
                          const MeasurementBasis &basis);

/// S(rho_A) - S(rho_AB) + sum_k p_k S(rho_k) for the given basis, in bits.
double discord_given_basis(const BipartiteDensityMatrix &rho,
                           const MeasurementBasis &basis);

/// S(sum_k p_k rho_k) - S(rho_AB) for the given basis, in bits.
double workdeficit_given_basis(const BipartiteDensityMatrix &rho,
                               const MeasurementBasis &basis);

/**
 * Minimum of the chosen measure over a finite earmarked set. Ties within
 * 1e-12 resolve to the lowest basis index. Throws EmptySet.
 */
CorrelationEval constrained_min(const StateContext &ctx, const EarmarkedSet &set,
                                Measure measure);
CorrelationEval constrained_min(const BipartiteDensityMatrix &rho,
                                const EarmarkedSet &set, Measure measure);

/**
 * Minimum over all rank-1 projective measurements on A. For dA = 2 a coarse
 * (grid_f x grid_phi) scan feeds Nelder-Mead refinements from the best
 * grid points; for dA = 3 Nelder-Mead runs over an eight-angle basis chart
 * from Haar-random and spin-triad starts. Throws UnsupportedDim for dA > 3.
 */
CorrelationEval reference_min(const StateContext &ctx, Measure measure,
                              const RefineOptions &opts = {});
CorrelationEval reference_min(const BipartiteDensityMatrix &rho, Measure measure,
                              const RefineOptions &opts = {});

/// Both reference minima at once; the coarse scan is shared between them.
std::pair<CorrelationEval, CorrelationEval>
reference_min_both(const StateContext &ctx, const RefineOptions &opts = {});

/// The voluntary error |constrained minimum - reference minimum|, in bits.
double voluntary_error(const StateContext &ctx, const EarmarkedSet &set,
                       Measure measure, const RefineOptions &opts = {});
double voluntary_error(const BipartiteDensityMatrix &rho, const EarmarkedSet &set,
                       Measure measure, const RefineOptions &opts = {});

} // namespace qcorr
