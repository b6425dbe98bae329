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
 * Density-matrix constructors and samplers: Haar-uniform fixed-rank mixed
 * states (induced measure), PPT classification, X states, nine-parameter
 * correlator states, and the three bound-entangled families.
 */

#pragma once

#include <cstdint>

#include "qcorr/types.hpp"

namespace qcorr {

/// Two-qubit X state: nonzero entries on the diagonal (a1..a4) and the
/// anti-diagonal (b1 between |00> and |11>, b2 between |01> and |10>).
struct XStateParams {
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0;
    double b1 = 0, b2 = 0;
};

/// Nine-parameter two-qubit state: diagonal correlators c_aa plus local
/// Bloch vectors on both sides.
struct CorrelatorStateParams {
    double c_xx = 0, c_yy = 0, c_zz = 0;
    double cA_x = 0, cA_y = 0, cA_z = 0;
    double cB_x = 0, cB_y = 0, cB_z = 0;
};

/// Check the density-matrix invariants (Hermitian to 1e-12, unit trace to
/// 1e-10, spectrum above -1e-10); throws DimensionMismatch or
/// NonPhysicalOperator.
void validate_state(const BipartiteDensityMatrix &rho);

/// Throws InvalidXState unless the a_i sum to one (1e-12), are nonnegative,
/// and a1*a4 >= b1^2, a2*a3 >= b2^2 (tiny negative slack allowed).
void validate_x_params(const XStateParams &p);

/// Induced-measure random state: partial trace of a Haar-random pure state
/// on a (dA*dB) x rank composite. Identical (seed, sample_index) reproduces
/// the state bit-for-bit. Throws InvalidRank.
BipartiteDensityMatrix sample_haar_mixed(int dA, int dB, int rank, std::uint64_t seed,
                                         std::uint64_t sample_index = 0);

/// PPT iff the partial transpose has spectrum above -1e-10.
PptClass classify_ppt(const BipartiteDensityMatrix &rho);

/// Build the 4x4 X-state matrix from its six parameters (validates first).
BipartiteDensityMatrix make_x_state(const XStateParams &p);

/// Inverse of make_x_state for states with X structure.
XStateParams x_params_of(const BipartiteDensityMatrix &rho);

/// rho = (I + sum_a c_aa s^a x s^a + sum_a cA_a s^a x I + sum_b cB_b I x s^b)/4.
/// Throws NotPositive if the result has an eigenvalue below -1e-10.
BipartiteDensityMatrix make_correlator_state(const CorrelatorStateParams &p);

/// Correlator state whose local Bloch vectors point along a single axis.
BipartiteDensityMatrix make_rho_m(double c_xx, double c_yy, double c_zz, Axis beta_axis,
                                  double mA, double mB);

/// Rejection-sample the five-parameter magnetized family: correlators and
/// both magnetizations uniform in [-1, 1], resampled until positive.
BipartiteDensityMatrix sample_rho_m(Axis beta_axis, std::uint64_t seed,
                                    std::uint64_t sample_index = 0);

/// Rejection-sample the full nine-parameter family (all uniform in [-1, 1]).
BipartiteDensityMatrix sample_correlator_state(std::uint64_t seed,
                                               std::uint64_t sample_index = 0);

/// 2x4 bound-entangled family, PPT for every b in [0, 1]. Throws OutOfRange.
BipartiteDensityMatrix be_2x4(double b);

/// 3x3 bound-entangled "tiles" family, PPT for every a in [0, 1]; the state
/// is asymmetric under exchange of the subsystems. Throws OutOfRange.
BipartiteDensityMatrix be_3x3_tiles(double a);

/// 3x3 one-parameter family interpolating through bound entanglement:
/// separable for alpha <= 3, bound entangled on (3, 4], distillable on
/// (4, 5]. Both marginals are maximally mixed. Throws OutOfRange.
BipartiteDensityMatrix be_3x3_horodecki(double alpha);

/// Exchange the two subsystems: (a,b) indices become (b,a), dims swap.
BipartiteDensityMatrix swap_subsystems(const BipartiteDensityMatrix &rho);

} // namespace qcorr
