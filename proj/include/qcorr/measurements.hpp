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
 * Rank-1 local projective measurements: the two-parameter qubit family,
 * finite "earmarked" collections built from it (circles, disc stacks and
 * sphere grids on the Bloch sphere), spin-operator triads for qubits and
 * qutrits, and Haar-random bases for multi-start optimization.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "qcorr/types.hpp"

namespace qcorr {

/**
 * Coordinates of a qubit measurement direction: f_theta = cos(theta) in
 * [-1, 1] and azimuth phi in [0, 2*pi). Antipodal points (f, phi) and
 * (-f, phi + pi) describe the same projector pair.
 */
struct QubitProjectorParams {
    double f_theta;
    double phi;
};

/// A complete orthonormal basis; column j of `vectors` is the j-th vector.
struct MeasurementBasis {
    CMatrix vectors;

    int dim() const { return static_cast<int>(vectors.rows()); }
};

/// Construction recipe tags for the finite measurement collections below.
enum class SetKind {
    CircleFixedFTheta,
    CircleFixedPhi,
    DiscStack,
    SphereGrid,
    Triad,
    SpinTriad,
};

/**
 * A finite collection of measurement bases together with its construction
 * metadata. For qubit collections `points` holds the (f_theta, phi)
 * coordinates of each basis in order; for the qutrit triad it is empty.
 */
struct EarmarkedSet {
    SetKind kind;
    std::vector<double> params;
    std::vector<QubitProjectorParams> points;
    std::vector<MeasurementBasis> bases;

    int size() const { return static_cast<int>(bases.size()); }
};

/// Serialization name of a set kind ("circle_fixed_ftheta", ...).
const char *set_kind_name(SetKind kind);

/**
 * The qubit basis {U|0>, U|1>} at theta = arccos(f_theta) and azimuth phi,
 * with columns
 *   v0 = (cos(theta/2), -sin(theta/2) e^{-i phi}),
 *   v1 = (sin(theta/2) e^{i phi},  cos(theta/2)).
 * Throws OutOfRange unless f_theta is in [-1, 1] and phi in [0, 2*pi).
 */
MeasurementBasis qubit_basis(const QubitProjectorParams &p);

/**
 * As qubit_basis but without range checks; used by optimizers that fold
 * arbitrary angles back onto the sphere themselves.
 */
MeasurementBasis qubit_basis_raw(double f_theta, double phi);

/**
 * Equatorial-style circle: n bases at phi_k = 2*pi*k/n, k = 0..n-1, all at
 * the given f_theta. Duplicate projector pairs (phi and phi + pi) are kept.
 */
EarmarkedSet circle_fixed_ftheta(double f_theta, int n);

/**
 * Meridian-style circle: n bases at f_theta_j = -1 + 2j/(n-1), j = 0..n-1
 * (endpoints included), all at the given phi. Requires n >= 2.
 */
EarmarkedSet circle_fixed_phi(double phi, int n);

/**
 * A stack of n2 circles (n2 odd) centered on f_center with spacing
 * h = 2/(n2-1), clamped to [-1, 1], each carrying n1 equispaced azimuths.
 * n2 = 1 reduces to circle_fixed_ftheta(f_center, n1). Throws EvenN2.
 */
EarmarkedSet disc_stack(double f_center, int n1, int n2);

/**
 * Regular product grid over the sphere: n1 values of f_theta spanning
 * [-1, 1] inclusive (the single value 0 when n1 = 1) crossed with n2
 * azimuths phi_k = 2*pi*k/n2.
 */
EarmarkedSet sphere_grid(int n1, int n2);

/**
 * The Cartesian spin triad: for dim = 2 the three Pauli eigenbases, for
 * dim = 3 the eigenbases of the spin-1 operators S^x, S^y, S^z with each
 * eigenvector's first nonzero component made real positive. Throws
 * UnsupportedDim otherwise.
 */
EarmarkedSet triad(int dim);

/// Haar-random orthonormal basis, deterministic under the seed. dim >= 2.
MeasurementBasis random_basis(int dim, std::uint64_t seed);

} // namespace qcorr
