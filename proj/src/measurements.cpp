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

#include "qcorr/measurements.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Make the first component of magnitude above tol real positive.
void fix_phase(Eigen::Ref<CVector> v, double tol = 1e-12) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > tol) {
            v *= std::conj(v(i)) / mag;
            return;
        }
    }
}

/// Eigenbasis of a Hermitian operator, phase-fixed column by column.
MeasurementBasis phase_fixed_eigenbasis(const CMatrix &op) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(op);
    CMatrix vecs = solver.eigenvectors();
    for (Eigen::Index j = 0; j < vecs.cols(); ++j)
        fix_phase(vecs.col(j));
    return MeasurementBasis{std::move(vecs)};
}

EarmarkedSet from_points(SetKind kind, std::vector<double> params,
                         std::vector<QubitProjectorParams> points) {
    EarmarkedSet set;
    set.kind = kind;
    set.params = std::move(params);
    set.points = std::move(points);
    set.bases.reserve(set.points.size());
    for (const auto &p : set.points)
        set.bases.push_back(qubit_basis_raw(p.f_theta, p.phi));
    return set;
}

} // namespace

const char *set_kind_name(SetKind kind) {
    switch (kind) {
    case SetKind::CircleFixedFTheta:
        return "circle_fixed_ftheta";
    case SetKind::CircleFixedPhi:
        return "circle_fixed_phi";
    case SetKind::DiscStack:
        return "disc_stack";
    case SetKind::SphereGrid:
        return "sphere_grid";
    case SetKind::Triad:
        return "triad";
    default:
        return "spin_triad";
    }
}

MeasurementBasis qubit_basis(const QubitProjectorParams &p) {
    if (!(p.f_theta >= -1.0 && p.f_theta <= 1.0))
        throw OutOfRange("f_theta must lie in [-1, 1]");
    if (!(p.phi >= 0.0 && p.phi < kTwoPi))
        throw OutOfRange("phi must lie in [0, 2*pi)");
    return qubit_basis_raw(p.f_theta, p.phi);
}

MeasurementBasis qubit_basis_raw(double f_theta, double phi) {
    // Half-angle forms of theta = arccos(f_theta).
    const double c = std::sqrt(0.5 * (1.0 + f_theta));
    const double s = std::sqrt(0.5 * (1.0 - f_theta));
    const Complex e(std::cos(phi), std::sin(phi));
    CMatrix vecs(2, 2);
    vecs(0, 0) = c;
    vecs(1, 0) = -s * std::conj(e);
    vecs(0, 1) = s * e;
    vecs(1, 1) = c;
    return MeasurementBasis{std::move(vecs)};
}

EarmarkedSet circle_fixed_ftheta(double f_theta, int n) {
    if (n < 1)
        throw OutOfRange("circle_fixed_ftheta requires n >= 1");
    if (!(f_theta >= -1.0 && f_theta <= 1.0))
        throw OutOfRange("f_theta must lie in [-1, 1]");
    std::vector<QubitProjectorParams> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k)
        pts.push_back({f_theta, kTwoPi * k / n});
    return from_points(SetKind::CircleFixedFTheta,
                       {f_theta, static_cast<double>(n)}, std::move(pts));
}

EarmarkedSet circle_fixed_phi(double phi, int n) {
    if (n < 2)
        throw OutOfRange("circle_fixed_phi requires n >= 2");
    if (!(phi >= 0.0 && phi < kTwoPi))
        throw OutOfRange("phi must lie in [0, 2*pi)");
    std::vector<QubitProjectorParams> pts;
    pts.reserve(n);
    for (int j = 0; j < n; ++j)
        pts.push_back({-1.0 + 2.0 * j / (n - 1), phi});
    return from_points(SetKind::CircleFixedPhi, {phi, static_cast<double>(n)},
                       std::move(pts));
}

EarmarkedSet disc_stack(double f_center, int n1, int n2) {
    if (n2 % 2 == 0)
        throw EvenN2("disc_stack requires odd n2");
    if (n1 < 1 || n2 < 1)
        throw OutOfRange("disc_stack requires n1 >= 1 and n2 >= 1");
    if (!(f_center >= -1.0 && f_center <= 1.0))
        throw OutOfRange("f_center must lie in [-1, 1]");
    const int m = (n2 - 1) / 2;
    const double h = n2 > 1 ? 2.0 / (n2 - 1) : 0.0;
    std::vector<QubitProjectorParams> pts;
    pts.reserve(static_cast<std::size_t>(n1) * n2);
    for (int j = -m; j <= m; ++j) {
        const double f = std::clamp(f_center + j * h, -1.0, 1.0);
        for (int k = 0; k < n1; ++k)
            pts.push_back({f, kTwoPi * k / n1});
    }
    return from_points(
        SetKind::DiscStack,
        {f_center, static_cast<double>(n1), static_cast<double>(n2)},
        std::move(pts));
}

EarmarkedSet sphere_grid(int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw OutOfRange("sphere_grid requires n1 >= 1 and n2 >= 1");
    std::vector<QubitProjectorParams> pts;
    pts.reserve(static_cast<std::size_t>(n1) * n2);
    for (int j = 0; j < n1; ++j) {
        const double f = n1 > 1 ? -1.0 + 2.0 * j / (n1 - 1) : 0.0;
        for (int k = 0; k < n2; ++k)
            pts.push_back({f, kTwoPi * k / n2});
    }
    return from_points(SetKind::SphereGrid,
                       {static_cast<double>(n1), static_cast<double>(n2)},
                       std::move(pts));
}

EarmarkedSet triad(int dim) {
    if (dim == 2) {
        // Eigenbases of sigma^z, sigma^x, sigma^y in the qubit chart.
        return from_points(SetKind::Triad, {},
                           {{1.0, 0.0}, {0.0, 0.0}, {0.0, kTwoPi / 4.0}});
    }
    if (dim == 3) {
        const double r = 1.0 / std::sqrt(2.0);
        CMatrix sx = CMatrix::Zero(3, 3);
        sx(0, 1) = sx(1, 0) = sx(1, 2) = sx(2, 1) = r;
        CMatrix sy = CMatrix::Zero(3, 3);
        sy(0, 1) = sy(1, 2) = Complex(0, -r);
        sy(1, 0) = sy(2, 1) = Complex(0, r);
        CMatrix sz = CMatrix::Zero(3, 3);
        sz(0, 0) = 1;
        sz(2, 2) = -1;
        EarmarkedSet set;
        set.kind = SetKind::SpinTriad;
        set.bases = {phase_fixed_eigenbasis(sx), phase_fixed_eigenbasis(sy),
                     phase_fixed_eigenbasis(sz)};
        return set;
    }
    throw UnsupportedDim("triad is defined for dim 2 and 3 only");
}

MeasurementBasis random_basis(int dim, std::uint64_t seed) {
    if (dim < 2)
        throw OutOfRange("random_basis requires dim >= 2");
    RandomStream stream(seed);
    return MeasurementBasis{haar_unitary(dim, stream)};
}

} // namespace qcorr
