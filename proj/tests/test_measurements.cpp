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

#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "qcorr/linalg.hpp"
#include "qcorr/measurements.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/stats.hpp"

using namespace qcorr;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

/// Bloch vector of the projector onto the first basis column.
std::array<double, 3> bloch_of_v0(const MeasurementBasis &basis) {
    const CVector v = basis.vectors.col(0);
    const CMatrix p = v * v.adjoint();
    return {2.0 * p(0, 1).real(), -2.0 * p(0, 1).imag(), p(0, 0).real() - p(1, 1).real()};
}

bool same_projector_pair(const MeasurementBasis &a, const MeasurementBasis &b, double tol) {
    const CMatrix pa0 = a.vectors.col(0) * a.vectors.col(0).adjoint();
    const CMatrix pb0 = b.vectors.col(0) * b.vectors.col(0).adjoint();
    const CMatrix pb1 = b.vectors.col(1) * b.vectors.col(1).adjoint();
    const double direct = (pa0 - pb0).cwiseAbs().maxCoeff();
    const double swapped = (pa0 - pb1).cwiseAbs().maxCoeff();
    return std::min(direct, swapped) < tol;
}

} // namespace

TEST_SUITE("measurements") {

TEST_CASE("qubit basis points where its coordinates say") {
    // In this chart the first column sits at polar angle theta and azimuth
    // pi - phi: its Bloch vector is (-sqrt(1-f^2) cos phi, sqrt(1-f^2)
    // sin phi, f). The projector pair it generates is what measurements
    // consume, and the pair at (0, 0) is the x axis, at (0, pi/2) the y axis.
    for (const auto &[f, phi] : std::vector<std::pair<double, double>>{
             {1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {0.0, kPi / 2}, {0.3, 1.2}, {-0.7, 5.9}}) {
        const auto b = bloch_of_v0(qubit_basis({f, phi}));
        const double s = std::sqrt(1.0 - f * f);
        CHECK(std::abs(b[0] + s * std::cos(phi)) < 1e-14);
        CHECK(std::abs(b[1] - s * std::sin(phi)) < 1e-14);
        CHECK(std::abs(b[2] - f) < 1e-14);
    }
    // The z-axis basis is the computational basis itself.
    const MeasurementBasis zb = qubit_basis({1.0, 0.0});
    CHECK((zb.vectors - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("qubit basis rejects out-of-chart coordinates") {
    CHECK_THROWS_AS(qubit_basis({1.0001, 0.0}), OutOfRange);
    CHECK_THROWS_AS(qubit_basis({-1.0001, 0.0}), OutOfRange);
    CHECK_THROWS_AS(qubit_basis({0.0, -0.1}), OutOfRange);
    CHECK_THROWS_AS(qubit_basis({0.0, 2.0 * kPi}), OutOfRange);
}

TEST_CASE("raw qubit basis accepts arbitrary azimuths") {
    const MeasurementBasis wrapped = qubit_basis_raw(0.3, 0.7 + 4.0 * kPi);
    const MeasurementBasis direct = qubit_basis({0.3, 0.7});
    CHECK(same_projector_pair(wrapped, direct, 1e-12));
}

TEST_CASE("random qubit bases are orthonormal and complete") {
    RandomStream s(61);
    for (int i = 0; i < 1000; ++i) {
        const double f = s.uniform(-1.0, 1.0);
        const double phi = s.uniform(0.0, 2.0 * kPi);
        const CMatrix v = qubit_basis({f, phi}).vectors;
        CHECK((v.adjoint() * v - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
        const CMatrix completeness = v.col(0) * v.col(0).adjoint() + v.col(1) * v.col(1).adjoint();
        CHECK((completeness - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("antipodal coordinates give the same projector pair") {
    RandomStream s(62);
    for (int i = 0; i < 200; ++i) {
        const double f = s.uniform(-0.999, 0.999);
        const double phi = s.uniform(0.0, kPi);
        CHECK(same_projector_pair(qubit_basis({f, phi}), qubit_basis({-f, phi + kPi}), 1e-13));
    }
}

TEST_CASE("azimuth circle enumerates equispaced azimuths") {
    const EarmarkedSet set = circle_fixed_ftheta(0.3, 8);
    CHECK(set.kind == SetKind::CircleFixedFTheta);
    CHECK(set.size() == 8);
    REQUIRE(set.points.size() == 8);
    for (int k = 0; k < 8; ++k) {
        CHECK(set.points[k].f_theta == 0.3);
        CHECK(set.points[k].phi == doctest::Approx(2.0 * kPi * k / 8).epsilon(1e-15));
        CHECK(same_projector_pair(set.bases[k], qubit_basis(set.points[k]), 1e-14));
    }
    // On the equator phi and phi + pi give the same projector pair, and the
    // constructor intentionally keeps both copies.
    const EarmarkedSet equator8 = circle_fixed_ftheta(0.0, 8);
    CHECK(same_projector_pair(equator8.bases[0], equator8.bases[4], 1e-13));
    CHECK_FALSE(same_projector_pair(set.bases[0], set.bases[4], 1e-13));
    CHECK_THROWS_AS(circle_fixed_ftheta(0.3, 0), OutOfRange);
    CHECK_THROWS_AS(circle_fixed_ftheta(1.5, 4), OutOfRange);
}

TEST_CASE("meridian circle spans f_theta inclusively") {
    const EarmarkedSet set = circle_fixed_phi(0.5, 5);
    CHECK(set.kind == SetKind::CircleFixedPhi);
    REQUIRE(set.size() == 5);
    const std::vector<double> expect{-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int j = 0; j < 5; ++j) {
        CHECK(set.points[j].f_theta == doctest::Approx(expect[j]).epsilon(1e-15));
        CHECK(set.points[j].phi == 0.5);
    }
    CHECK_THROWS_AS(circle_fixed_phi(0.5, 1), OutOfRange);
}

TEST_CASE("disc stack clamps its layers and degenerates to one circle") {
    CHECK_THROWS_AS(disc_stack(0.0, 4, 2), EvenN2);
    CHECK_THROWS_AS(disc_stack(1.5, 4, 3), OutOfRange);

    const EarmarkedSet stack = disc_stack(0.9, 4, 3);
    CHECK(stack.kind == SetKind::DiscStack);
    REQUIRE(stack.size() == 12);
    // Spacing h = 2/(n2-1) = 1 gives layers {-0.1, 0.9, 1.9 -> 1.0}.
    CHECK(stack.points[0].f_theta == doctest::Approx(-0.1));
    CHECK(stack.points[4].f_theta == doctest::Approx(0.9));
    CHECK(stack.points[8].f_theta == doctest::Approx(1.0));

    const EarmarkedSet single = disc_stack(0.25, 6, 1);
    const EarmarkedSet circle = circle_fixed_ftheta(0.25, 6);
    REQUIRE(single.size() == circle.size());
    for (int k = 0; k < single.size(); ++k)
        CHECK(same_projector_pair(single.bases[k], circle.bases[k], 1e-14));
}

TEST_CASE("sphere grid crosses inclusive f values with equispaced azimuths") {
    const EarmarkedSet grid = sphere_grid(3, 4);
    CHECK(grid.kind == SetKind::SphereGrid);
    REQUIRE(grid.size() == 12);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 4; ++k) {
            const auto &pt = grid.points[i * 4 + k];
            CHECK(pt.f_theta == doctest::Approx(-1.0 + i).epsilon(1e-15));
            CHECK(pt.phi == doctest::Approx(2.0 * kPi * k / 4).epsilon(1e-15));
        }

    // A single-layer grid sits on the equator.
    const EarmarkedSet equator = sphere_grid(1, 5);
    REQUIRE(equator.size() == 5);
    for (const auto &pt : equator.points)
        CHECK(pt.f_theta == 0.0);

    // The 3x4 grid covers all three qubit triad directions.
    const EarmarkedSet axes = triad(2);
    for (const auto &basis : axes.bases) {
        bool found = false;
        for (const auto &gb : grid.bases)
            found = found || same_projector_pair(gb, basis, 1e-13);
        CHECK(found);
    }
}

TEST_CASE("qubit triad is the three pauli eigenbases in x, y, z order") {
    const EarmarkedSet t = triad(2);
    CHECK(t.kind == SetKind::Triad);
    REQUIRE(t.size() == 3);
    REQUIRE(t.points.size() == 3);
    CHECK(t.points[0].f_theta == 1.0);
    CHECK(t.points[0].phi == 0.0);
    CHECK(t.points[1].f_theta == 0.0);
    CHECK(t.points[1].phi == 0.0);
    CHECK(t.points[2].f_theta == 0.0);
    CHECK(t.points[2].phi == doctest::Approx(kPi / 2).epsilon(1e-15));
    for (int k = 0; k < 3; ++k)
        CHECK(same_projector_pair(t.bases[k], qubit_basis(t.points[k]), 1e-14));
}

TEST_CASE("qutrit triad diagonalizes the spin-1 operators") {
    const EarmarkedSet t = triad(3);
    CHECK(t.kind == SetKind::SpinTriad);
    REQUIRE(t.size() == 3);
    CHECK(t.points.empty());

    const double r = 1.0 / std::sqrt(2.0);
    CMatrix sx(3, 3), sy(3, 3), sz(3, 3);
    sx << 0, r, 0, r, 0, r, 0, r, 0;
    sy << 0, Complex(0, -r), 0, Complex(0, r), 0, Complex(0, -r), 0, Complex(0, r), 0;
    sz << 1, 0, 0, 0, 0, 0, 0, 0, -1;
    const std::array<CMatrix, 3> ops{sx, sy, sz};

    for (int k = 0; k < 3; ++k) {
        const CMatrix v = t.bases[k].vectors;
        CHECK((v.adjoint() * v - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-13);
        const CMatrix d = v.adjoint() * ops[k] * v;
        // Off-diagonal entries vanish when v diagonalizes the operator.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j)
                    CHECK(std::abs(d(i, j)) < 1e-13);
        // Spectrum is {-1, 0, 1} in some column order.
        double sum = 0.0, sumsq = 0.0;
        for (int i = 0; i < 3; ++i) {
            sum += d(i, i).real();
            sumsq += d(i, i).real() * d(i, i).real();
        }
        CHECK(std::abs(sum) < 1e-12);
        CHECK(std::abs(sumsq - 2.0) < 1e-12);
        // Phase convention: first nonzero component of each column is
        // real positive.
        for (int j = 0; j < 3; ++j) {
            for (int i = 0; i < 3; ++i) {
                if (std::abs(v(i, j)) > 1e-9) {
                    CHECK(v(i, j).real() > 0.0);
                    CHECK(std::abs(v(i, j).imag()) < 1e-13);
                    break;
                }
            }
        }
    }
    CHECK_THROWS_AS(triad(1), UnsupportedDim);
    CHECK_THROWS_AS(triad(4), UnsupportedDim);
}

TEST_CASE("random bases are unitary, seeded, and haar-distributed") {
    for (int dim : {2, 3, 5}) {
        const MeasurementBasis b = random_basis(dim, 99);
        const CMatrix v = b.vectors;
        CHECK((v.adjoint() * v - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12);
        const MeasurementBasis again = random_basis(dim, 99);
        CHECK((again.vectors - v).cwiseAbs().maxCoeff() == 0.0);
        CHECK((random_basis(dim, 100).vectors - v).cwiseAbs().maxCoeff() > 1e-3);
    }
    CHECK_THROWS_AS(random_basis(1, 5), OutOfRange);

    // For Haar-random qubit bases |<0|v0>|^2 is uniform on [0, 1].
    std::vector<double> overlaps;
    for (int i = 0; i < 2000; ++i)
        overlaps.push_back(std::norm(random_basis(2, 1000 + i).vectors(0, 0)));
    CHECK(ks_uniform_pvalue(std::move(overlaps)) > 1e-3);
}

TEST_CASE("set kind names are stable") {
    CHECK(std::string(set_kind_name(SetKind::CircleFixedFTheta)) == "circle_fixed_ftheta");
    CHECK(std::string(set_kind_name(SetKind::CircleFixedPhi)) == "circle_fixed_phi");
    CHECK(std::string(set_kind_name(SetKind::DiscStack)) == "disc_stack");
    CHECK(std::string(set_kind_name(SetKind::SphereGrid)) == "sphere_grid");
    CHECK(std::string(set_kind_name(SetKind::Triad)) == "triad");
    CHECK(std::string(set_kind_name(SetKind::SpinTriad)) == "spin_triad");
}

} // TEST_SUITE
