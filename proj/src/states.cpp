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

#include "qcorr/states.hpp"

#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

const CMatrix &pauli(Axis axis) {
    static const CMatrix sx = [] {
        CMatrix m(2, 2);
        m << 0, 1, 1, 0;
        return m;
    }();
    static const CMatrix sy = [] {
        CMatrix m(2, 2);
        m << 0, Complex(0, -1), Complex(0, 1), 0;
        return m;
    }();
    static const CMatrix sz = [] {
        CMatrix m(2, 2);
        m << 1, 0, 0, -1;
        return m;
    }();
    switch (axis) {
    case Axis::X:
        return sx;
    case Axis::Y:
        return sy;
    default:
        return sz;
    }
}

CMatrix correlator_matrix(const CorrelatorStateParams &p) {
    const CMatrix id = CMatrix::Identity(2, 2);
    const double cc[3] = {p.c_xx, p.c_yy, p.c_zz};
    const double ca[3] = {p.cA_x, p.cA_y, p.cA_z};
    const double cb[3] = {p.cB_x, p.cB_y, p.cB_z};
    CMatrix m = tensor_product(id, id);
    const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
    for (int i = 0; i < 3; ++i) {
        const CMatrix &s = pauli(axes[i]);
        m += cc[i] * tensor_product(s, s);
        m += ca[i] * tensor_product(s, id);
        m += cb[i] * tensor_product(id, s);
    }
    return m / 4.0;
}

} // namespace

void validate_state(const BipartiteDensityMatrix &rho) {
    if (rho.dA < 1 || rho.dB < 1 || rho.m.rows() != rho.dim() || rho.m.cols() != rho.dim())
        throw DimensionMismatch("state matrix size does not equal dA*dB");
    if (!is_hermitian(rho.m, 1e-12))
        throw NonPhysicalOperator("state is not Hermitian within 1e-12");
    if (std::abs(std::real(rho.m.trace()) - 1.0) > 1e-10)
        throw NonPhysicalOperator("state trace deviates from 1 by more than 1e-10");
    if (min_eigenvalue(rho.m) < kPsdTol)
        throw NonPhysicalOperator("state has an eigenvalue below -1e-10");
}

void validate_x_params(const XStateParams &p) {
    const double sum = p.a1 + p.a2 + p.a3 + p.a4;
    if (std::abs(sum - 1.0) > 1e-12)
        throw InvalidXState("diagonal does not sum to 1 within 1e-12");
    if (p.a1 < -1e-12 || p.a2 < -1e-12 || p.a3 < -1e-12 || p.a4 < -1e-12)
        throw InvalidXState("negative diagonal entry");
    if (p.a1 * p.a4 - p.b1 * p.b1 < -1e-12 || p.a2 * p.a3 - p.b2 * p.b2 < -1e-12)
        throw InvalidXState("coherences violate positivity");
}

BipartiteDensityMatrix sample_haar_mixed(int dA, int dB, int rank, std::uint64_t seed,
                                         std::uint64_t sample_index) {
    const int d = dA * dB;
    if (dA < 1 || dB < 1)
        throw DimensionMismatch("subsystem dimensions must be positive");
    if (rank < 1 || rank > d)
        throw InvalidRank("rank must lie in [1, dA*dB]");
    RandomStream stream(seed, sample_index);
    // A Haar-random pure state on C^d (x) C^rank traced over the ancilla is
    // G G^dagger / Tr for a d x rank Ginibre block.
    const CMatrix g = ginibre(d, rank, stream);
    CMatrix w = g * g.adjoint();
    w /= w.trace().real();
    return BipartiteDensityMatrix{dA, dB, std::move(w)};
}

PptClass classify_ppt(const BipartiteDensityMatrix &rho) {
    return min_eigenvalue(partial_transpose(rho, Subsystem::B)) >= kPsdTol ? PptClass::PPT
                                                                           : PptClass::NPPT;
}

BipartiteDensityMatrix make_x_state(const XStateParams &p) {
    validate_x_params(p);
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = p.a1;
    m(1, 1) = p.a2;
    m(2, 2) = p.a3;
    m(3, 3) = p.a4;
    m(0, 3) = m(3, 0) = p.b1;
    m(1, 2) = m(2, 1) = p.b2;
    return BipartiteDensityMatrix{2, 2, std::move(m)};
}

XStateParams x_params_of(const BipartiteDensityMatrix &rho) {
    if (rho.dA != 2 || rho.dB != 2)
        throw DimensionMismatch("X-state extraction requires a two-qubit state");
    XStateParams p;
    p.a1 = std::real(rho.m(0, 0));
    p.a2 = std::real(rho.m(1, 1));
    p.a3 = std::real(rho.m(2, 2));
    p.a4 = std::real(rho.m(3, 3));
    p.b1 = std::real(rho.m(0, 3));
    p.b2 = std::real(rho.m(1, 2));
    return p;
}

BipartiteDensityMatrix make_correlator_state(const CorrelatorStateParams &p) {
    CMatrix m = correlator_matrix(p);
    if (min_eigenvalue(m) < kPsdTol)
        throw NotPositive("correlator parameters give a non-positive matrix");
    return BipartiteDensityMatrix{2, 2, std::move(m)};
}

BipartiteDensityMatrix make_rho_m(double c_xx, double c_yy, double c_zz, Axis beta_axis,
                                  double mA, double mB) {
    CorrelatorStateParams p;
    p.c_xx = c_xx;
    p.c_yy = c_yy;
    p.c_zz = c_zz;
    switch (beta_axis) {
    case Axis::X:
        p.cA_x = mA;
        p.cB_x = mB;
        break;
    case Axis::Y:
        p.cA_y = mA;
        p.cB_y = mB;
        break;
    case Axis::Z:
        p.cA_z = mA;
        p.cB_z = mB;
        break;
    }
    return make_correlator_state(p);
}

BipartiteDensityMatrix sample_rho_m(Axis beta_axis, std::uint64_t seed,
                                    std::uint64_t sample_index) {
    RandomStream stream(seed, sample_index);
    for (;;) {
        const double c_xx = stream.uniform(-1.0, 1.0);
        const double c_yy = stream.uniform(-1.0, 1.0);
        const double c_zz = stream.uniform(-1.0, 1.0);
        const double mA = stream.uniform(-1.0, 1.0);
        const double mB = stream.uniform(-1.0, 1.0);
        try {
            return make_rho_m(c_xx, c_yy, c_zz, beta_axis, mA, mB);
        } catch (const NotPositive &) {
            // reject and redraw
        }
    }
}

BipartiteDensityMatrix sample_correlator_state(std::uint64_t seed, std::uint64_t sample_index) {
    RandomStream stream(seed, sample_index);
    for (;;) {
        CorrelatorStateParams p;
        p.c_xx = stream.uniform(-1.0, 1.0);
        p.c_yy = stream.uniform(-1.0, 1.0);
        p.c_zz = stream.uniform(-1.0, 1.0);
        p.cA_x = stream.uniform(-1.0, 1.0);
        p.cA_y = stream.uniform(-1.0, 1.0);
        p.cA_z = stream.uniform(-1.0, 1.0);
        p.cB_x = stream.uniform(-1.0, 1.0);
        p.cB_y = stream.uniform(-1.0, 1.0);
        p.cB_z = stream.uniform(-1.0, 1.0);
        try {
            return make_correlator_state(p);
        } catch (const NotPositive &) {
            // reject and redraw
        }
    }
}

BipartiteDensityMatrix be_2x4(double b) {
    if (b < 0.0 || b > 1.0)
        throw OutOfRange("be_2x4 requires b in [0, 1]");
    const double f = (1.0 + b) / 2.0;
    const double g = std::sqrt(1.0 - b * b) / 2.0;
    CMatrix m = CMatrix::Zero(8, 8);
    for (int i = 0; i < 3; ++i) {
        m(i, i) = b;
        m(i + 5, i + 5) = b;
        m(i, i + 5) = b;
        m(i + 5, i) = b;
    }
    m(3, 3) = b;
    m(4, 4) = f;
    m(7, 7) = f;
    m(4, 7) = g;
    m(7, 4) = g;
    m /= 7.0 * b + 1.0;
    return BipartiteDensityMatrix{2, 4, std::move(m)};
}

BipartiteDensityMatrix be_3x3_tiles(double a) {
    if (a < 0.0 || a > 1.0)
        throw OutOfRange("be_3x3_tiles requires a in [0, 1]");
    const double f = (1.0 + a) / 2.0;
    const double g = std::sqrt(1.0 - a * a) / 2.0;
    CMatrix m = CMatrix::Zero(9, 9);
    for (int i = 0; i < 9; ++i)
        m(i, i) = a;
    m(6, 6) = f;
    m(8, 8) = f;
    // coherences of the embedded maximally entangled block
    m(0, 4) = m(4, 0) = a;
    m(0, 8) = m(8, 0) = a;
    m(4, 8) = m(8, 4) = a;
    m(6, 8) = m(8, 6) = g;
    m /= 8.0 * a + 1.0;
    return BipartiteDensityMatrix{3, 3, std::move(m)};
}

BipartiteDensityMatrix be_3x3_horodecki(double alpha) {
    if (alpha < 0.0 || alpha > 5.0)
        throw OutOfRange("be_3x3_horodecki requires alpha in [0, 5]");
    CMatrix m = CMatrix::Zero(9, 9);
    // (2/7) |psi><psi| with |psi> = (|00> + |11> + |22>)/sqrt(3)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(4 * i, 4 * j) += 2.0 / 21.0;
    // (alpha/7) * uniform mixture of |01>, |12>, |20>
    const int plus[3] = {0 * 3 + 1, 1 * 3 + 2, 2 * 3 + 0};
    // ((5-alpha)/7) * uniform mixture of |10>, |21>, |02>
    const int minus[3] = {1 * 3 + 0, 2 * 3 + 1, 0 * 3 + 2};
    for (int k = 0; k < 3; ++k) {
        m(plus[k], plus[k]) += alpha / 21.0;
        m(minus[k], minus[k]) += (5.0 - alpha) / 21.0;
    }
    return BipartiteDensityMatrix{3, 3, std::move(m)};
}

BipartiteDensityMatrix swap_subsystems(const BipartiteDensityMatrix &rho) {
    const int dA = rho.dA, dB = rho.dB;
    CMatrix m(rho.dim(), rho.dim());
    for (int a = 0; a < dA; ++a)
        for (int b = 0; b < dB; ++b)
            for (int c = 0; c < dA; ++c)
                for (int d = 0; d < dB; ++d)
                    m(b * dA + a, d * dA + c) = rho.m(a * dB + b, c * dB + d);
    return BipartiteDensityMatrix{dB, dA, std::move(m)};
}

} // namespace qcorr
