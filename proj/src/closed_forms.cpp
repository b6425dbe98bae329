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

#include "qcorr/closed_forms.hpp"

#include <array>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

namespace {

/// Entropy of the X-state spectrum (two 2x2 blocks), in bits.
double x_state_entropy(const XStateParams &p) {
    const double mu1 = 0.5 * (p.a1 + p.a4);
    const double r1 = std::hypot(0.5 * (p.a1 - p.a4), p.b1);
    const double mu2 = 0.5 * (p.a2 + p.a3);
    const double r2 = std::hypot(0.5 * (p.a2 - p.a3), p.b2);
    return -(xlog2x(mu1 - r1) + xlog2x(mu1 + r1) + xlog2x(mu2 - r2) +
             xlog2x(mu2 + r2));
}

/// Eigenvalue offsets of the equatorial conditional blocks: 1 -/+ the root.
std::array<double, 2> equatorial_alphas(const XStateParams &p, double sign) {
    const double d = p.a1 - p.a2 + p.a3 - p.a4;
    const double bb = p.b1 + sign * p.b2;
    const double root = std::sqrt(d * d + 4.0 * bb * bb);
    return {1.0 - root, 1.0 + root};
}

int argmin3(double v0, double v1, double v2) {
    if (v1 < v0 && v1 <= v2)
        return 1;
    if (v2 < v0 && v2 < v1)
        return 2;
    return 0;
}

struct Be24Terms {
    double s_cond_z;     // sigma_z conditional entropy
    double s_cond_x;     // sigma_x conditional entropy
    double s_dephased_z; // entropy of the sigma_z-dephased state
    double s_dephased_x; // entropy of the sigma_x-dephased state
    double entropy;      // S(rho)
    double entropy_a;    // S(rho_A)
};

Be24Terms be24_terms(double b) {
    if (!(b >= 0.0 && b <= 1.0))
        throw OutOfRange("be24 closed forms require b in [0, 1]");
    const double norm = 1.0 + 7.0 * b;
    const double root = std::sqrt(1.0 - b * b);

    // zeta_i = 1 + b -/+ sqrt(1 - b^2): spectrum of the coherent 2x2 block.
    const double zeta_sum = xlog2x(1.0 + b - root) + xlog2x(1.0 + b + root);

    Be24Terms t;
    t.s_cond_z = (1.0 + 9.0 * b + xlog2x(1.0 + 3.0 * b) - 2.0 * xlog2x(b) -
                  0.5 * zeta_sum) /
                 norm;
    t.s_dephased_z = (1.0 + b + xlog2x(1.0 + 7.0 * b) - 6.0 * xlog2x(b) -
                      0.5 * zeta_sum) /
                     norm;

    double tau_sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double si = i == 0 ? -1.0 : 1.0;
        const double om =
            std::sqrt(std::max(0.0, 2.0 * (1.0 - 3.0 * b + 12.0 * b * b +
                                           si * (1.0 - 3.0 * b) * root)));
        const double omp =
            std::sqrt(std::max(0.0, 2.0 * (1.0 + b + 8.0 * b * b +
                                           si * (1.0 + b) * root)));
        for (int j = 0; j < 2; ++j) {
            const double sj = j == 0 ? -1.0 : 1.0;
            const double tau =
                (1.0 + 9.0 * b + si * root + sj * om) / (4.0 * norm);
            const double taup =
                (1.0 + 5.0 * b + si * root + sj * omp) / (4.0 * norm);
            tau_sum += xlog2x(tau) + xlog2x(taup);
        }
    }
    t.s_cond_x = -0.5 * tau_sum;
    t.s_dephased_x = t.s_cond_x + 1.0;

    const BipartiteDensityMatrix rho = be_2x4(b);
    const RVector w = hermitian_eigenvalues(rho.m);
    t.entropy = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        t.entropy -= xlog2x(w(i));
    const RVector wa = hermitian_eigenvalues(partial_trace(rho, Subsystem::A));
    t.entropy_a = -(xlog2x(wa(0)) + xlog2x(wa(1)));
    return t;
}

} // namespace

ClosedFormValue x_state_cqd_detail(const XStateParams &p) {
    validate_x_params(p);
    const double sa = -(xlog2x(p.a1 + p.a2) + xlog2x(p.a3 + p.a4));
    const double s = x_state_entropy(p);
    // sigma_z conditional entropy.
    const double sz = xlog2x(p.a1 + p.a2) + xlog2x(p.a3 + p.a4) -
                      xlog2x(p.a1) - xlog2x(p.a2) - xlog2x(p.a3) -
                      xlog2x(p.a4);
    // Equatorial branches: p.b1 + b2 pairs with sigma_x, b1 - b2 with sigma_y.
    std::array<double, 2> branches;
    for (int k = 0; k < 2; ++k) {
        const auto al = equatorial_alphas(p, k == 0 ? 1.0 : -1.0);
        branches[k] = 1.0 - 0.5 * (xlog2x(al[0]) + xlog2x(al[1]));
    }
    const int arg = argmin3(sz, branches[0], branches[1]);
    const double best = arg == 0 ? sz : branches[arg - 1];
    return {sa - s + best, arg};
}

ClosedFormValue x_state_cqwd_detail(const XStateParams &p) {
    validate_x_params(p);
    const double s = x_state_entropy(p);
    const double sz =
        -(xlog2x(p.a1) + xlog2x(p.a2) + xlog2x(p.a3) + xlog2x(p.a4));
    std::array<double, 2> branches;
    for (int k = 0; k < 2; ++k) {
        const auto al = equatorial_alphas(p, k == 0 ? 1.0 : -1.0);
        branches[k] = -2.0 * (xlog2x(al[0] / 4.0) + xlog2x(al[1] / 4.0));
    }
    const int arg = argmin3(sz, branches[0], branches[1]);
    const double best = arg == 0 ? sz : branches[arg - 1];
    return {best - s, arg};
}

double x_state_cqd(const XStateParams &p) { return x_state_cqd_detail(p).value; }

double x_state_cqwd(const XStateParams &p) {
    return x_state_cqwd_detail(p).value;
}

ClosedFormValue be24_cqd_detail(double b) {
    const Be24Terms t = be24_terms(b);
    const int arg = t.s_cond_z <= t.s_cond_x ? 0 : 1;
    const double best = arg == 0 ? t.s_cond_z : t.s_cond_x;
    return {t.entropy_a - t.entropy + best, arg};
}

ClosedFormValue be24_cqwd_detail(double b) {
    const Be24Terms t = be24_terms(b);
    const int arg = t.s_dephased_z <= t.s_dephased_x ? 0 : 1;
    const double best = arg == 0 ? t.s_dephased_z : t.s_dephased_x;
    return {best - t.entropy, arg};
}

double be24_cqd(double b) { return be24_cqd_detail(b).value; }

double be24_cqwd(double b) { return be24_cqwd_detail(b).value; }

} // namespace qcorr
