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
 * Dense Hermitian linear algebra primitives: entropies, partial trace,
 * partial transpose, tensor products. Everything is a free function over
 * Eigen expressions and works for any scalar Eigen supports; the library
 * instantiates them with std::complex<double>.
 *
 * All entropies are in bits (log base 2). Eigenvalues at or below 1e-12 are
 * treated as exact zeros when forming x * log2(x).
 */

#pragma once

#include <cmath>

#include <Eigen/Dense>

#include "qcorr/errors.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// Spectrum clamp below which an eigenvalue contributes nothing to entropy.
inline constexpr double kEntropyClamp = 1e-12;
/// Tolerance for "is positive semidefinite" checks on sampled states.
inline constexpr double kPsdTol = -1e-10;

inline double xlog2x(double x) { return (x > kEntropyClamp) ? x * std::log2(x) : 0.0; }

/// Shannon entropy in bits of a probability vector (values <= 1e-12 ignored).
template <typename Derived>
double shannon_entropy(const Eigen::MatrixBase<Derived> &p) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        h -= xlog2x(static_cast<double>(p(i)));
    return h;
}

/// Ascending eigenvalues of a Hermitian matrix.
template <typename Derived>
RVector hermitian_eigenvalues(const Eigen::MatrixBase<Derived> &op) {
    Eigen::SelfAdjointEigenSolver<typename Derived::PlainObject> solver(
        op.derived(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().template cast<double>();
}

/// Eigenvalues of a 2x2 Hermitian matrix in closed form (lo, hi).
/// Used in hot loops where a solver object would dominate the cost.
template <typename Derived>
inline std::pair<double, double> eig2x2(const Eigen::MatrixBase<Derived> &h) {
    const double a = std::real(h(0, 0));
    const double d = std::real(h(1, 1));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return {mean - radius, mean + radius};
}

/// von Neumann entropy S(op) = -Tr[op log2 op] in bits.
///
/// Throws NonPhysicalOperator if an eigenvalue falls below -1e-10 or the
/// trace deviates from one by more than 1e-8.
template <typename Derived>
double von_neumann_entropy(const Eigen::MatrixBase<Derived> &op) {
    if (op.rows() != op.cols())
        throw DimensionMismatch("entropy input must be square");
    const double trace = std::real(op.trace());
    if (std::abs(trace - 1.0) > 1e-8)
        throw NonPhysicalOperator("trace deviates from 1 by more than 1e-8");
    const RVector evals = hermitian_eigenvalues(op);
    double h = 0.0;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        if (evals(i) < kPsdTol)
            throw NonPhysicalOperator("negative eigenvalue below -1e-10");
        h -= xlog2x(evals(i));
    }
    return h;
}

/// Reduced operator of one subsystem: Tr_B[rho] or Tr_A[rho].
template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived> &rho, int dA,
                                               int dB, Subsystem keep) {
    using Mat = Matrix<typename Derived::Scalar>;
    if (dA < 1 || dB < 1 || rho.rows() != static_cast<Eigen::Index>(dA) * dB ||
        rho.rows() != rho.cols())
        throw DimensionMismatch("partial_trace: dA*dB does not match the matrix size");
    if (keep == Subsystem::A) {
        Mat out = Mat::Zero(dA, dA);
        for (int a = 0; a < dA; ++a)
            for (int c = 0; c < dA; ++c)
                for (int b = 0; b < dB; ++b)
                    out(a, c) += rho(a * dB + b, c * dB + b);
        return out;
    }
    Mat out = Mat::Zero(dB, dB);
    for (int b = 0; b < dB; ++b)
        for (int d = 0; d < dB; ++d)
            for (int a = 0; a < dA; ++a)
                out(b, d) += rho(a * dB + b, a * dB + d);
    return out;
}

inline CMatrix partial_trace(const BipartiteDensityMatrix &rho, Subsystem keep) {
    return partial_trace(rho.m, rho.dA, rho.dB, keep);
}

/// Transpose the indices of one subsystem only.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_transpose(const Eigen::MatrixBase<Derived> &rho, int dA,
                                                   int dB, Subsystem on) {
    using Mat = Matrix<typename Derived::Scalar>;
    if (dA < 1 || dB < 1 || rho.rows() != static_cast<Eigen::Index>(dA) * dB ||
        rho.rows() != rho.cols())
        throw DimensionMismatch("partial_transpose: dA*dB does not match the matrix size");
    Mat out(rho.rows(), rho.cols());
    for (int a = 0; a < dA; ++a)
        for (int b = 0; b < dB; ++b)
            for (int c = 0; c < dA; ++c)
                for (int d = 0; d < dB; ++d) {
                    if (on == Subsystem::A)
                        out(a * dB + b, c * dB + d) = rho(c * dB + b, a * dB + d);
                    else
                        out(a * dB + b, c * dB + d) = rho(a * dB + d, c * dB + b);
                }
    return out;
}

inline CMatrix partial_transpose(const BipartiteDensityMatrix &rho, Subsystem on) {
    return partial_transpose(rho.m, rho.dA, rho.dB, on);
}

/// Kronecker product a (x) b.
template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> tensor_product(const Eigen::MatrixBase<DerivedA> &a,
                                                 const Eigen::MatrixBase<DerivedB> &b) {
    Matrix<typename DerivedA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
    return out;
}

/// Smallest eigenvalue of a Hermitian matrix.
template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived> &op) {
    return hermitian_eigenvalues(op)(0);
}

/// Hermiticity check: max |h - h^dagger| entry below tol.
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived> &op, double tol = 1e-12) {
    if (op.rows() != op.cols())
        return false;
    return (op.derived() - op.derived().adjoint()).cwiseAbs().maxCoeff() <= tol;
}

} // namespace qcorr
