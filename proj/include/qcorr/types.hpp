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
 * Dense matrix aliases and the small shared domain types.
 */

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qcorr {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CMatrix = Matrix<Complex>;
using CVector = Vector<Complex>;
using RMatrix = Matrix<double>;
using RVector = Vector<double>;

/// Which half of a bipartite system an operation acts on.
enum class Subsystem { A, B };

/// Partial-transpose classification of a bipartite state.
enum class PptClass { PPT, NPPT };

/// The two correlation measures handled by the library.
enum class Measure { QD, QWD };

/// Bloch axis selector for magnetized correlator states.
enum class Axis { X, Y, Z };

/// Complex Hermitian unit-trace operator on a dA x dB tensor-product space.
/// Row/column index convention: composite index = a * dB + b.
struct BipartiteDensityMatrix {
    int dA = 0;
    int dB = 0;
    CMatrix m;

    int dim() const { return dA * dB; }
};

} // namespace qcorr
