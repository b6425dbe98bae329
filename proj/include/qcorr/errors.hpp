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
 * Exception hierarchy shared by all qcorr modules.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base class of every library error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define QCORR_DEFINE_ERROR(Name)                                                                   \
    struct Name : Error {                                                                          \
        explicit Name(const std::string &what) : Error(std::string(#Name) + ": " + what) {}        \
    }

/// Operator failed a positivity or unit-trace check.
QCORR_DEFINE_ERROR(NonPhysicalOperator);
/// Matrix or subsystem dimensions are inconsistent.
QCORR_DEFINE_ERROR(DimensionMismatch);
/// Requested rank is outside [1, dA*dB].
QCORR_DEFINE_ERROR(InvalidRank);
/// Constructed matrix has an eigenvalue below -1e-10.
QCORR_DEFINE_ERROR(NotPositive);
/// Scalar argument is outside its documented range.
QCORR_DEFINE_ERROR(OutOfRange);
/// Disc-stack constructor requires an odd number of discs.
QCORR_DEFINE_ERROR(EvenN2);
/// Operation is not implemented for this local dimension.
QCORR_DEFINE_ERROR(UnsupportedDim);
/// Earmarked set contains no bases.
QCORR_DEFINE_ERROR(EmptySet);
/// X-state parameters violate normalization or positivity.
QCORR_DEFINE_ERROR(InvalidXState);
/// Derivative peak sits on the boundary of the supplied grid.
QCORR_DEFINE_ERROR(GridTooCoarse);
/// Scaling fit input contains a point with zero distance to the critical value.
QCORR_DEFINE_ERROR(DegenerateFit);
/// Power-law fit input dips below the asymptotic plateau.
QCORR_DEFINE_ERROR(NegativeResidual);
/// A post-sampling filter left fewer than 100 states.
QCORR_DEFINE_ERROR(InsufficientSamples);

#undef QCORR_DEFINE_ERROR

} // namespace qcorr
