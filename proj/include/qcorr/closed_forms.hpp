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
 * Analytic triad-constrained correlation values: discord and work deficit
 * of X states minimized over the Pauli eigenbases, and the same quantities
 * for the one-parameter 2x4 bound-entangled family. Each function equals
 * the numeric triad minimum within 1e-10; the `_detail` variants also
 * report which observable's branch attains the minimum.
 */
#pragma once

#include "qcorr/states.hpp"

namespace qcorr {

/// A closed-form value plus the index of the minimizing branch.
struct ClosedFormValue {
    double value;
    /// 0 = sigma_z branch, 1 = sigma_x branch, 2 = sigma_y branch.
    int branch;
};

/// Discord of an X state under the best Pauli measurement, in bits.
double x_state_cqd(const XStateParams &p);

/// Work deficit of an X state under the best Pauli measurement, in bits.
double x_state_cqwd(const XStateParams &p);

ClosedFormValue x_state_cqd_detail(const XStateParams &p);
ClosedFormValue x_state_cqwd_detail(const XStateParams &p);

/// Triad-constrained discord of be_2x4(b), b in [0, 1]. Throws OutOfRange.
double be24_cqd(double b);

/// Triad-constrained work deficit of be_2x4(b). Throws OutOfRange.
double be24_cqwd(double b);

/// Branch 0 is the sigma_z observable, branch 1 is sigma_x.
ClosedFormValue be24_cqd_detail(double b);
ClosedFormValue be24_cqwd_detail(double b);

} // namespace qcorr
