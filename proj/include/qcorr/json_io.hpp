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
 * JSON import/export used by the CLI: density matrices as
 * {dA, dB, entries: row-major [re, im] pairs}, earmarked sets as
 * {kind, params, n} with bases rebuilt on load, and evaluation results.
 */

#pragma once

#include <string>

#include "qcorr/correlations.hpp"
#include "qcorr/measurements.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// Serialization name of a measure ("qd" or "qwd").
const char *measure_name(Measure m);

/// Inverse of measure_name; case-insensitive. Throws OutOfRange.
Measure measure_from_name(const std::string &name);

/// Serialize a state to {dA, dB, entries}; entries are row-major [re, im].
std::string state_to_json(const BipartiteDensityMatrix &rho, int indent = 2);

/// Parse and validate a state produced by state_to_json (or by hand).
/// Throws DimensionMismatch on malformed shapes and the validate_state
/// errors on unphysical input.
BipartiteDensityMatrix state_from_json(const std::string &text);

/// Serialize a set's construction recipe to {kind, params, n}. The bases
/// themselves are never stored.
std::string set_to_json(const EarmarkedSet &set, int indent = 2);

/// Rebuild a set from its recipe; throws OutOfRange on unknown kinds or a
/// size that disagrees with the reconstruction.
EarmarkedSet set_from_json(const std::string &text);

/// Serialize an evaluation result (optionals become JSON null).
std::string eval_to_json(const CorrelationEval &eval, int indent = 2);

/// Read a whole file into a string. Throws Error when unreadable.
std::string read_text_file(const std::string &path);

/// Write a string to a file (truncating). Throws Error on failure.
void write_text_file(const std::string &path, const std::string &content);

} // namespace qcorr
