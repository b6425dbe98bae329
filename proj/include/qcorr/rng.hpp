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
 * Counter-based random number generation (Philox4x32-10) plus the random
 * matrix ensembles built on top of it.
 *
 * Every stream is keyed by (seed, sample_index), so sample i of an ensemble
 * draws the same numbers no matter how many workers run or in which order
 * samples are processed.
 */

#pragma once

#include <array>
#include <cstdint>

#include "qcorr/types.hpp"

namespace qcorr {

/// One 10-round Philox4x32 block: 128 bits of counter, 64 bits of key,
/// 128 bits out.
std::array<std::uint32_t, 4> philox4x32_10(const std::array<std::uint32_t, 4> &counter,
                                           const std::array<std::uint32_t, 2> &key);

/// Deterministic random stream addressed by (seed, sample_index).
///
/// The seed becomes the Philox key, the sample index occupies the upper
/// counter words, and an incrementing block counter occupies the lower two,
/// giving 2^64 blocks (four 32-bit words each) per stream.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t sample_index = 0);

    /// Next 64-bit word.
    std::uint64_t next_u64();

    /// Uniform double in (0, 1): ((x >> 11) + 0.5) * 2^-53.
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal deviate (Box-Muller, pairs cached).
    double normal();

  private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> sample_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int lane_ = 2; // consumed lanes in buf_ (two u64 lanes per block)
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

/// rows x cols matrix of independent standard complex Gaussians
/// (real and imaginary parts each N(0, 1/2)).
CMatrix ginibre(int rows, int cols, RandomStream &stream);

/// Haar-distributed unitary via QR of a Ginibre matrix with the R-diagonal
/// phase correction.
CMatrix haar_unitary(int dim, RandomStream &stream);

} // namespace qcorr
