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

#include "qcorr/rng.hpp"

#include <cmath>

namespace qcorr {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u; // golden ratio
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u; // sqrt(3) - 1

inline void philox_round(std::array<std::uint32_t, 4> &c, const std::array<std::uint32_t, 2> &k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

} // namespace

std::array<std::uint32_t, 4> philox4x32_10(const std::array<std::uint32_t, 4> &counter,
                                           const std::array<std::uint32_t, 2> &key) {
    std::array<std::uint32_t, 4> c = counter;
    std::array<std::uint32_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        philox_round(c, k);
        if (round != 9) {
            k[0] += kWeyl0;
            k[1] += kWeyl1;
        }
    }
    return c;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t sample_index)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      sample_{static_cast<std::uint32_t>(sample_index),
              static_cast<std::uint32_t>(sample_index >> 32)} {}

void RandomStream::refill() {
    const std::array<std::uint32_t, 4> counter = {static_cast<std::uint32_t>(block_),
                                                  static_cast<std::uint32_t>(block_ >> 32),
                                                  sample_[0], sample_[1]};
    buf_ = philox4x32_10(counter, key_);
    ++block_;
    lane_ = 0;
}

std::uint64_t RandomStream::next_u64() {
    if (lane_ >= 2)
        refill();
    const int i = 2 * lane_++;
    return static_cast<std::uint64_t>(buf_[i]) | (static_cast<std::uint64_t>(buf_[i + 1]) << 32);
}

double RandomStream::uniform() {
    // 53 significant bits, centered in each cell: never returns 0 or 1.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double RandomStream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(angle);
    has_cached_normal_ = true;
    return r * std::cos(angle);
}

CMatrix ginibre(int rows, int cols, RandomStream &stream) {
    CMatrix g(rows, cols);
    const double scale = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            g(i, j) = Complex(stream.normal(), stream.normal()) * scale;
    return g;
}

CMatrix haar_unitary(int dim, RandomStream &stream) {
    const CMatrix g = ginibre(dim, dim, stream);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Multiply each column by the phase of the matching R diagonal so the
    // distribution is exactly Haar rather than QR-convention dependent.
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
    }
    return q;
}

} // namespace qcorr
