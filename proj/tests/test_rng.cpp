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
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "qcorr/linalg.hpp"
#include "qcorr/rng.hpp"

using namespace qcorr;

TEST_SUITE("rng") {

TEST_CASE("philox block function reproduces the published vectors") {
    // Known-answer vectors for Philox4x32-10: all-zero, all-one and
    // pi-digit counter/key inputs.
    auto r = philox4x32_10({0u, 0u, 0u, 0u}, {0u, 0u});
    CHECK(r == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});

    r = philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                      {0xffffffffu, 0xffffffffu});
    CHECK(r == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});

    r = philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                      {0xa4093822u, 0x299f31d0u});
    CHECK(r == std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("stream uniforms are frozen per (seed, sample_index, block)") {
    RandomStream s70(7, 0);
    CHECK(s70.uniform() == 0.75015222210311272);
    CHECK(s70.uniform() == 0.085657865301281555);
    // Third and fourth draws come from the next counter block.
    CHECK(s70.uniform() == 0.79528403734019038);
    CHECK(s70.uniform() == 0.95785419041565589);

    RandomStream s71(7, 1);
    CHECK(s71.uniform() == 0.17173538717791431);
    CHECK(s71.uniform() == 0.22529485363308849);

    RandomStream big(123456789, 987654321);
    for (int i = 0; i < 10; ++i)
        big.uniform();
    CHECK(big.uniform() == 0.72759804706514442);
    CHECK(big.uniform() == 0.53338328567221249);
}

TEST_CASE("identical coordinates replay the identical sequence") {
    RandomStream a(42, 17), b(42, 17);
    for (int i = 0; i < 200; ++i)
        CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("streams at different coordinates diverge immediately") {
    RandomStream base(5, 0);
    const std::uint64_t first = base.next_u64();
    for (std::uint64_t i = 1; i <= 4; ++i) {
        RandomStream other(5, i);
        CHECK(other.next_u64() != first);
    }
    RandomStream reseeded(6, 0);
    CHECK(reseeded.next_u64() != first);
}

TEST_CASE("uniform stays inside its interval") {
    RandomStream s(9, 0);
    double mean = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double u = s.uniform();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        mean += u;
    }
    mean /= n;
    CHECK(std::abs(mean - 0.5) < 0.01);

    RandomStream t(9, 1);
    for (int i = 0; i < 1000; ++i) {
        const double u = t.uniform(-2.0, 3.0);
        CHECK(u >= -2.0);
        CHECK(u < 3.0);
    }
}

TEST_CASE("normal deviates have the right first two moments") {
    RandomStream s(11, 0);
    const int n = 40000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = s.normal();
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.03);
}

TEST_CASE("ginibre entries have unit mean square modulus") {
    RandomStream s(13, 0);
    const CMatrix g = ginibre(64, 64, s);
    const double mean_sq = g.cwiseAbs2().mean();
    CHECK(std::abs(mean_sq - 1.0) < 0.05);
}

TEST_CASE("haar unitaries are unitary and deterministic") {
    for (int dim : {2, 3, 4, 6}) {
        RandomStream s(17, dim);
        const CMatrix u = haar_unitary(dim, s);
        const CMatrix eye = CMatrix::Identity(dim, dim);
        CHECK((u.adjoint() * u - eye).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((u * u.adjoint() - eye).cwiseAbs().maxCoeff() < 1e-12);

        RandomStream s2(17, dim);
        const CMatrix u2 = haar_unitary(dim, s2);
        CHECK((u - u2).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("haar unitary entries have mean square modulus 1/dim") {
    const int dim = 3;
    double acc = 0.0;
    const int n = 500;
    for (int i = 0; i < n; ++i) {
        RandomStream s(19, i);
        acc += std::norm(haar_unitary(dim, s)(0, 0));
    }
    CHECK(std::abs(acc / n - 1.0 / dim) < 0.03);
}

} // TEST_SUITE
