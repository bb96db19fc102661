// Copyright 2026 The qtamper Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "qtamper/error.hpp"
#include "qtamper/haar.hpp"
#include "qtamper/linalg.hpp"
#include "qtamper/rng.hpp"

using namespace qtamper;

namespace {

ComplexMatrix gaussian(Eigen::Index r, Eigen::Index c, std::uint64_t seed) {
    Rng rng(Seed{seed});
    ComplexMatrix m(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index i = 0; i < r; ++i) m(i, j) = rng.complex_gaussian();
    return m;
}

StateVector basis(Eigen::Index dim, Eigen::Index i) {
    StateVector v = StateVector::Zero(dim);
    v(i) = 1.0;
    return v;
}

}  // namespace

TEST(Linalg, InnerExamples) {
    EXPECT_EQ(inner(basis(4, 0), basis(4, 0)), Complex(1.0));
    EXPECT_EQ(inner(basis(4, 0), basis(4, 1)), Complex(0.0));
    StateVector u(2), v(2);
    const double h = 1.0 / std::sqrt(2.0);
    u << h, Complex(0, h);
    v << h, Complex(0, -h);
    // (1·1 + conj(i)·(−i)) / 2 = (1 − 1) / 2
    EXPECT_NEAR(std::abs(inner(u, v)), 0.0, 1e-15);
    // conjugate-linear in the first slot
    EXPECT_NEAR(std::abs(inner(StateVector(Complex(0, 1) * u), u) - Complex(0, -1)), 0.0, 1e-15);
    EXPECT_THROW((void)inner(basis(3, 0), basis(4, 0)), Error);
}

TEST(Linalg, TraceAdjointTensor) {
    EXPECT_EQ(trace(ComplexMatrix::Identity(8, 8)), Complex(8.0));
    const ComplexMatrix a = gaussian(3, 4, 1);
    EXPECT_EQ(adjoint(adjoint(a)), a);
    const ComplexMatrix x = gaussian(2, 2, 2);
    const ComplexMatrix y = gaussian(2, 2, 3);
    const ComplexMatrix t = tensor(x, y);
    Complex oracle{};
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2) oracle += x(i1, i1) * y(i2, i2);
    EXPECT_NEAR(std::abs(trace(t) - oracle), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(trace(t) - trace(x) * trace(y)), 0.0, 1e-12);
    // Kronecker layout
    EXPECT_EQ(t(1 * 2 + 0, 0 * 2 + 1), x(1, 0) * y(0, 1));
    EXPECT_THROW((void)trace(gaussian(2, 3, 4)), Error);
    EXPECT_THROW((void)matmul(gaussian(2, 3, 4), gaussian(2, 3, 5)), Error);
}

TEST(Linalg, ProductIdentities) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const ComplexMatrix a = gaussian(5, 5, 10 + s), b = gaussian(5, 5, 20 + s), c = gaussian(5, 5, 30 + s);
        EXPECT_LE(max_abs(matmul(matmul(a, b), c) - matmul(a, matmul(b, c))), 1e-10);
        EXPECT_NEAR(std::abs(trace(matmul(a, b)) - trace(matmul(b, a))), 0.0, 1e-10);
    }
}

TEST(Linalg, QrOfIdentity) {
    const auto f = qr_decompose(ComplexMatrix::Identity(4, 4));
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::abs(f.r(i, i)), 1.0, 1e-14);
        for (int j = 0; j < 4; ++j) {
            if (i != j) {
                EXPECT_NEAR(std::abs(f.q(i, j)), 0.0, 1e-14);
                EXPECT_NEAR(std::abs(f.r(i, j)), 0.0, 1e-14);
            }
        }
    }
}

TEST(Linalg, QrOfGaussian) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix a = gaussian(8, 8, 100 + s);
        const auto f = qr_decompose(a);
        EXPECT_LE(max_abs(f.q.adjoint() * f.q - ComplexMatrix::Identity(8, 8)), 1e-10);
        EXPECT_LE(max_abs(f.q * f.r - a), 1e-10);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < i; ++j) EXPECT_EQ(f.r(i, j), Complex(0.0));
    }
}

TEST(Linalg, QrLeadingColumnsMatchFullQ) {
    const ComplexMatrix a = gaussian(12, 12, 7);
    const auto full = qr_decompose(a);
    const auto lead = qr_leading(a.leftCols(3), 3);
    EXPECT_EQ(lead.q, full.q.leftCols(3));
}

TEST(Linalg, QrRankDeficient) {
    ComplexMatrix a = gaussian(4, 4, 9);
    a.col(2) = a.col(1);
    try {
        (void)qr_decompose(a);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
    }
}

TEST(Linalg, ProjectorsAreIdempotentAndHermitian) {
    const auto V = sample_encoding_isometry(16, 3, Seed{4});
    const ComplexMatrix P = V.matrix * V.matrix.adjoint();
    EXPECT_LE(max_abs(P * P - P), 1e-10);
    EXPECT_LE(max_abs(P - P.adjoint()), 1e-10);
    const ComplexMatrix p1 = projector(V.column(1));
    EXPECT_LE(max_abs(p1 * p1 - p1), 1e-10);
}

TEST(Linalg, WorksForOtherScalars) {
    ComplexMatrixT<float> a = ComplexMatrixT<float>::Identity(3, 3);
    EXPECT_TRUE(is_unitary(a, 1e-6));
    EXPECT_EQ(trace(tensor(a, a)), std::complex<float>(9.0f));
}
