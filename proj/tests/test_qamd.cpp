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

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qtamper/error.hpp"
#include "qtamper/qamd.hpp"

using namespace qtamper;

namespace {

std::vector<std::uint32_t> digits(std::mt19937_64 &gen, std::uint32_t q, int n) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n));
    for (auto &x : v) x = static_cast<std::uint32_t>(gen() % q);
    return v;
}

}  // namespace

TEST(Qamd, ParamsValidation) {
    EXPECT_THROW(QamdParams(5, 3), Error);  // d + 2 = 5 divisible by 5
    EXPECT_THROW(QamdParams(4, 1), Error);
    EXPECT_THROW(QamdParams(5, 0), Error);
    const QamdParams p(5, 1);
    EXPECT_EQ(p.dimension(), 125);
    EXPECT_EQ(p.message_count(), 5u);
    EXPECT_DOUBLE_EQ(p.security_bound(), 0.16);
}

TEST(Qamd, EncodeZeroMessage) {
    const QamdParams p(5, 1);
    const auto cw = qamd_encode({0}, p);
    ASSERT_EQ(cw.state.size(), 125);
    int nonzero = 0;
    for (std::uint32_t r = 0; r < 5; ++r) {
        const auto idx = (0 * 5 + r) * 5 + (r * r * r) % 5;
        EXPECT_NEAR(std::abs(cw.state(idx) - Complex(1.0 / std::sqrt(5.0))), 0.0, 1e-15);
    }
    for (Eigen::Index i = 0; i < cw.state.size(); ++i) nonzero += cw.state(i) != Complex{} ? 1 : 0;
    EXPECT_EQ(nonzero, 5);
}

TEST(Qamd, EncodeMatchesDenseOracle) {
    for (auto [q, d] : {std::pair{5u, 1}, {7u, 1}, {3u, 2}, {5u, 2}}) {
        const QamdParams p(q, d);
        const oracle::DenseQamd dense(q, d);
        for (std::uint64_t m = 0; m < p.message_count(); ++m) {
            const auto cw = qamd_encode(message_from_index(p, m), p);
            const auto ref = dense.codeword(m);
            ASSERT_EQ(message_index(p, cw.message), m);
            EXPECT_NEAR(cw.state.norm(), 1.0, 1e-15);
            for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_EQ(cw.state(static_cast<Eigen::Index>(i)), ref[i]);
        }
        for (std::uint64_t a = 0; a + 1 < p.message_count(); ++a) {
            EXPECT_EQ(std::abs(qamd_encode(message_from_index(p, a), p).state.dot(qamd_encode(message_from_index(p, a + 1), p).state)), 0.0);
        }
    }
}

TEST(Qamd, PhaseOnlyTamperingCannotMove) {
    const QamdParams p(5, 1);
    const PauliLabel t(PrimeModulus(5), {0, 0, 0}, {2, 1, 3});
    for (std::uint32_t s = 0; s < 5; ++s) {
        EXPECT_EQ(qamd_aggregate_wrong_decode_prob({s}, t, p), 0.0);
        const auto dist = qamd_tamper_experiment({s}, t, p);
        EXPECT_NEAR(dist.decoded[s] + dist.reject, 1.0, 1e-12);
        for (std::uint32_t o = 0; o < 5; ++o) {
            if (o != s) {
                EXPECT_EQ(dist.decoded[o], 0.0);
            }
        }
    }
}

TEST(Qamd, ShiftedMessageNeverDecodesToItself) {
    const QamdParams p(5, 1);
    const PauliLabel t(PrimeModulus(5), {2, 1, 0}, {0, 3, 1});
    for (std::uint32_t s = 0; s < 5; ++s) EXPECT_EQ(qamd_tamper_experiment({s}, t, p).decoded[s], 0.0);
}

TEST(Qamd, IdentityTamperingRejected) {
    const QamdParams p(5, 1);
    const auto id = PauliLabel::identity(PrimeModulus(5), 3);
    try {
        (void)qamd_aggregate_wrong_decode_prob({1}, id, p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IdentityTampering);
    }
    EXPECT_THROW((void)qamd_tamper_experiment({1}, id, p), Error);
    EXPECT_NEAR(std::norm(qamd_overlap_exact({1}, {1}, id, p)), 1.0, 1e-12);
}

TEST(Qamd, SymbolicMatchesDenseOnRandomInstances) {
    std::mt19937_64 gen(99);
    for (auto [q, d] : {std::pair{5u, 1}, {7u, 1}, {3u, 2}, {5u, 2}, {7u, 2}}) {
        const QamdParams p(q, d);
        const oracle::DenseQamd dense(q, d);
        for (int trial = 0; trial < 1000; ++trial) {
            auto x = digits(gen, q, d + 2);
            auto z = digits(gen, q, d + 2);
            if (std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; }) &&
                std::all_of(z.begin(), z.end(), [](auto v) { return v == 0; }))
                continue;
            const std::size_t s = gen() % p.message_count();
            const auto msg = message_from_index(p, s);
            const PauliLabel t(p.modulus(), x, z);
            const auto ref = dense.decode_distribution(s, x, z);
            const auto dist = qamd_tamper_experiment(msg, t, p);
            double total = dist.reject;
            for (std::size_t o = 0; o < ref.size(); ++o) {
                ASSERT_NEAR(dist.decoded[o], ref[o], 1e-9);
                ASSERT_NEAR(qamd_wrong_decode_prob_exact(msg, message_from_index(p, o), t, p), ref[o], 1e-9);
                total += dist.decoded[o];
            }
            ASSERT_NEAR(total, 1.0, 1e-9);
            ASSERT_NEAR(qamd_aggregate_wrong_decode_prob(msg, t, p), dense.aggregate_wrong(s, x, z), 1e-9);
            ASSERT_LE(qamd_aggregate_wrong_decode_prob(msg, t, p), p.security_bound() + 1e-12);
        }
    }
}

TEST(Qamd, ExhaustiveScanFiveOne) {
    const QamdParams p(5, 1);
    const oracle::DenseQamd dense(5, 1);
    oracle::MaxTracker err;
    const auto report = qamd_security_scan(p, QamdScanMode{}, 2, [&](const QamdScanCell &c) {
        err.observe(std::abs(c.aggregate_prob - dense.aggregate_wrong(dense.message_number(c.message), c.tamper.x(), c.tamper.z())));
    });
    EXPECT_EQ(report.pairs_checked, (15625u - 1u) * 5u);
    EXPECT_EQ(err.count(), report.pairs_checked);
    EXPECT_LE(err.max(), 1e-9);
    EXPECT_TRUE(report.within_bound());
    EXPECT_LE(report.max_prob, 0.16 + 1e-12);
    EXPECT_LE(report.max_root_count, 2);
    // The witness re-evaluates to the reported maximum.
    EXPECT_EQ(qamd_aggregate_wrong_decode_prob(report.witness_message, report.witness_tamper, p), report.max_prob);
}

TEST(Qamd, ScanIndependentOfJobs) {
    const QamdParams p(3, 2);
    const auto a = qamd_security_scan(p, QamdScanMode{}, 1);
    const auto b = qamd_security_scan(p, QamdScanMode{}, 4);
    EXPECT_EQ(a.max_prob, b.max_prob);
    EXPECT_EQ(a.witness_message, b.witness_message);
    EXPECT_EQ(a.witness_tamper, b.witness_tamper);
    const QamdScanMode random{QamdScanMode::Kind::kRandom, 5000, Seed{4}};
    const auto c = qamd_security_scan(QamdParams(7, 2), random, 1);
    const auto d = qamd_security_scan(QamdParams(7, 2), random, 3);
    EXPECT_EQ(c.max_prob, d.max_prob);
    EXPECT_EQ(c.witness_tamper, d.witness_tamper);
    EXPECT_EQ(c.pairs_checked, 5000u);
    EXPECT_TRUE(c.within_bound());
}

TEST(Qamd, ScanBudget) {
    try {
        (void)qamd_security_scan(QamdParams(7, 2), QamdScanMode{}, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
}
