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

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "qtamper/error.hpp"
#include "qtamper/perm.hpp"

using namespace qtamper;

namespace {

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

// Direct reading of the definition with 1-based labels.
int valuation_by_definition(const Permutation &sigma) {
    int total = 0;
    for (const auto &cycle : cycle_decompose(sigma)) {
        int odd = 0, even = 0;
        for (int x : cycle) ((x + 1) % 2 == 1 ? odd : even)++;
        total += std::abs(odd - even);
    }
    return total;
}

bool preserves_parity(const Permutation &sigma) {
    for (int x = 0; x < sigma.degree(); ++x)
        if ((x + sigma(x)) % 2 != 0) return false;
    return true;
}

}  // namespace

TEST(Perm, CycleDecomposeExamples) {
    EXPECT_EQ(cycle_decompose(Permutation::identity(4)).size(), 4u);
    const auto c3 = cycle_decompose(Permutation::from_cycles(3, {{1, 2, 3}}));
    ASSERT_EQ(c3.size(), 1u);
    EXPECT_EQ(c3[0].size(), 3u);
    const auto s = Permutation::from_cycles(6, {{1, 2}, {3, 4, 5}});
    const std::vector<Cycle> expected{{0, 1}, {2, 3, 4}, {5}};
    EXPECT_EQ(cycle_decompose(s), expected);
    EXPECT_EQ(cycle_count(s), oracle::orbit_count(vec(s.images())));
    EXPECT_EQ(to_cycle_string(s), "(1 2)(3 4 5)");
}

TEST(Perm, InvalidImagesRejected) {
    EXPECT_THROW(Permutation({0, 0, 1}), Error);
    EXPECT_THROW(Permutation({0, 3}), Error);
}

TEST(Perm, CompositionConvention) {
    const auto a = Permutation::from_cycles(3, {{1, 2}});
    const auto b = Permutation::from_cycles(3, {{2, 3}});
    const auto ab = a * b;  // apply b first
    EXPECT_EQ(ab(1), a(b(1)));
    EXPECT_EQ((a * a.inverse()), Permutation::identity(3));
}

TEST(Perm, ValuationExamples) {
    EXPECT_EQ(valuation(Permutation::identity(4)), 4);
    EXPECT_EQ(valuation(Permutation::from_cycles(2, {{1, 2}})), 0);
    const auto s = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
    EXPECT_EQ(valuation(s), 4);
    EXPECT_EQ(valuation(s), valuation_by_definition(s));
}

TEST(Perm, FullValuationIffParityPreserving) {
    for (int n = 1; n <= 7; ++n)
        for (const auto &s : all_permutations(n)) {
            ASSERT_EQ(valuation(s), valuation_by_definition(s));
            ASSERT_EQ(valuation(s) == n, preserves_parity(s)) << to_cycle_string(s);
        }
}

TEST(Perm, FixMoveExamples) {
    const auto id = fix_move(Permutation::identity(5));
    EXPECT_EQ(id.fix, (std::vector<int>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(id.move.empty());
    const auto t = fix_move(Permutation::from_cycles(5, {{1, 2}}));
    EXPECT_EQ(t.fix, (std::vector<int>{2, 3, 4}));
    EXPECT_EQ(t.move, (std::vector<int>{0, 1}));
    for (const auto &s : all_permutations(5)) {
        const auto fm = fix_move(s);
        ASSERT_EQ(fm.fix.size() + fm.move.size(), 5u);
    }
}

TEST(Perm, MinTranspositionsExamples) {
    EXPECT_EQ(min_transpositions(Permutation::identity(6)), 0);
    EXPECT_EQ(min_transpositions(Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})), 5);
    EXPECT_EQ(min_transpositions(Permutation::from_cycles(5, {{1, 2}, {3, 4}})), 2);
}

TEST(Perm, TranspositionDistanceAgainstBfs) {
    for (int n = 1; n <= 7; ++n) {
        const auto dist = oracle::transposition_distances(n);
        const auto perms = all_permutations(n);
        ASSERT_EQ(dist.size(), perms.size());
        for (const auto &s : perms) {
            const int t = dist.at(vec(s.images()));
            ASSERT_EQ(t, min_transpositions(s));
            ASSERT_EQ(t + cycle_count(s), n);
        }
    }
}

TEST(Perm, TranspositionChangesCycleCountByOne) {
    for (int n = 2; n <= 6; ++n)
        for (const auto &s : all_permutations(n))
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const auto st = s * Permutation::from_cycles(n, {{i, j}});
                    ASSERT_EQ(std::abs(cycle_count(st) - cycle_count(s)), 1);
                }
}

TEST(Perm, CountByTranspositions) {
    EXPECT_EQ(count_by_transpositions(4, 0), 1u);
    EXPECT_EQ(count_by_transpositions(3, 1), 3u);
    EXPECT_EQ(count_by_transpositions(4, 3), 6u);
    for (int n = 1; n <= 7; ++n) {
        const auto dist = oracle::transposition_distances(n);
        std::uint64_t total = 0;
        for (int i = 0; i < n; ++i) {
            std::uint64_t expected = 0;
            for (const auto &[perm, d] : dist) expected += d == i ? 1 : 0;
            const auto c = count_by_transpositions(n, i);
            ASSERT_EQ(c, expected);
            double bound = 1.0;
            for (int k = 0; k < i; ++k) bound *= n * (n - 1) / 2.0;
            ASSERT_LE(static_cast<double>(c), bound);
            total += c;
        }
        ASSERT_EQ(total, dist.size());
    }
    EXPECT_THROW((void)count_by_transpositions(10, 1), Error);
}

TEST(Perm, ParitySwappers) {
    const auto b1 = enumerate_parity_swappers(1);
    ASSERT_EQ(b1.size(), 1u);
    EXPECT_EQ(b1[0], Permutation::from_cycles(2, {{1, 2}}));
    std::uint64_t fact = 1;
    for (int t = 1; t <= 4; ++t) {
        fact *= static_cast<std::uint64_t>(t);
        const auto bs = enumerate_parity_swappers(t);
        ASSERT_EQ(bs.size(), fact * fact);
        ASSERT_TRUE(std::is_sorted(bs.begin(), bs.end()));
        std::size_t by_filter = 0;
        for (const auto &p : all_permutations(2 * t)) {
            bool swaps = true;
            for (int x = 0; x < 2 * t; ++x) swaps = swaps && (x + p(x)) % 2 == 1;
            by_filter += swaps ? 1 : 0;
            ASSERT_EQ(swaps, is_parity_swapper(p));
        }
        ASSERT_EQ(by_filter, bs.size());
        for (const auto &b : bs) ASSERT_TRUE(fix_move(b).fix.empty());
    }
    EXPECT_THROW((void)enumerate_parity_swappers(6), Error);
}

TEST(Perm, VerifyLemmas) {
    const auto small = verify_lemmas(5);
    EXPECT_EQ(small.total_counterexamples(), 0u);
    std::uint64_t fix_checked = 0;
    for (const auto &c : small.checks) {
        if (c.lemma_name == "fix_lower_bound") fix_checked += c.checked_count;
        if (c.lemma_name == "cycle_sum_bound" && c.n_or_t == 2) {
            EXPECT_EQ(c.checked_count, 24u * 4u);
        }
    }
    EXPECT_EQ(fix_checked, 1u + 2u + 6u + 24u + 120u);
    EXPECT_EQ(verify_lemmas(7).total_counterexamples(), 0u);
    EXPECT_THROW((void)verify_lemmas(8), Error);
}

TEST(Perm, FixBoundTightAtIdentity) {
    for (int n = 1; n <= 7; ++n) {
        const auto id = Permutation::identity(n);
        EXPECT_EQ(static_cast<int>(fix_move(id).fix.size()), 2 * cycle_count(id) - n);
    }
}

TEST(Perm, PartitionsAndCycleTypes) {
    EXPECT_EQ(partitions(4).size(), 5u);
    EXPECT_EQ(partitions(6).size(), 11u);
    EXPECT_EQ(partitions(3).front().to_string(), "[3]");
    std::set<CycleType> seen;
    for (const auto &s : all_permutations(5)) seen.insert(cycle_type(s));
    EXPECT_EQ(seen.size(), 7u);
}
