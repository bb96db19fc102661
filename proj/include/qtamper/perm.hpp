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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtamper/error.hpp"

namespace qtamper {

/// A bijection on {0, …, n−1}. Reports and cycle notation use 1-based labels;
/// parity-dependent maps (valuation, parity swappers) use the 1-based label,
/// so internal point i is "odd" when i + 1 is odd.
class Permutation {
   public:
    Permutation() = default;
    /// images[i] = σ(i), 0-based; throws InvalidPermutation if not a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Build from 1-based cycles, e.g. {{1, 2}, {3, 4, 5}} in S_6.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    std::span<const int> images() const noexcept { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation &a, const Permutation &b);
    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

   private:
    std::vector<int> images_;
};

using Cycle = std::vector<int>;

/// Cycles partitioning [n] (0-based points); each cycle starts at its smallest
/// point and follows σ, cycles are ordered by smallest point, fixed points
/// appear as singletons.
std::vector<Cycle> cycle_decompose(const Permutation &sigma);

/// |C(σ)|, without materializing the cycles.
int cycle_count(const Permutation &sigma);
int cycle_count(std::span<const int> images);

/// Cycle lengths, sorted descending.
struct CycleType {
    std::vector<int> parts;

    std::string to_string() const;  // "[2,1]"
    friend bool operator==(const CycleType &, const CycleType &) = default;
    friend auto operator<=>(const CycleType &, const CycleType &) = default;
};

CycleType cycle_type(const Permutation &sigma);
CycleType cycle_type(std::span<const int> images);

/// All partitions of n, in decreasing lexicographic order ([n] first).
std::vector<CycleType> partitions(int n);

/// Σ over cycles of |#odd − #even| with 1-based labels.
int valuation(const Permutation &sigma);
int cycle_valuation(const Cycle &cycle);

struct FixMove {
    std::vector<int> fix;   // 0-based, increasing
    std::vector<int> move;  // 0-based, increasing
};

FixMove fix_move(const Permutation &sigma);

/// T(σ) = n − |C(σ)|.
int min_transpositions(const Permutation &sigma);

/// Every element of S_n in lexicographic order of images (identity first).
/// Throws BudgetExceeded for n > 10.
std::vector<Permutation> all_permutations(int n);

/// |{σ ∈ S_n : T(σ) = i}| by enumeration; n ≤ 9.
std::uint64_t count_by_transpositions(int n, int i);

/// True when σ maps every odd label to an even one and vice versa.
bool is_parity_swapper(const Permutation &beta);

/// B_{2t}, sorted lexicographically; 2t ≤ 10. Count is (t!)².
std::vector<Permutation> enumerate_parity_swappers(int t);

/// Cycle notation with 1-based labels, fixed points omitted; "()" for identity.
std::string to_cycle_string(const Permutation &sigma);

struct LemmaCheck {
    std::string lemma_name;
    int n_or_t = 0;
    std::uint64_t checked_count = 0;
    std::vector<std::string> counterexamples;
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;

    std::uint64_t total_counterexamples() const;
};

/// Exhaustive checks:
///   fix_lower_bound      |Fix(σ)| ≥ 2|C(σ)| − n       σ ∈ S_n, 1 ≤ n ≤ n_max
///   sigma_count_bound    |Σ_i| ≤ C(n,2)^i              1 ≤ n ≤ n_max
///   cycle_sum_bound      |C(α)| + |C(βα⁻¹)| ≤ 3t      (α, β) ∈ S_2t × B_2t, 2t ≤ min(6, n_max)
///   cycle_minus_t_bound  |C(βα)| − T(α) ≤ t           same range
/// Throws BudgetExceeded for n_max > 7.
LemmaReport verify_lemmas(int n_max);

}  // namespace qtamper
