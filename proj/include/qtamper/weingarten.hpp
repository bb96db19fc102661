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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "qtamper/perm.hpp"

namespace qtamper {

/// Exact rational; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;

/// "num/den", always with an explicit denominator.
std::string to_fraction_string(const Rational &r);

/// Unitary Weingarten function Wg(·, N) on S_p, keyed by cycle type.
class WeingartenTable {
   public:
    struct Entry {
        CycleType type;
        Rational value;
        std::uint64_t class_size = 0;
    };

    WeingartenTable(int p, std::uint64_t N, std::vector<Entry> entries);

    int p() const noexcept { return p_; }
    std::uint64_t N() const noexcept { return N_; }
    /// Ordered as partitions(p): [p] first, [1,…,1] last.
    const std::vector<Entry> &entries() const noexcept { return entries_; }

    const Rational &value(const CycleType &type) const;
    const Rational &value(const Permutation &sigma) const;
    /// Hot-path lookup by permutation images (degree p).
    double value_double(std::span<const int> images) const;

   private:
    int p_;
    std::uint64_t N_;
    std::vector<Entry> entries_;
    std::unordered_map<std::uint32_t, std::size_t> by_code_;
    std::vector<double> doubles_;
};

/// Exact table for 1 ≤ p ≤ 6, N ≥ p. Built by solving G w = δ_e for the Gram
/// matrix G[σ, τ] = N^{|C(στ⁻¹)|} over S_p, so w(σ) = (G⁻¹)[e, σ]. The solve is
/// multi-modular with rational reconstruction, and the reconstructed solution
/// is verified exactly against every row of G before use. Tables are cached
/// and shared.
///
/// Throws OutOfRange (p outside [1, 6]), SingularGram (N < p).
std::shared_ptr<const WeingartenTable> wg_table(int p, std::uint64_t N);

/// Σ_{σ ∈ S_t} Wg(σ, N).
Rational wg_sum(int t, std::uint64_t N);
/// Σ_{σ ∈ S_t} |Wg(σ, N)|.
Rational wg_abs_sum(int t, std::uint64_t N);

/// E[U_{i1 j1} ⋯ U_{ip jp} conj(U_{i'1 j'1}) ⋯ conj(U_{i'p j'p})] over Haar U(N),
/// with 1-based indices. Tuples of unequal length give 0. p ≤ 5.
Rational haar_moment(std::span<const int> i, std::span<const int> i_prime, std::span<const int> j,
                     std::span<const int> j_prime, std::uint64_t N);

}  // namespace qtamper
