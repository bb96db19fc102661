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
#include <functional>
#include <string>
#include <vector>

#include "qtamper/field.hpp"
#include "qtamper/linalg.hpp"
#include "qtamper/pauli.hpp"
#include "qtamper/rng.hpp"

namespace qtamper {

/// Polynomial-tag quantum AMD code over F_q with d message registers.
///
/// Codewords live on d + 2 registers of dimension q, in the order
/// (s_1, …, s_d, r, tag); register 0 is the most significant digit of the
/// basis index, matching the Kronecker order of PauliLabel.
class QamdParams {
   public:
    /// Throws InvalidParams unless d ≥ 1, (d + 2) mod q ≠ 0 and q^{d+2} ≤ 4096.
    QamdParams(std::uint32_t q, int d);

    PrimeModulus modulus() const noexcept { return q_; }
    std::uint32_t q() const noexcept { return q_.value(); }
    int d() const noexcept { return d_; }
    int registers() const noexcept { return d_ + 2; }
    Eigen::Index dimension() const noexcept { return dim_; }
    std::uint64_t message_count() const noexcept { return messages_; }
    /// ((d + 1) / q)².
    double security_bound() const;

   private:
    PrimeModulus q_;
    int d_;
    Eigen::Index dim_ = 1;
    std::uint64_t messages_ = 1;
};

using Message = std::vector<std::uint32_t>;

/// Digits of `index` in base q, most significant first.
Message message_from_index(const QamdParams &params, std::uint64_t index);
std::uint64_t message_index(const QamdParams &params, const Message &s);

/// f(s, r) = Σ_i s_i r^i + r^{d+2} as a polynomial in r.
FqPoly tag_polynomial(const QamdParams &params, const Message &s);

struct QamdCodeword {
    Message message;
    StateVector state;
};

/// |ψ_s⟩ = q^{-1/2} Σ_r |s, r, f(s, r)⟩. Throws InvalidParams for a malformed
/// message.
QamdCodeword qamd_encode(const Message &s, const QamdParams &params);

/// Symbolic ⟨ψ_{s'}| X^x Z^z |ψ_s⟩. Zero unless s' = s + x_{1:d}; otherwise
/// q^{-1} Σ_{r ∈ R} ω^{⟨z_{1:d}, s⟩ + z_{d+1} r + z_{d+2} f(s, r)} over the roots R
/// of f(s', r + x_{d+1}) − f(s, r) − x_{d+2}. The identity tampering is allowed
/// here.
Complex qamd_overlap_exact(const Message &s_prime, const Message &s, const PauliLabel &tamper,
                           const QamdParams &params);

/// |⟨ψ_{s'}| X^x Z^z |ψ_s⟩|² for s' ≠ s. Throws IdentityTampering.
double qamd_wrong_decode_prob_exact(const Message &s, const Message &s_prime, const PauliLabel &tamper,
                                    const QamdParams &params);

/// Σ_{s' ≠ s} of the above; only s' = s + x_{1:d} can carry mass.
double qamd_aggregate_wrong_decode_prob(const Message &s, const PauliLabel &tamper, const QamdParams &params);

struct OutcomeDistribution {
    /// Indexed by message_index.
    std::vector<double> decoded;
    double reject = 0.0;
};

/// Full decoder distribution after tampering. Throws IdentityTampering.
OutcomeDistribution qamd_tamper_experiment(const Message &s, const PauliLabel &tamper, const QamdParams &params);

struct QamdScanMode {
    enum class Kind { kExhaustive, kRandom };
    Kind kind = Kind::kExhaustive;
    std::uint64_t trials = 0;
    Seed seed{};
};

struct QamdScanCell {
    Message message;
    PauliLabel tamper;
    double aggregate_prob;
};

struct QamdScanReport {
    std::uint32_t q = 0;
    int d = 0;
    QamdScanMode mode;
    double bound = 0.0;
    double max_prob = 0.0;
    Message witness_message;
    PauliLabel witness_tamper = PauliLabel::identity(PrimeModulus(2), 1);
    std::uint64_t pairs_checked = 0;
    int max_root_count = 0;

    /// 1e-12 of slack absorbs rounding when the maximum sits on the bound.
    bool within_bound() const { return max_prob <= bound + 1e-12; }
};

/// Called once per scanned cell, possibly from several threads at once.
using QamdCellObserver = std::function<void(const QamdScanCell &)>;

/// Maximum aggregate wrong-decode probability over the scanned (s, x, z).
/// Exhaustive mode covers every message and every non-identity tampering and
/// requires q^{2(d+2)} · q^d ≤ 10^8 (else BudgetExceeded). Random mode draws
/// trial k from child_seed(seed, k). Ties resolve to the earliest cell, so the
/// report does not depend on `jobs`. Asserts the difference polynomial is
/// never identically zero for a nonzero shift pattern.
QamdScanReport qamd_security_scan(const QamdParams &params, const QamdScanMode &mode, unsigned jobs = 1,
                                  const QamdCellObserver &observer = {});

}  // namespace qtamper
