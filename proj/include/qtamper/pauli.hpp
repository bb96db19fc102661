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
#include <string>
#include <vector>

#include "qtamper/field.hpp"
#include "qtamper/linalg.hpp"
#include "qtamper/rng.hpp"

namespace qtamper {

/// ω^k with ω = exp(2πi/q).
Complex root_of_unity(std::uint32_t q, std::int64_t k);

/// The generalized Pauli word ⊗_i X^{x_i} Z^{z_i} over F_q, global phase 1.
/// Within a register X acts after Z: X^a Z^b |v⟩ = ω^{bv} |v + a⟩. Register 0
/// is the most significant digit of the basis index.
class PauliLabel {
   public:
    PauliLabel(PrimeModulus q, std::vector<std::uint32_t> x, std::vector<std::uint32_t> z);

    static PauliLabel identity(PrimeModulus q, int m);

    std::uint32_t q() const noexcept { return q_.value(); }
    PrimeModulus modulus() const noexcept { return q_; }
    int m() const noexcept { return static_cast<int>(x_.size()); }
    const std::vector<std::uint32_t> &x() const noexcept { return x_; }
    const std::vector<std::uint32_t> &z() const noexcept { return z_; }
    bool is_identity() const;
    /// q^m; throws OutOfRange above 4096.
    Eigen::Index dimension() const;

    /// "q:x1,x2,…:z1,z2,…", e.g. "2:1,0:0,1".
    std::string to_string() const;
    static PauliLabel parse(const std::string &text);

    friend bool operator==(const PauliLabel &a, const PauliLabel &b) {
        return a.q() == b.q() && a.x_ == b.x_ && a.z_ == b.z_;
    }
    friend auto operator<=>(const PauliLabel &a, const PauliLabel &b) {
        if (auto c = a.q() <=> b.q(); c != 0) return c;
        if (auto c = a.x_ <=> b.x_; c != 0) return c;
        return a.z_ <=> b.z_;
    }

   private:
    PrimeModulus q_;
    std::vector<std::uint32_t> x_;
    std::vector<std::uint32_t> z_;
};

/// Dense q^m × q^m unitary.
ComplexMatrix pauli_matrix(const PauliLabel &label);

/// The same operator applied to a dense state vector without materializing it.
StateVector apply_pauli(const PauliLabel &label, const StateVector &v);

/// q^m for the identity label, 0 otherwise; symbolic.
Complex pauli_trace(const PauliLabel &label);

/// λ with X^a Z^b = λ Z^b X^a, measured on dense q×q matrices. Throws
/// NonScalarMismatch if the two sides are not proportional.
Complex twisted_commutator_check(const FieldElement &a, const FieldElement &b);

/// `count` distinct non-identity labels over (q, m), drawn from `seed`, in
/// draw order.
std::vector<PauliLabel> random_pauli_labels(PrimeModulus q, int m, std::size_t count, Seed seed);

}  // namespace qtamper
