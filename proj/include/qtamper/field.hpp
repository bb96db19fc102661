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
#include <initializer_list>
#include <ostream>
#include <vector>

#include "qtamper/error.hpp"

namespace qtamper {

/// Trial division; q is small by construction.
bool is_prime(std::uint64_t n);

/// A prime modulus, checked once at construction.
class PrimeModulus {
   public:
    explicit PrimeModulus(std::uint32_t q);

    std::uint32_t value() const noexcept { return q_; }
    friend bool operator==(PrimeModulus, PrimeModulus) = default;

   private:
    std::uint32_t q_;
};

/// An element of the prime field F_q.
class FieldElement {
   public:
    /// Reduces `value` into [0, q); negative inputs wrap.
    FieldElement(std::int64_t value, PrimeModulus q);

    std::uint32_t value() const noexcept { return value_; }
    PrimeModulus modulus() const noexcept { return q_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator-(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
    friend bool operator==(const FieldElement &a, const FieldElement &b) = default;

   private:
    std::uint32_t value_;
    PrimeModulus q_;
};

/// Throws DivisionByZero for zero.
FieldElement inverse(const FieldElement &a);
FieldElement power(const FieldElement &a, std::uint64_t exponent);

std::ostream &operator<<(std::ostream &os, const FieldElement &a);

/// Univariate polynomial over F_q; coefficient index = degree. The zero
/// polynomial has no coefficients and degree -1.
class FqPoly {
   public:
    explicit FqPoly(PrimeModulus q) : q_(q) {}
    FqPoly(PrimeModulus q, std::vector<std::int64_t> coefficients);
    FqPoly(PrimeModulus q, std::initializer_list<std::int64_t> coefficients)
        : FqPoly(q, std::vector<std::int64_t>(coefficients)) {}

    static FqPoly monomial(PrimeModulus q, std::int64_t coefficient, int degree);

    PrimeModulus modulus() const noexcept { return q_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    FieldElement coefficient(int i) const;
    const std::vector<std::uint32_t> &raw_coefficients() const noexcept { return coeffs_; }

    FieldElement operator()(const FieldElement &x) const { return eval(x); }
    FieldElement eval(const FieldElement &x) const;

    /// p(x + a).
    FqPoly shifted(const FieldElement &a) const;

    friend FqPoly operator+(const FqPoly &a, const FqPoly &b);
    friend FqPoly operator-(const FqPoly &a, const FqPoly &b);
    friend FqPoly operator*(const FqPoly &a, const FqPoly &b);
    friend bool operator==(const FqPoly &a, const FqPoly &b) = default;

   private:
    void trim();

    PrimeModulus q_;
    std::vector<std::uint32_t> coeffs_;
};

/// Horner evaluation; throws ModulusMismatch.
FieldElement fq_eval(const FqPoly &p, const FieldElement &x);

/// Number of x in F_q with p(x) = 0, by exhaustive scan. Throws ZeroPolynomial
/// for the zero polynomial, where every point is a root.
int fq_count_roots(const FqPoly &p);

/// The roots themselves, in increasing order. Same error contract.
std::vector<std::uint32_t> fq_roots(const FqPoly &p);

}  // namespace qtamper
