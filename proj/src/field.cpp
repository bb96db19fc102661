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

#include "qtamper/field.hpp"

#include <algorithm>
#include <string>

namespace qtamper {
namespace {

void require_same(PrimeModulus a, PrimeModulus b) {
    if (a != b) {
        throw Error(ErrorCode::ModulusMismatch,
                    "F_" + std::to_string(a.value()) + " vs F_" + std::to_string(b.value()));
    }
}

std::uint32_t reduce(std::int64_t v, std::uint32_t q) {
    auto r = v % static_cast<std::int64_t>(q);
    if (r < 0) r += q;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
}

FieldElement::FieldElement(std::int64_t value, PrimeModulus q) : value_(reduce(value, q.value())), q_(q) {}

FieldElement FieldElement::operator-() const { return FieldElement(-static_cast<std::int64_t>(value_), q_); }

FieldElement operator+(const FieldElement &a, const FieldElement &b) {
    require_same(a.q_, b.q_);
    return FieldElement(static_cast<std::int64_t>(a.value_) + b.value_, a.q_);
}

FieldElement operator-(const FieldElement &a, const FieldElement &b) {
    require_same(a.q_, b.q_);
    return FieldElement(static_cast<std::int64_t>(a.value_) - b.value_, a.q_);
}

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    require_same(a.q_, b.q_);
    return FieldElement(static_cast<std::int64_t>(a.value_) * b.value_, a.q_);
}

FieldElement power(const FieldElement &a, std::uint64_t exponent) {
    FieldElement result(1, a.modulus());
    FieldElement base = a;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        base = base * base;
        exponent >>= 1U;
    }
    return result;
}

FieldElement inverse(const FieldElement &a) {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
    // Fermat: a^(q-2).
    return power(a, a.modulus().value() - 2);
}

std::ostream &operator<<(std::ostream &os, const FieldElement &a) {
    return os << a.value() << " (mod " << a.modulus().value() << ")";
}

FqPoly::FqPoly(PrimeModulus q, std::vector<std::int64_t> coefficients) : q_(q) {
    coeffs_.reserve(coefficients.size());
    for (auto c : coefficients) coeffs_.push_back(reduce(c, q.value()));
    trim();
}

FqPoly FqPoly::monomial(PrimeModulus q, std::int64_t coefficient, int degree) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coefficient;
    return FqPoly(q, std::move(c));
}

void FqPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldElement FqPoly::coefficient(int i) const {
    if (i < 0 || i > degree()) return FieldElement(0, q_);
    return FieldElement(coeffs_[static_cast<std::size_t>(i)], q_);
}

FieldElement FqPoly::eval(const FieldElement &x) const {
    require_same(q_, x.modulus());
    const std::uint64_t q = q_.value();
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = (acc * x.value() + *it) % q;
    }
    return FieldElement(static_cast<std::int64_t>(acc), q_);
}

FqPoly FqPoly::shifted(const FieldElement &a) const {
    require_same(q_, a.modulus());
    // Horner in polynomial form: p(x+a) = (...((c_n)(x+a) + c_{n-1})(x+a) + ...).
    FqPoly result(q_);
    const FqPoly linear(q_, {static_cast<std::int64_t>(a.value()), 1});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        result = result * linear + FqPoly(q_, {static_cast<std::int64_t>(*it)});
    }
    return result;
}

FqPoly operator+(const FqPoly &a, const FqPoly &b) {
    require_same(a.q_, b.q_);
    FqPoly r(a.q_);
    r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        std::uint64_t s = 0;
        if (i < a.coeffs_.size()) s += a.coeffs_[i];
        if (i < b.coeffs_.size()) s += b.coeffs_[i];
        r.coeffs_[i] = static_cast<std::uint32_t>(s % a.q_.value());
    }
    r.trim();
    return r;
}

FqPoly operator-(const FqPoly &a, const FqPoly &b) {
    require_same(a.q_, b.q_);
    FqPoly neg(b.q_);
    neg.coeffs_.reserve(b.coeffs_.size());
    for (auto c : b.coeffs_) neg.coeffs_.push_back(c == 0 ? 0 : b.q_.value() - c);
    return a + neg;
}

FqPoly operator*(const FqPoly &a, const FqPoly &b) {
    require_same(a.q_, b.q_);
    FqPoly r(a.q_);
    if (a.is_zero() || b.is_zero()) return r;
    const std::uint64_t q = a.q_.value();
    std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j]) % q;
        }
    }
    r.coeffs_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
}

FieldElement fq_eval(const FqPoly &p, const FieldElement &x) { return p.eval(x); }

std::vector<std::uint32_t> fq_roots(const FqPoly &p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "every point of F_q is a root");
    std::vector<std::uint32_t> roots;
    const auto q = p.modulus();
    for (std::uint32_t x = 0; x < q.value(); ++x) {
        if (p.eval(FieldElement(x, q)).is_zero()) roots.push_back(x);
    }
    return roots;
}

int fq_count_roots(const FqPoly &p) { return static_cast<int>(fq_roots(p).size()); }

}  // namespace qtamper
