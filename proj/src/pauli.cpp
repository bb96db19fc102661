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

#include "qtamper/pauli.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "qtamper/haar.hpp"

namespace qtamper {

Complex root_of_unity(std::uint32_t q, std::int64_t k) {
    auto r = k % static_cast<std::int64_t>(q);
    if (r < 0) r += q;
    if (r == 0) return {1.0, 0.0};
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    return std::polar(1.0, theta);
}

PauliLabel::PauliLabel(PrimeModulus q, std::vector<std::uint32_t> x, std::vector<std::uint32_t> z)
    : q_(q), x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) throw Error(ErrorCode::DimMismatch, "x and z exponent vectors differ in length");
    for (auto &e : x_) e %= q_.value();
    for (auto &e : z_) e %= q_.value();
}

PauliLabel PauliLabel::identity(PrimeModulus q, int m) {
    return PauliLabel(q, std::vector<std::uint32_t>(static_cast<std::size_t>(m), 0),
                      std::vector<std::uint32_t>(static_cast<std::size_t>(m), 0));
}

bool PauliLabel::is_identity() const {
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (x_[i] != 0 || z_[i] != 0) return false;
    }
    return true;
}

Eigen::Index PauliLabel::dimension() const {
    Eigen::Index dim = 1;
    for (int i = 0; i < m(); ++i) {
        dim *= q();
        if (dim > kMaxDimension) throw Error(ErrorCode::OutOfRange, "q^m exceeds 4096");
    }
    return dim;
}

std::string PauliLabel::to_string() const {
    std::ostringstream os;
    os << q() << ':';
    for (std::size_t i = 0; i < x_.size(); ++i) os << (i ? "," : "") << x_[i];
    os << ':';
    for (std::size_t i = 0; i < z_.size(); ++i) os << (i ? "," : "") << z_[i];
    return os.str();
}

PauliLabel PauliLabel::parse(const std::string &text) {
    auto fail = [&]() -> PauliLabel { throw Error(ErrorCode::InputError, "malformed Pauli label '" + text + "'"); };
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c2 == std::string::npos) return fail();
    auto parse_list = [&](const std::string &s) {
        std::vector<std::uint32_t> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) fail();
            out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        }
        return out;
    };
    const std::string qs = text.substr(0, c1);
    if (qs.empty() || qs.find_first_not_of("0123456789") != std::string::npos) return fail();
    auto x = parse_list(text.substr(c1 + 1, c2 - c1 - 1));
    auto z = parse_list(text.substr(c2 + 1));
    if (x.empty() || x.size() != z.size()) return fail();
    try {
        return PauliLabel(PrimeModulus(static_cast<std::uint32_t>(std::stoul(qs))), std::move(x), std::move(z));
    } catch (const Error &) {
        return fail();
    }
}

namespace {

// For basis index c returns (row index, phase exponent Σ z_i c_i mod q).
struct Action {
    Eigen::Index row;
    std::int64_t phase;
};

Action act(const PauliLabel &label, Eigen::Index c) {
    const auto q = static_cast<Eigen::Index>(label.q());
    Eigen::Index row = 0;
    Eigen::Index place = 1;
    std::int64_t phase = 0;
    for (int i = label.m() - 1; i >= 0; --i) {
        const auto digit = (c / place) % q;
        const auto idx = static_cast<std::size_t>(i);
        phase += static_cast<std::int64_t>(label.z()[idx]) * digit;
        row += ((digit + label.x()[idx]) % q) * place;
        place *= q;
    }
    return {row, phase};
}

}  // namespace

ComplexMatrix pauli_matrix(const PauliLabel &label) {
    const auto dim = label.dimension();
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        const auto a = act(label, c);
        m(a.row, c) = root_of_unity(label.q(), a.phase);
    }
    return m;
}

StateVector apply_pauli(const PauliLabel &label, const StateVector &v) {
    const auto dim = label.dimension();
    if (v.size() != dim) throw Error(ErrorCode::DimMismatch, "state dimension differs from q^m");
    StateVector out(dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        const auto a = act(label, c);
        out(a.row) = root_of_unity(label.q(), a.phase) * v(c);
    }
    return out;
}

Complex pauli_trace(const PauliLabel &label) {
    if (!label.is_identity()) return {0.0, 0.0};
    double dim = 1.0;
    for (int i = 0; i < label.m(); ++i) dim *= label.q();
    return {dim, 0.0};
}

Complex twisted_commutator_check(const FieldElement &a, const FieldElement &b) {
    const auto q = a.modulus();
    if (b.modulus() != q) throw Error(ErrorCode::ModulusMismatch, "exponents from different fields");
    const ComplexMatrix xa = pauli_matrix(PauliLabel(q, {a.value()}, {0}));
    const ComplexMatrix zb = pauli_matrix(PauliLabel(q, {0}, {b.value()}));
    const ComplexMatrix lhs = xa * zb;
    const ComplexMatrix rhs = zb * xa;
    Eigen::Index r, c;
    rhs.cwiseAbs().maxCoeff(&r, &c);
    const Complex lambda = lhs(r, c) / rhs(r, c);
    if (max_abs(lhs - lambda * rhs) > kStructuralTol) {
        throw Error(ErrorCode::NonScalarMismatch, "X^a Z^b is not a scalar multiple of Z^b X^a");
    }
    return lambda;
}

std::vector<PauliLabel> random_pauli_labels(PrimeModulus q, int m, std::size_t count, Seed seed) {
    long double total = 1.0L;
    for (int i = 0; i < 2 * m; ++i) total *= q.value();
    if (static_cast<long double>(count) > total - 1.0L) {
        throw Error(ErrorCode::OutOfRange, "more labels requested than non-identity Paulis exist");
    }
    Rng rng(seed);
    std::set<PauliLabel> seen;
    std::vector<PauliLabel> out;
    while (out.size() < count) {
        std::vector<std::uint32_t> x(static_cast<std::size_t>(m)), z(static_cast<std::size_t>(m));
        for (auto &e : x) e = static_cast<std::uint32_t>(rng.below(q.value()));
        for (auto &e : z) e = static_cast<std::uint32_t>(rng.below(q.value()));
        PauliLabel label(q, std::move(x), std::move(z));
        if (label.is_identity() || !seen.insert(label).second) continue;
        out.push_back(std::move(label));
    }
    return out;
}

}  // namespace qtamper
