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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qtamper/error.hpp"

namespace qtamper {

template <typename RealScalar>
using ComplexMatrixT = Eigen::Matrix<std::complex<RealScalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename RealScalar>
using StateVectorT = Eigen::Matrix<std::complex<RealScalar>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = ComplexMatrixT<double>;
using StateVector = StateVectorT<double>;

/// Structural identities (unitarity, projector idempotence, conservation).
inline constexpr double kStructuralTol = 1e-10;
/// Relative pivot threshold for rank tests.
inline constexpr double kRankTol = 1e-12;

namespace detail {

inline void require(bool ok, const std::string &what) {
    if (!ok) throw Error(ErrorCode::DimMismatch, what);
}

}  // namespace detail

/// <u|v>, conjugate-linear in u.
template <typename DerivedU, typename DerivedV>
typename DerivedU::Scalar inner(const Eigen::MatrixBase<DerivedU> &u, const Eigen::MatrixBase<DerivedV> &v) {
    detail::require(u.size() == v.size() && u.cols() == 1 && v.cols() == 1, "inner: dimension mismatch");
    return u.derived().dot(v.derived());
}

template <typename DerivedA, typename DerivedB>
auto matmul(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    detail::require(a.cols() == b.rows(), "matmul: inner dimensions differ");
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a * b;
    return out;
}

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived> &a) {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a.adjoint();
    return out;
}

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived> &a) {
    detail::require(a.rows() == a.cols(), "trace: matrix is not square");
    return a.trace();
}

/// Kronecker product, (A ⊗ B)[(i1,i2),(j1,j2)] = A[i1,j1] B[i2,j2] with the
/// first factor as the most significant index digit.
template <typename DerivedA, typename DerivedB>
auto tensor(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// |v><v| for a (normalized) state.
template <typename Derived>
auto projector(const Eigen::MatrixBase<Derived> &v) {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out = v * v.adjoint();
    return out;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &a) {
    return a.size() == 0 ? 0.0 : static_cast<double>(a.cwiseAbs().maxCoeff());
}

/// ‖A†A − I‖_max ≤ tol.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived> &a, double tol = kStructuralTol) {
    if (a.rows() != a.cols()) return false;
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Mat gram = a.adjoint() * a;
    return max_abs(gram - Mat::Identity(a.rows(), a.cols())) <= tol;
}

/// Columns orthonormal: ‖V†V − I_K‖_max ≤ tol.
template <typename Derived>
bool is_isometry(const Eigen::MatrixBase<Derived> &v, double tol = kStructuralTol) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Mat gram = v.adjoint() * v;
    return max_abs(gram - Mat::Identity(v.cols(), v.cols())) <= tol;
}

struct QrFactors {
    ComplexMatrix q;
    ComplexMatrix r;
};

/// Householder QR of a square matrix. Throws RankDeficient when a pivot falls
/// below kRankTol relative to the largest column norm.
QrFactors qr_decompose(const ComplexMatrix &a);

/// Leading `k` columns of Q and the leading k×k block of R from the Householder
/// QR of `a` (which may have any number of columns ≥ k). Each column of Q is
/// accumulated independently, so the result is bit-identical to the first k
/// columns of qr_decompose(a).q.
QrFactors qr_leading(const ComplexMatrix &a, Eigen::Index k);

}  // namespace qtamper
