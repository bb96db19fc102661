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

#include "qtamper/linalg.hpp"

#include <cmath>

namespace qtamper {
namespace {

struct Reflectors {
    std::vector<StateVector> v;  // v[j] acts on rows j..m-1, ‖v[j]‖ = 1
    ComplexMatrix work;          // upper triangle holds R
};

// Factors the first k columns of `a` (only those columns are carried along).
Reflectors householder(const ComplexMatrix &a, Eigen::Index k, Eigen::Index carry_cols) {
    const Eigen::Index m = a.rows();
    Reflectors out;
    out.work = a.leftCols(carry_cols);
    double scale = 0.0;
    for (Eigen::Index c = 0; c < carry_cols; ++c) scale = std::max(scale, a.col(c).norm());
    const double tol = kRankTol * std::max(1.0, scale);

    for (Eigen::Index j = 0; j < k; ++j) {
        const Eigen::Index len = m - j;
        StateVector x = out.work.col(j).tail(len);
        const double norm_x = x.norm();
        if (norm_x < tol) {
            throw Error(ErrorCode::RankDeficient, "pivot " + std::to_string(j) + " below tolerance");
        }
        const double abs_x0 = std::abs(x(0));
        const Complex phase = abs_x0 == 0.0 ? Complex(1.0, 0.0) : x(0) / abs_x0;
        const Complex alpha = -phase * norm_x;
        StateVector v = x;
        v(0) -= alpha;
        v /= v.norm();
        for (Eigen::Index c = j; c < carry_cols; ++c) {
            auto col = out.work.col(c).tail(len);
            const Complex proj = v.dot(col);
            col -= 2.0 * proj * v;
        }
        out.work(j, j) = alpha;
        out.work.col(j).tail(len - 1).setZero();
        out.v.push_back(std::move(v));
    }
    return out;
}

ComplexMatrix accumulate_q(const Reflectors &refl, Eigen::Index m, Eigen::Index k) {
    ComplexMatrix q(m, k);
    const auto nrefl = static_cast<Eigen::Index>(refl.v.size());
    for (Eigen::Index c = 0; c < k; ++c) {
        StateVector y = StateVector::Zero(m);
        y(c) = 1.0;
        // Reflectors beyond c leave e_c unchanged.
        for (Eigen::Index j = std::min(c, nrefl - 1); j >= 0; --j) {
            const auto &v = refl.v[static_cast<std::size_t>(j)];
            auto seg = y.tail(m - j);
            const Complex proj = v.dot(seg);
            seg -= 2.0 * proj * v;
        }
        q.col(c) = y;
    }
    return q;
}

}  // namespace

QrFactors qr_decompose(const ComplexMatrix &a) {
    detail::require(a.rows() == a.cols(), "qr_decompose: matrix is not square");
    const Eigen::Index n = a.rows();
    auto refl = householder(a, n, n);
    QrFactors f;
    f.q = accumulate_q(refl, n, n);
    f.r = refl.work.triangularView<Eigen::Upper>();
    return f;
}

QrFactors qr_leading(const ComplexMatrix &a, Eigen::Index k) {
    detail::require(k >= 1 && k <= a.cols() && k <= a.rows(), "qr_leading: bad column count");
    auto refl = householder(a, k, k);
    QrFactors f;
    f.q = accumulate_q(refl, a.rows(), k);
    f.r = refl.work.topRows(k).triangularView<Eigen::Upper>();
    return f;
}

}  // namespace qtamper
