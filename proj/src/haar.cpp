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

#include "qtamper/haar.hpp"

#include <limits>
#include <string>

namespace qtamper {
namespace detail {

ComplexMatrix ginibre(Eigen::Index N, Eigen::Index cols, Rng &rng) {
    ComplexMatrix g(N, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < N; ++r) g(r, c) = rng.complex_gaussian();
    }
    return g;
}

namespace {

ComplexMatrix haar_columns_once(Eigen::Index N, Eigen::Index K, Seed seed, PhaseFix fix) {
    Rng rng(seed);
    const ComplexMatrix g = ginibre(N, K, rng);
    QrFactors f = qr_leading(g, K);
    if (fix == PhaseFix::kApply) {
        for (Eigen::Index j = 0; j < K; ++j) {
            const Complex d = f.r(j, j);
            f.q.col(j) *= d / std::abs(d);
        }
    }
    return f.q;
}

}  // namespace

ComplexMatrix haar_columns(Eigen::Index N, Eigen::Index K, Seed seed, PhaseFix fix) {
    if (N < 2 || N > kMaxDimension) throw Error(ErrorCode::OutOfRange, "N must lie in [2, 4096]");
    if (K < 1 || K > N) throw Error(ErrorCode::OutOfRange, "K must lie in [1, N]");
    try {
        return haar_columns_once(N, K, seed, fix);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::RankDeficient) throw;
    }
    return haar_columns_once(N, K, child_seed(seed, std::numeric_limits<std::uint64_t>::max()), fix);
}

}  // namespace detail

HaarUnitary sample_haar_unitary(Eigen::Index N, Seed seed) {
    return HaarUnitary{N, detail::haar_columns(N, N, seed)};
}

Isometry sample_encoding_isometry(Eigen::Index N, Eigen::Index K, Seed seed) {
    if (K >= N) throw Error(ErrorCode::OutOfRange, "an encoding isometry needs K < N");
    return Isometry{N, K, detail::haar_columns(N, K, seed)};
}

}  // namespace qtamper
