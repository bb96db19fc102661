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

#include "qtamper/linalg.hpp"
#include "qtamper/rng.hpp"

namespace qtamper {

inline constexpr Eigen::Index kMaxDimension = 4096;

struct HaarUnitary {
    Eigen::Index N = 0;
    ComplexMatrix matrix;
};

/// First K columns of a Haar unitary; V†V = I_K.
struct Isometry {
    Eigen::Index N = 0;
    Eigen::Index K = 0;
    ComplexMatrix matrix;

    StateVector column(Eigen::Index i) const { return matrix.col(i); }
};

/// Ginibre matrix (entries drawn column-major from `seed`), Householder QR,
/// then Q·diag(R_jj/|R_jj|). A rank-deficient draw is retried once on the
/// stream child_seed(seed, 2^64 − 1) before failing. 2 ≤ N ≤ 4096.
HaarUnitary sample_haar_unitary(Eigen::Index N, Seed seed);

/// The first K columns of sample_haar_unitary(N, seed), computed from only the
/// first K Ginibre columns. 1 ≤ K < N.
Isometry sample_encoding_isometry(Eigen::Index N, Eigen::Index K, Seed seed);

namespace detail {

enum class PhaseFix { kApply, kOmit };

/// Column-major complex Gaussian N×cols matrix.
ComplexMatrix ginibre(Eigen::Index N, Eigen::Index cols, Rng &rng);

/// Leading K columns of the Haar sampler; kOmit leaves out the phase
/// correction and exists only to show that it is needed.
ComplexMatrix haar_columns(Eigen::Index N, Eigen::Index K, Seed seed, PhaseFix fix = PhaseFix::kApply);

}  // namespace detail
}  // namespace qtamper
