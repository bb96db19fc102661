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
#include <string>
#include <vector>

#include "qtamper/linalg.hpp"
#include "qtamper/perm.hpp"
#include "qtamper/rng.hpp"

namespace qtamper {

/// Which random variable of a Haar-random encoding is being averaged:
///   kOffDiagonal    X_js = |⟨ψ_j|U|ψ_s⟩|², j ≠ s
///   kDiagonal       X_ss = |⟨ψ_s|U|ψ_s⟩|²
///   kQuantumMessage X_m  = ⟨ψ_m| U V|ψ⟩⟨ψ|V† U† |ψ_m⟩ for a message |ψ⟩ = Σ a_i |i⟩
enum class MomentPattern { kOffDiagonal, kDiagonal, kQuantumMessage };

std::string to_string(MomentPattern pattern);  // "js", "ss", "m"
MomentPattern parse_moment_pattern(const std::string &text);

struct MomentSpec {
    MomentPattern pattern = MomentPattern::kOffDiagonal;
    int t = 1;
    ComplexMatrix U;
    /// Code size; only read for kQuantumMessage (js/ss always use K = 2).
    Eigen::Index K = 2;
    /// Length K, normalized; kQuantumMessage only.
    std::vector<Complex> message_amplitudes;
    /// The codeword index m; kQuantumMessage only.
    Eigen::Index target = 0;
};

/// (N² − |Tr U|²) / (N(N² − 1)). Throws NotUnitary.
double first_moment_js(const ComplexMatrix &U);
/// (N + |Tr U|²) / (N(N + 1)). Throws NotUnitary.
double first_moment_ss(const ComplexMatrix &U);

/// Column-delta weight carried by one β ∈ S_2t in the Weingarten expansion.
struct BetaWeight {
    Permutation beta;
    Complex weight;
};

/// The β with nonzero weight, in lexicographic order. For js this is exactly
/// B_2t with weight 1; for ss every β has weight 1; for m the weight is
/// derived by merging the delta constraints over amplitude indices.
std::vector<BetaWeight> beta_weights(const MomentSpec &spec);

/// Exact Haar expectation E[X^t] for t ≤ 3, N ≥ 2t:
///   Σ_{α,β ∈ S_2t} Π_{cycles c of α} Tr(A_{c1} A_{α(c1)} ⋯) · w(β) · Wg(βα⁻¹, N)
/// with A_a = U at odd 1-based positions and U† at even ones, each cycle read
/// from its smallest point. Throws OutOfRange, NotUnitary, NotNormalized, and
/// InternalConsistency if the result has an imaginary part above 1e-9.
double exact_moment(const MomentSpec &spec);

struct McEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
};

/// Mean of X^t over `trials` Haar isometries; trial k uses
/// sample_encoding_isometry(N, K, child_seed(seed, k)). js uses columns (0, 1),
/// ss uses column 1. Deterministic in (spec, trials, seed) for any `jobs`.
/// Requires trials ≥ 1000.
McEstimate mc_moment(const MomentSpec &spec, std::uint64_t trials, Seed seed, unsigned jobs = 1);

}  // namespace qtamper
