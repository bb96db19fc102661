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
#include <optional>
#include <string>
#include <vector>

#include "qtamper/haar.hpp"
#include "qtamper/linalg.hpp"
#include "qtamper/pauli.hpp"
#include "qtamper/rng.hpp"

namespace qtamper {

/// Haar-random code: K orthonormal codewords ψ_i = V e_i in dimension N with
/// the decoder POVM {Π_1, …, Π_K, Π_⊥}.
struct EncodingScheme {
    Eigen::Index N = 0;
    Eigen::Index K = 0;
    Seed seed{};
    Isometry isometry;
    ComplexMatrix subspace_projector;  // Π = V V†
    ComplexMatrix perp_projector;      // Π_⊥ = I − Π

    /// |ψ_i⟩⟨ψ_i|, materialized on request.
    ComplexMatrix codeword_projector(Eigen::Index i) const;
};

/// N = 2^n ≤ 4096, K = 2^k < N.
EncodingScheme build_scheme(int n, int k, Seed seed);

struct ClassicalOutcome {
    double p_same = 0.0;
    double p_diff = 0.0;
    double p_perp = 0.0;

    double total() const { return p_same + p_diff + p_perp; }
};

/// Measures U ψ_s with the decoder POVM. P_perp is read off Π_⊥ directly,
/// not as a complement, so the sum is a genuine check.
ClassicalOutcome detect_classical(const EncodingScheme &scheme, const ComplexMatrix &U, Eigen::Index s);

/// P_same + P_perp.
double detect_relaxed(const EncodingScheme &scheme, const ComplexMatrix &U, Eigen::Index s);

struct QuantumOutcome {
    double p_perp = 0.0;
    double p_pass = 0.0;  // Tr(Π U Enc(ψ) U†)
    /// ⟨ψ| V† Π U Enc(ψ) U† Π V |ψ⟩ / p_pass; empty when p_pass < 1e-12.
    std::optional<double> fidelity_given_pass;
};

QuantumOutcome detect_quantum(const EncodingScheme &scheme, const ComplexMatrix &U,
                              const std::vector<Complex> &message_amplitudes);

/// Tr(Π U Enc(I_K / K) U†). Evaluated from the mixed state and from
/// (1/K) Σ_{i,j} |⟨ψ_i|U|ψ_j⟩|²; throws InternalConsistency if they differ by
/// more than 1e-9.
double detect_weak(const EncodingScheme &scheme, const ComplexMatrix &U);

/// The same decoders on an already tampered state φ = U ψ, without the
/// unitarity check. Used by the scans, where U is applied implicitly.
namespace detail {
ClassicalOutcome classical_outcome(const EncodingScheme &scheme, const StateVector &tampered, Eigen::Index s);
QuantumOutcome quantum_outcome(const EncodingScheme &scheme, const StateVector &tampered, const StateVector &message);
}  // namespace detail

/// An explicit tampering family. Pauli members stay symbolic until applied.
class UnitaryFamily {
   public:
    struct Member {
        std::string label;
        std::optional<PauliLabel> pauli;
        ComplexMatrix matrix;  // empty for Pauli members
    };

    UnitaryFamily() = default;
    /// When `trace_bound_phi` is set every member must satisfy
    /// |Tr U| ≤ φ N + 1e-9, otherwise InvalidParams.
    explicit UnitaryFamily(std::optional<double> trace_bound_phi) : phi_(trace_bound_phi) {}

    void add(std::string label, ComplexMatrix U);
    void add(const PauliLabel &label);

    const std::vector<Member> &members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    std::optional<double> trace_bound_phi() const noexcept { return phi_; }
    Eigen::Index dimension() const noexcept { return dim_; }

    StateVector apply(std::size_t index, const StateVector &v) const;
    ComplexMatrix dense(std::size_t index) const;
    /// Largest |Tr U| / N over the members.
    double max_trace_ratio() const noexcept { return max_trace_ratio_; }

   private:
    void admit(Eigen::Index dim, Complex trace);

    std::optional<double> phi_;
    std::vector<Member> members_;
    Eigen::Index dim_ = 0;
    double max_trace_ratio_ = 0.0;
};

enum class DetectionMode { kClassical, kRelaxed, kWeak, kQuantum };

std::string to_string(DetectionMode mode);
DetectionMode parse_detection_mode(const std::string &text);

struct DetectionRow {
    std::uint64_t seed = 0;
    std::size_t member = 0;
    /// Basis message index; K denotes the uniform superposition (quantum
    /// mode) and −1 the maximally mixed input (weak mode).
    std::int64_t message = 0;
    double p_same = 0.0;
    double p_diff = 0.0;
    double p_perp = 0.0;
    /// The quantity compared with 1 − ε: P_perp, or P_same + P_perp when relaxed.
    double score = 0.0;
    std::optional<double> fidelity_given_pass;
};

struct SeedSummary {
    std::uint64_t seed = 0;
    double min_score = 1.0;
    double mean_p_same = 0.0;
    bool pass = false;
};

struct DetectionReport {
    int n = 0;
    int k = 0;
    DetectionMode mode = DetectionMode::kClassical;
    double epsilon = 0.0;
    std::size_t family_size = 0;
    std::optional<double> trace_bound_phi;
    double max_trace_ratio = 0.0;
    std::vector<DetectionRow> rows;  // by seed, then member, then message
    std::vector<SeedSummary> seeds;
    double pass_fraction = 0.0;
    double min_score = 1.0;
    double mean_p_same = 0.0;
    /// From the per-seed means, since cells of one scheme are correlated.
    double mean_p_same_stderr = 0.0;
    std::size_t conservation_violations = 0;
    double max_conservation_error = 0.0;
    std::vector<std::string> warnings;
};

/// One scheme per seed; every (member, message) cell is decoded. Deterministic
/// for any `jobs`. Requires 1 ≤ |family| ≤ 10⁴ and at least one seed.
DetectionReport family_security_scan(int n, int k, const UnitaryFamily &family, double epsilon,
                                     const std::vector<Seed> &seeds, DetectionMode mode = DetectionMode::kClassical,
                                     unsigned jobs = 1);

}  // namespace qtamper
