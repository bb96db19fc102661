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

#include "qtamper/tamper.hpp"

#include <cmath>
#include <sstream>

#include "qtamper/error.hpp"
#include "qtamper/parallel.hpp"

namespace qtamper {

namespace {

constexpr double kConservationTol = 1e-9;
constexpr double kUndefinedPass = 1e-12;
constexpr std::size_t kMaxFamily = 10000;

void require_tampering(const EncodingScheme &scheme, const ComplexMatrix &U) {
    if (U.rows() != scheme.N || U.cols() != scheme.N) throw Error(ErrorCode::DimMismatch, "tampering matrix has wrong size");
    if (!is_unitary(U)) throw Error(ErrorCode::NotUnitary, "tampering matrix is not unitary");
}

double quadratic_form(const ComplexMatrix &P, const StateVector &v) { return v.dot(P * v).real(); }

}  // namespace

ComplexMatrix EncodingScheme::codeword_projector(Eigen::Index i) const {
    if (i < 0 || i >= K) throw Error(ErrorCode::OutOfRange, "codeword index outside [K]");
    return projector(isometry.column(i));
}

EncodingScheme build_scheme(int n, int k, Seed seed) {
    if (n < 1 || n > 12) throw Error(ErrorCode::OutOfRange, "need 1 <= n <= 12");
    if (k < 0 || k >= n) throw Error(ErrorCode::OutOfRange, "need 0 <= k < n");
    EncodingScheme scheme;
    scheme.N = Eigen::Index{1} << n;
    scheme.K = Eigen::Index{1} << k;
    scheme.seed = seed;
    scheme.isometry = sample_encoding_isometry(scheme.N, scheme.K, seed);
    scheme.subspace_projector = scheme.isometry.matrix * scheme.isometry.matrix.adjoint();
    scheme.perp_projector = ComplexMatrix::Identity(scheme.N, scheme.N) - scheme.subspace_projector;
    return scheme;
}

namespace detail {

ClassicalOutcome classical_outcome(const EncodingScheme &scheme, const StateVector &tampered, Eigen::Index s) {
    if (s < 0 || s >= scheme.K) throw Error(ErrorCode::OutOfRange, "message index outside [K]");
    const StateVector amps = scheme.isometry.matrix.adjoint() * tampered;
    ClassicalOutcome out;
    for (Eigen::Index j = 0; j < scheme.K; ++j) {
        const double p = std::norm(amps(j));
        (j == s ? out.p_same : out.p_diff) += p;
    }
    out.p_perp = quadratic_form(scheme.perp_projector, tampered);
    return out;
}

QuantumOutcome quantum_outcome(const EncodingScheme &scheme, const StateVector &tampered, const StateVector &message) {
    QuantumOutcome out;
    out.p_perp = quadratic_form(scheme.perp_projector, tampered);
    const StateVector passed = scheme.subspace_projector * tampered;
    out.p_pass = passed.squaredNorm();
    if (out.p_pass >= kUndefinedPass) {
        // V† maps the accepted branch back to the message space.
        const StateVector decoded = scheme.isometry.matrix.adjoint() * passed;
        out.fidelity_given_pass = std::norm(message.dot(decoded)) / out.p_pass;
    }
    return out;
}

}  // namespace detail

ClassicalOutcome detect_classical(const EncodingScheme &scheme, const ComplexMatrix &U, Eigen::Index s) {
    require_tampering(scheme, U);
    if (s < 0 || s >= scheme.K) throw Error(ErrorCode::OutOfRange, "message index outside [K]");
    return detail::classical_outcome(scheme, U * scheme.isometry.matrix.col(s), s);
}

double detect_relaxed(const EncodingScheme &scheme, const ComplexMatrix &U, Eigen::Index s) {
    const auto o = detect_classical(scheme, U, s);
    return o.p_same + o.p_perp;
}

QuantumOutcome detect_quantum(const EncodingScheme &scheme, const ComplexMatrix &U,
                              const std::vector<Complex> &message_amplitudes) {
    require_tampering(scheme, U);
    if (static_cast<Eigen::Index>(message_amplitudes.size()) != scheme.K) {
        throw Error(ErrorCode::DimMismatch, "message must have K amplitudes");
    }
    const StateVector message = Eigen::Map<const StateVector>(message_amplitudes.data(), scheme.K);
    if (std::abs(message.squaredNorm() - 1.0) > kStructuralTol) throw Error(ErrorCode::NotNormalized, "message is not normalized");
    return detail::quantum_outcome(scheme, U * (scheme.isometry.matrix * message), message);
}

double detect_weak(const EncodingScheme &scheme, const ComplexMatrix &U) {
    require_tampering(scheme, U);
    const auto &V = scheme.isometry.matrix;
    const double K = static_cast<double>(scheme.K);
    const ComplexMatrix rho = V * V.adjoint() / K;
    const double mixed = trace(scheme.subspace_projector * U * rho * U.adjoint()).real();
    const double pairwise = (V.adjoint() * U * V).cwiseAbs2().sum() / K;
    if (std::abs(mixed - pairwise) > kConservationTol) {
        throw Error(ErrorCode::InternalConsistency, "weak detection paths disagree");
    }
    return mixed;
}

void UnitaryFamily::admit(Eigen::Index dim, Complex trace_value) {
    if (members_.size() >= kMaxFamily) throw Error(ErrorCode::OutOfRange, "family is capped at 10^4 members");
    if (dim_ != 0 && dim != dim_) throw Error(ErrorCode::DimMismatch, "family members differ in dimension");
    const double ratio = std::abs(trace_value) / static_cast<double>(dim);
    if (phi_ && std::abs(trace_value) > *phi_ * static_cast<double>(dim) + 1e-9) {
        std::ostringstream msg;
        msg << "member violates |Tr U| <= phi N (|Tr U|/N = " << ratio << ")";
        throw Error(ErrorCode::InvalidParams, msg.str());
    }
    dim_ = dim;
    max_trace_ratio_ = std::max(max_trace_ratio_, ratio);
}

void UnitaryFamily::add(std::string label, ComplexMatrix U) {
    if (U.rows() != U.cols() || !is_unitary(U)) throw Error(ErrorCode::NotUnitary, "family member is not unitary");
    admit(U.rows(), U.trace());
    members_.push_back({std::move(label), std::nullopt, std::move(U)});
}

void UnitaryFamily::add(const PauliLabel &label) {
    admit(label.dimension(), pauli_trace(label));
    members_.push_back({label.to_string(), label, ComplexMatrix{}});
}

StateVector UnitaryFamily::apply(std::size_t index, const StateVector &v) const {
    const auto &m = members_.at(index);
    if (m.pauli) return apply_pauli(*m.pauli, v);
    return m.matrix * v;
}

ComplexMatrix UnitaryFamily::dense(std::size_t index) const {
    const auto &m = members_.at(index);
    return m.pauli ? pauli_matrix(*m.pauli) : m.matrix;
}

std::string to_string(DetectionMode mode) {
    switch (mode) {
        case DetectionMode::kClassical: return "classical";
        case DetectionMode::kRelaxed: return "relaxed";
        case DetectionMode::kWeak: return "weak";
        case DetectionMode::kQuantum: return "quantum";
    }
    return "?";
}

DetectionMode parse_detection_mode(const std::string &text) {
    if (text == "classical") return DetectionMode::kClassical;
    if (text == "relaxed") return DetectionMode::kRelaxed;
    if (text == "weak") return DetectionMode::kWeak;
    if (text == "quantum") return DetectionMode::kQuantum;
    throw Error(ErrorCode::UsageError, "mode must be classical, relaxed, weak or quantum");
}

namespace {

std::vector<DetectionRow> scan_seed(int n, int k, const UnitaryFamily &family, Seed seed, DetectionMode mode) {
    const EncodingScheme scheme = build_scheme(n, k, seed);
    const auto &V = scheme.isometry.matrix;
    const Eigen::Index K = scheme.K;
    std::vector<DetectionRow> rows;

    for (std::size_t u = 0; u < family.size(); ++u) {
        auto row = [&](std::int64_t message) {
            DetectionRow r;
            r.seed = seed.value;
            r.member = u;
            r.message = message;
            return r;
        };
        switch (mode) {
            case DetectionMode::kClassical:
            case DetectionMode::kRelaxed:
                for (Eigen::Index s = 0; s < K; ++s) {
                    const auto o = detail::classical_outcome(scheme, family.apply(u, V.col(s)), s);
                    DetectionRow r = row(s);
                    r.p_same = o.p_same;
                    r.p_diff = o.p_diff;
                    r.p_perp = o.p_perp;
                    r.score = mode == DetectionMode::kRelaxed ? o.p_same + o.p_perp : o.p_perp;
                    rows.push_back(r);
                }
                break;
            case DetectionMode::kWeak: {
                DetectionRow r = row(-1);
                const double inv_k = 1.0 / static_cast<double>(K);
                for (Eigen::Index j = 0; j < K; ++j) {
                    const auto o = detail::classical_outcome(scheme, family.apply(u, V.col(j)), j);
                    r.p_same += inv_k * o.p_same;
                    r.p_diff += inv_k * o.p_diff;
                    r.p_perp += inv_k * o.p_perp;
                }
                r.score = r.p_perp;
                rows.push_back(r);
                break;
            }
            case DetectionMode::kQuantum:
                for (Eigen::Index s = 0; s <= K; ++s) {
                    StateVector message = StateVector::Zero(K);
                    if (s < K) {
                        message(s) = 1.0;
                    } else {
                        message.setConstant(Complex{1.0 / std::sqrt(static_cast<double>(K)), 0.0});
                    }
                    const auto o = detail::quantum_outcome(scheme, family.apply(u, V * message), message);
                    DetectionRow r = row(s);
                    r.p_perp = o.p_perp;
                    r.fidelity_given_pass = o.fidelity_given_pass;
                    const double f = o.fidelity_given_pass.value_or(0.0);
                    r.p_same = o.p_pass * f;
                    r.p_diff = o.p_pass * (1.0 - f);
                    r.score = o.p_perp;
                    rows.push_back(r);
                }
                break;
        }
    }
    return rows;
}

std::vector<std::string> advisory_warnings(int n, int k, const UnitaryFamily &family, double epsilon) {
    std::vector<std::string> out;
    const double K = std::ldexp(1.0, k);
    if (!family.trace_bound_phi()) {
        out.emplace_back("no trace bound declared; phi^2 <= epsilon/(2K) not checked");
    } else if (const double phi = *family.trace_bound_phi(); phi * phi > epsilon / (2.0 * K)) {
        out.emplace_back("phi^2 <= epsilon/(2K) fails");
    }
    const double lambda = -std::log2(epsilon);
    const double size = static_cast<double>(family.size());
    const double alpha = size > 2.0 ? std::log2(std::log2(size)) / n : 0.0;
    if (static_cast<double>(n) * (1.0 / 6.0 - alpha) < k + lambda + 5.0) {
        std::ostringstream msg;
        msg << "n(beta - alpha) >= k + lambda + 5 fails (beta = 1/6, alpha = " << alpha << ", lambda = " << lambda << ")";
        out.push_back(msg.str());
    }
    return out;
}

}  // namespace

DetectionReport family_security_scan(int n, int k, const UnitaryFamily &family, double epsilon,
                                     const std::vector<Seed> &seeds, DetectionMode mode, unsigned jobs) {
    if (family.size() == 0 || family.size() > kMaxFamily) throw Error(ErrorCode::OutOfRange, "family size must lie in [1, 10^4]");
    if (seeds.empty()) throw Error(ErrorCode::OutOfRange, "need at least one seed");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::OutOfRange, "epsilon must lie in (0, 1)");
    if (family.dimension() != (Eigen::Index{1} << n)) throw Error(ErrorCode::DimMismatch, "family dimension is not 2^n");

    std::vector<std::vector<DetectionRow>> per_seed(seeds.size());
    parallel_for(seeds.size(), jobs, [&](std::size_t i) { per_seed[i] = scan_seed(n, k, family, seeds[i], mode); });

    DetectionReport report;
    report.n = n;
    report.k = k;
    report.mode = mode;
    report.epsilon = epsilon;
    report.family_size = family.size();
    report.trace_bound_phi = family.trace_bound_phi();
    report.max_trace_ratio = family.max_trace_ratio();
    report.warnings = advisory_warnings(n, k, family, epsilon);

    double p_same_sum = 0.0;
    std::size_t passes = 0;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        SeedSummary summary;
        summary.seed = seeds[i].value;
        double seed_same = 0.0;
        for (const auto &r : per_seed[i]) {
            summary.min_score = std::min(summary.min_score, r.score);
            seed_same += r.p_same;
            const double err = std::abs(r.p_same + r.p_diff + r.p_perp - 1.0);
            report.max_conservation_error = std::max(report.max_conservation_error, err);
            if (err > kConservationTol) ++report.conservation_violations;
        }
        summary.mean_p_same = seed_same / static_cast<double>(per_seed[i].size());
        summary.pass = summary.min_score >= 1.0 - epsilon;
        passes += summary.pass ? 1 : 0;
        p_same_sum += summary.mean_p_same;
        report.min_score = std::min(report.min_score, summary.min_score);
        report.seeds.push_back(summary);
        report.rows.insert(report.rows.end(), per_seed[i].begin(), per_seed[i].end());
    }
    const double s = static_cast<double>(seeds.size());
    report.pass_fraction = static_cast<double>(passes) / s;
    report.mean_p_same = p_same_sum / s;
    if (seeds.size() > 1) {
        double sq = 0.0;
        for (const auto &summary : report.seeds) sq += (summary.mean_p_same - report.mean_p_same) * (summary.mean_p_same - report.mean_p_same);
        report.mean_p_same_stderr = std::sqrt(sq / (s - 1.0) / s);
    }
    return report;
}

}  // namespace qtamper
