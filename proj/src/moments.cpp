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

#include "qtamper/moments.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "qtamper/haar.hpp"
#include "qtamper/parallel.hpp"
#include "qtamper/weingarten.hpp"

namespace qtamper {

std::string to_string(MomentPattern pattern) {
    switch (pattern) {
        case MomentPattern::kOffDiagonal: return "js";
        case MomentPattern::kDiagonal: return "ss";
        case MomentPattern::kQuantumMessage: return "m";
    }
    return "?";
}

MomentPattern parse_moment_pattern(const std::string &text) {
    if (text == "js") return MomentPattern::kOffDiagonal;
    if (text == "ss") return MomentPattern::kDiagonal;
    if (text == "m") return MomentPattern::kQuantumMessage;
    throw Error(ErrorCode::UsageError, "pattern must be js, ss or m");
}

namespace {

void require_unitary(const ComplexMatrix &U) {
    if (U.rows() < 2 || !is_unitary(U)) throw Error(ErrorCode::NotUnitary, "tampering matrix is not unitary");
}

void validate(const MomentSpec &spec) {
    require_unitary(spec.U);
    if (spec.t < 1 || spec.t > 3) throw Error(ErrorCode::OutOfRange, "moment order t must lie in [1, 3]");
    if (spec.pattern == MomentPattern::kQuantumMessage) {
        if (spec.K < 1 || spec.K >= spec.U.rows()) throw Error(ErrorCode::OutOfRange, "need 1 <= K < N");
        if (static_cast<Eigen::Index>(spec.message_amplitudes.size()) != spec.K) {
            throw Error(ErrorCode::DimMismatch, "message amplitudes must have length K");
        }
        if (spec.target < 0 || spec.target >= spec.K) throw Error(ErrorCode::OutOfRange, "target index outside [K]");
        double norm = 0.0;
        for (const auto &a : spec.message_amplitudes) norm += std::norm(a);
        if (std::abs(norm - 1.0) > kStructuralTol) throw Error(ErrorCode::NotNormalized, "message is not normalized");
    }
}

// A column label in ⟨ψ_x| A |ψ_y⟩: a fixed codeword index or a summed
// amplitude index (ket side carries a_i, bra side carries conj(a_j)).
struct Label {
    enum class Kind { kConst, kKetVar, kBraVar } kind;
    int id;  // constant value or variable number
};

struct Factor {
    Label bra;  // x
    Label ket;  // y
};

std::vector<Factor> factors(const MomentSpec &spec) {
    std::vector<Factor> f;
    constexpr int kJ = 0;
    constexpr int kS = 1;
    const int m = static_cast<int>(spec.target);
    for (int a = 0; a < spec.t; ++a) {
        switch (spec.pattern) {
            case MomentPattern::kOffDiagonal:
                f.push_back({{Label::Kind::kConst, kJ}, {Label::Kind::kConst, kS}});
                f.push_back({{Label::Kind::kConst, kS}, {Label::Kind::kConst, kJ}});
                break;
            case MomentPattern::kDiagonal:
                f.push_back({{Label::Kind::kConst, kS}, {Label::Kind::kConst, kS}});
                f.push_back({{Label::Kind::kConst, kS}, {Label::Kind::kConst, kS}});
                break;
            case MomentPattern::kQuantumMessage:
                f.push_back({{Label::Kind::kConst, m}, {Label::Kind::kKetVar, a}});
                f.push_back({{Label::Kind::kBraVar, a}, {Label::Kind::kConst, m}});
                break;
        }
    }
    return f;
}

// Nodes: ket vars [0, t), bra vars [t, 2t), constants after that.
class UnionFind {
   public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

   private:
    std::vector<int> parent_;
};

Complex weight_for(const std::vector<Factor> &f, const Permutation &beta, const MomentSpec &spec) {
    const int t = spec.t;
    std::vector<int> constants;
    auto node = [&](const Label &l) {
        switch (l.kind) {
            case Label::Kind::kKetVar: return l.id;
            case Label::Kind::kBraVar: return t + l.id;
            case Label::Kind::kConst: {
                auto it = std::find(constants.begin(), constants.end(), l.id);
                if (it == constants.end()) {
                    constants.push_back(l.id);
                    return 2 * t + static_cast<int>(constants.size()) - 1;
                }
                return 2 * t + static_cast<int>(it - constants.begin());
            }
        }
        return -1;
    };
    // Assign constant nodes first so the node count is known.
    for (const auto &fa : f) {
        node(fa.bra);
        node(fa.ket);
    }
    UnionFind uf(2 * t + static_cast<int>(constants.size()));
    for (std::size_t a = 0; a < f.size(); ++a) uf.unite(node(f[a].ket), node(f[static_cast<std::size_t>(beta(static_cast<int>(a)))].bra));

    // Each component may hold at most one distinct constant.
    std::map<int, int> component_const;
    for (std::size_t c = 0; c < constants.size(); ++c) {
        const int root = uf.find(2 * t + static_cast<int>(c));
        auto [it, inserted] = component_const.emplace(root, constants[c]);
        if (!inserted && it->second != constants[c]) return {0.0, 0.0};
    }
    if (spec.pattern != MomentPattern::kQuantumMessage) return {1.0, 0.0};

    std::map<int, std::pair<int, int>> counts;  // root -> (#ket, #bra)
    for (int v = 0; v < t; ++v) ++counts[uf.find(v)].first;
    for (int v = 0; v < t; ++v) ++counts[uf.find(t + v)].second;
    const auto &amps = spec.message_amplitudes;
    Complex w{1.0, 0.0};
    for (const auto &[root, kb] : counts) {
        auto term = [&](const Complex &a) { return std::pow(a, kb.first) * std::pow(std::conj(a), kb.second); };
        if (auto it = component_const.find(root); it != component_const.end()) {
            w *= term(amps[static_cast<std::size_t>(it->second)]);
        } else {
            Complex sum{0.0, 0.0};
            for (const auto &a : amps) sum += term(a);
            w *= sum;
        }
    }
    return w;
}

}  // namespace

double first_moment_js(const ComplexMatrix &U) {
    require_unitary(U);
    const double n = static_cast<double>(U.rows());
    return (n * n - std::norm(U.trace())) / (n * (n * n - 1.0));
}

double first_moment_ss(const ComplexMatrix &U) {
    require_unitary(U);
    const double n = static_cast<double>(U.rows());
    return (n + std::norm(U.trace())) / (n * (n + 1.0));
}

std::vector<BetaWeight> beta_weights(const MomentSpec &spec) {
    validate(spec);
    const auto f = factors(spec);
    std::vector<BetaWeight> out;
    for (auto &beta : all_permutations(2 * spec.t)) {
        const Complex w = weight_for(f, beta, spec);
        if (std::abs(w) > 0.0) out.push_back({std::move(beta), w});
    }
    return out;
}

double exact_moment(const MomentSpec &spec) {
    validate(spec);
    const int p = 2 * spec.t;
    const Eigen::Index N = spec.U.rows();
    if (N < p) throw Error(ErrorCode::OutOfRange, "exact moments need N >= 2t");
    const auto table = wg_table(p, static_cast<std::uint64_t>(N));
    const auto weights = beta_weights(spec);
    const ComplexMatrix U_dag = spec.U.adjoint();

    // Trace of a U/U† word, memoized on the word (bit k set = U† at step k).
    std::map<std::pair<int, unsigned>, Complex> word_traces;
    auto word_trace = [&](const Cycle &cycle) {
        unsigned bits = 0;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            if (cycle[k] % 2 == 1) bits |= 1U << k;
        }
        const auto key = std::make_pair(static_cast<int>(cycle.size()), bits);
        if (auto it = word_traces.find(key); it != word_traces.end()) return it->second;
        ComplexMatrix prod = (bits & 1U) ? U_dag : spec.U;
        for (std::size_t k = 1; k < cycle.size(); ++k) prod = prod * ((bits >> k) & 1U ? U_dag : spec.U);
        const Complex tr = prod.trace();
        word_traces.emplace(key, tr);
        return tr;
    };

    std::vector<int> composed(static_cast<std::size_t>(p));
    Complex total{0.0, 0.0};
    for (const auto &alpha : all_permutations(p)) {
        Complex trace_product{1.0, 0.0};
        for (const auto &cycle : cycle_decompose(alpha)) trace_product *= word_trace(cycle);
        const auto alpha_inv = alpha.inverse();
        Complex inner_sum{0.0, 0.0};
        for (const auto &bw : weights) {
            for (int x = 0; x < p; ++x) composed[static_cast<std::size_t>(x)] = bw.beta(alpha_inv(x));
            inner_sum += bw.weight * table->value_double(composed);
        }
        total += trace_product * inner_sum;
    }
    const double scale = std::max(1.0, std::abs(total.real()));
    if (std::abs(total.imag()) > 1e-9 * scale) {
        throw Error(ErrorCode::InternalConsistency, "moment has imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

McEstimate mc_moment(const MomentSpec &spec, std::uint64_t trials, Seed seed, unsigned jobs) {
    validate(spec);
    if (trials < 1000) throw Error(ErrorCode::OutOfRange, "Monte Carlo needs at least 1000 trials");
    const Eigen::Index N = spec.U.rows();
    const Eigen::Index K = spec.pattern == MomentPattern::kQuantumMessage ? spec.K : 2;
    if (K >= N) throw Error(ErrorCode::OutOfRange, "need K < N");
    StateVector message;
    if (spec.pattern == MomentPattern::kQuantumMessage) {
        message = Eigen::Map<const StateVector>(spec.message_amplitudes.data(), K);
    }

    std::vector<double> values(trials);
    constexpr std::uint64_t kBlock = 256;
    const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
    parallel_for(static_cast<std::size_t>(blocks), jobs, [&](std::size_t b) {
        const std::uint64_t end = std::min<std::uint64_t>(trials, (b + 1) * kBlock);
        for (std::uint64_t k = b * kBlock; k < end; ++k) {
            const Isometry V = sample_encoding_isometry(N, K, child_seed(seed, k));
            double x = 0.0;
            switch (spec.pattern) {
                case MomentPattern::kOffDiagonal: {
                    const StateVector u_psi = spec.U * V.matrix.col(1);
                    x = std::norm(V.matrix.col(0).dot(u_psi));
                    break;
                }
                case MomentPattern::kDiagonal: {
                    const StateVector u_psi = spec.U * V.matrix.col(1);
                    x = std::norm(V.matrix.col(1).dot(u_psi));
                    break;
                }
                case MomentPattern::kQuantumMessage: {
                    const StateVector encoded = V.matrix * message;
                    const StateVector tampered = spec.U * encoded;
                    x = std::norm(V.matrix.col(spec.target).dot(tampered));
                    break;
                }
            }
            values[k] = std::pow(x, spec.t);
        }
    });

    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(trials);
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    const double var = sq / static_cast<double>(trials - 1);
    return {mean, std::sqrt(var / static_cast<double>(trials))};
}

}  // namespace qtamper
