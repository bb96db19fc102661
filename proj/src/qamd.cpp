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

#include "qtamper/qamd.hpp"

#include <cmath>
#include <limits>

#include "qtamper/parallel.hpp"

namespace qtamper {

QamdParams::QamdParams(std::uint32_t q, int d) : q_([q] {
    try {
        return PrimeModulus(q);
    } catch (const Error &) {
        throw Error(ErrorCode::InvalidParams, "q = " + std::to_string(q) + " is not prime");
    }
}()), d_(d) {
    if (d < 1) throw Error(ErrorCode::InvalidParams, "d must be at least 1");
    if ((d + 2) % static_cast<int>(q) == 0) throw Error(ErrorCode::InvalidParams, "d + 2 is divisible by q");
    for (int i = 0; i < d + 2; ++i) {
        dim_ *= q;
        if (dim_ > 4096) throw Error(ErrorCode::InvalidParams, "q^(d+2) exceeds 4096");
    }
    for (int i = 0; i < d; ++i) messages_ *= q;
}

double QamdParams::security_bound() const {
    const double ratio = static_cast<double>(d_ + 1) / static_cast<double>(q());
    return ratio * ratio;
}

Message message_from_index(const QamdParams &params, std::uint64_t index) {
    if (index >= params.message_count()) throw Error(ErrorCode::OutOfRange, "message index out of range");
    Message s(static_cast<std::size_t>(params.d()));
    for (int i = params.d() - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % params.q());
        index /= params.q();
    }
    return s;
}

namespace {

void check_message(const QamdParams &params, const Message &s) {
    if (static_cast<int>(s.size()) != params.d()) throw Error(ErrorCode::InvalidParams, "message length differs from d");
    for (auto v : s) {
        if (v >= params.q()) throw Error(ErrorCode::InvalidParams, "message digit outside F_q");
    }
}

void check_tamper(const QamdParams &params, const PauliLabel &tamper) {
    if (tamper.q() != params.q() || tamper.m() != params.registers()) {
        throw Error(ErrorCode::InvalidParams, "tampering label must act on d + 2 registers over F_q");
    }
}

struct Overlap {
    Complex amplitude{0.0, 0.0};
    bool shift_matches = false;  // s' = s + x_{1:d}
    bool zero_difference = false;
    int roots = 0;
};

Overlap compute_overlap(const Message &s_prime, const Message &s, const PauliLabel &tamper, const QamdParams &params) {
    const auto q = params.modulus();
    const auto d = static_cast<std::size_t>(params.d());
    Overlap out;
    for (std::size_t i = 0; i < d; ++i) {
        if ((s[i] + tamper.x()[i]) % q.value() != s_prime[i]) return out;
    }
    out.shift_matches = true;
    const FieldElement shift_r(tamper.x()[d], q);
    const FieldElement shift_tag(tamper.x()[d + 1], q);
    const FqPoly f_s = tag_polynomial(params, s);
    const FqPoly diff = tag_polynomial(params, s_prime).shifted(shift_r) - f_s -
                        FqPoly(q, {static_cast<std::int64_t>(shift_tag.value())});
    std::vector<std::uint32_t> roots;
    if (diff.is_zero()) {
        out.zero_difference = true;
        for (std::uint32_t r = 0; r < q.value(); ++r) roots.push_back(r);
    } else {
        if (diff.degree() > params.d() + 1) {
            throw Error(ErrorCode::InternalConsistency, "difference polynomial exceeds degree d + 1");
        }
        roots = fq_roots(diff);
    }
    out.roots = static_cast<int>(roots.size());
    std::int64_t base = 0;
    for (std::size_t i = 0; i < d; ++i) base += static_cast<std::int64_t>(tamper.z()[i]) * s[i];
    Complex sum{0.0, 0.0};
    for (auto r : roots) {
        const std::int64_t tag = f_s.eval(FieldElement(r, q)).value();
        const std::int64_t phase = base + static_cast<std::int64_t>(tamper.z()[d]) * r +
                                   static_cast<std::int64_t>(tamper.z()[d + 1]) * tag;
        sum += root_of_unity(q.value(), phase);
    }
    out.amplitude = sum / static_cast<double>(q.value());
    return out;
}

Message shifted_message(const Message &s, const PauliLabel &tamper, std::uint32_t q) {
    Message out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = (s[i] + tamper.x()[i]) % q;
    return out;
}

bool moves_message(const Message &s, const PauliLabel &tamper) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (tamper.x()[i] != 0) return true;
    }
    return false;
}

}  // namespace

std::uint64_t message_index(const QamdParams &params, const Message &s) {
    check_message(params, s);
    std::uint64_t idx = 0;
    for (auto v : s) idx = idx * params.q() + v;
    return idx;
}

FqPoly tag_polynomial(const QamdParams &params, const Message &s) {
    check_message(params, s);
    std::vector<std::int64_t> c(static_cast<std::size_t>(params.d()) + 3, 0);
    for (int i = 1; i <= params.d(); ++i) c[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i) - 1];
    c[static_cast<std::size_t>(params.d()) + 2] = 1;
    return FqPoly(params.modulus(), std::move(c));
}

QamdCodeword qamd_encode(const Message &s, const QamdParams &params) {
    check_message(params, s);
    const auto q = params.modulus();
    const FqPoly f = tag_polynomial(params, s);
    const auto prefix = static_cast<Eigen::Index>(message_index(params, s));
    const Eigen::Index qq = q.value();
    StateVector state = StateVector::Zero(params.dimension());
    const double amp = 1.0 / std::sqrt(static_cast<double>(q.value()));
    for (std::uint32_t r = 0; r < q.value(); ++r) {
        const Eigen::Index tag = f.eval(FieldElement(r, q)).value();
        state((prefix * qq + r) * qq + tag) = amp;
    }
    return {s, std::move(state)};
}

Complex qamd_overlap_exact(const Message &s_prime, const Message &s, const PauliLabel &tamper,
                           const QamdParams &params) {
    check_message(params, s);
    check_message(params, s_prime);
    check_tamper(params, tamper);
    return compute_overlap(s_prime, s, tamper, params).amplitude;
}

double qamd_wrong_decode_prob_exact(const Message &s, const Message &s_prime, const PauliLabel &tamper,
                                    const QamdParams &params) {
    if (tamper.is_identity()) throw Error(ErrorCode::IdentityTampering, "x = z = 0");
    return std::norm(qamd_overlap_exact(s_prime, s, tamper, params));
}

double qamd_aggregate_wrong_decode_prob(const Message &s, const PauliLabel &tamper, const QamdParams &params) {
    if (tamper.is_identity()) throw Error(ErrorCode::IdentityTampering, "x = z = 0");
    check_message(params, s);
    check_tamper(params, tamper);
    if (!moves_message(s, tamper)) return 0.0;
    return std::norm(compute_overlap(shifted_message(s, tamper, params.q()), s, tamper, params).amplitude);
}

OutcomeDistribution qamd_tamper_experiment(const Message &s, const PauliLabel &tamper, const QamdParams &params) {
    if (tamper.is_identity()) throw Error(ErrorCode::IdentityTampering, "x = z = 0");
    check_message(params, s);
    check_tamper(params, tamper);
    OutcomeDistribution dist;
    dist.decoded.assign(params.message_count(), 0.0);
    const Message target = shifted_message(s, tamper, params.q());
    const double p = std::norm(compute_overlap(target, s, tamper, params).amplitude);
    dist.decoded[message_index(params, target)] = p;
    dist.reject = 1.0 - p;
    return dist;
}

namespace {

struct BlockBest {
    double max_prob = -1.0;
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    Message message;
    PauliLabel tamper = PauliLabel::identity(PrimeModulus(2), 1);
    int max_roots = 0;
    std::uint64_t cells = 0;
};

PauliLabel tamper_from_digits(const QamdParams &params, std::uint64_t t) {
    const auto m = static_cast<std::size_t>(params.registers());
    std::vector<std::uint32_t> digits(2 * m);
    for (std::size_t k = 2 * m; k-- > 0;) {
        digits[k] = static_cast<std::uint32_t>(t % params.q());
        t /= params.q();
    }
    return PauliLabel(params.modulus(), std::vector<std::uint32_t>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(m)),
                      std::vector<std::uint32_t>(digits.begin() + static_cast<std::ptrdiff_t>(m), digits.end()));
}

}  // namespace

QamdScanReport qamd_security_scan(const QamdParams &params, const QamdScanMode &mode, unsigned jobs,
                                  const QamdCellObserver &observer) {
    std::uint64_t tampers = 1;
    for (int i = 0; i < 2 * params.registers(); ++i) tampers *= params.q();
    std::uint64_t cells = 0;
    if (mode.kind == QamdScanMode::Kind::kExhaustive) {
        if (static_cast<long double>(tampers) * static_cast<long double>(params.message_count()) > 1e8L) {
            throw Error(ErrorCode::BudgetExceeded, "exhaustive scan limited to 1e8 tamper/message pairs");
        }
        cells = params.message_count() * (tampers - 1);
    } else {
        if (mode.trials == 0) throw Error(ErrorCode::OutOfRange, "random scan needs at least one trial");
        cells = mode.trials;
    }

    auto cell_at = [&](std::uint64_t c) -> std::pair<Message, PauliLabel> {
        if (mode.kind == QamdScanMode::Kind::kExhaustive) {
            return {message_from_index(params, c / (tampers - 1)), tamper_from_digits(params, c % (tampers - 1) + 1)};
        }
        Rng rng(child_seed(mode.seed, c));
        Message s = message_from_index(params, rng.below(params.message_count()));
        while (true) {
            auto label = tamper_from_digits(params, rng.below(tampers));
            if (!label.is_identity()) return {std::move(s), std::move(label)};
        }
    };

    constexpr std::uint64_t kBlock = 4096;
    const std::uint64_t blocks = (cells + kBlock - 1) / kBlock;
    std::vector<BlockBest> best(blocks);
    parallel_for(static_cast<std::size_t>(blocks), jobs, [&](std::size_t b) {
        BlockBest local;
        const std::uint64_t end = std::min<std::uint64_t>(cells, (b + 1) * kBlock);
        for (std::uint64_t c = b * kBlock; c < end; ++c) {
            auto [s, tamper] = cell_at(c);
            const Message target = shifted_message(s, tamper, params.q());
            const Overlap ov = compute_overlap(target, s, tamper, params);
            bool shifts = false;
            for (auto v : tamper.x()) shifts = shifts || v != 0;
            if (shifts && ov.zero_difference) {
                throw Error(ErrorCode::InternalConsistency, "difference polynomial vanished for a nonzero shift");
            }
            if (shifts) local.max_roots = std::max(local.max_roots, ov.roots);
            const double prob = moves_message(s, tamper) ? std::norm(ov.amplitude) : 0.0;
            if (prob > local.max_prob) {
                local.max_prob = prob;
                local.index = c;
                local.message = s;
                local.tamper = tamper;
            }
            ++local.cells;
            if (observer) observer(QamdScanCell{std::move(s), std::move(tamper), prob});
        }
        best[b] = std::move(local);
    });

    QamdScanReport report;
    report.q = params.q();
    report.d = params.d();
    report.mode = mode;
    report.bound = params.security_bound();
    report.max_prob = -1.0;
    for (auto &blk : best) {
        report.pairs_checked += blk.cells;
        report.max_root_count = std::max(report.max_root_count, blk.max_roots);
        if (blk.max_prob > report.max_prob) {
            report.max_prob = blk.max_prob;
            report.witness_message = blk.message;
            report.witness_tamper = blk.tamper;
        }
    }
    return report;
}

}  // namespace qtamper
