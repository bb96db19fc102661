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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {
std::uint32_t reduce(std::int64_t v, std::uint32_t q) {
    const auto m = static_cast<std::int64_t>(q);
    return static_cast<std::uint32_t>(((v % m) + m) % m);
}
}  // namespace

std::uint32_t inverse_by_search(std::uint32_t a, std::uint32_t q) {
    for (std::uint32_t x = 1; x < q; ++x) {
        if ((static_cast<std::uint64_t>(a) * x) % q == 1) return x;
    }
    throw std::logic_error("no inverse");
}

std::uint32_t eval_power_sum(const std::vector<std::int64_t> &coeffs, std::uint32_t x, std::uint32_t q) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::uint64_t term = reduce(coeffs[i], q);
        for (std::size_t k = 0; k < i; ++k) term = (term * x) % q;
        total = (total + term) % q;
    }
    return static_cast<std::uint32_t>(total);
}

std::vector<std::uint32_t> roots_by_scan(const std::vector<std::int64_t> &coeffs, std::uint32_t q) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < q; ++x) {
        if (eval_power_sum(coeffs, x, q) == 0) out.push_back(x);
    }
    return out;
}

std::map<std::vector<int>, int> transposition_distances(int n) {
    std::vector<int> start(static_cast<std::size_t>(n));
    std::iota(start.begin(), start.end(), 0);
    std::map<std::vector<int>, int> dist{{start, 0}};
    std::deque<std::vector<int>> frontier{start};
    while (!frontier.empty()) {
        const auto cur = frontier.front();
        frontier.pop_front();
        const int d = dist[cur];
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                auto next = cur;
                std::swap(next[static_cast<std::size_t>(i)], next[static_cast<std::size_t>(j)]);
                if (dist.emplace(next, d + 1).second) frontier.push_back(std::move(next));
            }
        }
    }
    return dist;
}

int orbit_count(const std::vector<int> &images) {
    std::vector<bool> seen(images.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (auto j = i; !seen[j]; j = static_cast<std::size_t>(images[j])) seen[j] = true;
    }
    return cycles;
}

mpq_class closed_form_wg(const std::string &cycle_type, long N) {
    const mpq_class n(N);
    const mpq_class n2m1 = n * n - 1;
    const mpq_class n2m4 = n * n - 4;
    mpq_class v;
    if (cycle_type == "[1]") v = 1 / n;
    else if (cycle_type == "[1,1]") v = 1 / n2m1;
    else if (cycle_type == "[2]") v = -1 / (n * n2m1);
    else if (cycle_type == "[1,1,1]") v = (n * n - 2) / (n * n2m1 * n2m4);
    else if (cycle_type == "[2,1]") v = -1 / (n2m1 * n2m4);
    else if (cycle_type == "[3]") v = 2 / (n * n2m1 * n2m4);
    else throw std::logic_error("no closed form for " + cycle_type);
    v.canonicalize();
    return v;
}

std::map<std::vector<int>, mpq_class> gram_inverse_row(int p, long N) {
    std::vector<std::vector<int>> perms;
    std::vector<int> cur(static_cast<std::size_t>(p));
    std::iota(cur.begin(), cur.end(), 0);
    do perms.push_back(cur);
    while (std::next_permutation(cur.begin(), cur.end()));
    const std::size_t m = perms.size();

    auto inverse = [](const std::vector<int> &a) {
        std::vector<int> inv(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) inv[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
        return inv;
    };
    // Augmented [G | I].
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(2 * m));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            std::vector<int> prod(static_cast<std::size_t>(p));
            const auto c_inv = inverse(perms[c]);
            for (int x = 0; x < p; ++x) prod[static_cast<std::size_t>(x)] = perms[r][static_cast<std::size_t>(c_inv[static_cast<std::size_t>(x)])];
            mpz_class power = 1;
            for (int k = 0; k < orbit_count(prod); ++k) power *= N;
            a[r][c] = power;
        }
        a[r][m + r] = 1;
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) throw std::logic_error("singular Gram matrix");
        std::swap(a[piv], a[col]);
        const mpq_class inv = 1 / a[col][col];
        for (auto &x : a[col]) x *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t c = 0; c < 2 * m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    // Row of the identity permutation (index 0 in lexicographic order).
    std::map<std::vector<int>, mpq_class> row;
    for (std::size_t c = 0; c < m; ++c) row.emplace(perms[c], a[0][m + c]);
    return row;
}

DenseQamd::DenseQamd(std::uint32_t q, int d) : q_(q), d_(d), dim_(1), messages_(1) {
    for (int i = 0; i < d + 2; ++i) dim_ *= q;
    for (int i = 0; i < d; ++i) messages_ *= q;
    for (std::size_t m = 0; m < messages_; ++m) {
        const auto s = message_digits(m);
        std::vector<std::size_t> idx;
        for (std::uint32_t r = 0; r < q; ++r) {
            std::vector<std::int64_t> tag_coeffs(static_cast<std::size_t>(d + 3), 0);
            for (int i = 1; i <= d; ++i) tag_coeffs[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i - 1)];
            tag_coeffs[static_cast<std::size_t>(d + 2)] = 1;
            const std::uint32_t tag = eval_power_sum(tag_coeffs, r, q);
            std::size_t index = 0;
            for (auto digit : s) index = index * q + digit;
            index = (index * q + r) * q + tag;
            idx.push_back(index);
        }
        support_.push_back(std::move(idx));
    }
}

std::vector<std::uint32_t> DenseQamd::message_digits(std::size_t index) const {
    std::vector<std::uint32_t> s(static_cast<std::size_t>(d_));
    for (int i = d_ - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % q_);
        index /= q_;
    }
    return s;
}

std::size_t DenseQamd::message_number(const std::vector<std::uint32_t> &s) const {
    std::size_t index = 0;
    for (auto digit : s) index = index * q_ + digit;
    return index;
}

std::vector<Complex> DenseQamd::codeword(std::size_t message) const {
    std::vector<Complex> v(dim_);
    const double amp = 1.0 / std::sqrt(static_cast<double>(q_));
    for (auto i : support_[message]) v[i] = amp;
    return v;
}

std::vector<Complex> DenseQamd::tamper(const std::vector<Complex> &v, const std::vector<std::uint32_t> &x,
                                       const std::vector<std::uint32_t> &z) const {
    const int regs = d_ + 2;
    const double two_pi = 2.0 * std::acos(-1.0);
    std::vector<Complex> out(dim_);
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(regs));
    for (std::size_t c = 0; c < dim_; ++c) {
        if (v[c] == Complex{}) continue;
        std::size_t rest = c;
        for (int i = regs - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % q_);
            rest /= q_;
        }
        std::uint64_t phase = 0;
        std::size_t target = 0;
        for (int i = 0; i < regs; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            phase += static_cast<std::uint64_t>(z[ui]) * digits[ui];
            target = target * q_ + (digits[ui] + x[ui]) % q_;
        }
        const double angle = two_pi * static_cast<double>(phase % q_) / q_;
        out[target] += std::polar(1.0, angle) * v[c];
    }
    return out;
}

std::vector<double> DenseQamd::decode_distribution(std::size_t s, const std::vector<std::uint32_t> &x,
                                                   const std::vector<std::uint32_t> &z) const {
    const auto phi = tamper(codeword(s), x, z);
    const double amp = 1.0 / std::sqrt(static_cast<double>(q_));
    std::vector<double> probs(messages_);
    for (std::size_t m = 0; m < messages_; ++m) {
        Complex overlap{};
        for (auto i : support_[m]) overlap += amp * phi[i];
        probs[m] = std::norm(overlap);
    }
    return probs;
}

double DenseQamd::aggregate_wrong(std::size_t s, const std::vector<std::uint32_t> &x,
                                  const std::vector<std::uint32_t> &z) const {
    const auto probs = decode_distribution(s, x, z);
    double total = 0.0;
    for (std::size_t m = 0; m < probs.size(); ++m) {
        if (m != s) total += probs[m];
    }
    return total;
}

Stats mean_and_stderr(const std::vector<double> &xs) {
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / n;
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    return {mean, std::sqrt(sq / (n - 1.0) / n)};
}

}  // namespace oracle
