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

#include "qtamper/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtamper {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)]) {
            throw Error(ErrorCode::InvalidPermutation, "images are not a bijection");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>> &cycles) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto &c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            const int from = c[k] - 1;
            const int to = c[(k + 1) % c.size()] - 1;
            if (from < 0 || from >= n || used[static_cast<std::size_t>(from)]) {
                throw Error(ErrorCode::InvalidPermutation, "cycles overlap or leave [n]");
            }
            used[static_cast<std::size_t>(from)] = true;
            img[static_cast<std::size_t>(from)] = to;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i)) return false;
    }
    return true;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree()) throw Error(ErrorCode::DimMismatch, "composing permutations of different degree");
    Permutation p;
    p.images_.resize(b.images_.size());
    for (std::size_t i = 0; i < b.images_.size(); ++i) {
        p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    }
    return p;
}

std::vector<Cycle> cycle_decompose(const Permutation &sigma) {
    const int n = sigma.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Cycle> cycles;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        Cycle c;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = sigma(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            c.push_back(x);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

int cycle_count(std::span<const int> images) {
    // n ≤ 64 on every hot path.
    std::uint64_t seen = 0;
    int count = 0;
    const int n = static_cast<int>(images.size());
    if (n > 64) {
        std::vector<int> copy(images.begin(), images.end());
        return static_cast<int>(cycle_decompose(Permutation(std::move(copy))).size());
    }
    for (int start = 0; start < n; ++start) {
        if (seen & (1ULL << start)) continue;
        ++count;
        for (int x = start; !(seen & (1ULL << x)); x = images[static_cast<std::size_t>(x)]) seen |= 1ULL << x;
    }
    return count;
}

int cycle_count(const Permutation &sigma) { return cycle_count(sigma.images()); }

std::string CycleType::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

CycleType cycle_type(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    CycleType ct;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        ct.parts.push_back(len);
    }
    std::sort(ct.parts.begin(), ct.parts.end(), std::greater<>());
    return ct;
}

CycleType cycle_type(const Permutation &sigma) { return cycle_type(sigma.images()); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &cur, std::vector<CycleType> &out) {
    if (remaining == 0) {
        out.push_back(CycleType{cur});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

bool is_odd_label(int point) { return (point + 1) % 2 == 1; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<CycleType> partitions(int n) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

int cycle_valuation(const Cycle &cycle) {
    int odd = 0;
    int even = 0;
    for (int x : cycle) (is_odd_label(x) ? odd : even)++;
    return std::abs(odd - even);
}

int valuation(const Permutation &sigma) {
    int v = 0;
    for (const auto &c : cycle_decompose(sigma)) v += cycle_valuation(c);
    return v;
}

FixMove fix_move(const Permutation &sigma) {
    FixMove fm;
    for (int i = 0; i < sigma.degree(); ++i) (sigma(i) == i ? fm.fix : fm.move).push_back(i);
    return fm;
}

int min_transpositions(const Permutation &sigma) { return sigma.degree() - cycle_count(sigma); }

std::vector<Permutation> all_permutations(int n) {
    if (n > 10) throw Error(ErrorCode::BudgetExceeded, "S_n enumeration capped at n = 10");
    if (n < 0) throw Error(ErrorCode::OutOfRange, "negative degree");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::uint64_t count_by_transpositions(int n, int i) {
    if (n > 9) throw Error(ErrorCode::BudgetExceeded, "count_by_transpositions capped at n = 9");
    if (n < 1 || i < 0 || i > n - 1) throw Error(ErrorCode::OutOfRange, "need 0 <= i <= n-1");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::uint64_t count = 0;
    do {
        if (n - cycle_count(img) == i) ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

bool is_parity_swapper(const Permutation &beta) {
    for (int x = 0; x < beta.degree(); ++x) {
        if (is_odd_label(x) == is_odd_label(beta(x))) return false;
    }
    return true;
}

std::vector<Permutation> enumerate_parity_swappers(int t) {
    if (2 * t > 10) throw Error(ErrorCode::BudgetExceeded, "parity swappers capped at 2t = 10");
    if (t < 1) throw Error(ErrorCode::OutOfRange, "t must be positive");
    // Odd labels are 0-based points 0, 2, 4, …; even labels 1, 3, 5, ….
    std::vector<int> odd_to(static_cast<std::size_t>(t));
    std::vector<int> even_to(static_cast<std::size_t>(t));
    std::iota(odd_to.begin(), odd_to.end(), 0);
    std::vector<Permutation> out;
    do {
        std::iota(even_to.begin(), even_to.end(), 0);
        do {
            std::vector<int> img(static_cast<std::size_t>(2 * t));
            for (int k = 0; k < t; ++k) {
                img[static_cast<std::size_t>(2 * k)] = 2 * odd_to[static_cast<std::size_t>(k)] + 1;
                img[static_cast<std::size_t>(2 * k + 1)] = 2 * even_to[static_cast<std::size_t>(k)];
            }
            out.emplace_back(std::move(img));
        } while (std::next_permutation(even_to.begin(), even_to.end()));
    } while (std::next_permutation(odd_to.begin(), odd_to.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_cycle_string(const Permutation &sigma) {
    std::ostringstream os;
    bool any = false;
    for (const auto &c : cycle_decompose(sigma)) {
        if (c.size() == 1) continue;
        any = true;
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k] + 1;
        os << ')';
    }
    return any ? os.str() : "()";
}

std::uint64_t LemmaReport::total_counterexamples() const {
    std::uint64_t total = 0;
    for (const auto &c : checks) total += c.counterexamples.size();
    return total;
}

LemmaReport verify_lemmas(int n_max) {
    if (n_max > 7) throw Error(ErrorCode::BudgetExceeded, "lemma verification capped at n_max = 7");
    if (n_max < 1) throw Error(ErrorCode::OutOfRange, "n_max must be positive");
    LemmaReport report;

    for (int n = 1; n <= n_max; ++n) {
        LemmaCheck fix{"fix_lower_bound", n, 0, {}};
        std::vector<std::uint64_t> sigma_sizes(static_cast<std::size_t>(n), 0);
        for (const auto &sigma : all_permutations(n)) {
            ++fix.checked_count;
            const int cycles = cycle_count(sigma);
            const auto fixed = static_cast<int>(fix_move(sigma).fix.size());
            if (fixed < 2 * cycles - n) fix.counterexamples.push_back(to_cycle_string(sigma));
            ++sigma_sizes[static_cast<std::size_t>(n - cycles)];
        }
        report.checks.push_back(std::move(fix));

        LemmaCheck sigma_bound{"sigma_count_bound", n, 0, {}};
        const std::uint64_t pairs = binomial(static_cast<std::uint64_t>(n), 2);
        std::uint64_t bound = 1;
        for (int i = 0; i < n; ++i) {
            ++sigma_bound.checked_count;
            if (sigma_sizes[static_cast<std::size_t>(i)] > bound) {
                sigma_bound.counterexamples.push_back("i=" + std::to_string(i) + " |Sigma_i|=" +
                                                      std::to_string(sigma_sizes[static_cast<std::size_t>(i)]));
            }
            bound *= pairs;
        }
        report.checks.push_back(std::move(sigma_bound));
    }

    for (int t = 1; 2 * t <= std::min(6, n_max); ++t) {
        LemmaCheck sum_bound{"cycle_sum_bound", t, 0, {}};
        LemmaCheck minus_bound{"cycle_minus_t_bound", t, 0, {}};
        const auto swappers = enumerate_parity_swappers(t);
        for (const auto &alpha : all_permutations(2 * t)) {
            const int c_alpha = cycle_count(alpha);
            const auto alpha_inv = alpha.inverse();
            for (const auto &beta : swappers) {
                ++sum_bound.checked_count;
                ++minus_bound.checked_count;
                if (c_alpha + cycle_count(beta * alpha_inv) > 3 * t) {
                    sum_bound.counterexamples.push_back(to_cycle_string(alpha) + " / " + to_cycle_string(beta));
                }
                if (cycle_count(beta * alpha) - min_transpositions(alpha) > t) {
                    minus_bound.counterexamples.push_back(to_cycle_string(alpha) + " / " + to_cycle_string(beta));
                }
            }
        }
        report.checks.push_back(std::move(sum_bound));
        report.checks.push_back(std::move(minus_bound));
    }
    return report;
}

}  // namespace qtamper
