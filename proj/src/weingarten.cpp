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

#include "qtamper/weingarten.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "qtamper/field.hpp"

namespace qtamper {
namespace {

std::uint32_t class_code(const CycleType &type) {
    std::uint32_t code = 0;
    for (int part : type.parts) code = code * 8U + static_cast<std::uint32_t>(part);
    return code;
}

std::uint32_t class_code(std::span<const int> images) {
    // Cycle lengths sorted descending without allocation (p ≤ 8).
    int lens[8];
    int count = 0;
    unsigned seen = 0;
    const int n = static_cast<int>(images.size());
    for (int start = 0; start < n; ++start) {
        if (seen & (1U << start)) continue;
        int len = 0;
        for (int x = start; !(seen & (1U << x)); x = images[static_cast<std::size_t>(x)]) {
            seen |= 1U << x;
            ++len;
        }
        int k = count++;
        while (k > 0 && lens[k - 1] < len) {
            lens[k] = lens[k - 1];
            --k;
        }
        lens[k] = len;
    }
    std::uint32_t code = 0;
    for (int k = 0; k < count; ++k) code = code * 8U + static_cast<std::uint32_t>(lens[k]);
    return code;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1U) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1U;
    }
    return r;
}

// Solves A x = e_0 modulo a prime below 2^31. Returns nullopt if A is singular
// modulo this prime.
std::optional<std::vector<std::uint64_t>> solve_mod(const std::vector<std::uint8_t> &exps, std::size_t n,
                                                    std::uint64_t N, std::uint64_t prime) {
    std::uint64_t pw[16];
    for (int k = 0; k < 16; ++k) pw[k] = powmod(N % prime, static_cast<std::uint64_t>(k), prime);
    const std::size_t w = n + 1;
    std::vector<std::uint64_t> a(n * w);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r * w + c] = pw[exps[r * n + c]];
        a[r * w + n] = r == 0 ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * w + col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t c = col; c < w; ++c) std::swap(a[piv * w + c], a[col * w + c]);
        }
        const std::uint64_t inv = powmod(a[col * w + col], prime - 2, prime);
        for (std::size_t c = col; c < w; ++c) a[col * w + c] = mulmod(a[col * w + c], inv, prime);
        const std::uint64_t *prow = &a[col * w];
        for (std::size_t r = col + 1; r < n; ++r) {
            std::uint64_t *row = &a[r * w];
            const std::uint64_t f = row[col];
            if (f == 0) continue;
            const std::uint64_t neg = prime - f;
            for (std::size_t c = col; c < w; ++c) row[c] = (row[c] + neg * prow[c]) % prime;
        }
    }
    std::vector<std::uint64_t> x(n);
    for (std::size_t r = n; r-- > 0;) {
        std::uint64_t acc = a[r * w + n];
        for (std::size_t c = r + 1; c < n; ++c) acc = (acc + (prime - mulmod(a[r * w + c], x[c], prime))) % prime;
        x[r] = acc;
    }
    return x;
}

// Wang's rational reconstruction: n/d ≡ a (mod m) with |n|, d ≤ sqrt(m/2).
std::optional<Rational> reconstruct(const mpz_class &a, const mpz_class &m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        mpz_class s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational out(r1, s1);
    out.canonicalize();
    return out;
}

// Primes descending from 2^31 - 1, so products of residues fit in 64 bits.
class PrimeStream {
   public:
    std::uint64_t next() {
        while (!is_prime(candidate_)) candidate_ -= 2;
        const auto p = candidate_;
        candidate_ -= 2;
        return p;
    }

   private:
    std::uint64_t candidate_ = (1ULL << 31) - 1;
};

std::shared_ptr<const WeingartenTable> build_table(int p, std::uint64_t N) {
    const auto perms = all_permutations(p);
    const std::size_t n = perms.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < n; ++k) index[std::vector<int>(perms[k].images().begin(), perms[k].images().end())] = k;

    std::vector<Permutation> inverses;
    inverses.reserve(n);
    for (const auto &s : perms) inverses.push_back(s.inverse());
    std::vector<std::uint8_t> exps(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            exps[r * n + c] = static_cast<std::uint8_t>(cycle_count(perms[r] * inverses[c]));
        }
    }

    std::vector<mpz_class> residues(n, 0);
    mpz_class modulus = 1;
    std::vector<Rational> previous;
    std::vector<Rational> solution;
    PrimeStream primes;
    constexpr int kMaxPrimes = 200;
    for (int used = 0;; ++used) {
        if (used >= kMaxPrimes) {
            throw Error(ErrorCode::InternalConsistency, "rational reconstruction did not converge");
        }
        const std::uint64_t prime = primes.next();
        auto x = solve_mod(exps, n, N, prime);
        if (!x) continue;
        // CRT: r ≡ residues (mod modulus), r ≡ x (mod prime).
        const mpz_class mp = static_cast<unsigned long>(prime);
        mpz_class inv_mod;
        mpz_class mod_red = modulus % mp;
        mpz_invert(inv_mod.get_mpz_t(), mod_red.get_mpz_t(), mp.get_mpz_t());
        for (std::size_t k = 0; k < n; ++k) {
            mpz_class diff = mpz_class(static_cast<unsigned long>((*x)[k])) - residues[k] % mp;
            diff = diff % mp;
            if (diff < 0) diff += mp;
            mpz_class t = (diff * inv_mod) % mp;
            residues[k] += modulus * t;
        }
        modulus *= mp;

        std::vector<Rational> current;
        current.reserve(n);
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
            auto r = reconstruct(residues[k], modulus);
            if (!r) ok = false;
            else current.push_back(*r);
        }
        if (!ok) continue;
        if (current != previous) {
            previous = std::move(current);
            continue;
        }
        solution = std::move(current);

        // Exact check of every row: Σ_τ N^{|C(στ⁻¹)|} w(τ) = δ_{σ,e}.
        mpz_class lcm = 1;
        for (const auto &w : solution) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den_mpz_t());
        std::vector<mpz_class> scaled(n);
        for (std::size_t k = 0; k < n; ++k) scaled[k] = solution[k].get_num() * (lcm / solution[k].get_den());
        std::vector<mpz_class> n_pow(static_cast<std::size_t>(p) + 1);
        n_pow[0] = 1;
        for (int k = 1; k <= p; ++k) n_pow[static_cast<std::size_t>(k)] = n_pow[static_cast<std::size_t>(k) - 1] * static_cast<unsigned long>(N);
        bool verified = true;
        for (std::size_t r = 0; r < n && verified; ++r) {
            std::vector<mpz_class> by_exp(static_cast<std::size_t>(p) + 1, 0);
            for (std::size_t c = 0; c < n; ++c) by_exp[exps[r * n + c]] += scaled[c];
            mpz_class total = 0;
            for (int k = 0; k <= p; ++k) total += n_pow[static_cast<std::size_t>(k)] * by_exp[static_cast<std::size_t>(k)];
            if (total != (r == 0 ? lcm : mpz_class(0))) verified = false;
        }
        if (verified) break;
        previous = std::move(solution);
    }

    // Collapse to cycle types, asserting the class-function property.
    std::map<CycleType, std::pair<Rational, std::uint64_t>> by_type;
    for (std::size_t k = 0; k < n; ++k) {
        auto type = cycle_type(perms[k]);
        auto it = by_type.find(type);
        if (it == by_type.end()) {
            by_type.emplace(type, std::make_pair(solution[k], 1));
        } else {
            if (it->second.first != solution[k]) {
                throw Error(ErrorCode::InternalConsistency, "Weingarten values differ within class " + type.to_string());
            }
            ++it->second.second;
        }
    }
    std::vector<WeingartenTable::Entry> entries;
    for (const auto &type : partitions(p)) {
        const auto &[value, size] = by_type.at(type);
        entries.push_back({type, value, size});
    }
    return std::make_shared<const WeingartenTable>(p, N, std::move(entries));
}

}  // namespace

std::string to_fraction_string(const Rational &r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

WeingartenTable::WeingartenTable(int p, std::uint64_t N, std::vector<Entry> entries)
    : p_(p), N_(N), entries_(std::move(entries)) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        by_code_.emplace(class_code(entries_[k].type), k);
        doubles_.push_back(entries_[k].value.get_d());
    }
}

const Rational &WeingartenTable::value(const CycleType &type) const {
    auto it = by_code_.find(class_code(type));
    if (it == by_code_.end()) throw Error(ErrorCode::OutOfRange, "cycle type " + type.to_string() + " not in table");
    return entries_[it->second].value;
}

const Rational &WeingartenTable::value(const Permutation &sigma) const {
    if (sigma.degree() != p_) throw Error(ErrorCode::DimMismatch, "permutation degree differs from table order");
    return value(cycle_type(sigma));
}

double WeingartenTable::value_double(std::span<const int> images) const {
    return doubles_[by_code_.at(class_code(images))];
}

std::shared_ptr<const WeingartenTable> wg_table(int p, std::uint64_t N) {
    if (p < 1 || p > 6) throw Error(ErrorCode::OutOfRange, "Weingarten tables are built for 1 <= p <= 6");
    if (N < static_cast<std::uint64_t>(p)) {
        throw Error(ErrorCode::SingularGram, "Gram matrix is singular for N < p");
    }
    static std::mutex mutex;
    static std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const WeingartenTable>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(p, N);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto table = build_table(p, N);
    cache.emplace(key, table);
    return table;
}

Rational wg_sum(int t, std::uint64_t N) {
    Rational total = 0;
    for (const auto &e : wg_table(t, N)->entries()) total += e.value * static_cast<unsigned long>(e.class_size);
    return total;
}

Rational wg_abs_sum(int t, std::uint64_t N) {
    Rational total = 0;
    for (const auto &e : wg_table(t, N)->entries()) total += abs(e.value) * static_cast<unsigned long>(e.class_size);
    return total;
}

Rational haar_moment(std::span<const int> i, std::span<const int> i_prime, std::span<const int> j,
                     std::span<const int> j_prime, std::uint64_t N) {
    if (i.size() != j.size() || i_prime.size() != j_prime.size()) {
        throw Error(ErrorCode::DimMismatch, "row and column tuples must have equal length");
    }
    if (i.size() != i_prime.size()) return 0;
    const int p = static_cast<int>(i.size());
    if (p > 5) throw Error(ErrorCode::OutOfRange, "haar_moment supports p <= 5");
    for (auto tuple : {i, i_prime, j, j_prime}) {
        for (int idx : tuple) {
            if (idx < 1 || static_cast<std::uint64_t>(idx) > N) throw Error(ErrorCode::OutOfRange, "index outside [N]");
        }
    }
    if (p == 0) return 1;
    const auto table = wg_table(p, N);
    const auto perms = all_permutations(p);
    auto matches = [p](std::span<const int> a, std::span<const int> b, const Permutation &s) {
        for (int k = 0; k < p; ++k) {
            if (a[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(s(k))]) return false;
        }
        return true;
    };
    Rational total = 0;
    for (const auto &sigma : perms) {
        if (!matches(i, i_prime, sigma)) continue;
        const auto sigma_inv = sigma.inverse();
        for (const auto &tau : perms) {
            if (!matches(j, j_prime, tau)) continue;
            total += table->value(tau * sigma_inv);
        }
    }
    return total;
}

}  // namespace qtamper
