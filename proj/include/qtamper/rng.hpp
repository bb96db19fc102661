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

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace qtamper {

/// Generator identity recorded in every report. Bump when any of the rules
/// below change.
///
///   engine:   std::mt19937_64 seeded with a single 64-bit word
///   uniform:  (x >> 11) * 2^-53, in [0, 1)
///   gaussian: Box-Muller, u1 = 1 - uniform(), r = sqrt(-2 ln u1),
///             pair (r cos 2πu2, r sin 2πu2); a complex standard normal takes
///             one pair, scaled by 1/√2
///   split:    child(seed, i) = splitmix64(seed ^ splitmix64(i + 0x9e3779b97f4a7c15))
inline constexpr std::string_view kGeneratorVersion = "mt19937_64/boxmuller/splitmix64-split v1";

struct Seed {
    std::uint64_t value = 0;
    friend bool operator==(Seed, Seed) = default;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for the `index`-th trial (or worker cell) of a run.
Seed child_seed(Seed parent, std::uint64_t index);

class Rng {
   public:
    explicit Rng(Seed seed) : engine_(seed.value) {}

    double uniform();
    double gaussian();
    std::complex<double> complex_gaussian();
    std::uint64_t next_u64() { return engine_(); }
    /// Uniform integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qtamper
