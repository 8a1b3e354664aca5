// Copyright 2026 The jumpback Authors
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

// Closed-form moments of the number of generator words an algorithm consumes.
//
// With rho = 2^(floor(log2(n-1)) + 1) / n in [1, 2):
//   jump hash           N ~ sum_{i=1..n} Bernoulli(1/i)
//   jump back hash      N ~ 2 + Bernoulli(1 - 1/rho) * Geometric(1/rho)
//   packed variant      N ~ 1 + Bernoulli(1 - 1/rho) * Geometric((2 - 1/rho) / rho)
// and n == 1 consumes nothing for either jump back hash.

#ifndef JUMPBACK_THEORY_HPP_
#define JUMPBACK_THEORY_HPP_

#include <cstdint>
#include <optional>

#include "jumpback/hashers.hpp"

namespace jumpback {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Throws std::domain_error for n < 2.
double rho(std::uint64_t n);

/// Harmonic partial sums H_n and H_n^(2); n >= 1.
double harmonic_number(std::uint64_t n);
double harmonic_number_squares(std::uint64_t n);

/// (H_n, H_n - H_n^(2)); n >= 1.
Moments theory_jump_hash(std::uint64_t n);

/// (1 + rho, (rho - 1) rho); (0, 0) for n == 1.
Moments theory_jbh(std::uint64_t n);

/// (1 + (rho - 1) rho / (2 rho - 1), rho (rho - 1)(rho^2 - rho + 1) / (2 rho - 1)^2);
/// (0, 0) for n == 1.
Moments theory_jbh_packed(std::uint64_t n);

struct ConsumptionTheory {
    std::uint32_t n = 1;
    /// Only defined for the jump back hash variants with n >= 2.
    std::optional<double> rho;
    double mean = 0.0;
    double variance = 0.0;
};

/// Theory for the algorithms that have one; nullopt for the jumping
/// backwards family.
std::optional<ConsumptionTheory> consumption_theory(Algorithm algorithm, BucketCount n);

}  // namespace jumpback

#endif  // JUMPBACK_THEORY_HPP_
