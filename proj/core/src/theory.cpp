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

#include "jumpback/theory.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jumpback {

namespace {

// Largest n summed directly; asymptotic expansions take over above it.
constexpr std::uint64_t kDirectSumLimit = 1U << 12;

void require_positive(std::uint64_t n) {
    if (n < 1) throw std::domain_error("bucket count must be positive");
}

}  // namespace

double rho(std::uint64_t n) {
    if (n < 2) throw std::domain_error("rho requires n >= 2");
    const auto enclosing = std::uint64_t{1} << std::bit_width(n - 1);
    return static_cast<double>(enclosing) / static_cast<double>(n);
}

double harmonic_number(std::uint64_t n) {
    require_positive(n);
    if (n <= kDirectSumLimit) {
        double sum = 0.0;
        for (std::uint64_t i = n; i >= 1; --i) sum += 1.0 / static_cast<double>(i);
        return sum;
    }
    const double x = static_cast<double>(n);
    const double inv2 = 1.0 / (x * x);
    return std::log(x) + std::numbers::egamma + 0.5 / x - inv2 / 12.0 + inv2 * inv2 / 120.0;
}

double harmonic_number_squares(std::uint64_t n) {
    require_positive(n);
    if (n <= kDirectSumLimit) {
        double sum = 0.0;
        for (std::uint64_t i = n; i >= 1; --i) {
            const double d = static_cast<double>(i);
            sum += 1.0 / (d * d);
        }
        return sum;
    }
    const double x = static_cast<double>(n);
    return std::numbers::pi * std::numbers::pi / 6.0 - 1.0 / x + 0.5 / (x * x) -
           1.0 / (6.0 * x * x * x);
}

Moments theory_jump_hash(std::uint64_t n) {
    const double h = harmonic_number(n);
    return {h, h - harmonic_number_squares(n)};
}

Moments theory_jbh(std::uint64_t n) {
    require_positive(n);
    if (n == 1) return {0.0, 0.0};
    const double r = rho(n);
    return {1.0 + r, (r - 1.0) * r};
}

Moments theory_jbh_packed(std::uint64_t n) {
    require_positive(n);
    if (n == 1) return {0.0, 0.0};
    const double r = rho(n);
    const double d = 2.0 * r - 1.0;
    return {1.0 + (r - 1.0) * r / d, r * (r - 1.0) * (r * r - r + 1.0) / (d * d)};
}

std::optional<ConsumptionTheory> consumption_theory(Algorithm algorithm, BucketCount n) {
    const std::uint32_t count = n.value();
    ConsumptionTheory theory;
    theory.n = count;
    Moments moments;
    switch (algorithm) {
        case Algorithm::modulo:
            break;
        case Algorithm::random:
            moments = {1.0, 0.0};
            break;
        case Algorithm::icws:
            moments = {3.0, 0.0};
            break;
        case Algorithm::jump_hash:
            moments = theory_jump_hash(count);
            break;
        case Algorithm::jump_back_hash:
            moments = theory_jbh(count);
            break;
        case Algorithm::jump_back_hash_packed:
            moments = theory_jbh_packed(count);
            break;
        case Algorithm::jumping_backwards:
        case Algorithm::jumping_backwards_improved_opt1:
        case Algorithm::jumping_backwards_improved_opt2:
            return std::nullopt;
    }
    if ((algorithm == Algorithm::jump_back_hash || algorithm == Algorithm::jump_back_hash_packed) &&
        count >= 2) {
        theory.rho = rho(count);
    }
    theory.mean = moments.mean;
    theory.variance = moments.variance;
    return theory;
}

}  // namespace jumpback
