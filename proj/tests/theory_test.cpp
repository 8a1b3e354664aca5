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

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace jumpback {
namespace {

TEST(Rho, Values) {
    EXPECT_THROW(rho(1), std::domain_error);
    EXPECT_DOUBLE_EQ(rho(2), 1.0);
    EXPECT_DOUBLE_EQ(rho(3), 4.0 / 3.0);
    EXPECT_DOUBLE_EQ(rho(4), 1.0);
    EXPECT_DOUBLE_EQ(rho(5), 1.6);
    EXPECT_DOUBLE_EQ(rho(1024), 1.0);
    EXPECT_DOUBLE_EQ(rho(1025), 2048.0 / 1025.0);
}

TEST(Rho, JustAbovePowerOfTwoApproachesTwo) {
    double previous = rho(3);
    for (unsigned i = 2; i < 31; ++i) {
        const double r = rho((std::uint64_t{1} << i) + 1);
        EXPECT_GT(r, previous);
        EXPECT_LT(r, 2.0);
        previous = r;
    }
    EXPECT_NEAR(previous, 2.0, 1e-8);
}

TEST(Rho, AlwaysInHalfOpenUnitToTwo) {
    for (std::uint64_t n = 2; n < 100000; ++n) {
        const double r = rho(n);
        ASSERT_GE(r, 1.0);
        ASSERT_LT(r, 2.0);
    }
}

TEST(Harmonic, SmallValues) {
    EXPECT_DOUBLE_EQ(harmonic_number(1), 1.0);
    EXPECT_DOUBLE_EQ(harmonic_number(4), 25.0 / 12.0);
    EXPECT_DOUBLE_EQ(harmonic_number_squares(2), 1.25);
    EXPECT_THROW(harmonic_number(0), std::domain_error);
}

TEST(Harmonic, AsymptoticBranchContinuous) {
    // Direct summation at the switch point and one past it.
    for (std::uint64_t n : {4096ULL, 4097ULL, 100000ULL}) {
        double h = 0;
        double h2 = 0;
        for (std::uint64_t i = n; i >= 1; --i) {
            h += 1.0 / static_cast<double>(i);
            h2 += 1.0 / (static_cast<double>(i) * static_cast<double>(i));
        }
        EXPECT_NEAR(harmonic_number(n), h, 1e-12) << n;
        EXPECT_NEAR(harmonic_number_squares(n), h2, 1e-12) << n;
    }
}

TEST(JumpHashTheory, ClosedForms) {
    const Moments one = theory_jump_hash(1);
    EXPECT_DOUBLE_EQ(one.mean, 1.0);
    EXPECT_DOUBLE_EQ(one.variance, 0.0);
    const Moments four = theory_jump_hash(4);
    EXPECT_NEAR(four.mean, 25.0 / 12.0, 1e-15);
    EXPECT_NEAR(four.variance, 95.0 / 144.0, 1e-15);
}

TEST(JumpHashTheory, LogarithmicGrowth) {
    EXPECT_LE(theory_jump_hash(1000000).mean, 1.0 + std::log(1e6));
    EXPECT_GT(theory_jump_hash(1000000).mean, std::log(1e6));
}

TEST(JumpBackHashTheory, ClosedForms) {
    EXPECT_DOUBLE_EQ(theory_jbh(1).mean, 0.0);
    EXPECT_DOUBLE_EQ(theory_jbh(2).mean, 2.0);
    EXPECT_DOUBLE_EQ(theory_jbh(2).variance, 0.0);
    EXPECT_NEAR(theory_jbh(3).mean, 7.0 / 3.0, 1e-15);
    EXPECT_NEAR(theory_jbh(3).variance, 4.0 / 9.0, 1e-15);
    EXPECT_NEAR(theory_jbh(5).mean, 2.6, 1e-15);
    EXPECT_NEAR(theory_jbh(5).variance, 0.96, 1e-15);
}

TEST(PackedTheory, ClosedForms) {
    EXPECT_DOUBLE_EQ(theory_jbh_packed(1).mean, 0.0);
    EXPECT_DOUBLE_EQ(theory_jbh_packed(1024).mean, 1.0);
    EXPECT_DOUBLE_EQ(theory_jbh_packed(1024).variance, 0.0);
    EXPECT_NEAR(theory_jbh_packed(3).mean, 19.0 / 15.0, 1e-15);
    EXPECT_NEAR(theory_jbh_packed(3).variance, 52.0 / 225.0, 1e-15);
    EXPECT_NEAR(theory_jbh_packed(5).mean, 1.0 + 0.96 / 2.2, 1e-15);
    EXPECT_NEAR(theory_jbh_packed(5).variance, 1.6 * 0.6 * 1.96 / (2.2 * 2.2), 1e-15);
}

// Moments obtained by summing the pmf of the invocation count directly.
Moments packed_moments_by_pmf(double rho_value) {
    // One candidate is rejected with probability q = 1 - 1/rho. The first
    // word carries the interval draw and one candidate; every later word
    // carries two candidates. The loop stops at the first accepted candidate.
    const double q = 1.0 - 1.0 / rho_value;
    double mean = 0.0;
    double second = 0.0;
    // P(count = 1) = 1 - q; P(count = 1 + j) = q * (q^2)^(j-1) * (1 - q^2).
    mean += 1.0 * (1.0 - q);
    second += 1.0 * (1.0 - q);
    double weight = q;
    for (int j = 1; j < 2000; ++j) {
        const double p = weight * (1.0 - q * q);
        const double count = 1.0 + j;
        mean += count * p;
        second += count * count * p;
        weight *= q * q;
        if (weight < 1e-300) break;
    }
    return {mean, second - mean * mean};
}

Moments jbh_moments_by_pmf(double rho_value) {
    // Two words for the interval draw and the first candidate, then one per
    // further candidate until acceptance.
    const double q = 1.0 - 1.0 / rho_value;
    double mean = 0.0;
    double second = 0.0;
    double weight = 1.0;
    for (int j = 0; j < 4000; ++j) {
        const double p = weight * (1.0 - q);
        const double count = 2.0 + j;
        mean += count * p;
        second += count * count * p;
        weight *= q;
        if (weight < 1e-300) break;
    }
    return {mean, second - mean * mean};
}

TEST(ConsumptionTheory, MatchesPmfSummation) {
    for (std::uint64_t n : {3ULL, 5ULL, 6ULL, 7ULL, 100ULL, 1025ULL, 3000ULL, 65537ULL,
                            2147483647ULL}) {
        const Moments expected_packed = packed_moments_by_pmf(rho(n));
        const Moments expected_jbh = jbh_moments_by_pmf(rho(n));
        EXPECT_NEAR(theory_jbh_packed(n).mean, expected_packed.mean, 1e-9) << n;
        EXPECT_NEAR(theory_jbh_packed(n).variance, expected_packed.variance, 1e-9) << n;
        EXPECT_NEAR(theory_jbh(n).mean, expected_jbh.mean, 1e-9) << n;
        EXPECT_NEAR(theory_jbh(n).variance, expected_jbh.variance, 1e-9) << n;
    }
}

TEST(ConsumptionTheory, GlobalBounds) {
    for (std::uint64_t n = 2; n <= 1000000; ++n) {
        const Moments jbh = theory_jbh(n);
        const Moments packed = theory_jbh_packed(n);
        ASSERT_GE(jbh.mean, 2.0);
        ASSERT_LT(jbh.mean, 3.0);
        ASSERT_GE(packed.mean, 1.0);
        ASSERT_LE(packed.mean, 5.0 / 3.0 + 1e-12);
        ASSERT_GE(packed.variance, 0.0);
        ASSERT_LE(packed.mean, jbh.mean - 1.0 + 1e-12);
    }
}

TEST(ConsumptionTheory, SawtoothPerOctave) {
    // Within an octave (2^i, 2^(i+1)] the mean falls as n grows and jumps
    // back up right after the next power of two.
    for (unsigned i = 2; i < 20; ++i) {
        const std::uint64_t lo = (std::uint64_t{1} << i) + 1;
        const std::uint64_t hi = std::uint64_t{1} << (i + 1);
        for (std::uint64_t n = lo + 1; n <= hi; ++n) {
            ASSERT_LT(theory_jbh(n).mean, theory_jbh(n - 1).mean);
        }
        EXPECT_GT(theory_jbh(hi + 1).mean, theory_jbh(hi).mean);
        EXPECT_DOUBLE_EQ(theory_jbh(hi).mean, 2.0);
    }
}

TEST(ConsumptionTheory, PerAlgorithm) {
    const BucketCount five{5};
    EXPECT_DOUBLE_EQ(consumption_theory(Algorithm::modulo, five)->mean, 0.0);
    EXPECT_DOUBLE_EQ(consumption_theory(Algorithm::random, five)->mean, 1.0);
    EXPECT_DOUBLE_EQ(consumption_theory(Algorithm::icws, five)->mean, 3.0);
    EXPECT_DOUBLE_EQ(consumption_theory(Algorithm::jump_back_hash, five)->mean, 2.6);
    EXPECT_DOUBLE_EQ(*consumption_theory(Algorithm::jump_back_hash, five)->rho, 1.6);
    EXPECT_FALSE(consumption_theory(Algorithm::jump_hash, five)->rho);
    EXPECT_FALSE(consumption_theory(Algorithm::jump_back_hash, BucketCount{1})->rho);
    EXPECT_FALSE(consumption_theory(Algorithm::jumping_backwards, five));
    EXPECT_FALSE(consumption_theory(Algorithm::jumping_backwards_improved_opt1, five));
}

}  // namespace
}  // namespace jumpback
