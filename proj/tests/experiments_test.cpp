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

#include "jumpback/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "jumpback/theory.hpp"

namespace jumpback {
namespace {

TEST(GeometricSequence, ReferenceLength) {
    const auto sequence = geometric_n_sequence(1000000, 0.999);
    EXPECT_EQ(sequence.size(), 7482U);
    EXPECT_EQ(sequence.front(), 1000000U);
    EXPECT_EQ(sequence[1], 999000U);
    EXPECT_EQ(sequence.back(), 1U);
    for (std::size_t i = 1; i < sequence.size(); ++i) ASSERT_LT(sequence[i], sequence[i - 1]);
}

TEST(GeometricSequence, SmallStarts) {
    EXPECT_EQ(geometric_n_sequence(1, 0.999), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(geometric_n_sequence(1000, 0.999)[1], 999U);
    EXPECT_EQ(geometric_n_sequence(8, 0.5), (std::vector<std::uint64_t>{8, 4, 2, 1}));
}

TEST(GeometricSequence, RejectsBadArguments) {
    EXPECT_THROW(geometric_n_sequence(0, 0.5), std::domain_error);
    EXPECT_THROW(geometric_n_sequence(10, 1.0), std::domain_error);
    EXPECT_THROW(geometric_n_sequence(10, 0.0), std::domain_error);
}

TEST(BenchmarkCounts, SortedUniqueAndBounded) {
    const auto counts = benchmark_bucket_counts(1000000);
    ASSERT_FALSE(counts.empty());
    EXPECT_EQ(counts.front(), 1U);
    EXPECT_LE(counts.back(), 1000000U);
    EXPECT_TRUE(std::is_sorted(counts.begin(), counts.end()));
    EXPECT_EQ(std::adjacent_find(counts.begin(), counts.end()), counts.end());
}

TEST(MomentAccumulator, MergeEqualsSequential) {
    MomentAccumulator all;
    MomentAccumulator left;
    MomentAccumulator right;
    for (int i = 0; i < 1000; ++i) {
        const double x = std::sin(i) * 10 + i % 7;
        all.add(x);
        (i < 300 ? left : right).add(x);
    }
    left.merge(right);
    EXPECT_EQ(left.count(), all.count());
    EXPECT_NEAR(left.mean(), all.mean(), 1e-12);
    EXPECT_NEAR(left.variance(), all.variance(), 1e-10);
    MomentAccumulator empty;
    empty.merge(all);
    EXPECT_EQ(empty.mean(), all.mean());
}

TEST(MomentAccumulator, SampleVariance) {
    MomentAccumulator acc;
    for (double x : {1.0, 2.0, 3.0, 4.0}) acc.add(x);
    EXPECT_DOUBLE_EQ(acc.mean(), 2.5);
    EXPECT_DOUBLE_EQ(acc.variance(), 5.0 / 3.0);
}

TEST(RunChunked, CoversEveryIndexOnce) {
    const auto parts = run_chunked<std::uint64_t>(
        1000003, 4096, 4, [](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t sum = 0;
            for (std::uint64_t i = begin; i < end; ++i) sum += i;
            return sum;
        });
    std::uint64_t total = 0;
    for (auto p : parts) total += p;
    EXPECT_EQ(total, 1000003ULL * 1000002ULL / 2);
    EXPECT_TRUE(run_chunked<int>(0, 16, 4, [](std::uint64_t, std::uint64_t) { return 1; }).empty());
}

TEST(Consumption, PackedAtPowerOfTwoIsExact) {
    const std::uint32_t n_list[] = {1024};
    const auto s = run_consumption_experiment(Algorithm::jump_back_hash_packed, n_list, 100000, 1);
    ASSERT_EQ(s.size(), 1U);
    EXPECT_EQ(s[0].sample_count, 100000U);
    EXPECT_EQ(s[0].empirical_mean, 1.0);
    EXPECT_EQ(s[0].empirical_variance, 0.0);
    ASSERT_TRUE(s[0].theory);
    EXPECT_EQ(s[0].theory->mean, 1.0);
}

TEST(Consumption, JumpBackHashAtFive) {
    const std::uint32_t n_list[] = {5};
    const auto s = run_consumption_experiment(Algorithm::jump_back_hash, n_list, 1000000, 2);
    EXPECT_NEAR(s[0].empirical_mean, 2.6, 0.01);
    EXPECT_NEAR(s[0].empirical_variance, 0.96, 0.02);
}

TEST(Consumption, JumpHashAtFour) {
    const std::uint32_t n_list[] = {4};
    const auto s = run_consumption_experiment(Algorithm::jump_hash, n_list, 1000000, 3);
    EXPECT_NEAR(s[0].empirical_mean, 25.0 / 12.0, 0.01);
}

TEST(Consumption, IndependentOfWorkerCount) {
    const std::uint32_t n_list[] = {3, 1000, 65537};
    const auto one = run_consumption_experiment(Algorithm::jump_back_hash, n_list, 300000, 4, 1);
    const auto four = run_consumption_experiment(Algorithm::jump_back_hash, n_list, 300000, 4, 4);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].empirical_mean, four[i].empirical_mean);
        EXPECT_EQ(one[i].empirical_variance, four[i].empirical_variance);
    }
}

TEST(Consumption, ZeroKeysRejected) {
    const std::uint32_t n_list[] = {5};
    EXPECT_THROW(run_consumption_experiment(Algorithm::jump_hash, n_list, 0, 1), std::domain_error);
}

TEST(Monotonicity, ConsistentAlgorithmsHaveNoViolations) {
    for (Algorithm a : {Algorithm::jump_back_hash, Algorithm::jump_back_hash_packed,
                        Algorithm::jump_hash, Algorithm::icws}) {
        const auto report = run_monotonicity_check(a, 20, 2000, 5);
        EXPECT_EQ(report.runs, 20U);
        EXPECT_EQ(report.violations, 0U) << algorithm_name(a);
        EXPECT_FALSE(report.first_violation);
    }
}

TEST(Monotonicity, ModuloViolates) {
    const auto report = run_monotonicity_check(Algorithm::modulo, 5, 100, 6);
    EXPECT_GT(report.violations, 0U);
    ASSERT_TRUE(report.first_violation);
    const auto [key, n] = *report.first_violation;
    const auto before = hash(Algorithm::modulo, key, BucketCount{n - 1});
    const auto after = hash(Algorithm::modulo, key, BucketCount{n});
    EXPECT_NE(before, after);
    EXPECT_NE(after, n - 1);
}

TEST(Monotonicity, EdgeCases) {
    EXPECT_EQ(run_monotonicity_check(Algorithm::jump_hash, 0, 100, 1).violations, 0U);
    EXPECT_THROW(run_monotonicity_check(Algorithm::jump_hash, 1, 1, 1), std::domain_error);
}

TEST(Uniformity, PackedAndRandomPassSmallSweep) {
    std::vector<std::uint32_t> n_list;
    for (std::uint32_t n = 1; n <= 40; ++n) n_list.push_back(n);
    for (Algorithm a : {Algorithm::jump_back_hash_packed, Algorithm::random}) {
        const auto report = run_uniformity_check(a, 20000, n_list, 0.001, 7);
        EXPECT_EQ(report.tested, 39U);
        EXPECT_EQ(report.entries.front().result.kind, GofKind::none);
        EXPECT_EQ(report.entries.back().result.kind, GofKind::g_test);
        EXPECT_LE(report.rejection_fraction(), 0.02) << algorithm_name(a);
    }
}

TEST(Uniformity, SwitchesToKsForSparseSamples) {
    const std::uint32_t n_list[] = {1000};
    const auto report = run_uniformity_check(Algorithm::jump_back_hash, 5000, n_list, 0.001, 8);
    EXPECT_EQ(report.entries[0].result.kind, GofKind::ks_test);
}

TEST(Reassignment, MatchesExpectation) {
    const auto report = run_reassignment_check(Algorithm::jump_back_hash, BucketCount{10}, 200000, 9);
    EXPECT_EQ(report.n, 10U);
    EXPECT_NEAR(report.expected(), 1.0 / 11.0, 1e-15);
    EXPECT_LT(std::abs(report.fraction() - report.expected()), 4 * report.sigma());
}

TEST(Reassignment, ModuloMovesAlmostEverything) {
    const auto report = run_reassignment_check(Algorithm::modulo, BucketCount{100}, 10000, 10);
    EXPECT_GT(report.fraction(), 0.9);
}

}  // namespace
}  // namespace jumpback
