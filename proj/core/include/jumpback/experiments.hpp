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

// Experiment runners: consumption, monotonicity, uniformity, reassignment.
//
// Key i of an experiment with seed s is output i of SplitMix64(s), so every
// runner is reproducible end-to-end. Work is split into fixed-size chunks
// whose partial results are merged in chunk order; results are therefore
// bit-identical for any worker count.

#ifndef JUMPBACK_EXPERIMENTS_HPP_
#define JUMPBACK_EXPERIMENTS_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "jumpback/gof.hpp"
#include "jumpback/hashers.hpp"
#include "jumpback/theory.hpp"

namespace jumpback {

/// Key `index` of the experiment stream seeded with `seed`.
Key experiment_key(std::uint64_t seed, std::uint64_t index) noexcept;

/// Worker count from JUMPBACK_WORKERS, else the hardware concurrency (>= 1).
unsigned default_worker_count();

/// n0, floor(f n0), floor(f floor(f n0)), ... while the value is >= 1.
/// Throws std::domain_error unless n0 >= 1 and 0 < factor < 1.
std::vector<std::uint64_t> geometric_n_sequence(std::uint64_t n0, double factor);

/// Bucket counts 2^i, 2^i + 1 and floor(2^i (1 + j/4)) for j = 1, 2, 3, up to
/// `max_n`, ascending and without duplicates.
std::vector<std::uint32_t> benchmark_bucket_counts(std::uint32_t max_n);

/// Welford running mean and variance with an associative merge.
class MomentAccumulator {
public:
    void add(double x) noexcept;
    void merge(const MomentAccumulator& other) noexcept;

    std::uint64_t count() const noexcept { return count_; }
    double mean() const noexcept { return mean_; }
    /// Unbiased sample variance; 0 for fewer than two samples.
    double variance() const noexcept;

private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Calls body(begin, end) for consecutive ranges of [0, total) of size
/// `chunk` on up to `workers` threads, and returns the per-chunk results in
/// chunk order.
template <typename Result>
std::vector<Result> run_chunked(std::uint64_t total, std::uint64_t chunk, unsigned workers,
                                const std::function<Result(std::uint64_t, std::uint64_t)>& body) {
    const std::uint64_t chunks = chunk == 0 ? 0 : (total + chunk - 1) / chunk;
    std::vector<Result> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
            const std::uint64_t begin = c * chunk;
            results[c] = body(begin, std::min(total, begin + chunk));
        }
    };
    if (workers == 0) workers = default_worker_count();
    const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if (threads <= 1) {
        work();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    pool.clear();
    return results;
}

struct ConsumptionSummary {
    std::uint32_t n = 1;
    std::uint64_t sample_count = 0;
    double empirical_mean = 0.0;
    double empirical_variance = 0.0;
    std::optional<ConsumptionTheory> theory;
};

/// Counts generator words for keys_per_n keys at each n. workers == 0 picks
/// default_worker_count(). Throws std::domain_error if keys_per_n == 0.
std::vector<ConsumptionSummary> run_consumption_experiment(Algorithm algorithm,
                                                           std::span<const std::uint32_t> n_list,
                                                           std::uint64_t keys_per_n,
                                                           std::uint64_t seed,
                                                           unsigned workers = 0);

struct MonotonicityReport {
    std::uint64_t runs = 0;
    std::uint32_t n_max = 0;
    std::uint64_t violations = 0;
    /// First violating (key, n + 1), if any.
    std::optional<std::pair<Key, std::uint32_t>> first_violation;
};

/// For each of `runs` keys, sweeps n = 1..n_max and counts the steps where
/// f(k, n + 1) is neither f(k, n) nor n. Throws std::domain_error if n_max < 2.
MonotonicityReport run_monotonicity_check(Algorithm algorithm, std::uint64_t runs,
                                          std::uint32_t n_max, std::uint64_t seed,
                                          unsigned workers = 0);

/// Per-bucket counts of `keys` experiment keys.
std::vector<std::uint64_t> bucket_histogram(Algorithm algorithm, BucketCount n, std::uint64_t keys,
                                            std::uint64_t seed, unsigned workers = 0);

/// Buckets of `keys` experiment keys in key order.
std::vector<std::uint64_t> bucket_sample(Algorithm algorithm, BucketCount n, std::uint64_t keys,
                                         std::uint64_t seed, unsigned workers = 0);

struct UniformityEntry {
    std::uint32_t n = 1;
    GofResult result;
};

struct UniformityReport {
    double alpha = 0.001;
    std::vector<UniformityEntry> entries;
    std::uint64_t tested = 0;
    std::uint64_t rejected = 0;

    /// rejected / tested, 0 when nothing was tested.
    double rejection_fraction() const noexcept;
};

/// G-test for every n with keys >= 100 n, KS test otherwise; n == 1 is
/// recorded as untested with p = 1.
UniformityReport run_uniformity_check(Algorithm algorithm, std::uint64_t keys,
                                      std::span<const std::uint32_t> n_list, double alpha,
                                      std::uint64_t seed, unsigned workers = 0);

struct ReassignmentReport {
    std::uint32_t n = 1;
    std::uint64_t keys = 0;
    std::uint64_t moved = 0;

    double fraction() const noexcept;
    /// 1 / (n + 1).
    double expected() const noexcept;
    /// Binomial standard deviation of fraction() under expected().
    double sigma() const noexcept;
};

/// Fraction of keys with f(k, n) != f(k, n + 1). Requires n + 1 <= 2^31 - 1.
ReassignmentReport run_reassignment_check(Algorithm algorithm, BucketCount n, std::uint64_t keys,
                                          std::uint64_t seed, unsigned workers = 0);

}  // namespace jumpback

#endif  // JUMPBACK_EXPERIMENTS_HPP_
