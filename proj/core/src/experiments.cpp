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

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string_view>

#include "jumpback/prg.hpp"

namespace jumpback {

namespace {

constexpr std::uint64_t kKeyChunk = std::uint64_t{1} << 16;

}  // namespace

Key experiment_key(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64::output_at(seed, index);
}

unsigned default_worker_count() {
    if (const char* env = std::getenv("JUMPBACK_WORKERS")) {
        unsigned value = 0;
        const std::string_view text{env};
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<std::uint64_t> geometric_n_sequence(std::uint64_t n0, double factor) {
    if (n0 < 1) throw std::domain_error("geometric_n_sequence needs n0 >= 1");
    if (!(factor > 0.0 && factor < 1.0)) {
        throw std::domain_error("geometric_n_sequence needs 0 < factor < 1");
    }
    std::vector<std::uint64_t> sequence;
    for (std::uint64_t n = n0; n >= 1;
         n = static_cast<std::uint64_t>(std::floor(factor * static_cast<double>(n)))) {
        sequence.push_back(n);
    }
    return sequence;
}

std::vector<std::uint32_t> benchmark_bucket_counts(std::uint32_t max_n) {
    std::vector<std::uint32_t> counts;
    for (unsigned i = 0; i < 32; ++i) {
        const std::uint64_t base = std::uint64_t{1} << i;
        const std::uint64_t candidates[] = {base, base + 1, base + base / 4, base + base / 2,
                                            base + 3 * base / 4};
        for (std::uint64_t c : candidates) {
            if (c <= max_n) counts.push_back(static_cast<std::uint32_t>(c));
        }
    }
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
    return counts;
}

void MomentAccumulator::add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

void MomentAccumulator::merge(const MomentAccumulator& other) noexcept {
    if (other.count_ == 0) return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double total = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / total;
    m2_ += other.m2_ + delta * delta * na * nb / total;
    count_ += other.count_;
}

double MomentAccumulator::variance() const noexcept {
    return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

std::vector<ConsumptionSummary> run_consumption_experiment(Algorithm algorithm,
                                                           std::span<const std::uint32_t> n_list,
                                                           std::uint64_t keys_per_n,
                                                           std::uint64_t seed, unsigned workers) {
    if (keys_per_n == 0) throw std::domain_error("consumption experiment needs keys_per_n >= 1");
    std::vector<ConsumptionSummary> summaries;
    summaries.reserve(n_list.size());
    for (std::uint32_t raw_n : n_list) {
        const BucketCount n{raw_n};
        const auto partials = run_chunked<MomentAccumulator>(
            keys_per_n, kKeyChunk, workers, [&](std::uint64_t begin, std::uint64_t end) {
                MomentAccumulator acc;
                for (std::uint64_t i = begin; i < end; ++i) {
                    acc.add(static_cast<double>(
                        evaluate(algorithm, experiment_key(seed, i), n).invocations));
                }
                return acc;
            });
        MomentAccumulator total;
        for (const auto& partial : partials) total.merge(partial);
        summaries.push_back({raw_n, total.count(), total.mean(), total.variance(),
                             consumption_theory(algorithm, n)});
    }
    return summaries;
}

MonotonicityReport run_monotonicity_check(Algorithm algorithm, std::uint64_t runs,
                                          std::uint32_t n_max, std::uint64_t seed,
                                          unsigned workers) {
    if (n_max < 2) throw std::domain_error("monotonicity check needs n_max >= 2");
    if (n_max > BucketCount::kMax) throw std::domain_error("n_max exceeds 2^31 - 1");

    struct Partial {
        std::uint64_t violations = 0;
        std::optional<std::pair<Key, std::uint32_t>> first;
    };
    const auto partials = run_chunked<Partial>(
        runs, 16, workers, [&](std::uint64_t begin, std::uint64_t end) {
            Partial partial;
            for (std::uint64_t r = begin; r < end; ++r) {
                const Key key = experiment_key(seed, r);
                BucketIndex previous = hash(algorithm, key, BucketCount{1});
                for (std::uint32_t n = 1; n < n_max; ++n) {
                    const BucketIndex current = hash(algorithm, key, BucketCount{n + 1});
                    if (current != previous && current != n) {
                        ++partial.violations;
                        if (!partial.first) partial.first = std::pair{key, n + 1};
                    }
                    previous = current;
                }
            }
            return partial;
        });

    MonotonicityReport report;
    report.runs = runs;
    report.n_max = n_max;
    for (const auto& partial : partials) {
        report.violations += partial.violations;
        if (!report.first_violation) report.first_violation = partial.first;
    }
    return report;
}

std::vector<std::uint64_t> bucket_histogram(Algorithm algorithm, BucketCount n, std::uint64_t keys,
                                            std::uint64_t seed, unsigned workers) {
    const auto partials = run_chunked<std::vector<std::uint64_t>>(
        keys, kKeyChunk * 4, workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<std::uint64_t> counts(n.value());
            for (std::uint64_t i = begin; i < end; ++i) {
                ++counts[hash(algorithm, experiment_key(seed, i), n)];
            }
            return counts;
        });
    std::vector<std::uint64_t> counts(n.value());
    for (const auto& partial : partials) {
        for (std::size_t b = 0; b < counts.size(); ++b) counts[b] += partial[b];
    }
    return counts;
}

std::vector<std::uint64_t> bucket_sample(Algorithm algorithm, BucketCount n, std::uint64_t keys,
                                         std::uint64_t seed, unsigned workers) {
    std::vector<std::uint64_t> sample(keys);
    run_chunked<char>(keys, kKeyChunk, workers, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            sample[i] = hash(algorithm, experiment_key(seed, i), n);
        }
        return char{};
    });
    return sample;
}

double UniformityReport::rejection_fraction() const noexcept {
    return tested == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(tested);
}

UniformityReport run_uniformity_check(Algorithm algorithm, std::uint64_t keys,
                                      std::span<const std::uint32_t> n_list, double alpha,
                                      std::uint64_t seed, unsigned workers) {
    UniformityReport report;
    report.alpha = alpha;
    for (std::uint32_t raw_n : n_list) {
        const BucketCount n{raw_n};
        UniformityEntry entry{raw_n, {}};
        if (raw_n == 1) {
            entry.result.sample_size = keys;
        } else if (keys >= 100 * static_cast<std::uint64_t>(raw_n)) {
            entry.result = g_test(bucket_histogram(algorithm, n, keys, seed, workers), raw_n);
        } else {
            entry.result = ks_test(bucket_sample(algorithm, n, keys, seed, workers), raw_n);
        }
        if (entry.result.kind != GofKind::none) {
            ++report.tested;
            if (entry.result.rejected_at(alpha)) ++report.rejected;
        }
        report.entries.push_back(entry);
    }
    return report;
}

double ReassignmentReport::fraction() const noexcept {
    return keys == 0 ? 0.0 : static_cast<double>(moved) / static_cast<double>(keys);
}

double ReassignmentReport::expected() const noexcept {
    return 1.0 / (static_cast<double>(n) + 1.0);
}

double ReassignmentReport::sigma() const noexcept {
    const double p = expected();
    return keys == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(keys));
}

ReassignmentReport run_reassignment_check(Algorithm algorithm, BucketCount n, std::uint64_t keys,
                                          std::uint64_t seed, unsigned workers) {
    const BucketCount next{static_cast<std::uint64_t>(n.value()) + 1};
    const auto partials = run_chunked<std::uint64_t>(
        keys, kKeyChunk, workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t moved = 0;
            for (std::uint64_t i = begin; i < end; ++i) {
                const Key key = experiment_key(seed, i);
                if (hash(algorithm, key, n) != hash(algorithm, key, next)) ++moved;
            }
            return moved;
        });
    ReassignmentReport report;
    report.n = n.value();
    report.keys = keys;
    for (std::uint64_t moved : partials) report.moved += moved;
    return report;
}

}  // namespace jumpback
