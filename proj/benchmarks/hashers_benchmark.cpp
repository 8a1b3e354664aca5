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

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "jumpback/experiments.hpp"
#include "jumpback/hashers.hpp"

namespace {

using jumpback::Algorithm;

const std::vector<jumpback::Key>& keys() {
    static const std::vector<jumpback::Key> list = [] {
        std::vector<jumpback::Key> v(1 << 16);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = jumpback::experiment_key(0xBE7C4, i);
        return v;
    }();
    return list;
}

template <Algorithm A>
void BM_Hash(benchmark::State& state) {
    const jumpback::BucketCount n{static_cast<std::uint64_t>(state.range(0))};
    const auto& list = keys();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(jumpback::hash(A, list[i], n));
        i = (i + 1) & (list.size() - 1);
    }
    std::uint64_t invocations = 0;
    for (auto key : list) invocations += jumpback::evaluate(A, key, n).invocations;
    state.counters["invocations"] =
        static_cast<double>(invocations) / static_cast<double>(list.size());
}

void bucket_counts(benchmark::internal::Benchmark* b) {
    for (std::uint32_t n : {1U << 10, (1U << 10) + 1, 1U << 16, (1U << 16) + 1, 1U << 20,
                            (1U << 20) + 1, 1000000U}) {
        b->Arg(n);
    }
}

BENCHMARK(BM_Hash<Algorithm::modulo>)->Apply(bucket_counts);
BENCHMARK(BM_Hash<Algorithm::random>)->Apply(bucket_counts);
BENCHMARK(BM_Hash<Algorithm::icws>)->Apply(bucket_counts);
BENCHMARK(BM_Hash<Algorithm::jump_hash>)->Apply(bucket_counts);
BENCHMARK(BM_Hash<Algorithm::jump_back_hash>)->Apply(bucket_counts);
BENCHMARK(BM_Hash<Algorithm::jump_back_hash_packed>)->Apply(bucket_counts);

}  // namespace

BENCHMARK_MAIN();
