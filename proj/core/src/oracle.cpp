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

#include "jumpback/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "jumpback/prg.hpp"

namespace jumpback::oracle {

namespace {

void check_oracle_range(std::uint32_t n) {
    if (n < 1 || n > kMaxOracleBuckets) {
        throw std::domain_error("oracle bucket count must lie in [1, 2^16]");
    }
}

}  // namespace

std::vector<std::uint64_t> score_sequence(Key key, std::uint32_t n) {
    check_oracle_range(n);
    SplitMix64 g{key};
    std::vector<std::uint64_t> scores(n);
    for (auto& score : scores) score = g.next_u64();
    return scores;
}

BucketIndex argmin_oracle(Key key, std::uint32_t n) {
    const auto scores = score_sequence(key, n);
    // min_element returns the first of equal minima.
    return static_cast<BucketIndex>(std::min_element(scores.begin(), scores.end()) -
                                    scores.begin());
}

std::vector<std::uint32_t> active_indices_from_scores(Key key, std::uint32_t n) {
    const auto scores = score_sequence(key, n);
    std::vector<std::uint32_t> active{0};
    std::uint64_t prefix_min = scores[0];
    for (std::uint32_t b = 1; b < n; ++b) {
        if (scores[b] < prefix_min) {
            prefix_min = scores[b];
            active.push_back(b);
        }
    }
    return active;
}

std::vector<std::uint32_t> reconstruct_active_indices(Algorithm algorithm, Key key,
                                                      std::uint32_t n_probe) {
    std::vector<std::uint32_t> active{0};
    for (std::uint32_t b = 1; b < n_probe; ++b) {
        if (hash(algorithm, key, BucketCount{b + 1}) == b) active.push_back(b);
    }
    return active;
}

BucketIndex max_active_below(const std::vector<std::uint32_t>& active, std::uint32_t n) {
    auto it = std::lower_bound(active.begin(), active.end(), n);
    return it == active.begin() ? 0 : *std::prev(it);
}

std::optional<std::uint32_t> find_reconstruction_mismatch(Algorithm algorithm, Key key,
                                                          std::uint32_t n_probe) {
    const auto active = reconstruct_active_indices(algorithm, key, n_probe);
    for (std::uint32_t n = 1; n <= n_probe; ++n) {
        if (hash(algorithm, key, BucketCount{n}) != max_active_below(active, n)) return n;
    }
    return std::nullopt;
}

}  // namespace jumpback::oracle
