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

// Key-to-bucket mapping algorithms behind one checked interface.
//
//   jumpback::BucketCount n{shard_count};
//   std::uint32_t shard = jumpback::jump_back_hash(key_hash, n);
//
// Every function is a pure function of (key, n). Generators are created per
// call, so concurrent use needs no synchronization.

#ifndef JUMPBACK_HASHERS_HPP_
#define JUMPBACK_HASHERS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "jumpback/algorithms.hpp"
#include "jumpback/trace.hpp"

namespace jumpback {

using Key = std::uint64_t;
using BucketIndex = std::uint32_t;

/// Number of buckets, 1 <= n <= 2^31 - 1. Throws std::domain_error otherwise.
class BucketCount {
public:
    static constexpr std::uint32_t kMax = 0x7FFFFFFFU;

    constexpr explicit BucketCount(std::uint64_t n) : n_{check(n)} {}

    constexpr std::uint32_t value() const noexcept { return n_; }

    friend constexpr bool operator==(BucketCount, BucketCount) = default;

private:
    static constexpr std::uint32_t check(std::uint64_t n) {
        if (n < 1 || n > kMax) {
            throw std::domain_error("bucket count must lie in [1, 2^31 - 1]");
        }
        return static_cast<std::uint32_t>(n);
    }

    std::uint32_t n_;
};

enum class Algorithm {
    modulo,
    random,
    icws,
    jump_hash,
    jumping_backwards,
    jumping_backwards_improved_opt1,
    jumping_backwards_improved_opt2,
    jump_back_hash,
    jump_back_hash_packed,
};

inline constexpr std::array kAllAlgorithms = {
    Algorithm::modulo,
    Algorithm::random,
    Algorithm::icws,
    Algorithm::jump_hash,
    Algorithm::jumping_backwards,
    Algorithm::jumping_backwards_improved_opt1,
    Algorithm::jumping_backwards_improved_opt2,
    Algorithm::jump_back_hash,
    Algorithm::jump_back_hash_packed,
};

/// Canonical name used by the CLI and the golden-vector file, e.g. "jumpbackhash-packed".
std::string_view algorithm_name(Algorithm algorithm) noexcept;

/// Accepts the canonical names and the snake_case enumerator spellings.
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// True for algorithms that are monotone (all but modulo and random).
constexpr bool is_consistent(Algorithm algorithm) noexcept {
    return algorithm != Algorithm::modulo && algorithm != Algorithm::random;
}

struct HasherConfig {
    static constexpr unsigned kIntervalCount = algo::kIntervalCount;
    static constexpr std::uint64_t kMaxBucketCount = algo::kMaxBucketCount;

    Algorithm algorithm = Algorithm::jump_back_hash_packed;
};

BucketIndex modulo_hash(Key key, BucketCount n) noexcept;
BucketIndex random_hash(Key key, BucketCount n) noexcept;
BucketIndex icws_hash(Key key, BucketCount n) noexcept;
BucketIndex jump_hash(Key key, BucketCount n) noexcept;
BucketIndex jumping_backwards(Key key, BucketCount n) noexcept;
/// option 1 draws each further candidate below the previous one, option 2
/// from the enclosing power-of-two range. Other options throw std::domain_error.
BucketIndex jumping_backwards_improved(Key key, BucketCount n, int option);
BucketIndex jump_back_hash(Key key, BucketCount n) noexcept;
BucketIndex jump_back_hash_packed(Key key, BucketCount n) noexcept;

/// Dispatches to the algorithm without counting or tracing.
BucketIndex hash(Algorithm algorithm, Key key, BucketCount n) noexcept;

struct Evaluation {
    BucketIndex bucket = 0;
    std::uint64_t invocations = 0;

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// Bucket plus the number of 64-bit generator words consumed.
Evaluation evaluate(Algorithm algorithm, Key key, BucketCount n) noexcept;

/// Bucket plus all intermediate values; the bucket equals hash(...).
std::pair<BucketIndex, EvaluationTrace> evaluate_traced(const HasherConfig& config, Key key,
                                                       BucketCount n);

}  // namespace jumpback

#endif  // JUMPBACK_HASHERS_HPP_
