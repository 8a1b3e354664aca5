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

// Brute-force reference semantics.
//
// A consistent hash can be defined as the index of the minimum of n i.i.d.
// scores R_0..R_{n-1} drawn from a generator seeded with the key. Index b is
// active when R_b is a strict prefix minimum (0 is always active), and the
// assignment is the largest active index below n. These O(n) routines
// validate the fast algorithms structurally and statistically; they are not
// pointwise equal to any of them.

#ifndef JUMPBACK_ORACLE_HPP_
#define JUMPBACK_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "jumpback/hashers.hpp"

namespace jumpback::oracle {

/// Largest n accepted by the score-based routines.
inline constexpr std::uint32_t kMaxOracleBuckets = 1U << 16;

/// R_0..R_{n-1}, drawn in ascending index order from SplitMix64(key).
std::vector<std::uint64_t> score_sequence(Key key, std::uint32_t n);

/// Index of the smallest score, ties toward the lower index.
/// Throws std::domain_error unless 1 <= n <= kMaxOracleBuckets.
BucketIndex argmin_oracle(Key key, std::uint32_t n);

/// Strictly increasing indices b < n whose score is a strict prefix minimum.
std::vector<std::uint32_t> active_indices_from_scores(Key key, std::uint32_t n);

/// {0} together with every b in (0, n_probe) where algorithm(key, b + 1) == b,
/// in increasing order. For a consistent algorithm, the largest element
/// below n reproduces algorithm(key, n) for every n <= n_probe.
std::vector<std::uint32_t> reconstruct_active_indices(Algorithm algorithm, Key key,
                                                      std::uint32_t n_probe);

/// max(active ∩ [0, n)); `active` must be sorted and contain 0.
BucketIndex max_active_below(const std::vector<std::uint32_t>& active, std::uint32_t n);

/// First n in [1, n_probe] where the reconstruction disagrees with the
/// algorithm, or nullopt when it holds everywhere.
std::optional<std::uint32_t> find_reconstruction_mismatch(Algorithm algorithm, Key key,
                                                          std::uint32_t n_probe);

}  // namespace jumpback::oracle

#endif  // JUMPBACK_ORACLE_HPP_
