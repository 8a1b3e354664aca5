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

// Generator-generic cores of the key-to-bucket algorithms.
//
// Each core takes an already seeded generator and a raw bucket count and
// performs no argument validation; see hashers.hpp for the checked API. A
// non-null trace pointer receives the intermediate values.

#ifndef JUMPBACK_ALGORITHMS_HPP_
#define JUMPBACK_ALGORITHMS_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "jumpback/prg.hpp"
#include "jumpback/trace.hpp"

namespace jumpback::algo {

/// Number of power-of-two intervals; every bucket count is at most 2^32.
inline constexpr unsigned kIntervalCount = 32;

/// Starting point of the descending active-index recursion.
inline constexpr std::uint64_t kMaxBucketCount = std::uint64_t{1} << kIntervalCount;

/// floor(log2(x)) for x > 0.
constexpr unsigned floor_log2(std::uint64_t x) noexcept {
    return static_cast<unsigned>(std::bit_width(x)) - 1;
}

/// Pseudorandom, non-monotone assignment: floor(v * n / 2^64).
template <WordGenerator G>
std::uint64_t random_assign(G& g, std::uint64_t n) {
    return multiply_high(g.next_u64(), n);
}

/// Consistent hashing as a one-dimensional improved consistent weighted sample.
template <WordGenerator G>
std::uint64_t icws(G& g, std::uint64_t n, EvaluationTrace* trace = nullptr) {
    const double u = next_unit(g);
    const double gamma = next_exponential(g) + next_exponential(g);
    if (trace) {
        trace->unit_uniform = u;
        trace->gamma = gamma;
    }
    const double nd = static_cast<double>(n);
    const double r = std::exp(gamma * (std::floor(std::log(nd) / gamma + u) - u));
    // Truncation also catches NaN and infinity (gamma == 0).
    if (!(r < nd)) {
        return n - 1;
    }
    return static_cast<std::uint64_t>(std::floor(r));
}

/// Active indices generated in ascending order: a' = floor((a + 1) / u).
/// u == 0 yields +inf, which ends the loop.
template <WordGenerator G>
std::uint64_t jump_hash(G& g, std::uint64_t n, EvaluationTrace* trace = nullptr) {
    const double limit = static_cast<double>(n);
    double next = 0.0;
    std::uint64_t b = 0;
    while (next < limit) {
        b = static_cast<std::uint64_t>(next);
        if (trace) trace->active_indices.push_back(b);
        const double u = next_unit(g);
        next = std::floor(static_cast<double>(b + 1) / u);
    }
    return b;
}

/// Active indices generated in descending order, each uniform below its
/// predecessor, starting from kMaxBucketCount. Requires 1 <= n <= 2^32.
template <WordGenerator G>
std::uint64_t jumping_backwards(G& g, std::uint64_t n, EvaluationTrace* trace = nullptr) {
    std::uint64_t b = kMaxBucketCount;
    do {
        b = next_bounded(g, b);
        if (trace) trace->active_indices.push_back(b);
    } while (b >= n);
    return b;
}

enum class CandidateSampling {
    /// z uniform below the previous candidate.
    below_previous = 1,
    /// z uniform over the enclosing power-of-two range [0, 2^(m+1)).
    enclosing_power_of_two = 2,
};

/// Interval-wise descending generation with one random bit per interval.
/// Requires 1 <= n <= 2^32.
template <WordGenerator G>
std::uint64_t jumping_backwards_improved(G& g, std::uint64_t n, CandidateSampling sampling,
                                         EvaluationTrace* trace = nullptr) {
    std::uint32_t drawn_bits = 0;
    for (unsigned m = kIntervalCount; m-- > 0;) {
        const std::uint64_t bit = next_bounded(g, 2);
        if (trace) {
            drawn_bits |= static_cast<std::uint32_t>(bit) << m;
            trace->u_bits = drawn_bits;
        }
        if (bit == 0) continue;
        const std::uint64_t low = std::uint64_t{1} << m;
        std::uint64_t b = low + next_bounded(g, low);
        if (trace) {
            trace->m_list.push_back(m);
            trace->y_list.push_back(b);
        }
        while (true) {
            if (b < n) return b;
            b = sampling == CandidateSampling::below_previous ? next_bounded(g, b)
                                                              : next_bounded(g, low << 1);
            if (trace) trace->z_list.push_back(b);
            if (b < low) break;
        }
    }
    return 0;
}

/// JumpBackHash with one generator word per 32-bit random value; the high
/// halves of all words are discarded. Requires 2 <= n <= 2^31.
template <WordGenerator G>
std::uint32_t jump_back_hash(G& g, std::uint32_t n, EvaluationTrace* trace = nullptr) {
    const std::uint32_t x[2] = {static_cast<std::uint32_t>(g.next_u64()),
                                static_cast<std::uint32_t>(g.next_u64())};
    const unsigned m0 = floor_log2(n - 1) + 1;
    std::uint32_t u = (x[0] ^ x[1]) & ((std::uint32_t{1} << m0) - 1);
    if (trace) {
        trace->x0 = x[0];
        trace->x1 = x[1];
        trace->u_bits = u;
    }
    while (u != 0) {
        const unsigned m = floor_log2(u);
        const unsigned c = static_cast<unsigned>(std::popcount(u)) & 1U;
        const std::uint32_t q = std::uint32_t{1} << m;
        std::uint32_t b = q + (x[c] & (q - 1));
        if (trace) {
            if (trace->m_list.size() == 2) {
                throw std::logic_error("jump_back_hash: more than two interval iterations");
            }
            trace->m_list.push_back(m);
            trace->c_list.push_back(c);
            trace->y_list.push_back(b);
        }
        while (true) {
            if (b < n) return b;
            b = static_cast<std::uint32_t>(g.next_u64()) & ((q << 1) - 1);
            if (trace) trace->z_list.push_back(b);
            if (b < q) break;
        }
        u ^= q;
    }
    return 0;
}

/// JumpBackHash drawing two 32-bit values from every 64-bit word: the first
/// word supplies both halves, and each inner-loop word supplies two
/// successive candidates (low half first). Requires 2 <= n <= 2^31.
template <WordGenerator G>
std::uint32_t jump_back_hash_packed(G& g, std::uint32_t n, EvaluationTrace* trace = nullptr) {
    const std::uint64_t v = g.next_u64();
    const std::uint32_t mask = ~std::uint32_t{0} >> std::countl_zero(n - 1);
    std::uint32_t u = static_cast<std::uint32_t>(v ^ (v >> 32)) & mask;
    if (trace) {
        trace->x0 = static_cast<std::uint32_t>(v);
        trace->x1 = static_cast<std::uint32_t>(v >> 32);
        trace->u_bits = u;
    }
    while (u != 0) {
        const std::uint32_t q = std::uint32_t{1} << floor_log2(u);
        const unsigned shift = (static_cast<unsigned>(std::popcount(u)) & 1U) << 5;
        std::uint32_t b = q + (static_cast<std::uint32_t>(v >> shift) & (q - 1));
        if (trace) {
            if (trace->m_list.size() == 2) {
                throw std::logic_error("jump_back_hash_packed: more than two interval iterations");
            }
            trace->m_list.push_back(floor_log2(q));
            trace->c_list.push_back(shift >> 5);
            trace->y_list.push_back(b);
        }
        const std::uint32_t window = (q << 1) - 1;
        while (true) {
            if (b < n) return b;
            const std::uint64_t w = g.next_u64();
            b = static_cast<std::uint32_t>(w) & window;
            if (trace) trace->z_list.push_back(b);
            if (b < q) break;
            if (b < n) return b;
            b = static_cast<std::uint32_t>(w >> 32) & window;
            if (trace) trace->z_list.push_back(b);
            if (b < q) break;
        }
        u ^= q;
    }
    return 0;
}

}  // namespace jumpback::algo

#endif  // JUMPBACK_ALGORITHMS_HPP_
